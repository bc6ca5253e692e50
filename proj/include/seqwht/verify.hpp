#pragma once

// Self-check suites run by `seqwht verify`: sequency formula vs brute force,
// simulated circuits vs dense matrices, and quantum vs classical filtering.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "seqwht/builders.hpp"
#include "seqwht/filters.hpp"
#include "seqwht/signals.hpp"
#include "seqwht/simulator.hpp"
#include "seqwht/walsh.hpp"

namespace seqwht {

struct VerifyOptions {
    unsigned n_max = 8;
    // Negates one simulated amplitude so the circuit suite must fail.
    bool inject_sign_flip = false;
};

struct SuiteReport {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

inline SuiteReport verify_sequency_map(unsigned n_max) {
    SuiteReport r;
    r.name = "sequency-map";
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto perm = natural_to_sequency_perm(n);
        const std::uint64_t size = std::uint64_t{1} << n;
        std::vector<bool> seen(size, false);
        for (std::uint64_t s = 0; s < size; ++s) {
            const SequencyIndex idx{s, n};
            const auto formula = sequency_of(idx);
            const auto brute = zero_crossings_bruteforce(idx);
            const auto recursive = sequency_recursion(idx).back().value;
            ++r.checks;
            if (formula != brute || formula != recursive) {
                r.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + ": formula " +
                       std::to_string(formula) + ", brute force " + std::to_string(brute) +
                       ", recursion " + std::to_string(recursive));
            }
            if (seen[perm.forward[s]] || perm.inverse[perm.forward[s]] != s) {
                r.fail("n=" + std::to_string(n) + ": permutation not a bijection at s=" +
                       std::to_string(s));
            }
            seen[perm.forward[s]] = true;
        }
    }
    return r;
}

inline SuiteReport verify_circuits(unsigned n_max, bool inject_sign_flip = false) {
    SuiteReport r;
    r.name = "circuit-vs-matrix";
    for (unsigned n = 1; n <= std::min(n_max, 10u); ++n) {
        const auto wht = build_sequency_wht(n);
        const auto uz = build_uz(n);
        const auto matrix = sequency_matrix(n);
        const auto perm = natural_to_sequency_perm(n);
        const std::uint64_t size = std::uint64_t{1} << n;
        double worst = 0.0;
        for (std::uint64_t j = 0; j < size; ++j) {
            const auto out = run_circuit(Statevector::basis(n, j), wht);
            for (std::uint64_t k = 0; k < size; ++k) {
                double v = out[k].real();
                if (inject_sign_flip && j == size - 1 && k == 0) v = -v;
                worst = std::max({worst, std::abs(v - matrix(k, j)), std::abs(out[k].imag())});
            }
            const auto moved = run_circuit(Statevector::basis(n, j), uz);
            ++r.checks;
            if (std::abs(moved[perm.forward[j]].real() - 1.0) > 1e-12) {
                r.fail("n=" + std::to_string(n) + ": U_Z does not send " + std::to_string(j) +
                       " to " + std::to_string(perm.forward[j]));
            }
        }
        ++r.checks;
        if (worst > 1e-12) {
            std::ostringstream os;
            os << "n=" << n << ": circuit deviates from sequency matrix by " << worst;
            r.fail(os.str());
        }
    }
    return r;
}

inline std::vector<FilterSpec> standard_specs(std::uint64_t size) {
    std::vector<FilterSpec> specs{FilterSpec::dc()};
    for (std::uint64_t num : {1u, 2u, 3u}) {
        if ((num * size) % 4 != 0) continue;
        const std::uint64_t c = num * size / 4;
        if (c == 0) continue;
        specs.push_back(FilterSpec::low_pass(c));
        specs.push_back(FilterSpec::high_pass(c));
    }
    if (size >= 4) specs.push_back(FilterSpec::band_pass(size / 4, 3 * size / 4));
    return specs;
}

inline SuiteReport verify_filter_paths(unsigned n) {
    SuiteReport r;
    r.name = "path-equivalence";
    std::vector<Composite> waves = demo_families();
    waves.push_back(stand_in_f());
    waves.push_back(stand_in_g());
    const std::uint64_t size = std::uint64_t{1} << n;
    for (const auto& wave : waves) {
        const auto signal = discretize(wave, n);
        if (std::all_of(signal.values().begin(), signal.values().end(),
                        [](double x) { return x == 0.0; })) {
            continue;
        }
        for (const auto& spec : standard_specs(size)) {
            const auto q = filter_quantum(signal, spec);
            const auto c = filter_classical_oracle(signal, spec);
            const double err = std::max(compare(q.pass_branch, c.pass).linf,
                                        compare(q.stop_branch, c.stop).linf);
            ++r.checks;
            if (err > 1e-10 || std::abs(q.p_pass + q.p_stop - 1.0) > 1e-12) {
                std::ostringstream os;
                os << wave.label << " " << spec.describe() << ": quantum vs oracle " << err
                   << ", probability sum " << q.p_pass + q.p_stop;
                r.fail(os.str());
            }
        }
    }
    return r;
}

inline std::vector<SuiteReport> run_verification(const VerifyOptions& opts) {
    const unsigned n_max = std::max(1u, opts.n_max);
    return {verify_sequency_map(std::min(n_max, kDefaultBruteForceBound)),
            verify_circuits(n_max, opts.inject_sign_flip),
            verify_filter_paths(std::min(n_max, 12u))};
}

}  // namespace seqwht

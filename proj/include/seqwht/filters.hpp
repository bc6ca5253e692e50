#pragma once

// End-to-end filtering: the quantum path runs the filter circuit on an
// amplitude-encoded signal; the classical oracle masks the sequency spectrum
// directly. Both return branches in the signal's physical units.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "seqwht/builders.hpp"
#include "seqwht/simulator.hpp"
#include "seqwht/walsh.hpp"

namespace seqwht {

struct FilterResult {
    Coefficients pass_branch;
    Coefficients stop_branch;
    double p_pass;
    double p_stop;
    double scale;
    AncillaConvention convention;
};

struct ClassicalSplit {
    Coefficients pass;
    Coefficients stop;
};

namespace detail {
inline Coefficients real_part(const std::vector<amplitude>& amps, double scale) {
    std::vector<double> out(amps.size());
    std::transform(amps.begin(), amps.end(), out.begin(),
                   [scale](const amplitude& a) { return a.real() * scale; });
    return Coefficients(std::move(out), Order::time);
}
}  // namespace detail

inline FilterResult filter_quantum(const Coefficients& signal, const FilterSpec& spec,
                                   const FilterCircuitOptions& options = {}) {
    if (signal.order() != Order::time) throw OrderError("filter_quantum: expects a time-domain signal");
    spec.validate(signal.size());
    const unsigned n = signal.bit_width();
    auto [state, scale] = amplitude_encode(signal);
    const Circuit circuit = build_filter_circuit(n, spec, options);
    const Statevector out = run_circuit(state.with_ancilla(), circuit);

    const unsigned pass_bit = pass_outcome(options.convention);
    const Branch pass = project_ancilla(out, n, pass_bit);
    const Branch stop = project_ancilla(out, n, 1u - pass_bit);
    return FilterResult{detail::real_part(pass.amplitudes, scale),
                        detail::real_part(stop.amplitudes, scale),
                        pass.probability,
                        stop.probability,
                        scale,
                        options.convention};
}

/// Zero the sequency coefficients outside (pass) / inside (stop) the
/// pass-band and transform each back.
inline ClassicalSplit filter_classical_oracle(const Coefficients& signal, const FilterSpec& spec) {
    if (signal.order() != Order::time) {
        throw OrderError("filter_classical_oracle: expects a time-domain signal");
    }
    if (std::all_of(signal.values().begin(), signal.values().end(),
                    [](double x) { return x == 0.0; })) {
        throw NormalizationError("filter_classical_oracle: all-zero signal");
    }
    const std::size_t size = signal.size();
    spec.validate(size);
    const Coefficients spectrum = wht_sequency(signal);
    std::vector<double> pass(size, 0.0), stop(size, 0.0);
    for (std::size_t g = 0; g < size; ++g) {
        (spec.passes(g, size) ? pass : stop)[g] = spectrum[g];
    }
    return {wht_sequency(Coefficients(std::move(pass), Order::sequency), true),
            wht_sequency(Coefficients(std::move(stop), Order::sequency), true)};
}

/// f - mean(f).
inline Coefficients dc_remove_oracle(const Coefficients& signal) {
    const auto v = signal.values();
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
        throw NormalizationError("dc_remove_oracle: all-zero signal");
    }
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) x -= mean;
    return Coefficients(std::move(out), signal.order());
}

struct Metrics {
    double l2_abs = 0.0;
    double l2_rel = 0.0;  // relative to ||b||; equals l2_abs when b = 0
    double linf = 0.0;
};

inline Metrics compare(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw SizingError("compare: lengths " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()) + " differ");
    }
    Metrics m;
    double diff2 = 0.0, ref2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        diff2 += d * d;
        ref2 += b[i] * b[i];
        m.linf = std::max(m.linf, std::abs(d));
    }
    m.l2_abs = std::sqrt(diff2);
    m.l2_rel = ref2 > 0.0 ? m.l2_abs / std::sqrt(ref2) : m.l2_abs;
    return m;
}

inline Metrics compare(const Coefficients& a, const Coefficients& b) {
    return compare(a.values(), b.values());
}

}  // namespace seqwht

#pragma once

// Circuit constructors: the natural -> sequency permutation U_Z, the
// sequency-ordered WHT, the ancilla selector, and the full filter circuit.
//
// Data qubits are q_0 .. q_{n-1}; filter circuits add the ancilla q_n as the
// most significant qubit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "seqwht/circuit.hpp"
#include "seqwht/filter_spec.hpp"

namespace seqwht {

namespace detail {
inline void require_width(unsigned n, const char* who) {
    if (n == 0) throw SizingError(std::string(who) + ": need at least one data qubit");
    if (n > 29) throw SizingError(std::string(who) + ": at most 29 data qubits supported");
}
}  // namespace detail

/// U_Z on data qubits 0..n-1 of an `n_qubits`-wide circuit: CNOT(q_{k-1} ->
/// q_k) for k = 1..n-1 builds the prefix parities, then floor(n/2) swaps
/// reverse the qubit order. Maps |s> to |Z_n(s)>.
inline Circuit build_uz(unsigned n, std::optional<unsigned> n_qubits = std::nullopt) {
    detail::require_width(n, "build_uz");
    Circuit c(n_qubits.value_or(n), "U_Z(n=" + std::to_string(n) + ")");
    for (unsigned k = 1; k < n; ++k) c.append(Gate::cnot(k - 1, k));
    for (unsigned j = 0; j < n / 2; ++j) c.append(Gate::swap(j, n - 1 - j));
    return c;
}

inline Circuit build_uz_inverse(unsigned n, std::optional<unsigned> n_qubits = std::nullopt) {
    return build_uz(n, n_qubits).reversed("U_Z^-1(n=" + std::to_string(n) + ")");
}

/// H on every data qubit followed by U_Z.
inline Circuit build_sequency_wht(unsigned n, std::optional<unsigned> n_qubits = std::nullopt) {
    detail::require_width(n, "build_sequency_wht");
    Circuit c(n_qubits.value_or(n), "WHT_sequency(n=" + std::to_string(n) + ")");
    for (unsigned q = 0; q < n; ++q) c.append(Gate::h(q));
    c.append(build_uz(n, c.n_qubits()));
    return c;
}

/// Index block [prefix * 2^low_bits, (prefix + 1) * 2^low_bits).
struct DyadicBlock {
    std::uint64_t prefix;
    unsigned low_bits;

    Interval interval() const {
        return {prefix << low_bits, (prefix + 1) << low_bits};
    }
    friend bool operator==(const DyadicBlock&, const DyadicBlock&) = default;
};

/// Minimal cover of disjoint intervals by maximal aligned power-of-two blocks.
inline std::vector<DyadicBlock> dyadic_cover(const std::vector<Interval>& band, unsigned n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<DyadicBlock> blocks;
    for (const auto& iv : normalize_intervals(band, size)) {
        std::uint64_t lo = iv.lo;
        while (lo < iv.hi) {
            unsigned t = 0;
            while (t < n && (lo & ((std::uint64_t{2} << t) - 1)) == 0 &&
                   lo + (std::uint64_t{2} << t) <= iv.hi) {
                ++t;
            }
            blocks.push_back({lo >> t, t});
            lo += std::uint64_t{1} << t;
        }
    }
    return blocks;
}

/// One MCX per block on `target`, controlled by data qubits n-1 .. low_bits
/// with polarity from the block prefix (0 -> open, 1 -> closed).
inline Gate block_gate(const DyadicBlock& block, unsigned n, unsigned target) {
    std::vector<Control> controls;
    for (unsigned q = n; q-- > block.low_bits;) {
        const bool one = (block.prefix >> (q - block.low_bits)) & 1u;
        controls.push_back({q, one ? Polarity::closed : Polarity::open});
    }
    return Gate::mcx(std::move(controls), target);
}

/// Flips the ancilla q_n exactly on data indices inside `band`.
inline Circuit build_sequency_selector(unsigned n, const std::vector<Interval>& band) {
    detail::require_width(n, "build_sequency_selector");
    Circuit c(n + 1, "selector(n=" + std::to_string(n) + ")");
    for (const auto& block : dyadic_cover(band, n)) c.append(block_gate(block, n, n));
    return c;
}

struct FilterCircuitOptions {
    AncillaConvention convention = AncillaConvention::pass_on_zero;
    // Inserted between the selector and U_Z^-1; must act on n+1 qubits.
    std::optional<Circuit> sequency_domain_stage;
    // Cancels X pairs on the ancilla left over from complementing the selector.
    bool elide_redundant_x = true;
};

namespace detail {
// Lexicographic cost: gate count, then total control arity, then prefer the
// side that contains sequency 0.
inline std::tuple<std::size_t, std::size_t, int> cover_cost(const std::vector<DyadicBlock>& blocks,
                                                            unsigned n, bool contains_zero) {
    std::size_t arity = 0;
    for (const auto& b : blocks) arity += n - b.low_bits;
    return {blocks.size(), arity, contains_zero ? 0 : 1};
}
}  // namespace detail

/// Full filter circuit on n+1 qubits. With the default convention the
/// output is |0>|pass> + |1>|stop>.
///
/// The ancilla must end in the pass outcome exactly on the pass-band. That is
/// realized either by flipping on the pass-band after the initial X, or by an
/// extra X and flipping on the stop-band; the cheaper cover is used. DC
/// removal skips U_Z and its inverse since sequency 0 is natural index 0.
inline Circuit build_filter_circuit(unsigned n, const FilterSpec& spec,
                                    const FilterCircuitOptions& options = {}) {
    detail::require_width(n, "build_filter_circuit");
    const std::uint64_t size = std::uint64_t{1} << n;
    const auto pass = normalize_intervals(spec.pass_band(size), size);
    const auto stop = complement(pass, size);
    const unsigned anc = n;
    const bool skip_uz = spec.kind() == FilterKind::dc;

    const auto pass_blocks = dyadic_cover(pass, n);
    const auto stop_blocks = dyadic_cover(stop, n);
    const bool pass_has_zero = !pass.empty() && pass.front().lo == 0;
    const bool use_stop = detail::cover_cost(stop_blocks, n, !pass_has_zero) <
                          detail::cover_cost(pass_blocks, n, pass_has_zero);

    Circuit c(n + 1, spec.describe() + " (n=" + std::to_string(n) + ")");
    // Ancilla X (pass_on_zero only), then H on each data qubit.
    if (options.convention == AncillaConvention::pass_on_zero) c.append(Gate::x(anc));
    for (unsigned q = 0; q < n; ++q) c.append(Gate::h(q));
    if (!skip_uz) c.append(build_uz(n, n + 1));
    // Selector.
    if (use_stop) {
        c.append(Gate::x(anc));
        for (const auto& b : stop_blocks) c.append(block_gate(b, n, anc));
    } else {
        for (const auto& b : pass_blocks) c.append(block_gate(b, n, anc));
    }
    if (options.sequency_domain_stage) {
        if (options.sequency_domain_stage->n_qubits() != n + 1) {
            throw StructuralError("sequency-domain stage must act on n+1 qubits");
        }
        c.append(*options.sequency_domain_stage);
    }
    if (!skip_uz) c.append(build_uz_inverse(n, n + 1));
    for (unsigned q = 0; q < n; ++q) c.append(Gate::h(q));

    return options.elide_redundant_x ? elide_redundant_x(c) : c;
}

}  // namespace seqwht

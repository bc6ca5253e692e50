#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqwht/gate.hpp"

namespace seqwht {

/// Ordered gate list over a fixed number of qubits. Every appended gate is
/// validated against the qubit count.
class Circuit {
public:
    explicit Circuit(unsigned n_qubits, std::string label = {})
        : n_qubits_(n_qubits), label_(std::move(label)) {}

    unsigned n_qubits() const noexcept { return n_qubits_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    void set_label(std::string label) { label_ = std::move(label); }

    Circuit& append(Gate g) {
        g.validate(n_qubits_);
        gates_.push_back(std::move(g));
        return *this;
    }

    Circuit& append(const Circuit& other) {
        if (other.n_qubits_ > n_qubits_) {
            throw StructuralError("cannot append a " + std::to_string(other.n_qubits_) +
                                  "-qubit circuit to a " + std::to_string(n_qubits_) +
                                  "-qubit circuit");
        }
        for (const auto& g : other.gates_) append(g);
        return *this;
    }

    /// Gate list in reverse order. Equals the inverse circuit when every gate
    /// is an involution, which holds for the whole gate set.
    Circuit reversed(std::string label = {}) const {
        Circuit out(n_qubits_, label.empty() ? label_ + "^-1" : std::move(label));
        out.gates_.assign(gates_.rbegin(), gates_.rend());
        return out;
    }

private:
    unsigned n_qubits_;
    std::string label_;
    std::vector<Gate> gates_;
};

inline Circuit concat(const Circuit& a, const Circuit& b) {
    Circuit out(std::max(a.n_qubits(), b.n_qubits()), a.label());
    out.append(a).append(b);
    return out;
}

/// Cancels X-X pairs on the same qubit when no gate between them touches
/// that qubit.
inline Circuit elide_redundant_x(const Circuit& c) {
    const auto& gates = c.gates();
    std::vector<bool> keep(gates.size(), true);
    std::vector<std::optional<std::size_t>> pending(c.n_qubits());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.kind() == GateKind::X) {
            auto& slot = pending[g.target()];
            if (slot) {
                keep[*slot] = false;
                keep[i] = false;
                slot.reset();
            } else {
                slot = i;
            }
            continue;
        }
        for (unsigned q : g.qubits()) pending[q].reset();
    }
    Circuit out(c.n_qubits(), c.label());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (keep[i]) out.append(gates[i]);
    }
    return out;
}

struct GateStats {
    std::map<GateKind, std::size_t> counts;
    std::map<std::size_t, std::size_t> mcx_arities;  // control count -> occurrences
    std::size_t total = 0;
    std::size_t depth = 0;

    std::size_t count(GateKind k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }

    /// CNOT-count estimate with each MCX expanded under the linear bound:
    /// 1 control -> 1, 2 -> 6 (Toffoli), r >= 3 -> 4(r-2) Toffolis.
    std::size_t elementary_cnot_estimate() const {
        std::size_t cnots = count(GateKind::CNOT) + 3 * count(GateKind::SWAP);
        for (auto [arity, occurrences] : mcx_arities) {
            std::size_t per = arity <= 1 ? arity : arity == 2 ? 6 : 24 * (arity - 2);
            cnots += per * occurrences;
        }
        return cnots;
    }
};

/// Per-kind counts, MCX arity multiset, and depth by greedy layering: each
/// gate lands on the first layer after the last layer touching any of its
/// qubits.
inline GateStats gate_stats(const Circuit& c) {
    GateStats stats;
    std::vector<std::size_t> free_at(c.n_qubits(), 0);
    for (const Gate& g : c.gates()) {
        ++stats.counts[g.kind()];
        ++stats.total;
        if (g.kind() == GateKind::MCX) ++stats.mcx_arities[g.controls().size()];
        const auto qs = g.qubits();
        std::size_t layer = 0;
        for (unsigned q : qs) layer = std::max(layer, free_at[q]);
        for (unsigned q : qs) free_at[q] = layer + 1;
        stats.depth = std::max(stats.depth, layer + 1);
    }
    return stats;
}

}  // namespace seqwht

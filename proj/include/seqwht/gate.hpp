#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "seqwht/error.hpp"

namespace seqwht {

enum class GateKind { H, X, CNOT, SWAP, MCX };

inline const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::CNOT: return "CNOT";
        case GateKind::SWAP: return "SWAP";
        case GateKind::MCX: return "MCX";
    }
    return "?";
}

// open: fires on |0>, closed: fires on |1>.
enum class Polarity { open, closed };

inline const char* to_string(Polarity p) { return p == Polarity::open ? "open" : "closed"; }

struct Control {
    unsigned qubit;
    Polarity polarity;

    friend bool operator==(const Control&, const Control&) = default;
};

/// Symbolic gate descriptor. Construct through the named factories.
///
/// `targets` holds one qubit for H, X, CNOT and MCX, two for SWAP. CNOT is
/// stored with a single closed control.
class Gate {
public:
    static Gate h(unsigned q) { return Gate(GateKind::H, {q}, {}); }
    static Gate x(unsigned q) { return Gate(GateKind::X, {q}, {}); }
    static Gate cnot(unsigned control, unsigned target) {
        return Gate(GateKind::CNOT, {target}, {{control, Polarity::closed}});
    }
    static Gate swap(unsigned a, unsigned b) { return Gate(GateKind::SWAP, {a, b}, {}); }
    // An empty control list degenerates to X.
    static Gate mcx(std::vector<Control> controls, unsigned target) {
        if (controls.empty()) return x(target);
        return Gate(GateKind::MCX, {target}, std::move(controls));
    }

    GateKind kind() const noexcept { return kind_; }
    const std::vector<unsigned>& targets() const noexcept { return targets_; }
    unsigned target() const noexcept { return targets_.front(); }
    const std::vector<Control>& controls() const noexcept { return controls_; }

    std::vector<unsigned> qubits() const {
        std::vector<unsigned> q = targets_;
        for (const auto& c : controls_) q.push_back(c.qubit);
        return q;
    }

    bool touches(unsigned q) const {
        auto all = qubits();
        return std::find(all.begin(), all.end(), q) != all.end();
    }

    /// Throws StructuralError unless all qubits are distinct and < n_qubits.
    void validate(unsigned n_qubits) const {
        auto all = qubits();
        for (unsigned q : all) {
            if (q >= n_qubits) {
                throw StructuralError(std::string(to_string(kind_)) + " gate addresses qubit " +
                                      std::to_string(q) + " but only " +
                                      std::to_string(n_qubits) + " exist");
            }
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
            throw StructuralError(std::string(to_string(kind_)) +
                                  " gate repeats a qubit");
        }
    }

    friend bool operator==(const Gate&, const Gate&) = default;

private:
    Gate(GateKind kind, std::vector<unsigned> targets, std::vector<Control> controls)
        : kind_(kind), targets_(std::move(targets)), controls_(std::move(controls)) {}

    GateKind kind_;
    std::vector<unsigned> targets_;
    std::vector<Control> controls_;
};

}  // namespace seqwht

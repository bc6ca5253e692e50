#pragma once

// Dense statevector simulation of H, X, CNOT, SWAP and polarity-typed MCX.
// Amplitude index bit b is qubit b (qubit 0 least significant).

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "seqwht/circuit.hpp"
#include "seqwht/error.hpp"
#include "seqwht/walsh.hpp"

namespace seqwht {

using amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

inline double norm2(std::span<const amplitude> v) {
    double acc = 0.0;
    for (const auto& a : v) acc += std::norm(a);
    return std::sqrt(acc);
}

class Statevector {
public:
    /// |index> on n qubits.
    static Statevector basis(unsigned n_qubits, std::uint64_t index = 0) {
        check_width(n_qubits);
        std::vector<amplitude> amps(std::size_t{1} << n_qubits);
        if (index >= amps.size()) {
            throw StructuralError("basis index " + std::to_string(index) + " out of range");
        }
        amps[index] = 1.0;
        return Statevector(n_qubits, std::move(amps));
    }

    /// Takes ownership of amplitudes that must already have unit norm.
    static Statevector from_amplitudes(std::vector<amplitude> amps) {
        const unsigned n = bits::log2_exact(amps.size(), "amplitude count");
        const double nrm = norm2(amps);
        if (std::abs(nrm - 1.0) > kNormTolerance) {
            throw NormalizationError("amplitudes have norm " + std::to_string(nrm) +
                                     ", expected 1");
        }
        return Statevector(n, std::move(amps));
    }

    unsigned n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const amplitude> amplitudes() const noexcept { return amps_; }
    const amplitude& operator[](std::size_t i) const { return amps_[i]; }
    double norm() const { return norm2(amps_); }

    /// Adds a new most-significant qubit in |0>.
    Statevector with_ancilla() const {
        check_width(n_qubits_ + 1);
        std::vector<amplitude> amps(amps_.size() * 2);
        std::copy(amps_.begin(), amps_.end(), amps.begin());
        return Statevector(n_qubits_ + 1, std::move(amps));
    }

    void apply(const Gate& g) {
        g.validate(n_qubits_);
        switch (g.kind()) {
            case GateKind::H: apply_h(g.target()); break;
            case GateKind::X: apply_controlled_x(0, 0, g.target()); break;
            case GateKind::CNOT:
            case GateKind::MCX: {
                std::uint64_t mask = 0, value = 0;
                for (const auto& c : g.controls()) {
                    mask |= std::uint64_t{1} << c.qubit;
                    if (c.polarity == Polarity::closed) value |= std::uint64_t{1} << c.qubit;
                }
                apply_controlled_x(mask, value, g.target());
                break;
            }
            case GateKind::SWAP: apply_swap(g.targets()[0], g.targets()[1]); break;
        }
    }

private:
    Statevector(unsigned n, std::vector<amplitude> amps)
        : n_qubits_(n), amps_(std::move(amps)) {}

    static void check_width(unsigned n) {
        if (n > 30) throw SizingError("statevector limited to 30 qubits");
    }

    void apply_h(unsigned q) {
        const std::size_t m = std::size_t{1} << q;
        const double r = std::numbers::sqrt2 / 2.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & m) continue;
            const amplitude a = amps_[i];
            const amplitude b = amps_[i | m];
            amps_[i] = r * (a + b);
            amps_[i | m] = r * (a - b);
        }
    }

    void apply_controlled_x(std::uint64_t mask, std::uint64_t value, unsigned target) {
        const std::size_t t = std::size_t{1} << target;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & t) || (i & mask) != value) continue;
            std::swap(amps_[i], amps_[i | t]);
        }
    }

    void apply_swap(unsigned a, unsigned b) {
        const std::size_t ma = std::size_t{1} << a;
        const std::size_t mb = std::size_t{1} << b;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & ma) && !(i & mb)) std::swap(amps_[i], amps_[i ^ ma ^ mb]);
        }
    }

    unsigned n_qubits_;
    std::vector<amplitude> amps_;
};

inline Statevector apply_gate(Statevector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

inline Statevector run_circuit(Statevector state, const Circuit& circuit) {
    if (circuit.n_qubits() != state.n_qubits()) {
        throw StructuralError("circuit has " + std::to_string(circuit.n_qubits()) +
                              " qubits, state has " + std::to_string(state.n_qubits()));
    }
    for (const Gate& g : circuit.gates()) state.apply(g);
    return state;
}

struct EncodedSignal {
    Statevector state;
    double scale;  // ||signal||_2; state * scale recovers the samples
};

inline EncodedSignal amplitude_encode(const Coefficients& signal) {
    double acc = 0.0;
    for (double x : signal.values()) acc += x * x;
    const double scale = std::sqrt(acc);
    if (scale == 0.0) throw NormalizationError("cannot amplitude-encode an all-zero signal");
    std::vector<amplitude> amps;
    amps.reserve(signal.size());
    for (double x : signal.values()) amps.emplace_back(x / scale, 0.0);
    return {Statevector::from_amplitudes(std::move(amps)), scale};
}

struct Branch {
    std::vector<amplitude> amplitudes;  // not renormalized
    double probability;
};

/// Amplitudes whose `qubit` equals `outcome`, with that qubit removed from
/// the index. No renormalization.
inline Branch project_ancilla(const Statevector& state, unsigned qubit, unsigned outcome) {
    if (qubit >= state.n_qubits()) {
        throw StructuralError("project_ancilla: qubit " + std::to_string(qubit) +
                              " out of range");
    }
    if (outcome > 1) throw std::invalid_argument("project_ancilla: outcome must be 0 or 1");
    const std::size_t low = (std::size_t{1} << qubit) - 1;
    Branch b{std::vector<amplitude>(state.dim() / 2), 0.0};
    for (std::size_t k = 0; k < b.amplitudes.size(); ++k) {
        const std::size_t idx = ((k & ~low) << 1) | (std::size_t{outcome} << qubit) | (k & low);
        b.amplitudes[k] = state[idx];
        b.probability += std::norm(state[idx]);
    }
    return b;
}

}  // namespace seqwht

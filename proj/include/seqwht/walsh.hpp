#pragma once

// Classical Walsh-Hadamard transforms in natural (Hadamard) and sequency
// ordering, the natural -> sequency index map, and brute-force oracles used
// to cross-check them.
//
// All transforms use the unitary 1/sqrt(N) scaling in both directions, so
// the forward sequency transform of a signal f is exactly H_N^S f.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqwht/bits.hpp"
#include "seqwht/error.hpp"

namespace seqwht {

inline constexpr unsigned kDefaultBruteForceBound = 20;

enum class Order { time, natural, sequency };

inline const char* to_string(Order o) {
    switch (o) {
        case Order::time: return "time";
        case Order::natural: return "natural";
        case Order::sequency: return "sequency";
    }
    return "?";
}

/// Real sample or coefficient vector of power-of-two length, tagged with the
/// domain it lives in.
class Coefficients {
public:
    explicit Coefficients(std::vector<double> values, Order order = Order::time)
        : values_(std::move(values)), order_(order) {
        if (!bits::is_pow2(values_.size())) {
            throw SizingError("expected a power-of-two number of samples, got " +
                              std::to_string(values_.size()));
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    unsigned bit_width() const noexcept {
        return static_cast<unsigned>(std::countr_zero(values_.size()));
    }
    Order order() const noexcept { return order_; }

    std::span<const double> values() const noexcept { return values_; }
    const std::vector<double>& vector() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    std::vector<double> release() && { return std::move(values_); }

private:
    std::vector<double> values_;
    Order order_;
};

/// Row index s of the natural-order Walsh matrix, together with its bit width.
struct SequencyIndex {
    std::uint64_t s;
    unsigned n;

    SequencyIndex(std::uint64_t s_, unsigned n_) : s(s_), n(n_) {
        if (n >= 64 || s >> n != 0) {
            throw std::out_of_range("sequency index " + std::to_string(s_) +
                                    " does not fit in " + std::to_string(n_) + " bits");
        }
    }
};

// Unscaled in-place radix-2 butterfly. Length must be a power of two.
template <typename T>
void fwht_butterfly(std::span<T> data) {
    const std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                T x = data[j];
                T y = data[j + h];
                data[j] = x + y;
                data[j + h] = x - y;
            }
        }
    }
}

/// H_N v with unitary scaling. H_N is its own inverse, so `inverse` runs the
/// same computation; it only documents intent at the call site. Tag flips
/// time <-> natural.
inline Coefficients fwht_natural(Coefficients v, bool inverse = false) {
    (void)inverse;
    const Order in = v.order();
    if (in == Order::sequency) {
        throw OrderError("fwht_natural: input is sequency-ordered");
    }
    const Order out = in == Order::time ? Order::natural : Order::time;
    std::vector<double> data = std::move(v).release();
    fwht_butterfly(std::span<double>(data));
    const double scale = 1.0 / std::sqrt(static_cast<double>(data.size()));
    for (double& x : data) x *= scale;
    return Coefficients(std::move(data), out);
}

/// Sequency (zero-crossing count) of natural-order Walsh row s.
/// Bits: g_{n-1} = s_0, g_k = s_0 ^ ... ^ s_{n-1-k}.
inline std::uint64_t sequency_of(SequencyIndex idx) {
    std::uint64_t g = 0;
    unsigned prefix = 0;
    for (unsigned i = 0; i < idx.n; ++i) {
        prefix ^= bits::bit(idx.s, i);
        g |= static_cast<std::uint64_t>(prefix) << (idx.n - 1 - i);
    }
    return g;
}

/// One step of Z_m(s(m)) = 2 Z_{m-1}(s(m-1)) + (s_0 ^ ... ^ s_{m-1}).
struct RecursionStep {
    unsigned m;             // number of low bits kept
    std::uint64_t prefix;   // s(m)
    unsigned parity;        // s_0 ^ ... ^ s_{m-1}
    std::uint64_t value;    // Z_m(s(m))
};

/// Evaluates the sequency by the bit-prefix recursion, recording each level.
/// Z_1(s(1)) = s_0 is the base case.
inline std::vector<RecursionStep> sequency_recursion(SequencyIndex idx) {
    std::vector<RecursionStep> trace;
    std::uint64_t z = 0;
    unsigned parity = 0;
    for (unsigned m = 1; m <= idx.n; ++m) {
        parity ^= bits::bit(idx.s, m - 1);
        z = 2 * z + parity;
        const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
        trace.push_back({m, idx.s & mask, parity, z});
    }
    return trace;
}

/// Counts sign changes of F(k) = (-1)^{s.k}, k = 0..2^n-1, as
/// (1/2) sum |F(k+1) - F(k)|. Independent of sequency_of.
inline std::uint64_t zero_crossings_bruteforce(SequencyIndex idx,
                                               unsigned bound = kDefaultBruteForceBound) {
    if (idx.n > bound) {
        throw CostGuardError("zero_crossings_bruteforce: n=" + std::to_string(idx.n) +
                             " exceeds brute-force bound " + std::to_string(bound));
    }
    const std::uint64_t count = std::uint64_t{1} << idx.n;
    std::uint64_t twice = 0;
    int prev = 1;  // F(0) = 1
    for (std::uint64_t k = 1; k < count; ++k) {
        const int cur = bits::dot(idx.s, k) ? -1 : 1;
        twice += static_cast<std::uint64_t>(std::abs(cur - prev));
        prev = cur;
    }
    return twice / 2;
}

/// Reconstructs s from g using s_k = g_{n-k} ^ g_{n-k-1}, g_n = 0.
inline std::uint64_t natural_from_sequency(std::uint64_t g, unsigned n) {
    std::uint64_t s = 0;
    for (unsigned k = 0; k < n; ++k) {
        const unsigned hi = (n - k < n) ? bits::bit(g, n - k) : 0u;
        s |= static_cast<std::uint64_t>(hi ^ bits::bit(g, n - k - 1)) << k;
    }
    return s;
}

struct SequencyPermutation {
    std::vector<std::uint64_t> forward;  // natural s -> sequency g
    std::vector<std::uint64_t> inverse;  // sequency g -> natural s
};

inline SequencyPermutation natural_to_sequency_perm(unsigned n) {
    if (n == 0 || n >= 63) {
        throw SizingError("natural_to_sequency_perm: bit width must be in [1, 62]");
    }
    const std::size_t count = std::size_t{1} << n;
    SequencyPermutation p;
    p.forward.resize(count);
    p.inverse.resize(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        p.forward[s] = sequency_of({s, n});
    }
    for (std::uint64_t g = 0; g < count; ++g) {
        p.inverse[g] = natural_from_sequency(g, n);
    }
    return p;
}

/// Sequency-ordered transform H_N^S v. Forward: time -> sequency (natural
/// transform followed by the index map). Inverse: sequency -> time.
inline Coefficients wht_sequency(Coefficients v, bool inverse = false) {
    if (v.order() == Order::natural) {
        throw OrderError("wht_sequency: input is natural-ordered");
    }
    const std::size_t size = v.size();
    const unsigned n = v.bit_width();
    if (size == 1) {
        const Order out = v.order() == Order::time ? Order::sequency : Order::time;
        return Coefficients(std::move(v).release(), out);
    }
    const auto perm = natural_to_sequency_perm(n);
    if (!inverse) {
        const Order out = v.order() == Order::time ? Order::sequency : Order::time;
        auto natural = fwht_natural(Coefficients(std::move(v).release(), Order::time));
        std::vector<double> seq(size);
        for (std::size_t s = 0; s < size; ++s) seq[perm.forward[s]] = natural[s];
        return Coefficients(std::move(seq), out);
    }
    const Order out = v.order() == Order::sequency ? Order::time : Order::sequency;
    std::vector<double> natural(size);
    for (std::size_t g = 0; g < size; ++g) natural[perm.inverse[g]] = v[g];
    auto time = fwht_natural(Coefficients(std::move(natural), Order::natural));
    return Coefficients(std::move(time).release(), out);
}

/// Row-major dense real matrix; only used for oracle checks.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    std::vector<double> apply(std::span<const double> v) const {
        if (v.size() != cols_) throw SizingError("DenseMatrix::apply: size mismatch");
        std::vector<double> out(rows_, 0.0);
        for (std::size_t r = 0; r < rows_; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

namespace detail {
inline void check_matrix_bound(unsigned n, unsigned bound, const char* who) {
    if (n > bound || n > 30) {
        throw CostGuardError(std::string(who) + ": n=" + std::to_string(n) +
                             " exceeds brute-force bound");
    }
}
}  // namespace detail

/// Dense H_N with entries (-1)^{k.j} / sqrt(N).
inline DenseMatrix natural_matrix(unsigned n, unsigned bound = 14) {
    detail::check_matrix_bound(n, bound, "natural_matrix");
    const std::size_t size = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    DenseMatrix m(size, size);
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t j = 0; j < size; ++j)
            m(k, j) = bits::dot(k, j) ? -scale : scale;
    return m;
}

/// Dense H_N^S with entries (-1)^{sum_r k_{n-1-r} (j_r ^ j_{r+1})} / sqrt(N),
/// j_n = 0.
inline DenseMatrix sequency_matrix(unsigned n, unsigned bound = 14) {
    detail::check_matrix_bound(n, bound, "sequency_matrix");
    const std::size_t size = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    DenseMatrix m(size, size);
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t j = 0; j < size; ++j) {
            unsigned exponent = 0;
            for (unsigned r = 0; r < n; ++r) {
                const unsigned jr1 = r + 1 < n ? bits::bit(j, r + 1) : 0u;
                exponent ^= bits::bit(k, n - 1 - r) & (bits::bit(j, r) ^ jr1);
            }
            m(k, j) = exponent ? -scale : scale;
        }
    }
    return m;
}

namespace detail {
// Iterative radix-2 FFT, e^{-2 pi i k n / N} kernel, unscaled.
inline void fft_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t b = n >> 1;
        for (; j & b; b >>= 1) j ^= b;
        j ^= b;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w = std::polar(1.0, angle * static_cast<double>(k));
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}
}  // namespace detail

/// Fourier coefficients F_k = <U_k | f> with U_k[m] = exp(2 pi i k m / N) and
/// the same 1/sqrt(N) inner-product scaling as the Walsh coefficients.
inline std::vector<std::complex<double>> dft_spectrum(const Coefficients& v) {
    if (v.order() != Order::time) {
        throw OrderError("dft_spectrum: input must be a time-domain signal");
    }
    std::vector<std::complex<double>> a(v.values().begin(), v.values().end());
    detail::fft_inplace(a);
    const double scale = 1.0 / std::sqrt(static_cast<double>(a.size()));
    for (auto& x : a) x *= scale;
    return a;
}

}  // namespace seqwht

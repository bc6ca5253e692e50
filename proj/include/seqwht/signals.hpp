#pragma once

// Test and demo waveforms on [0, 1], midpoint discretization, and CSV I/O.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "seqwht/error.hpp"
#include "seqwht/walsh.hpp"

namespace seqwht {

enum class WaveKind { constant, sine, triangular, rectangular_pulse, square };

inline const char* to_string(WaveKind k) {
    switch (k) {
        case WaveKind::constant: return "constant";
        case WaveKind::sine: return "sine";
        case WaveKind::triangular: return "triangular";
        case WaveKind::rectangular_pulse: return "rectangular_pulse";
        case WaveKind::square: return "square";
    }
    return "?";
}

/// Periodic kinds use `cycles` and `phase` (radians); the pulse uses
/// `offset` and `width`. A discontinuity landing on a sample point takes the
/// right-limit value.
struct Waveform {
    WaveKind kind = WaveKind::constant;
    double amplitude = 1.0;
    double cycles = 1.0;
    double phase = 0.0;
    double offset = 0.0;
    double width = 1.0;

    static Waveform constant(double a = 1.0) { return {WaveKind::constant, a}; }
    static Waveform sine(double cycles, double a = 1.0, double phase = 0.0) {
        return {WaveKind::sine, a, cycles, phase};
    }
    // Rises linearly from -a at each cycle start to +a at mid-cycle.
    static Waveform triangular(double cycles, double a = 1.0, double phase = 0.0) {
        return {WaveKind::triangular, a, cycles, phase};
    }
    // +a on the first half of each cycle, -a on the second.
    static Waveform square(double cycles, double a = 1.0, double phase = 0.0) {
        return {WaveKind::square, a, cycles, phase};
    }
    // a on [offset, offset + width), 0 elsewhere.
    static Waveform rectangular_pulse(double offset, double width, double a = 1.0) {
        Waveform w{WaveKind::rectangular_pulse, a};
        w.offset = offset;
        w.width = width;
        w.validate();
        return w;
    }

    void validate() const {
        if (kind == WaveKind::rectangular_pulse &&
            !(offset >= 0.0 && width > 0.0 && offset + width <= 1.0)) {
            throw std::invalid_argument("rectangular pulse must satisfy 0 <= offset < offset+width <= 1");
        }
    }

    double operator()(double t) const {
        const double u = cycles * t + phase / (2.0 * std::numbers::pi);
        const double frac = u - std::floor(u);
        switch (kind) {
            case WaveKind::constant: return amplitude;
            case WaveKind::sine: return amplitude * std::sin(2.0 * std::numbers::pi * u);
            case WaveKind::triangular: return amplitude * (1.0 - 4.0 * std::abs(frac - 0.5));
            case WaveKind::square: return frac < 0.5 ? amplitude : -amplitude;
            case WaveKind::rectangular_pulse:
                return (t >= offset && t < offset + width) ? amplitude : 0.0;
        }
        return 0.0;
    }
};

/// Sum of waveform terms.
struct Composite {
    std::string label;
    std::vector<Waveform> terms;

    double operator()(double t) const {
        double acc = 0.0;
        for (const auto& w : terms) acc += w(t);
        return acc;
    }
};

/// N = 2^n samples at t_k = (2k + 1) / (2N).
template <typename F>
Coefficients discretize(const F& wave, unsigned n) {
    if (n == 0 || n > 30) throw SizingError("discretize: bit width must be in [1, 30]");
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> samples(size);
    for (std::size_t k = 0; k < size; ++k) {
        samples[k] = wave(static_cast<double>(2 * k + 1) / static_cast<double>(2 * size));
    }
    return Coefficients(std::move(samples), Order::time);
}

/// Stand-in for a piecewise test signal with a DC offset, two plateaus and a
/// small oscillation. Parameters are fixed; the shape is illustrative only.
inline Composite stand_in_f() {
    return {"stand-in f: 0.5 + square(2) + 0.75 pulse[0.3,0.5) + 0.2 sine(9)",
            {Waveform::constant(0.5), Waveform::square(2.0),
             Waveform::rectangular_pulse(0.3, 0.2, 0.75), Waveform::sine(9.0, 0.2)}};
}

/// Stand-in for a signal mixing low and high sequency content.
inline Composite stand_in_g() {
    return {"stand-in g: 1 + 0.8 square(1) + 0.5 square(8) + 0.3 triangular(3) + 0.25 sine(20)",
            {Waveform::constant(1.0), Waveform::square(1.0, 0.8), Waveform::square(8.0, 0.5),
             Waveform::triangular(3.0, 0.3), Waveform::sine(20.0, 0.25)}};
}

/// The four waveform families used for spectra and filter checks.
inline std::vector<Composite> demo_families() {
    return {{"sine", {Waveform::sine(3.0)}},
            {"triangular", {Waveform::triangular(2.0)}},
            {"rectangular", {Waveform::rectangular_pulse(0.3, 0.35)}},
            {"square", {Waveform::square(4.0, 1.0, 0.7)}}};
}

// ---------------------------------------------------------------------------
// CSV: one float per line, '.' decimal separator, '\n' terminator. Readers
// also accept `index,value` rows (value is the last field) and skip a leading
// non-numeric header row.

namespace csv {

inline std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

inline bool parse_double(std::string_view s, double& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

inline std::vector<double> parse(std::istream& in, const std::string& source = "<stream>") {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const auto comma = line.rfind(',');
        const std::string_view field =
            comma == std::string::npos ? std::string_view(line)
                                       : std::string_view(line).substr(comma + 1);
        double v = 0.0;
        if (!parse_double(field, v)) {
            if (values.empty() && line_no == 1) continue;  // header
            throw ParseError(source + ":" + std::to_string(line_no) + ": not a number: '" +
                             line + "'");
        }
        values.push_back(v);
    }
    return values;
}

inline std::vector<double> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "' for reading");
    return parse(in, path);
}

inline void write_lines(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << body;
    if (!out) throw ParseError("write to '" + path + "' failed");
}

inline void save(const std::string& path, std::span<const double> values) {
    std::string body;
    for (double v : values) body += format_double(v) + '\n';
    write_lines(path, body);
}

/// `index,value` rows.
inline void save_indexed(const std::string& path, std::span<const double> values,
                         std::string_view header = {}) {
    std::string body;
    if (!header.empty()) body += std::string(header) + '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
        body += std::to_string(i) + ',' + format_double(values[i]) + '\n';
    }
    write_lines(path, body);
}

}  // namespace csv

inline std::vector<double> load_csv(const std::string& path) { return csv::load(path); }
inline void save_csv(const std::string& path, std::span<const double> values) { csv::save(path, values); }

}  // namespace seqwht

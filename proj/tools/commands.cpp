#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqwht/circuit_json.hpp"
#include "seqwht/seqwht.hpp"
#include "seqwht/verify.hpp"

namespace seqwht::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Coefficients load_signal(const std::string& path) {
    auto values = load_csv(path);
    try {
        return Coefficients(std::move(values), Order::time);
    } catch (const SizingError& e) {
        throw SizingError("'" + path + "': " + e.what());
    }
}

double l2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

ordered_json metrics_json(const Metrics& m) {
    return {{"l2_abs", m.l2_abs}, {"l2_rel", m.l2_rel}, {"linf", m.linf}};
}

ordered_json stats_json(const GateStats& st) {
    ordered_json counts = ordered_json::object();
    for (auto k : {GateKind::H, GateKind::X, GateKind::CNOT, GateKind::SWAP, GateKind::MCX}) {
        counts[to_string(k)] = st.count(k);
    }
    ordered_json arities = ordered_json::object();
    for (auto [arity, occ] : st.mcx_arities) arities[std::to_string(arity)] = occ;
    return {{"counts", counts},
            {"mcx_arities", arities},
            {"total", st.total},
            {"depth", st.depth},
            {"elementary_cnot_estimate", st.elementary_cnot_estimate()}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    f << text;
}

// "dir/s.csv" + "sequency" -> "dir/s.sequency.csv"
std::string with_tag(const std::string& path, const std::string& tag) {
    std::filesystem::path p(path);
    const auto ext = p.has_extension() ? p.extension().string() : std::string(".csv");
    return (p.parent_path() / (p.stem().string() + "." + tag + ext)).string();
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    static const std::regex re(R"(^\s*(\d+)\s*:\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("expected A:B, got '" + text + "'");
    return {static_cast<unsigned>(std::stoul(m[1])), static_cast<unsigned>(std::stoul(m[2]))};
}

// ---------------------------------------------------------------------------

struct TransformArgs {
    std::string order = "sequency";
    bool inverse = false;
    std::string input, output;
};

int cmd_transform(const TransformArgs& a, std::ostream& out) {
    auto signal = load_signal(a.input);
    const double in_norm = l2(signal.values());
    Coefficients result = [&] {
        if (a.order == "natural") {
            return fwht_natural(Coefficients(std::move(signal).release(),
                                             a.inverse ? Order::natural : Order::time),
                                a.inverse);
        }
        return wht_sequency(Coefficients(std::move(signal).release(),
                                         a.inverse ? Order::sequency : Order::time),
                            a.inverse);
    }();
    save_csv(a.output, result.values());
    const double out_norm = l2(result.values());
    out << "parseval: input_l2=" << csv::format_double(in_norm)
        << " output_l2=" << csv::format_double(out_norm)
        << " abs_diff=" << csv::format_double(std::abs(in_norm - out_norm)) << '\n';
    return kOk;
}

struct FilterArgs {
    std::string kind, cutoff, band, input, prefix;
    bool pass_on_one = false;
};

int cmd_filter(const FilterArgs& a, std::ostream& out) {
    const auto signal = load_signal(a.input);
    const auto spec = parse_filter_spec(a.kind, a.cutoff, a.band, signal.size());
    FilterCircuitOptions opts;
    opts.convention = a.pass_on_one ? AncillaConvention::pass_on_one : AncillaConvention::pass_on_zero;

    const auto q = filter_quantum(signal, spec, opts);
    const auto c = filter_classical_oracle(signal, spec);
    const auto circuit = build_filter_circuit(signal.bit_width(), spec, opts);

    save_csv(a.prefix + ".pass.csv", q.pass_branch.values());
    save_csv(a.prefix + ".stop.csv", q.stop_branch.values());

    std::vector<double> q_sum(signal.size()), c_sum(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i) {
        q_sum[i] = q.pass_branch[i] + q.stop_branch[i];
        c_sum[i] = c.pass[i] + c.stop[i];
    }

    ordered_json band = ordered_json::array();
    for (const auto& iv : spec.pass_band(signal.size())) band.push_back({iv.lo, iv.hi});
    const unsigned pass_bit = pass_outcome(opts.convention);

    ordered_json meta;
    meta["filter"] = {{"kind", to_string(spec.kind())},
                      {"description", spec.describe()},
                      {"pass_band", band}};
    meta["samples"] = signal.size();
    meta["n_qubits"] = signal.bit_width() + 1;
    meta["convention"] = {
        {"ancilla_qubit", signal.bit_width()},
        {"pass_ancilla_outcome", pass_bit},
        {"pass_on_one", a.pass_on_one},
        {"branch_labels",
         {{"ancilla_0", pass_bit == 0 ? "pass" : "stop"}, {"ancilla_1", pass_bit == 1 ? "pass" : "stop"}}}};
    meta["probabilities"] = {{"pass", q.p_pass}, {"stop", q.p_stop}};
    meta["scale"] = q.scale;
    meta["gate_stats"] = stats_json(gate_stats(circuit));
    meta["errors"] = {
        {"quantum_vs_oracle",
         {{"pass", metrics_json(compare(q.pass_branch, c.pass))},
          {"stop", metrics_json(compare(q.stop_branch, c.stop))}}},
        {"reconstruction",
         {{"quantum", metrics_json(compare(q_sum, signal.values()))},
          {"oracle", metrics_json(compare(c_sum, signal.values()))}}}};
    write_text(a.prefix + ".meta.json", meta.dump(2) + "\n");

    out << spec.describe() << ": p_pass=" << csv::format_double(q.p_pass)
        << " p_stop=" << csv::format_double(q.p_stop) << " quantum_vs_oracle_l2_rel="
        << csv::format_double(compare(q.pass_branch, c.pass).l2_rel) << '\n';
    return kOk;
}

struct SpectrumArgs {
    std::string which = "sequency";
    std::string input, output;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    const auto signal = load_signal(a.input);
    auto sequency = [&] {
        const auto s = wht_sequency(signal);
        std::vector<double> mag(s.size());
        std::transform(s.values().begin(), s.values().end(), mag.begin(),
                       [](double x) { return std::abs(x); });
        return mag;
    };
    auto frequency = [&] {
        const auto f = dft_spectrum(signal);
        std::vector<double> mag(f.size());
        std::transform(f.begin(), f.end(), mag.begin(), [](auto z) { return std::abs(z); });
        return mag;
    };
    if (a.which == "sequency") {
        csv::save_indexed(a.output, sequency(), "index,magnitude");
        out << "wrote " << a.output << '\n';
    } else if (a.which == "frequency") {
        csv::save_indexed(a.output, frequency(), "index,magnitude");
        out << "wrote " << a.output << '\n';
    } else {
        const auto s_path = with_tag(a.output, "sequency");
        const auto f_path = with_tag(a.output, "frequency");
        csv::save_indexed(s_path, sequency(), "index,magnitude");
        csv::save_indexed(f_path, frequency(), "index,magnitude");
        out << "wrote " << s_path << " and " << f_path << '\n';
    }
    return kOk;
}

int cmd_sequency_map(unsigned n, const std::string& format, std::ostream& out) {
    if (n == 0 || n > 24) throw UsageError("--n must be in [1, 24]");
    const auto perm = natural_to_sequency_perm(n);
    if (format == "json") {
        out << ordered_json{{"n", n}, {"sequency", perm.forward}}.dump() << '\n';
        return kOk;
    }
    out << "s,sequency\n";
    for (std::size_t s = 0; s < perm.forward.size(); ++s) out << s << ',' << perm.forward[s] << '\n';
    return kOk;
}

int cmd_verify(unsigned n_max, bool inject, std::ostream& out) {
    const auto reports = run_verification({n_max, inject});
    bool ok = true;
    for (const auto& r : reports) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
        ok &= r.passed;
    }
    out << (ok ? "all suites passed" : "verification FAILED") << '\n';
    return ok ? kOk : kVerificationFailed;
}

struct GatesArgs {
    std::string kind = "sequency-wht";
    unsigned n = 0;
    std::string cutoff, band, dump, sweep, output, format = "csv";
    bool pass_on_one = false;
};

Circuit gates_circuit(const GatesArgs& a, unsigned n) {
    if (a.kind == "sequency-wht") return build_sequency_wht(n);
    if (a.kind == "uz") return build_uz(n);
    if (a.kind == "uz-inverse") return build_uz_inverse(n);
    FilterCircuitOptions opts;
    opts.convention = a.pass_on_one ? AncillaConvention::pass_on_one : AncillaConvention::pass_on_zero;
    const auto spec = parse_filter_spec(a.kind, a.cutoff, a.band, std::uint64_t{1} << n);
    return build_filter_circuit(n, spec, opts);
}

int cmd_gates(const GatesArgs& a, std::ostream& out) {
    if (!a.sweep.empty()) {
        const auto [lo, hi] = parse_range(a.sweep);
        if (lo == 0 || hi < lo || hi > 24) throw UsageError("--sweep range must satisfy 1 <= A <= B <= 24");
        std::ostringstream csv_out;
        csv_out << "n,N,H,X,CNOT,SWAP,MCX,total,depth,elementary_cnot_estimate\n";
        for (unsigned n = lo; n <= hi; ++n) {
            const auto st = gate_stats(gates_circuit(a, n));
            csv_out << n << ',' << (std::uint64_t{1} << n) << ',' << st.count(GateKind::H) << ','
                    << st.count(GateKind::X) << ',' << st.count(GateKind::CNOT) << ','
                    << st.count(GateKind::SWAP) << ',' << st.count(GateKind::MCX) << ',' << st.total
                    << ',' << st.depth << ',' << st.elementary_cnot_estimate() << '\n';
        }
        if (a.output.empty()) {
            out << csv_out.str();
        } else {
            write_text(a.output, csv_out.str());
            out << "wrote " << a.output << '\n';
        }
        return kOk;
    }
    if (a.n == 0) throw UsageError("gates: --n is required unless --sweep is given");
    const auto circuit = gates_circuit(a, a.n);
    const auto st = gate_stats(circuit);
    if (a.format == "json") {
        out << stats_json(st).dump(2) << '\n';
    } else {
        out << "circuit," << circuit.label() << '\n' << "qubits," << circuit.n_qubits() << '\n';
        for (auto k : {GateKind::H, GateKind::X, GateKind::CNOT, GateKind::SWAP, GateKind::MCX}) {
            out << to_string(k) << ',' << st.count(k) << '\n';
        }
        for (auto [arity, occ] : st.mcx_arities) out << "MCX[" << arity << " controls]," << occ << '\n';
        out << "total," << st.total << '\n'
            << "depth," << st.depth << '\n'
            << "elementary_cnot_estimate," << st.elementary_cnot_estimate() << '\n';
    }
    if (!a.dump.empty()) write_text(a.dump, to_json(circuit).dump(2) + "\n");
    return kOk;
}

}  // namespace

std::uint64_t parse_cutoff(const std::string& text, std::uint64_t size) {
    static const std::regex symbolic(R"(^\s*(\d*)\s*N\s*(?:/\s*(\d+))?\s*$)");
    static const std::regex integer(R"(^\s*(\d+)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, integer)) return std::stoull(m[1]);
    if (std::regex_match(text, m, symbolic)) {
        const std::uint64_t num = m[1].length() ? std::stoull(m[1]) : 1;
        const std::uint64_t den = m[2].matched ? std::stoull(m[2]) : 1;
        if (den == 0 || (num * size) % den != 0) {
            throw SpecError("cutoff '" + text + "' is not an integer for N=" + std::to_string(size));
        }
        return num * size / den;
    }
    throw SpecError("cannot parse cutoff '" + text + "'");
}

FilterSpec parse_filter_spec(const std::string& kind, const std::string& cutoff,
                             const std::string& band, std::uint64_t size) {
    FilterSpec spec = FilterSpec::dc();
    if (kind == "dc") {
        spec = FilterSpec::dc();
    } else if (kind == "low" || kind == "high") {
        if (cutoff.empty()) throw SpecError("--kind " + kind + " needs --cutoff");
        const auto c = parse_cutoff(cutoff, size);
        spec = kind == "low" ? FilterSpec::low_pass(c) : FilterSpec::high_pass(c);
    } else if (kind == "band") {
        const auto colon = band.find(':');
        if (colon == std::string::npos) throw SpecError("--kind band needs --band L:H");
        spec = FilterSpec::band_pass(parse_cutoff(band.substr(0, colon), size),
                                     parse_cutoff(band.substr(colon + 1), size));
    } else {
        throw SpecError("unknown filter kind '" + kind + "'");
    }
    spec.validate(size);
    return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sequency-ordered Walsh-Hadamard transforms and quantum sequency filtering"};
    app.require_subcommand(1);

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Walsh-Hadamard transform of a signal CSV");
    transform->add_option("--order", ta.order, "Coefficient ordering")
        ->check(CLI::IsMember({"natural", "sequency"}));
    transform->add_flag("--inverse", ta.inverse, "Treat the input as coefficients");
    transform->add_option("--input", ta.input)->required();
    transform->add_option("--output", ta.output)->required();

    FilterArgs fa;
    auto* filter = app.add_subcommand("filter", "Quantum sequency filter with classical cross-check");
    filter->add_option("--kind", fa.kind)->required()->check(CLI::IsMember({"dc", "low", "high", "band"}));
    filter->add_option("--cutoff", fa.cutoff, "Integer or N/2, N/4, 3N/4, ...");
    filter->add_option("--band", fa.band, "L:H pass-band [L, H)");
    filter->add_option("--input", fa.input)->required();
    filter->add_option("--output-prefix", fa.prefix)->required();
    filter->add_flag("--swap-ancilla", fa.pass_on_one, "Omit the initial ancilla X; pass branch on |1>");

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "Sequency and/or Fourier magnitude spectrum");
    spectrum->add_option("--which", sa.which)->check(CLI::IsMember({"sequency", "frequency", "both"}));
    spectrum->add_option("--input", sa.input)->required();
    spectrum->add_option("--output", sa.output)->required();

    unsigned map_n = 3;
    std::string map_format = "csv";
    auto* seqmap = app.add_subcommand("sequency-map", "Print s -> sequency of natural row s");
    seqmap->add_option("--n", map_n, "Bit width")->required();
    seqmap->add_option("--format", map_format)->check(CLI::IsMember({"csv", "json"}));

    unsigned n_max = 8;
    auto* verify = app.add_subcommand("verify", "Run the brute-force oracle suites");
    verify->add_option("--n-max", n_max, "Largest bit width checked");
    bool inject = false;
    // Harness self-test: corrupts one simulated amplitude so the suites must fail.
    verify->add_flag("--inject-sign-flip", inject)->group("");

    GatesArgs ga;
    auto* gates = app.add_subcommand("gates", "Gate counts and depth of a circuit");
    gates->add_option("--kind", ga.kind)
        ->check(CLI::IsMember({"sequency-wht", "uz", "uz-inverse", "dc", "low", "high", "band"}));
    gates->add_option("--n", ga.n, "Data qubits");
    gates->add_option("--cutoff", ga.cutoff);
    gates->add_option("--band", ga.band);
    gates->add_option("--dump", ga.dump, "Write the circuit as JSON");
    gates->add_option("--sweep", ga.sweep, "A:B - one CSV row per n in [A, B]");
    gates->add_option("--output", ga.output, "Sweep CSV destination (default stdout)");
    gates->add_option("--format", ga.format)->check(CLI::IsMember({"csv", "json"}));
    gates->add_flag("--swap-ancilla", ga.pass_on_one);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*transform) return cmd_transform(ta, out);
        if (*filter) return cmd_filter(fa, out);
        if (*spectrum) return cmd_spectrum(sa, out);
        if (*seqmap) return cmd_sequency_map(map_n, map_format, out);
        if (*verify) return cmd_verify(n_max, inject, out);
        if (*gates) return cmd_gates(ga, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}

}  // namespace seqwht::cli

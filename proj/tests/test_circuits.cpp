#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "seqwht/builders.hpp"
#include "seqwht/circuit_json.hpp"
#include "seqwht/simulator.hpp"
#include "seqwht/walsh.hpp"

using namespace seqwht;

namespace {

// Basis index the circuit sends |k> to; requires a permutation circuit.
std::uint64_t image(const Circuit& c, std::uint64_t k) {
    const auto out = run_circuit(Statevector::basis(c.n_qubits(), k), c);
    for (std::uint64_t i = 0; i < out.dim(); ++i)
        if (std::abs(out[i] - amplitude(1.0)) < 1e-12) return i;
    ADD_FAILURE() << "not a permutation on input " << k;
    return ~std::uint64_t{0};
}

std::vector<GateKind> kinds(const Circuit& c) {
    std::vector<GateKind> out;
    for (const auto& g : c.gates()) out.push_back(g.kind());
    return out;
}

std::vector<GateKind> repeat(GateKind k, std::size_t n) { return std::vector<GateKind>(n, k); }

std::vector<GateKind> join(std::initializer_list<std::vector<GateKind>> parts) {
    std::vector<GateKind> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

TEST(BuildUz, ExampleFiveToSix) { EXPECT_EQ(image(build_uz(3), 5), 6u); }

TEST(BuildUz, OneQubitIsEmpty) {
    const auto c = build_uz(1);
    EXPECT_TRUE(c.empty());
    EXPECT_EQ(image(c, 0), 0u);
    EXPECT_EQ(image(c, 1), 1u);
}

TEST(BuildUz, ZeroQubitsRejected) {
    EXPECT_THROW(build_uz(0), SizingError);
    EXPECT_THROW(build_sequency_wht(0), SizingError);
}

TEST(BuildUz, RealizesSequencyPermutation) {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto perm = natural_to_sequency_perm(n);
        const auto c = build_uz(n);
        const auto inv = build_uz_inverse(n);
        for (std::uint64_t s = 0; s < perm.forward.size(); ++s) {
            ASSERT_EQ(image(c, s), perm.forward[s]) << n << " " << s;
            ASSERT_EQ(image(inv, s), perm.inverse[s]) << n << " " << s;
        }
    }
}

TEST(BuildUz, GateInventory) {
    for (unsigned n = 1; n <= 12; ++n) {
        const auto st = gate_stats(build_uz(n));
        EXPECT_EQ(st.count(GateKind::CNOT), n - 1);
        EXPECT_EQ(st.count(GateKind::SWAP), n / 2);
        EXPECT_EQ(st.total, n - 1 + n / 2);
    }
}

TEST(BuildUzInverse, UndoesForward) {
    const auto round = concat(build_uz(3), build_uz_inverse(3));
    for (std::uint64_t s = 0; s < 8; ++s) EXPECT_EQ(image(round, s), s);
    EXPECT_EQ(image(build_uz_inverse(3), 6), 5u);
}

TEST(BuildSequencyWht, ZeroMapsToUniform) {
    const auto out = run_circuit(Statevector::basis(3, 0), build_sequency_wht(3));
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(out[k].real(), 1.0 / std::sqrt(8.0), 1e-15);
}

TEST(BuildSequencyWht, MatchesDenseOracleUpToEight) {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto c = build_sequency_wht(n);
        const auto expected = oracle::sequency_sorted(n);
        double worst = 0.0;
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
            const auto out = run_circuit(Statevector::basis(n, j), c);
            for (std::uint64_t k = 0; k < out.dim(); ++k)
                worst = std::max(worst, std::abs(out[k] - amplitude(expected[k][j])));
        }
        EXPECT_LE(worst, 1e-12) << n;
    }
}

TEST(BuildSequencyWht, GateStats) {
    for (unsigned n = 1; n <= 12; ++n) {
        const auto st = gate_stats(build_sequency_wht(n));
        EXPECT_EQ(st.count(GateKind::H), n);
        EXPECT_EQ(st.count(GateKind::CNOT), n - 1);
        EXPECT_EQ(st.count(GateKind::SWAP), n / 2);
    }
    const auto st7 = gate_stats(build_sequency_wht(7));
    EXPECT_EQ(st7.total, 16u);
}

TEST(DyadicCover, SplitsIntoAlignedBlocks) {
    const auto blocks = dyadic_cover({{3, 6}}, 3);
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0].interval(), (Interval{3, 4}));
    EXPECT_EQ(blocks[1].interval(), (Interval{4, 6}));
    EXPECT_EQ(dyadic_cover({{0, 8}}, 3).size(), 1u);
    EXPECT_TRUE(dyadic_cover({}, 3).empty());
}

TEST(DyadicCover, CoversExactlyTheBand) {
    std::mt19937_64 rng(8);
    const unsigned n = 6;
    std::uniform_int_distribution<std::uint64_t> d(0, 64);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        std::vector<std::uint64_t> pts{a, b, c, e};
        std::sort(pts.begin(), pts.end());
        const std::vector<Interval> band{{pts[0], pts[1]}, {pts[2], pts[3]}};
        std::vector<int> hits(64, 0);
        for (const auto& blk : dyadic_cover(band, n)) {
            const auto iv = blk.interval();
            ASSERT_EQ(iv.lo % iv.length(), 0u);
            for (auto k = iv.lo; k < iv.hi; ++k) ++hits[k];
        }
        for (std::uint64_t k = 0; k < 64; ++k) {
            const bool in = band[0].contains(k) || band[1].contains(k);
            ASSERT_EQ(hits[k], in ? 1 : 0) << k;
        }
    }
}

TEST(Selector, HalfBandIsSingleOpenControl) {
    const auto c = build_sequency_selector(7, {{0, 64}});
    ASSERT_EQ(c.size(), 1u);
    const Gate& g = c.gates()[0];
    EXPECT_EQ(g.target(), 7u);
    ASSERT_EQ(g.controls().size(), 1u);
    EXPECT_EQ(g.controls()[0], (Control{6, Polarity::open}));
}

TEST(Selector, QuarterBandIsTwoOpenControls) {
    const auto c = build_sequency_selector(7, {{0, 32}});
    ASSERT_EQ(c.size(), 1u);
    const auto& controls = c.gates()[0].controls();
    ASSERT_EQ(controls.size(), 2u);
    EXPECT_EQ(controls[0], (Control{6, Polarity::open}));
    EXPECT_EQ(controls[1], (Control{5, Polarity::open}));
}

TEST(Selector, UpperQuarterIsTwoClosedControls) {
    const auto c = build_sequency_selector(7, {{96, 128}});
    ASSERT_EQ(c.size(), 1u);
    for (const auto& ctl : c.gates()[0].controls()) EXPECT_EQ(ctl.polarity, Polarity::closed);
}

TEST(Selector, TruthTableMatchesInterval) {
    const auto c = build_sequency_selector(3, {{3, 6}});
    for (std::uint64_t k = 0; k < 8; ++k) {
        const bool flipped = image(c, k) == (k | 8u);
        EXPECT_EQ(flipped, 3 <= k && k < 6) << k;
    }
}

TEST(Selector, ExhaustiveBandsOnFourBits) {
    for (std::uint64_t lo = 0; lo <= 16; ++lo) {
        for (std::uint64_t hi = lo; hi <= 16; ++hi) {
            const auto c = build_sequency_selector(4, {{lo, hi}});
            for (std::uint64_t k = 0; k < 16; ++k) {
                ASSERT_EQ(image(c, k) == (k | 16u), lo <= k && k < hi) << lo << " " << hi << " " << k;
            }
        }
    }
}

TEST(Selector, RejectsBadBands) {
    EXPECT_THROW(build_sequency_selector(3, {{0, 9}}), SpecError);
    EXPECT_THROW(build_sequency_selector(3, {{0, 4}, {3, 6}}), SpecError);
    EXPECT_THROW(build_sequency_selector(3, {{5, 4}}), SpecError);
}

TEST(FilterCircuit, LowPassHalfMatchesReferenceLayout) {
    const auto c = build_filter_circuit(7, FilterSpec::low_pass(64));
    EXPECT_EQ(c.n_qubits(), 8u);
    using K = GateKind;
    EXPECT_EQ(kinds(c), join({{K::X}, repeat(K::H, 7), repeat(K::CNOT, 6), repeat(K::SWAP, 3), {K::MCX},
                              repeat(K::SWAP, 3), repeat(K::CNOT, 6), repeat(K::H, 7)}));
    const Gate& sel = c.gates()[1 + 7 + 6 + 3];
    ASSERT_EQ(sel.controls().size(), 1u);
    EXPECT_EQ(sel.controls()[0], (Control{6, Polarity::open}));
    EXPECT_EQ(sel.target(), 7u);
}

TEST(FilterCircuit, ThreeQuarterCutoffDropsRedundantX) {
    const auto c = build_filter_circuit(7, FilterSpec::low_pass(96));
    const auto st = gate_stats(c);
    EXPECT_EQ(st.count(GateKind::X), 0u);
    EXPECT_EQ(st.count(GateKind::MCX), 1u);
    EXPECT_EQ(st.mcx_arities.at(2), 1u);

    FilterCircuitOptions literal;
    literal.elide_redundant_x = false;
    EXPECT_EQ(gate_stats(build_filter_circuit(7, FilterSpec::low_pass(96), literal)).count(GateKind::X), 2u);
}

TEST(FilterCircuit, DcUsesNaturalOrderAndAllOpenControls) {
    const auto c = build_filter_circuit(7, FilterSpec::dc());
    const auto st = gate_stats(c);
    EXPECT_EQ(st.count(GateKind::H), 14u);
    EXPECT_EQ(st.count(GateKind::X), 0u);
    EXPECT_EQ(st.count(GateKind::CNOT), 0u);
    EXPECT_EQ(st.count(GateKind::SWAP), 0u);
    ASSERT_EQ(st.count(GateKind::MCX), 1u);
    const Gate& mcx = c.gates()[7];
    EXPECT_EQ(mcx.controls().size(), 7u);
    for (const auto& ctl : mcx.controls()) EXPECT_EQ(ctl.polarity, Polarity::open);

    FilterCircuitOptions literal;
    literal.elide_redundant_x = false;
    EXPECT_EQ(gate_stats(build_filter_circuit(7, FilterSpec::dc(), literal)).count(GateKind::X), 2u);
}

TEST(FilterCircuit, BandPassUsesOpenThenClosedPair) {
    const auto c = build_filter_circuit(7, FilterSpec::band_pass(32, 96));
    std::vector<Gate> mcx;
    for (const auto& g : c.gates())
        if (g.kind() == GateKind::MCX) mcx.push_back(g);
    ASSERT_EQ(mcx.size(), 2u);
    for (const auto& ctl : mcx[0].controls()) EXPECT_EQ(ctl.polarity, Polarity::open);
    for (const auto& ctl : mcx[1].controls()) EXPECT_EQ(ctl.polarity, Polarity::closed);
    EXPECT_EQ(mcx[0].controls().size(), 2u);
    EXPECT_EQ(mcx[1].controls().size(), 2u);
    EXPECT_EQ(gate_stats(c).count(GateKind::X), 0u);
}

TEST(FilterCircuit, HighPassHasNoAncillaX) {
    const auto st = gate_stats(build_filter_circuit(7, FilterSpec::high_pass(32)));
    EXPECT_EQ(st.count(GateKind::X), 0u);
    EXPECT_EQ(st.mcx_arities.at(2), 1u);
}

TEST(FilterCircuit, SequencyStageInsertedBeforeInverse) {
    Circuit stage(4, "stage");
    stage.append(Gate::h(0));
    FilterCircuitOptions opts;
    opts.sequency_domain_stage = stage;
    const auto plain = build_filter_circuit(3, FilterSpec::low_pass(4));
    const auto with = build_filter_circuit(3, FilterSpec::low_pass(4), opts);
    ASSERT_EQ(with.size(), plain.size() + 1);
    // X, 3 H, 2 CNOT, 1 SWAP, selector, then the stage
    EXPECT_EQ(with.gates()[8], Gate::h(0));

    opts.sequency_domain_stage = Circuit(3);
    EXPECT_THROW(build_filter_circuit(3, FilterSpec::low_pass(4), opts), StructuralError);
}

TEST(FilterCircuit, InvalidSpec) {
    EXPECT_THROW(build_filter_circuit(3, FilterSpec::low_pass(0)), SpecError);
    EXPECT_THROW(build_filter_circuit(3, FilterSpec::low_pass(9)), SpecError);
    EXPECT_THROW(build_filter_circuit(3, FilterSpec::band_pass(4, 4)), SpecError);
}

TEST(FilterCircuit, AncillaEndsInPassOutcomeExactlyOnPassBand) {
    // Run the sequency-domain part in isolation: start from |anc>|g> after
    // U_Z and check the selector leaves the ancilla at 0 iff g passes.
    const unsigned n = 5;
    const std::uint64_t size = 32;
    for (const auto& spec : {FilterSpec::low_pass(8), FilterSpec::low_pass(24), FilterSpec::high_pass(16),
                             FilterSpec::band_pass(8, 24), FilterSpec::band_pass(3, 17)}) {
        const auto full = build_filter_circuit(n, spec);
        // Strip the Hadamard layers and the U_Z pair: keep only ancilla gates.
        Circuit ancilla_part(n + 1);
        for (const auto& g : full.gates())
            if (g.touches(n)) ancilla_part.append(g);
        for (std::uint64_t g = 0; g < size; ++g) {
            const auto out = image(ancilla_part, g);
            EXPECT_EQ((out >> n) == 0, spec.passes(g, size)) << spec.describe() << " g=" << g;
        }
    }
}

TEST(GateStats, EmptyCircuit) {
    const auto st = gate_stats(Circuit(3));
    EXPECT_EQ(st.total, 0u);
    EXPECT_EQ(st.depth, 0u);
    EXPECT_TRUE(st.counts.empty());
}

TEST(GateStats, DepthUsesParallelLayers) {
    Circuit c(4);
    c.append(Gate::h(0)).append(Gate::h(1)).append(Gate::cnot(0, 1)).append(Gate::swap(2, 3));
    const auto st = gate_stats(c);
    EXPECT_EQ(st.depth, 2u);
    EXPECT_LE(st.depth, st.total);
}

TEST(GateStats, DyadicLowPassClosedForm) {
    for (unsigned n = 3; n <= 12; ++n) {
        std::size_t prev_depth = 0;
        for (unsigned r = 1; r <= n; ++r) {
            const std::uint64_t c = (std::uint64_t{1} << n) >> r;
            const auto st = gate_stats(build_filter_circuit(n, FilterSpec::low_pass(c)));
            EXPECT_EQ(st.count(GateKind::H), 2 * n);
            EXPECT_EQ(st.count(GateKind::CNOT), 2 * (n - 1));
            EXPECT_EQ(st.count(GateKind::SWAP), 2 * (n / 2));
            EXPECT_EQ(st.count(GateKind::X), 1u);
            EXPECT_EQ(st.count(GateKind::MCX), 1u);
            EXPECT_EQ(st.mcx_arities.at(r), 1u);
            EXPECT_EQ(st.total, 2 * n + 2 * (n - 1) + 2 * (n / 2) + 2);
            EXPECT_EQ(st.depth, 2 * n + 3) << n << " " << r;
            if (r == 1) {
                EXPECT_GT(st.depth, prev_depth);
                prev_depth = st.depth;
            }
        }
    }
}

TEST(ElideX, CancelsOnlyAcrossUntouchedWires) {
    Circuit c(2);
    c.append(Gate::x(0)).append(Gate::h(1)).append(Gate::x(0));
    const auto elided = elide_redundant_x(c);
    ASSERT_EQ(elided.size(), 1u);
    EXPECT_EQ(elided.gates()[0], Gate::h(1));
    Circuit d(2);
    d.append(Gate::x(0)).append(Gate::cnot(0, 1)).append(Gate::x(0));
    EXPECT_EQ(elide_redundant_x(d).size(), 3u);
    Circuit e(1);
    e.append(Gate::x(0)).append(Gate::x(0)).append(Gate::x(0));
    EXPECT_EQ(elide_redundant_x(e).size(), 1u);
}

TEST(CircuitJson, RoundTripPreservesGates) {
    for (const auto& spec : {FilterSpec::low_pass(64), FilterSpec::band_pass(32, 96), FilterSpec::dc()}) {
        const auto c = build_filter_circuit(7, spec);
        const auto j = to_json(c);
        EXPECT_EQ(j.at("n_qubits"), 8);
        const auto back = circuit_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(back.gates(), c.gates());
        EXPECT_EQ(back.label(), c.label());
    }
}

TEST(CircuitJson, GateRecordFields) {
    const auto j = to_json(Gate::mcx({{6, Polarity::open}, {5, Polarity::closed}}, 7));
    EXPECT_EQ(j.at("kind"), "MCX");
    EXPECT_EQ(j.at("targets"), nlohmann::json::array({7}));
    EXPECT_EQ(j.at("controls"), nlohmann::json::array({6, 5}));
    EXPECT_EQ(j.at("polarities"), nlohmann::json::array({"open", "closed"}));
}

TEST(CircuitJson, RejectsMalformed) {
    EXPECT_THROW(circuit_from_json({{"format", "other"}}), StructuralError);
    auto j = to_json(build_uz(3));
    j["gates"][0]["kind"] = "T";
    EXPECT_THROW(circuit_from_json(j), StructuralError);
    j = to_json(build_uz(3));
    j["gates"][0]["targets"] = {9};
    EXPECT_THROW(circuit_from_json(j), StructuralError);
}

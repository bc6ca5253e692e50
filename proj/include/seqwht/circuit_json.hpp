#pragma once

// Circuit <-> JSON.
//
//   {
//     "format": "seqwht.circuit",
//     "version": 1,
//     "label": "<text>",
//     "n_qubits": <int>,
//     "gates": [
//       {"kind": "H"|"X"|"CNOT"|"SWAP"|"MCX",
//        "targets": [<int>, ...],          // 1 entry, 2 for SWAP
//        "controls": [<int>, ...],         // empty for H, X, SWAP
//        "polarities": ["open"|"closed"]}  // parallel to controls
//     ]
//   }

#include <string>
#include <vector>

#include "json.hpp"
#include "seqwht/circuit.hpp"

namespace seqwht {

inline constexpr const char* kCircuitFormat = "seqwht.circuit";
inline constexpr int kCircuitFormatVersion = 1;

inline nlohmann::json to_json(const Gate& g) {
    nlohmann::json controls = nlohmann::json::array();
    nlohmann::json polarities = nlohmann::json::array();
    for (const auto& c : g.controls()) {
        controls.push_back(c.qubit);
        polarities.push_back(to_string(c.polarity));
    }
    return {{"kind", to_string(g.kind())},
            {"targets", g.targets()},
            {"controls", controls},
            {"polarities", polarities}};
}

inline nlohmann::json to_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates()) gates.push_back(to_json(g));
    return {{"format", kCircuitFormat},
            {"version", kCircuitFormatVersion},
            {"label", c.label()},
            {"n_qubits", c.n_qubits()},
            {"gates", gates}};
}

inline Gate gate_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const auto targets = j.at("targets").get<std::vector<unsigned>>();
    const auto controls = j.value("controls", std::vector<unsigned>{});
    const auto polarities = j.value("polarities", std::vector<std::string>{});
    if (controls.size() != polarities.size()) {
        throw StructuralError("gate record: controls and polarities differ in length");
    }
    auto need_targets = [&](std::size_t count) {
        if (targets.size() != count) {
            throw StructuralError(kind + " gate record needs " + std::to_string(count) + " target(s)");
        }
    };
    if (kind == "H") { need_targets(1); return Gate::h(targets[0]); }
    if (kind == "X") { need_targets(1); return Gate::x(targets[0]); }
    if (kind == "SWAP") { need_targets(2); return Gate::swap(targets[0], targets[1]); }
    if (kind == "CNOT") {
        need_targets(1);
        if (controls.size() != 1 || polarities[0] != "closed") {
            throw StructuralError("CNOT gate record needs exactly one closed control");
        }
        return Gate::cnot(controls[0], targets[0]);
    }
    if (kind == "MCX") {
        need_targets(1);
        std::vector<Control> cs;
        for (std::size_t i = 0; i < controls.size(); ++i) {
            if (polarities[i] != "open" && polarities[i] != "closed") {
                throw StructuralError("unknown polarity '" + polarities[i] + "'");
            }
            cs.push_back({controls[i], polarities[i] == "open" ? Polarity::open : Polarity::closed});
        }
        return Gate::mcx(std::move(cs), targets[0]);
    }
    throw StructuralError("unknown gate kind '" + kind + "'");
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
    if (j.value("format", std::string{}) != kCircuitFormat) {
        throw StructuralError("not a seqwht circuit document");
    }
    Circuit c(j.at("n_qubits").get<unsigned>(), j.value("label", std::string{}));
    for (const auto& g : j.at("gates")) c.append(gate_from_json(g));
    return c;
}

}  // namespace seqwht

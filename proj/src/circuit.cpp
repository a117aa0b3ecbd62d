#include "qcf/circuit.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qcf/errors.hpp"
#include "qcf/rng.hpp"

namespace qcf {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int draw_qubit(Rng& rng, int n) { return static_cast<int>(rng.uniform_int(n)); }

// Uniform over ordered pairs of distinct qubits.
std::pair<int, int> draw_qubit_pair(Rng& rng, int n) {
    const int a = static_cast<int>(rng.uniform_int(n));
    int b = static_cast<int>(rng.uniform_int(n - 1));
    if (b >= a) {
        ++b;
    }
    return {a, b};
}

Gate draw_gate(Rng& rng, GateKind kind, int n) {
    Gate g;
    g.kind = kind;
    if (is_single_qubit(kind)) {
        g.qubits = {draw_qubit(rng, n)};
    } else {
        const auto [a, b] = draw_qubit_pair(rng, n);
        g.qubits = {a, b};
    }
    if (kind == GateKind::RZ) {
        g.angle = rng.uniform_double() * kTwoPi;
    }
    return g;
}

GateKind draw_clifford_kind(Rng& rng) {
    const double u = rng.uniform_double();
    if (u < 1.0 / 3.0) {
        return GateKind::H;
    }
    if (u < 2.0 / 3.0) {
        return GateKind::S;
    }
    return GateKind::CNOT;
}

GateKind draw_clifford_t_kind(Rng& rng) {
    const double u = rng.uniform_double();
    if (u < 0.2) {
        return GateKind::S;
    }
    if (u < 0.4) {
        return GateKind::CNOT;
    }
    if (u < 0.6) {
        return GateKind::H;
    }
    return GateKind::T;
}

GateKind draw_iqp_kind(Rng& rng) {
    const double u = rng.uniform_double();
    if (u < 1.0 / 3.0) {
        return GateKind::T;
    }
    if (u < 2.0 / 3.0) {
        return GateKind::RZ;
    }
    return GateKind::CZ;
}

void append_hadamard_layer(Circuit& c) {
    for (int q = 0; q < c.n_qubits; ++q) {
        c.gates.push_back(Gate{GateKind::H, {q}, 0.0});
    }
}

bool kind_in(GateKind kind, std::initializer_list<GateKind> set) {
    for (GateKind k : set) {
        if (k == kind) {
            return true;
        }
    }
    return false;
}

void validate_gate(const Gate& g, int n, std::size_t index) {
    const std::size_t arity = is_single_qubit(g.kind) ? 1 : 2;
    if (g.qubits.size() != arity) {
        throw ValidationError("gate " + std::to_string(index) + ": " +
                              std::string(to_string(g.kind)) + " expects " +
                              std::to_string(arity) + " qubit(s)");
    }
    for (int q : g.qubits) {
        if (q < 0 || q >= n) {
            throw ValidationError("gate " + std::to_string(index) + ": qubit index " +
                                  std::to_string(q) + " out of range for n=" +
                                  std::to_string(n));
        }
    }
    if (arity == 2 && g.qubits[0] == g.qubits[1]) {
        throw ValidationError("gate " + std::to_string(index) +
                              ": two-qubit gate with equal qubit indices");
    }
    if (g.kind == GateKind::RZ) {
        if (!(g.angle >= 0.0 && g.angle < kTwoPi)) {
            throw ValidationError("gate " + std::to_string(index) +
                                  ": RZ angle outside [0, 2pi)");
        }
    } else if (g.angle != 0.0) {
        throw ValidationError("gate " + std::to_string(index) +
                              ": angle present on non-RZ gate");
    }
}

} // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::RZ: return "RZ";
    }
    throw ValidationError("unknown gate kind");
}

std::string_view to_string(Family family) {
    switch (family) {
    case Family::Iqp: return "iqp";
    case Family::Clifford: return "clifford";
    case Family::CliffordT: return "clifford_t";
    case Family::AlphaModel: return "alpha_model";
    }
    throw ValidationError("unknown family");
}

GateKind gate_kind_from_string(std::string_view s) {
    if (s == "H") return GateKind::H;
    if (s == "S") return GateKind::S;
    if (s == "T") return GateKind::T;
    if (s == "CNOT") return GateKind::CNOT;
    if (s == "CZ") return GateKind::CZ;
    if (s == "RZ") return GateKind::RZ;
    throw ParseError("unknown gate kind \"" + std::string(s) + "\"");
}

Family family_from_string(std::string_view s) {
    if (s == "iqp") return Family::Iqp;
    if (s == "clifford") return Family::Clifford;
    if (s == "clifford_t") return Family::CliffordT;
    if (s == "alpha_model") return Family::AlphaModel;
    throw ParseError("unknown family \"" + std::string(s) + "\"");
}

bool is_single_qubit(GateKind kind) {
    return kind != GateKind::CNOT && kind != GateKind::CZ;
}

void validate(const Circuit& c) {
    if (c.n_qubits < 1) {
        throw ValidationError("circuit must have at least one qubit");
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        validate_gate(c.gates[i], c.n_qubits, i);
    }

    const auto check_kinds = [&](std::initializer_list<GateKind> allowed,
                                 std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
            if (!kind_in(c.gates[i].kind, allowed)) {
                throw ValidationError("gate " + std::to_string(i) + ": kind " +
                                      std::string(to_string(c.gates[i].kind)) +
                                      " not allowed in family " +
                                      std::string(to_string(c.family)));
            }
        }
    };

    switch (c.family) {
    case Family::Clifford:
        check_kinds({GateKind::H, GateKind::S, GateKind::CNOT}, 0, c.gates.size());
        break;
    case Family::CliffordT:
        check_kinds({GateKind::H, GateKind::S, GateKind::T, GateKind::CNOT}, 0,
                    c.gates.size());
        break;
    case Family::Iqp: {
        const auto n = static_cast<std::size_t>(c.n_qubits);
        if (c.gates.size() < 2 * n) {
            throw ValidationError("IQP circuit shorter than its Hadamard layers");
        }
        const auto check_h_layer = [&](std::size_t first) {
            std::vector<bool> seen(n, false);
            for (std::size_t i = first; i < first + n; ++i) {
                if (c.gates[i].kind != GateKind::H) {
                    throw ValidationError("gate " + std::to_string(i) +
                                          ": IQP boundary layer must be Hadamards");
                }
                seen[static_cast<std::size_t>(c.gates[i].qubits[0])] = true;
            }
            for (std::size_t q = 0; q < n; ++q) {
                if (!seen[q]) {
                    throw ValidationError("IQP boundary layer misses qubit " +
                                          std::to_string(q));
                }
            }
        };
        check_h_layer(0);
        check_h_layer(c.gates.size() - n);
        check_kinds({GateKind::T, GateKind::RZ, GateKind::CZ}, n, c.gates.size() - n);
        break;
    }
    case Family::AlphaModel:
        break;
    }
}

Circuit generate_circuit(Family family, int n, int n_c, std::uint64_t seed) {
    if (n < 2) {
        throw ValidationError("circuit generation requires n >= 2, got " +
                              std::to_string(n));
    }
    if (n_c < 0) {
        throw ValidationError("negative gate count");
    }
    if (family == Family::AlphaModel) {
        throw ValidationError("alpha_model circuits are drawn from the diagonal-"
                              "fraction model, not generate_circuit");
    }

    Circuit c;
    c.n_qubits = n;
    c.family = family;
    c.seed = seed;
    Rng rng(seed);

    if (family == Family::Iqp) {
        c.gates.reserve(static_cast<std::size_t>(n_c) + 2 * static_cast<std::size_t>(n));
        append_hadamard_layer(c);
    } else {
        c.gates.reserve(static_cast<std::size_t>(n_c));
    }

    for (int i = 0; i < n_c; ++i) {
        GateKind kind;
        switch (family) {
        case Family::Clifford: kind = draw_clifford_kind(rng); break;
        case Family::CliffordT: kind = draw_clifford_t_kind(rng); break;
        default: kind = draw_iqp_kind(rng); break;
        }
        c.gates.push_back(draw_gate(rng, kind, n));
    }

    if (family == Family::Iqp) {
        append_hadamard_layer(c);
    }
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    json j;
    j["n"] = c.n_qubits;
    j["family"] = to_string(c.family);
    j["seed"] = c.seed;
    json gates = json::array();
    for (const Gate& g : c.gates) {
        json jg;
        jg["kind"] = to_string(g.kind);
        jg["qubits"] = g.qubits;
        if (g.kind == GateKind::RZ) {
            jg["angle"] = g.angle;
        }
        gates.push_back(std::move(jg));
    }
    j["gates"] = std::move(gates);
    return j.dump();
}

Circuit parse_circuit(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("circuit line is not valid JSON: ") + e.what());
    }

    const auto require = [&](const json& obj, const char* field) -> const json& {
        if (!obj.contains(field)) {
            throw ParseError(std::string("circuit record missing field \"") + field +
                             "\"");
        }
        return obj.at(field);
    };

    Circuit c;
    try {
        c.n_qubits = require(j, "n").get<int>();
        c.family = family_from_string(require(j, "family").get<std::string>());
        c.seed = require(j, "seed").get<std::uint64_t>();
        for (const json& jg : require(j, "gates")) {
            Gate g;
            g.kind = gate_kind_from_string(require(jg, "kind").get<std::string>());
            g.qubits = require(jg, "qubits").get<std::vector<int>>();
            if (g.kind == GateKind::RZ) {
                g.angle = require(jg, "angle").get<double>();
            } else if (jg.contains("angle")) {
                throw ParseError("field \"angle\" present on non-RZ gate");
            }
            c.gates.push_back(std::move(g));
        }
    } catch (const json::type_error& e) {
        throw ParseError(std::string("circuit record has a mistyped field: ") + e.what());
    }

    validate(c);
    return c;
}

void write_circuits(const std::string& path, const std::vector<Circuit>& circuits) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    for (const Circuit& c : circuits) {
        out << serialize_circuit(c) << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

std::vector<Circuit> read_circuits(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::vector<Circuit> circuits;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            circuits.push_back(parse_circuit(line));
        } catch (const ValidationError& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return circuits;
}

} // namespace qcf

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcf {

enum class GateKind : std::uint8_t { H, S, T, CNOT, CZ, RZ };

enum class Family : std::uint8_t {
    Iqp = 0,
    Clifford = 1,
    CliffordT = 2,
    // Used by the random diagonal-fraction circuit model; mixes both gate
    // pools, so no per-family gate-set invariant applies.
    AlphaModel = 3,
};

struct Gate {
    GateKind kind;
    // One index for single-qubit kinds, two distinct indices for CNOT/CZ
    // (control first for CNOT).
    std::vector<int> qubits;
    // Radians, present exactly when kind == RZ.
    double angle = 0.0;

    bool operator==(const Gate&) const = default;
};

struct Circuit {
    int n_qubits = 0;
    Family family = Family::Clifford;
    std::vector<Gate> gates;
    std::uint64_t seed = 0;

    bool operator==(const Circuit&) const = default;
};

std::string_view to_string(GateKind kind);
std::string_view to_string(Family family);
GateKind gate_kind_from_string(std::string_view s);
Family family_from_string(std::string_view s);

bool is_single_qubit(GateKind kind);

// Checks structural invariants: qubit bounds, gate arity, angle presence,
// and the per-family gate-set rules (IQP boundary Hadamard layers included).
// Throws ValidationError on the first violation.
void validate(const Circuit& c);

// Draws a random circuit of the given family: n_c gates (plus the boundary
// Hadamard layers for IQP, which do not count toward n_c). Deterministic in
// (family, n, n_c, seed). Requires n >= 2.
Circuit generate_circuit(Family family, int n, int n_c, std::uint64_t seed);

// One-line JSON encoding; parse is the exact inverse, including gate angles.
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view line);

// JSONL file helpers, one circuit per line.
void write_circuits(const std::string& path, const std::vector<Circuit>& circuits);
std::vector<Circuit> read_circuits(const std::string& path);

} // namespace qcf

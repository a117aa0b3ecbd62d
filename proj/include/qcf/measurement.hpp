#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcf/circuit.hpp"
#include "qcf/pauli.hpp"
#include "qcf/statevector.hpp"

namespace qcf {

enum class Strategy : std::uint8_t { ZOnly = 0, NN = 1, MultiBasis = 2, Shadows = 3 };

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view s);

// One measurement shot: outcome bits and the per-qubit basis each bit was
// read in, both packed (bit i / 2-bit field i belongs to qubit i).
struct ShotRecord {
    std::uint64_t bits = 0;
    std::uint64_t bases = 0;

    bool bit(int q) const { return ((bits >> q) & 1) != 0; }
    Basis basis(int q) const { return static_cast<Basis>((bases >> (2 * q)) & 3); }
    void set_basis(int q, Basis b) {
        bases = (bases & ~(std::uint64_t{3} << (2 * q))) |
                (static_cast<std::uint64_t>(b) << (2 * q));
    }

    bool operator==(const ShotRecord&) const = default;
};

std::uint64_t uniform_bases_word(int n, Basis b);

struct MeasurementSet {
    Strategy strategy = Strategy::ZOnly;
    int n = 0;
    int lambda = 0;
    std::size_t budget = 0;
    std::uint64_t circuit_seed = 0;
    std::vector<ShotRecord> shots;
};

// Total shots for an n-qubit circuit: lambda * n^2.
std::size_t shot_budget(int n, int lambda);

// Acquisition protocols. Each simulates the circuit once and spends the full
// lambda*n^2 budget; all are deterministic in (circuit, lambda, seed).
MeasurementSet measure_z_only(const Circuit& c, int lambda, std::uint64_t seed);
// Same bits as measure_z_only at equal seeds; only the strategy tag differs.
// The adjacent-pair restriction is applied downstream, in feature extraction.
MeasurementSet measure_nn(const Circuit& c, int lambda, std::uint64_t seed);
// Three uniform-basis blocks Z, X, Y in that order; budget mod 3 extra shots
// go to Z first, then X.
MeasurementSet measure_multi_basis(const Circuit& c, int lambda, std::uint64_t seed);
// Fresh i.i.d. uniform per-qubit bases for every shot.
MeasurementSet measure_shadows(const Circuit& c, int lambda, std::uint64_t seed);

MeasurementSet measure(Strategy strategy, const Circuit& c, int lambda,
                       std::uint64_t seed);

// Sizes of the Z/X/Y blocks of a multi-basis set with the given budget.
std::array<std::size_t, 3> multi_basis_block_sizes(std::size_t budget);

// Randomized-basis shots from an already-simulated state; building block for
// measure_shadows and for estimator-variance experiments with arbitrary
// shot counts.
std::vector<ShotRecord> acquire_shadow_shots(const Statevector& psi,
                                             std::size_t count, std::uint64_t seed);

// Measurement seeds are shared between protocols with identical acquisition
// (ZOnly and NN), so equal-seed runs produce identical bits.
std::uint64_t measurement_seed(std::uint64_t base, Strategy strategy);

// JSONL block: one header line {strategy, n, lambda, budget, circuit_seed},
// then one line {bits, bases} per shot. Bit/basis strings index qubit i at
// character i.
void append_measurement_set(std::ostream& out, const MeasurementSet& ms);
void write_measurement_sets(const std::string& path,
                            const std::vector<MeasurementSet>& sets);
std::vector<MeasurementSet> read_measurement_sets(const std::string& path);

} // namespace qcf

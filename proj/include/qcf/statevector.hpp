#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcf/circuit.hpp"
#include "qcf/pauli.hpp"
#include "qcf/rng.hpp"

namespace qcf {

// Largest simulable register; 2^24 amplitudes = 256 MiB.
inline constexpr int kMaxSimQubits = 24;

// Dense amplitude vector over 2^n computational basis states. Qubit 0 is the
// least-significant bit of the amplitude index.
struct Statevector {
    int n = 0;
    std::vector<std::complex<double>> amps;

    static Statevector zero_state(int n);

    std::size_t dim() const { return amps.size(); }
    double norm_sq() const;
};

void apply_gate(Statevector& psi, const Gate& g);

// Applies the circuit's gates, in order, to |0...0>.
Statevector run(const Circuit& c);

// <psi|P|psi>. The imaginary part (always < 1e-10 for a valid Pauli) is
// discarded.
double exact_expectation(const Statevector& psi, const PauliString& p);

// Per-qubit frame change so that a subsequent Z-basis measurement of the
// result measures the requested Pauli on the input state. Z: identity;
// X: H; Y: S-dagger then H (the unitary V with V Y V^dagger = Z).
void apply_basis_rotation_in_place(Statevector& psi, std::span<const Basis> bases);
Statevector apply_basis_rotation(const Statevector& psi, std::span<const Basis> bases);

// i.i.d. draws from |amp|^2; each outcome is the n-bit index (qubit 0 = LSB).
std::vector<std::uint64_t> sample(const Statevector& psi, std::size_t shots, Rng& rng);
std::vector<std::uint64_t> sample(const Statevector& psi, std::size_t shots,
                                  std::uint64_t seed);

} // namespace qcf

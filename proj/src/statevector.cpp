#include "qcf/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

using cd = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Visits every amplitude pair (i0, i1) differing only in bit q.
template <typename Fn>
void for_each_pair(std::vector<cd>& amps, int q, Fn&& fn) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t low_mask = bit - 1;
    const std::size_t half = amps.size() >> 1;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
        fn(amps[i0], amps[i0 | bit]);
    }
}

void apply_h(std::vector<cd>& amps, int q) {
    for_each_pair(amps, q, [](cd& a0, cd& a1) {
        const cd t0 = a0;
        a0 = (t0 + a1) * kInvSqrt2;
        a1 = (t0 - a1) * kInvSqrt2;
    });
}

void apply_phase(std::vector<cd>& amps, int q, cd phase) {
    for_each_pair(amps, q, [phase](cd&, cd& a1) { a1 *= phase; });
}

// diag(e^{-i theta/2}, e^{+i theta/2})
void apply_rz(std::vector<cd>& amps, int q, double theta) {
    const cd lower{std::cos(theta / 2.0), -std::sin(theta / 2.0)};
    const cd upper = std::conj(lower);
    for_each_pair(amps, q, [lower, upper](cd& a0, cd& a1) {
        a0 *= lower;
        a1 *= upper;
    });
}

void apply_sdg(std::vector<cd>& amps, int q) { apply_phase(amps, q, cd{0.0, -1.0}); }

void apply_cnot(std::vector<cd>& amps, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t size = amps.size();
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & cbit) != 0 && (i & tbit) == 0) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

void apply_cz(std::vector<cd>& amps, int a, int b) {
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    const std::size_t size = amps.size();
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

} // namespace

Statevector Statevector::zero_state(int n) {
    if (n < 1) {
        throw ValidationError("statevector needs at least one qubit");
    }
    if (n > kMaxSimQubits) {
        throw ResourceError("statevector for n=" + std::to_string(n) +
                            " exceeds the " + std::to_string(kMaxSimQubits) +
                            "-qubit memory cap");
    }
    Statevector psi;
    psi.n = n;
    psi.amps.assign(std::size_t{1} << n, cd{0.0, 0.0});
    psi.amps[0] = cd{1.0, 0.0};
    return psi;
}

double Statevector::norm_sq() const {
    double s = 0.0;
    for (const cd& a : amps) {
        s += std::norm(a);
    }
    return s;
}

void apply_gate(Statevector& psi, const Gate& g) {
    switch (g.kind) {
    case GateKind::H:
        apply_h(psi.amps, g.qubits[0]);
        break;
    case GateKind::S:
        apply_phase(psi.amps, g.qubits[0], cd{0.0, 1.0});
        break;
    case GateKind::T:
        apply_phase(psi.amps, g.qubits[0], cd{kInvSqrt2, kInvSqrt2});
        break;
    case GateKind::RZ:
        apply_rz(psi.amps, g.qubits[0], g.angle);
        break;
    case GateKind::CNOT:
        apply_cnot(psi.amps, g.qubits[0], g.qubits[1]);
        break;
    case GateKind::CZ:
        apply_cz(psi.amps, g.qubits[0], g.qubits[1]);
        break;
    }
}

Statevector run(const Circuit& c) {
    Statevector psi = Statevector::zero_state(c.n_qubits);
    for (const Gate& g : c.gates) {
        apply_gate(psi, g);
    }
    return psi;
}

double exact_expectation(const Statevector& psi, const PauliString& p) {
    if (p.n() != psi.n) {
        throw ValidationError("Pauli string length " + std::to_string(p.n()) +
                              " does not match qubit count " + std::to_string(psi.n));
    }

    std::uint64_t flip_mask = 0;  // X and Y flip the bit
    std::uint64_t phase_mask = 0; // Z and Y pick up (-1)^bit
    int y_count = 0;
    for (int q = 0; q < psi.n; ++q) {
        switch (p.ops[static_cast<std::size_t>(q)]) {
        case PauliOp::I:
            break;
        case PauliOp::X:
            flip_mask |= std::uint64_t{1} << q;
            break;
        case PauliOp::Y:
            flip_mask |= std::uint64_t{1} << q;
            phase_mask |= std::uint64_t{1} << q;
            ++y_count;
            break;
        case PauliOp::Z:
            phase_mask |= std::uint64_t{1} << q;
            break;
        }
    }

    // P|x> = i^{y_count} * (-1)^{popcount(x & phase_mask)} |x ^ flip_mask>
    static constexpr cd kIPow[4] = {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}};
    const cd y_phase = kIPow[y_count & 3];

    cd acc{0.0, 0.0};
    const std::size_t size = psi.amps.size();
    for (std::size_t x = 0; x < size; ++x) {
        const double sign =
            (std::popcount(x & phase_mask) & 1) != 0 ? -1.0 : 1.0;
        acc += std::conj(psi.amps[x ^ flip_mask]) * (sign * psi.amps[x]);
    }
    acc *= y_phase;
    return acc.real();
}

void apply_basis_rotation_in_place(Statevector& psi, std::span<const Basis> bases) {
    if (static_cast<int>(bases.size()) != psi.n) {
        throw ValidationError("basis list length does not match qubit count");
    }
    for (int q = 0; q < psi.n; ++q) {
        switch (bases[static_cast<std::size_t>(q)]) {
        case Basis::Z:
            break;
        case Basis::X:
            apply_h(psi.amps, q);
            break;
        case Basis::Y:
            apply_sdg(psi.amps, q);
            apply_h(psi.amps, q);
            break;
        }
    }
}

Statevector apply_basis_rotation(const Statevector& psi, std::span<const Basis> bases) {
    Statevector out = psi;
    apply_basis_rotation_in_place(out, bases);
    return out;
}

std::vector<std::uint64_t> sample(const Statevector& psi, std::size_t shots, Rng& rng) {
    std::vector<double> cumulative(psi.amps.size());
    double total = 0.0;
    for (std::size_t i = 0; i < psi.amps.size(); ++i) {
        total += std::norm(psi.amps[i]);
        cumulative[i] = total;
    }

    std::vector<std::uint64_t> outcomes(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.uniform_double() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        outcomes[s] = static_cast<std::uint64_t>(
            std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                  cumulative.size() - 1));
    }
    return outcomes;
}

std::vector<std::uint64_t> sample(const Statevector& psi, std::size_t shots,
                                  std::uint64_t seed) {
    Rng rng(seed);
    return sample(psi, shots, rng);
}

} // namespace qcf

#include "qcf/shadows.hpp"

#include "qcf/errors.hpp"

namespace qcf {

namespace {

double sign_of_bit(const ShotRecord& r, int q) { return r.bit(q) ? -1.0 : 1.0; }

// Mean of (-1)^{b_i} over shots whose basis at site matches letter.
double fixed_basis_single_mean(const MeasurementSet& ms, int site, Basis letter) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const ShotRecord& r : ms.shots) {
        if (r.basis(site) == letter) {
            sum += sign_of_bit(r, site);
            ++count;
        }
    }
    if (count == 0) {
        throw ValidationError(std::string("no shots measure ") + to_char(letter) +
                              " on qubit " + std::to_string(site) + " in a " +
                              std::string(to_string(ms.strategy)) + " set");
    }
    return sum / static_cast<double>(count);
}

double fixed_basis_pair_mean(const MeasurementSet& ms, int i, int j, Basis li,
                             Basis lj) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const ShotRecord& r : ms.shots) {
        if (r.basis(i) == li && r.basis(j) == lj) {
            sum += sign_of_bit(r, i) * sign_of_bit(r, j);
            ++count;
        }
    }
    if (count == 0) {
        throw ValidationError(std::string("no shots measure ") + to_char(li) +
                              std::to_string(i) + to_char(lj) + std::to_string(j) +
                              " in a " + std::string(to_string(ms.strategy)) + " set");
    }
    return sum / static_cast<double>(count);
}

void check_sites(const MeasurementSet& ms, int i, int j) {
    if (i == j) {
        throw ValidationError("correlator needs two distinct sites");
    }
    if (i < 0 || j < 0 || i >= ms.n || j >= ms.n) {
        throw ValidationError("correlator site out of range");
    }
}

} // namespace

PauliTarget PauliTarget::single(int site, Basis letter) {
    PauliTarget t;
    t.sites[0] = site;
    t.letters[0] = letter;
    t.n_sites = 1;
    return t;
}

PauliTarget PauliTarget::pair(int i, Basis li, int j, Basis lj) {
    if (i == j) {
        throw ValidationError("pair target needs distinct sites");
    }
    PauliTarget t;
    t.sites[0] = i;
    t.letters[0] = li;
    t.sites[1] = j;
    t.letters[1] = lj;
    t.n_sites = 2;
    return t;
}

PauliString PauliTarget::to_pauli_string(int n) const {
    if (n_sites == 1) {
        return PauliString::single_site(n, sites[0], letters[0]);
    }
    return PauliString::two_site(n, sites[0], letters[0], sites[1], letters[1]);
}

double single_shot_estimate(const ShotRecord& r, const PauliTarget& t) {
    if (r.basis(t.sites[0]) != t.letters[0]) {
        return 0.0;
    }
    return 3.0 * sign_of_bit(r, t.sites[0]);
}

double pair_shot_estimate(const ShotRecord& r, const PauliTarget& t) {
    if (r.basis(t.sites[0]) != t.letters[0] || r.basis(t.sites[1]) != t.letters[1]) {
        return 0.0;
    }
    return 9.0 * sign_of_bit(r, t.sites[0]) * sign_of_bit(r, t.sites[1]);
}

double estimate_expectation(const MeasurementSet& ms, const PauliTarget& t) {
    if (ms.shots.empty()) {
        throw ValidationError("cannot estimate from an empty measurement set");
    }
    for (int s = 0; s < t.n_sites; ++s) {
        if (t.sites[s] < 0 || t.sites[s] >= ms.n) {
            throw ValidationError("target site out of range");
        }
    }
    double sum = 0.0;
    if (t.n_sites == 1) {
        for (const ShotRecord& r : ms.shots) {
            sum += single_shot_estimate(r, t);
        }
    } else {
        for (const ShotRecord& r : ms.shots) {
            sum += pair_shot_estimate(r, t);
        }
    }
    return sum / static_cast<double>(ms.shots.size());
}

double connected_correlator(const MeasurementSet& ms, int i, int j, Basis letter_i,
                            Basis letter_j) {
    if (ms.shots.empty()) {
        throw ValidationError("cannot estimate from an empty measurement set");
    }
    check_sites(ms, i, j);

    if (ms.strategy == Strategy::Shadows) {
        const double pair =
            estimate_expectation(ms, PauliTarget::pair(i, letter_i, j, letter_j));
        const double si = estimate_expectation(ms, PauliTarget::single(i, letter_i));
        const double sj = estimate_expectation(ms, PauliTarget::single(j, letter_j));
        return pair - si * sj;
    }

    const double pair = fixed_basis_pair_mean(ms, i, j, letter_i, letter_j);
    const double si = fixed_basis_single_mean(ms, i, letter_i);
    const double sj = fixed_basis_single_mean(ms, j, letter_j);
    return pair - si * sj;
}

} // namespace qcf

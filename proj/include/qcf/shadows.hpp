#pragma once

#include "qcf/measurement.hpp"
#include "qcf/pauli.hpp"

namespace qcf {

// One- or two-site Pauli observable with non-identity letters.
struct PauliTarget {
    int sites[2] = {0, 0};
    Basis letters[2] = {Basis::Z, Basis::Z};
    int n_sites = 1;

    static PauliTarget single(int site, Basis letter);
    static PauliTarget pair(int i, Basis li, int j, Basis lj);

    PauliString to_pauli_string(int n) const;
};

// Randomized-measurement estimators: a shot contributes only when its basis
// matches the target on every site, and the inverse-channel factor is 3 per
// site.
double single_shot_estimate(const ShotRecord& r, const PauliTarget& t);
double pair_shot_estimate(const ShotRecord& r, const PauliTarget& t);

// Empirical mean of the per-shot estimates over a shadow set.
double estimate_expectation(const MeasurementSet& ms, const PauliTarget& t);

// <P_i P_j> - <P_i><P_j>, plug-in estimate from one measurement set. Shadow
// sets use the randomized estimators above; fixed-basis sets use bit parity
// statistics over the shots whose recorded basis matches the requested
// letter at each site (for multi-basis sets this selects the matching
// block). No matching shots -> ValidationError.
double connected_correlator(const MeasurementSet& ms, int i, int j, Basis letter_i,
                            Basis letter_j);

} // namespace qcf

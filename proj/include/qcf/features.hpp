#pragma once

#include <string>
#include <vector>

#include "qcf/circuit.hpp"
#include "qcf/dataset.hpp"
#include "qcf/measurement.hpp"

namespace qcf {

struct FeatureVector {
    Strategy strategy = Strategy::ZOnly;
    int n = 0;
    std::vector<double> values;
};

// Closed-form feature dimension per strategy:
//   z-only      (n^2 + 3n + 4) / 2
//   nn          3n + 1
//   multi-basis d_z + 2n + n(n-1)
//   shadows     3n^2
std::size_t feature_dim(Strategy strategy, int n);

// Fixed-order feature layout (the on-disk column contract):
//   z-only:  weight histogram (n+1) | P(x_i=1) per qubit | parity bias |
//            connected ZZ, pairs (i<j) lexicographic
//   nn:      as z-only but only adjacent pairs (i, i+1)
//   multi:   z-only block from the Z shots | X marginals | connected XX |
//            Y marginals | connected YY, each from its own basis block
//   shadows: per qubit <Z_i>,<X_i>,<Y_i> | per pair (i<j) connected
//            ZZ,XX,YY,XY,XZ,YZ
// The Hamming-weight histogram always comes from Z-basis shots only.
FeatureVector featurize(const MeasurementSet& ms);

// Column names matching the featurize layout, e.g. h0..hn, m0.., parity,
// zz_0_1, xm0.., xx_0_1, z_0, xy_0_1, ...
std::vector<std::string> feature_column_names(Strategy strategy, int n);

// Dataset CSV: header "label,<feature columns>", one row per circuit, label
// written as the family name.
void write_dataset_csv(const std::string& path, const LabeledDataset& ds);
LabeledDataset read_dataset_csv(const std::string& path);

// Recovers (strategy, n) from a dataset header's column names.
std::pair<Strategy, int> infer_layout(const std::vector<std::string>& columns);

} // namespace qcf

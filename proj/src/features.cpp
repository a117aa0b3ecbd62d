#include "qcf/features.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

constexpr std::size_t kNoCombo = static_cast<std::size_t>(-1);

// The six tracked ordered letter pairs: ZZ, XX, YY, XY, XZ, YZ.
constexpr std::array<std::pair<Basis, Basis>, 6> kLetterPairs = {{
    {Basis::Z, Basis::Z},
    {Basis::X, Basis::X},
    {Basis::Y, Basis::Y},
    {Basis::X, Basis::Y},
    {Basis::X, Basis::Z},
    {Basis::Y, Basis::Z},
}};

std::size_t combo_index(Basis li, Basis lj) {
    for (std::size_t k = 0; k < kLetterPairs.size(); ++k) {
        if (kLetterPairs[k].first == li && kLetterPairs[k].second == lj) {
            return k;
        }
    }
    return kNoCombo;
}

double sign_of(bool bit) { return bit ? -1.0 : 1.0; }

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Z-layout statistics (histogram, marginals, parity, connected pair
// correlators) from one uniform-basis block of shots.
struct BlockStats {
    std::vector<double> histogram; // only filled for the Z block
    std::vector<double> marginals;
    double parity = 0.0;
    // single_sum[i] = sum of (-1)^{b_i}; pair_sum over pairs (i<j) lex order.
    std::vector<double> single_sum;
    std::vector<double> pair_sum;
    std::size_t count = 0;

    double single_mean(int i) const {
        return single_sum[static_cast<std::size_t>(i)] / static_cast<double>(count);
    }
    double connected(int n, int i, int j) const {
        const std::size_t pair_idx = pair_rank(n, i, j);
        const double pair_mean = pair_sum[pair_idx] / static_cast<double>(count);
        return pair_mean - single_mean(i) * single_mean(j);
    }
    static std::size_t pair_rank(int n, int i, int j) {
        // rank of (i, j), i < j, in lexicographic order
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) -
               static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
               static_cast<std::size_t>(j - i - 1);
    }
};

template <typename ShotIter>
BlockStats block_stats(ShotIter begin, ShotIter end, int n, bool with_histogram) {
    BlockStats st;
    st.marginals.assign(static_cast<std::size_t>(n), 0.0);
    st.single_sum.assign(static_cast<std::size_t>(n), 0.0);
    st.pair_sum.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
    if (with_histogram) {
        st.histogram.assign(static_cast<std::size_t>(n) + 1, 0.0);
    }

    const std::uint64_t mask = (n == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << n) - 1);
    double parity_sum = 0.0;
    for (ShotIter it = begin; it != end; ++it) {
        const std::uint64_t bits = it->bits & mask;
        const int weight = std::popcount(bits);
        if (with_histogram) {
            st.histogram[static_cast<std::size_t>(weight)] += 1.0;
        }
        parity_sum += (weight & 1) ? -1.0 : 1.0;
        std::size_t pair_idx = 0;
        for (int i = 0; i < n; ++i) {
            const double si = sign_of((bits >> i) & 1);
            if (si < 0) {
                st.marginals[static_cast<std::size_t>(i)] += 1.0;
            }
            st.single_sum[static_cast<std::size_t>(i)] += si;
            for (int j = i + 1; j < n; ++j, ++pair_idx) {
                st.pair_sum[pair_idx] += si * sign_of((bits >> j) & 1);
            }
        }
        ++st.count;
    }

    if (st.count == 0) {
        throw ValidationError("empty measurement block");
    }
    const double inv = 1.0 / static_cast<double>(st.count);
    for (double& m : st.marginals) {
        m *= inv;
    }
    if (with_histogram) {
        for (double& h : st.histogram) {
            h *= inv;
        }
    }
    st.parity = parity_sum * inv;
    return st;
}

std::vector<const ShotRecord*> select_block(const MeasurementSet& ms, Basis b) {
    const std::uint64_t word = uniform_bases_word(ms.n, b);
    std::vector<const ShotRecord*> block;
    for (const ShotRecord& r : ms.shots) {
        if (r.bases == word) {
            block.push_back(&r);
        }
    }
    return block;
}

struct DerefIter {
    const ShotRecord* const* p;
    const ShotRecord& operator*() const { return **p; }
    const ShotRecord* operator->() const { return *p; }
    DerefIter& operator++() {
        ++p;
        return *this;
    }
    bool operator!=(const DerefIter& o) const { return p != o.p; }
};

void append_z_layout(std::vector<double>& out, const BlockStats& st, int n,
                     bool adjacent_only) {
    out.insert(out.end(), st.histogram.begin(), st.histogram.end());
    out.insert(out.end(), st.marginals.begin(), st.marginals.end());
    out.push_back(st.parity);
    if (adjacent_only) {
        for (int i = 0; i + 1 < n; ++i) {
            out.push_back(st.connected(n, i, i + 1));
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                out.push_back(st.connected(n, i, j));
            }
        }
    }
}

FeatureVector featurize_fixed_z(const MeasurementSet& ms) {
    FeatureVector fv{ms.strategy, ms.n, {}};
    const BlockStats st =
        block_stats(ms.shots.begin(), ms.shots.end(), ms.n, /*with_histogram=*/true);
    append_z_layout(fv.values, st, ms.n, ms.strategy == Strategy::NN);
    return fv;
}

FeatureVector featurize_multi_basis(const MeasurementSet& ms) {
    FeatureVector fv{ms.strategy, ms.n, {}};

    const auto z_block = select_block(ms, Basis::Z);
    const auto x_block = select_block(ms, Basis::X);
    const auto y_block = select_block(ms, Basis::Y);
    if (z_block.size() + x_block.size() + y_block.size() != ms.shots.size()) {
        throw ValidationError("multi-basis set contains non-uniform basis records");
    }
    if (z_block.empty() || x_block.empty() || y_block.empty()) {
        throw ValidationError("multi-basis set has an empty basis block");
    }

    const auto stats_of = [&](const std::vector<const ShotRecord*>& block, bool hist) {
        return block_stats(DerefIter{block.data()},
                           DerefIter{block.data() + block.size()}, ms.n, hist);
    };

    const BlockStats z = stats_of(z_block, true);
    const BlockStats x = stats_of(x_block, false);
    const BlockStats y = stats_of(y_block, false);

    append_z_layout(fv.values, z, ms.n, /*adjacent_only=*/false);
    const auto append_basis = [&](const BlockStats& st) {
        fv.values.insert(fv.values.end(), st.marginals.begin(), st.marginals.end());
        for (int i = 0; i < ms.n; ++i) {
            for (int j = i + 1; j < ms.n; ++j) {
                fv.values.push_back(st.connected(ms.n, i, j));
            }
        }
    };
    append_basis(x);
    append_basis(y);
    return fv;
}

FeatureVector featurize_shadows(const MeasurementSet& ms) {
    FeatureVector fv{ms.strategy, ms.n, {}};
    const int n = ms.n;
    const std::size_t n_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;

    // single_sum[q][letter]: sum of (-1)^{b_q} over shots measuring letter
    // on q; pair_sum[pair][combo]: likewise for the tracked letter pairs.
    std::vector<std::array<double, 3>> single_sum(static_cast<std::size_t>(n),
                                                  {0.0, 0.0, 0.0});
    std::vector<std::array<double, 6>> pair_sum(n_pairs,
                                                {0.0, 0.0, 0.0, 0.0, 0.0, 0.0});

    for (const ShotRecord& r : ms.shots) {
        std::size_t pair_idx = 0;
        for (int i = 0; i < n; ++i) {
            const Basis bi = r.basis(i);
            const double si = sign_of(r.bit(i));
            single_sum[static_cast<std::size_t>(i)][static_cast<int>(bi)] += si;
            for (int j = i + 1; j < n; ++j, ++pair_idx) {
                const std::size_t combo = combo_index(bi, r.basis(j));
                if (combo != kNoCombo) {
                    pair_sum[pair_idx][combo] += si * sign_of(r.bit(j));
                }
            }
        }
    }

    const double shots = static_cast<double>(ms.shots.size());
    const auto single_est = [&](int q, Basis letter) {
        return 3.0 * single_sum[static_cast<std::size_t>(q)][static_cast<int>(letter)] /
               shots;
    };

    for (int q = 0; q < n; ++q) {
        fv.values.push_back(single_est(q, Basis::Z));
        fv.values.push_back(single_est(q, Basis::X));
        fv.values.push_back(single_est(q, Basis::Y));
    }

    std::size_t pair_idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++pair_idx) {
            for (std::size_t combo = 0; combo < kLetterPairs.size(); ++combo) {
                const auto [li, lj] = kLetterPairs[combo];
                const double pair_est = 9.0 * pair_sum[pair_idx][combo] / shots;
                fv.values.push_back(pair_est - single_est(i, li) * single_est(j, lj));
            }
        }
    }
    return fv;
}

} // namespace

std::size_t feature_dim(Strategy strategy, int n) {
    if (n < 1) {
        throw ValidationError("feature dimension requires n >= 1");
    }
    const auto un = static_cast<std::size_t>(n);
    const std::size_t pairs = un * (un - 1) / 2;
    const std::size_t d_z = (un + 1) + un + 1 + pairs;
    switch (strategy) {
    case Strategy::ZOnly: return d_z;
    case Strategy::NN: return 3 * un + 1;
    case Strategy::MultiBasis: return d_z + 2 * un + 2 * pairs;
    case Strategy::Shadows: return 3 * un * un;
    }
    throw ValidationError("unknown strategy");
}

FeatureVector featurize(const MeasurementSet& ms) {
    if (ms.shots.empty()) {
        throw ValidationError("cannot featurize an empty measurement set");
    }
    FeatureVector fv;
    switch (ms.strategy) {
    case Strategy::ZOnly:
    case Strategy::NN:
        fv = featurize_fixed_z(ms);
        break;
    case Strategy::MultiBasis:
        fv = featurize_multi_basis(ms);
        break;
    case Strategy::Shadows:
        fv = featurize_shadows(ms);
        break;
    }
    if (fv.values.size() != feature_dim(ms.strategy, ms.n)) {
        throw ValidationError("feature vector length does not match its layout");
    }
    return fv;
}

std::vector<std::string> feature_column_names(Strategy strategy, int n) {
    std::vector<std::string> names;
    names.reserve(feature_dim(strategy, n));

    const auto pair_cols = [&](const std::string& prefix, bool adjacent_only) {
        if (adjacent_only) {
            for (int i = 0; i + 1 < n; ++i) {
                names.push_back(prefix + "_" + std::to_string(i) + "_" +
                                std::to_string(i + 1));
            }
        } else {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    names.push_back(prefix + "_" + std::to_string(i) + "_" +
                                    std::to_string(j));
                }
            }
        }
    };
    const auto z_layout = [&](bool adjacent_only) {
        for (int w = 0; w <= n; ++w) {
            names.push_back("h" + std::to_string(w));
        }
        for (int q = 0; q < n; ++q) {
            names.push_back("m" + std::to_string(q));
        }
        names.push_back("parity");
        pair_cols("zz", adjacent_only);
    };

    switch (strategy) {
    case Strategy::ZOnly:
        z_layout(false);
        break;
    case Strategy::NN:
        z_layout(true);
        break;
    case Strategy::MultiBasis:
        z_layout(false);
        for (int q = 0; q < n; ++q) {
            names.push_back("xm" + std::to_string(q));
        }
        pair_cols("xx", false);
        for (int q = 0; q < n; ++q) {
            names.push_back("ym" + std::to_string(q));
        }
        pair_cols("yy", false);
        break;
    case Strategy::Shadows: {
        for (int q = 0; q < n; ++q) {
            names.push_back("z_" + std::to_string(q));
            names.push_back("x_" + std::to_string(q));
            names.push_back("y_" + std::to_string(q));
        }
        static constexpr const char* kPairNames[6] = {"zz", "xx", "yy",
                                                      "xy", "xz", "yz"};
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (const char* p : kPairNames) {
                    names.push_back(std::string(p) + "_" + std::to_string(i) + "_" +
                                    std::to_string(j));
                }
            }
        }
        break;
    }
    }
    return names;
}

void write_dataset_csv(const std::string& path, const LabeledDataset& ds) {
    if (ds.features.rows != ds.labels.size()) {
        throw ValidationError("dataset feature/label row counts differ");
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }

    out << "label";
    for (const std::string& name : feature_column_names(ds.strategy, ds.n_qubits)) {
        out << ',' << name;
    }
    out << '\n';

    for (std::size_t r = 0; r < ds.features.rows; ++r) {
        out << to_string(static_cast<Family>(ds.labels[r]));
        for (std::size_t c = 0; c < ds.features.cols; ++c) {
            out << ',' << format_double(ds.features(r, c));
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

std::pair<Strategy, int> infer_layout(const std::vector<std::string>& columns) {
    const auto matches = [&](Strategy s, int n) {
        return columns == feature_column_names(s, n);
    };
    if (columns.empty()) {
        throw ParseError("dataset header has no feature columns");
    }

    if (columns[0] == "z_0") {
        // shadows: 3n^2 columns
        for (int n = 1; n <= kMaxSimQubits; ++n) {
            if (columns.size() == 3 * static_cast<std::size_t>(n) *
                                      static_cast<std::size_t>(n)) {
                if (matches(Strategy::Shadows, n)) {
                    return {Strategy::Shadows, n};
                }
            }
        }
        throw ParseError("dataset header is not a recognized shadows layout");
    }

    for (int n = 1; n <= kMaxSimQubits; ++n) {
        for (Strategy s : {Strategy::ZOnly, Strategy::NN, Strategy::MultiBasis}) {
            if (columns.size() == feature_dim(s, n) && matches(s, n)) {
                return {s, n};
            }
        }
    }
    throw ParseError("dataset header is not a recognized feature layout");
}

LabeledDataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path + ": missing header line");
    }

    std::vector<std::string> columns;
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            columns.push_back(tok);
        }
    }
    if (columns.empty() || columns[0] != "label") {
        throw ParseError(path + ": first header column must be \"label\"");
    }
    columns.erase(columns.begin());

    LabeledDataset ds;
    const auto [strategy, n] = infer_layout(columns);
    ds.strategy = strategy;
    ds.n_qubits = n;
    const std::size_t dim = columns.size();

    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string tok;
        if (!std::getline(ss, tok, ',')) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": empty row");
        }
        const Family fam = family_from_string(tok);
        if (fam == Family::AlphaModel) {
            throw ParseError(path + ":" + std::to_string(line_no) +
                             ": alpha_model is not a class label");
        }
        ds.labels.push_back(static_cast<int>(fam));
        std::size_t count = 0;
        while (std::getline(ss, tok, ',')) {
            try {
                values.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ParseError(path + ":" + std::to_string(line_no) +
                                 ": bad numeric field \"" + tok + "\"");
            }
            ++count;
        }
        if (count != dim) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(dim) + " feature fields, got " +
                             std::to_string(count));
        }
    }

    ds.features.rows = ds.labels.size();
    ds.features.cols = dim;
    ds.features.data = std::move(values);
    return ds;
}

} // namespace qcf

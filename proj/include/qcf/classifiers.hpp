#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcf/dataset.hpp"

namespace qcf {

enum class ClassifierKind : std::uint8_t { Logistic = 0, Tree = 1, Forest = 2, Svm = 3 };

std::string_view to_string(ClassifierKind k);
ClassifierKind classifier_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Multinomial logistic regression (softmax + L2), quasi-Newton fit.

struct LogisticConfig {
    double l2 = 1.0;          // ridge strength on the weights (bias excluded)
    int max_iter = 1000;
    double grad_tol = 1e-6;   // L2 norm of the full gradient
    int lbfgs_memory = 10;
};

struct LogisticModel {
    int n_classes = 0;
    std::size_t dim = 0;
    std::vector<double> weights; // n_classes x dim, row-major
    std::vector<double> bias;    // n_classes

    int predict(const double* x) const;
    void scores(const double* x, double* out) const;
};

LogisticModel train_logistic(const LabeledDataset& ds, const LogisticConfig& cfg = {});

// Mean cross-entropy plus l2/(2N)*||W||^2, and its gradient; exposed for
// gradient checking.
double logistic_loss(const LabeledDataset& ds, const LogisticConfig& cfg,
                     const std::vector<double>& params);
std::vector<double> logistic_gradient(const LabeledDataset& ds, const LogisticConfig& cfg,
                                      const std::vector<double>& params);

// ---------------------------------------------------------------------------
// CART decision tree, Gini criterion, exact midpoint threshold search.

struct TreeConfig {
    // When positive, each split searches a random feature subset of this
    // size (forest mode); 0 searches every feature.
    int features_per_split = 0;
};

struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int leaf_class = -1;
};

struct TreeModel {
    std::vector<TreeNode> nodes;

    int predict(const double* x) const;
};

TreeModel train_tree(const LabeledDataset& ds, const TreeConfig& cfg = {});

// ---------------------------------------------------------------------------
// Random forest: bagged CART trees with sqrt(d) feature subsets.

struct ForestConfig {
    int n_trees = 100;
    bool bootstrap = true;
    bool feature_subsampling = true;
    std::uint64_t seed = 0;
    unsigned threads = 1; // tree fits are independent
};

struct ForestModel {
    std::vector<TreeModel> trees;

    int predict(const double* x) const;
};

ForestModel train_forest(const LabeledDataset& ds, const ForestConfig& cfg = {});

// Majority vote with ties broken toward the lowest class index.
int majority_vote(const std::vector<int>& votes, int n_classes);

// ---------------------------------------------------------------------------
// Soft-margin SVM, RBF kernel, one-vs-one multiclass, SMO dual solver.

struct SvmConfig {
    double c = 1.0;
    double gamma = 0.0; // 0 picks 1 / (dim * mean feature variance)
    double tol = 1e-3;  // KKT tolerance
    std::size_t max_steps = 200000;
    bool track_objective = false; // records the dual objective per step
};

struct BinarySvm {
    Matrix support_vectors;
    std::vector<double> coefs; // alpha_i * y_i per support vector
    double bias = 0.0;
    double gamma = 0.0;
    int positive_class = 0;
    int negative_class = 0;
    std::vector<double> objective_trace;

    double decision(const double* x) const;
};

struct SvmModel {
    std::vector<BinarySvm> machines; // class pairs (a, b), a < b, lexicographic
    int n_classes = 0;

    int predict(const double* x) const;
};

SvmModel train_svm(const LabeledDataset& ds, const SvmConfig& cfg = {});

// ---------------------------------------------------------------------------
// Repeated stratified holdout evaluation.

struct EvalResult {
    Strategy strategy = Strategy::ZOnly;
    ClassifierKind classifier = ClassifierKind::Logistic;
    int n = 0;
    std::vector<double> accuracies;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0; // population std over splits
};

// For each split: stratified 80/20 partition from stream (seed, split);
// z-score standardization (train statistics) for logistic and SVM; fit on
// the train rows; accuracy on the held-out rows.
EvalResult evaluate(const LabeledDataset& ds, ClassifierKind classifier,
                    int splits = 10, double train_frac = 0.8, std::uint64_t seed = 0,
                    unsigned threads = 1);

} // namespace qcf

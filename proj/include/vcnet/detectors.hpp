#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace vcnet {

/// Embedding rows with integer class labels. Binary convention: 0 is
/// in-distribution, 1 is OOD; multiclass uses top-level class ids.
struct LabeledEmbeddings {
    Eigen::MatrixXd rows;     // n x d
    std::vector<int> labels;  // size n, nonnegative

    std::size_t size() const { return labels.size(); }
    std::size_t width() const { return static_cast<std::size_t>(rows.cols()); }
    void validate() const;

    /// Distinct labels, ascending.
    std::vector<int> classes() const;
};

// ---------------------------------------------------------------- logistic

struct LogisticConfig {
    double l2 = 1e-4;
    double grad_tolerance = 1e-6;
    int max_iterations = 10000;
};

struct LogisticModel {
    Eigen::VectorXd weights;
    double intercept = 0.0;
    // Internal standardization applied before the linear score.
    Eigen::VectorXd feature_mean;
    Eigen::VectorXd feature_scale;
};

LogisticModel logistic_fit(const LabeledEmbeddings& data, const LogisticConfig& cfg = {});
double logistic_predict(const LogisticModel& model, const Eigen::VectorXd& x);

// ------------------------------------------------------------------- trees

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;               // regression leaf payload
    std::vector<double> class_votes;  // classification leaf payload
};

struct Tree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    int leaf_for(const Eigen::VectorXd& x) const;
};

struct GbdtConfig {
    int rounds = 100;
    int max_depth = 3;
    double learning_rate = 0.1;
    int min_samples_leaf = 2;
    std::uint64_t seed = 42;
};

struct GbdtModel {
    double base_score = 0.0;  // log-odds of the positive class
    double learning_rate = 0.1;
    std::vector<Tree> trees;
};

/// Gradient boosting with logistic loss; exact greedy splits, ties broken by
/// lowest feature index then lowest threshold.
GbdtModel gbdt_fit(const LabeledEmbeddings& data, const GbdtConfig& cfg = {});
double gbdt_predict(const GbdtModel& model, const Eigen::VectorXd& x);

struct RandomForestConfig {
    int trees = 100;
    int min_samples_split = 2;
    std::uint64_t seed = 42;
};

struct RandomForestModel {
    std::vector<int> class_ids;  // ascending; votes index into this
    std::vector<Tree> trees;
};

/// 100 bagged unpruned trees with sqrt(d) feature subsampling and
/// majority-vote probabilities.
RandomForestModel rf_fit(const LabeledEmbeddings& data, const RandomForestConfig& cfg = {});
std::vector<double> rf_predict(const RandomForestModel& model, const Eigen::VectorXd& x);

// ------------------------------------------------------------------- ocsvm

struct OcsvmModel {
    Eigen::MatrixXd support_vectors;
    Eigen::VectorXd dual_coefficients;  // in [0, 1/(nu n)], summing to 1
    double rho = 0.0;
    double gamma = 1.0;
    double nu = 0.1;
};

/// One-class SVM with RBF kernel, solved by pairwise coordinate (SMO-style)
/// optimization to KKT tolerance 1e-4. gamma <= 0 selects the scale
/// heuristic 1 / (d * mean feature variance). Positive scores mean inlier.
OcsvmModel ocsvm_fit(const Eigen::MatrixXd& rows, double nu = 0.1, double gamma = 0.0,
                     double kkt_tolerance = 1e-4);
double ocsvm_score(const OcsvmModel& model, const Eigen::VectorXd& x);

// ------------------------------------------------------------- mahalanobis

enum class MahalanobisMode { per_class, pooled };

struct MahalanobisModel {
    std::vector<int> class_ids;
    Eigen::MatrixXd means;       // one row per class id
    Eigen::MatrixXd covariance;  // shared, before regularization
    double lambda = 0.0;         // score uses covariance + lambda * I
};

/// per_class: class means with the shared covariance pooled over classes
/// (1/N normalization). pooled: single mean and unbiased covariance of the
/// label-0 rows only.
MahalanobisModel mahalanobis_fit(const LabeledEmbeddings& data, MahalanobisMode mode);

/// -min_c 0.5 (x-mu_c)^T (Sigma + lambda I)^{-1} (x-mu_c); higher means more
/// in-distribution. Solved, never explicitly inverted.
double mahalanobis_score(const MahalanobisModel& model, const Eigen::VectorXd& x);
Eigen::VectorXd mahalanobis_score_all(const MahalanobisModel& model, const Eigen::MatrixXd& rows);

// ---------------------------------------------------------------- model io

using DetectorModel =
    std::variant<LogisticModel, GbdtModel, RandomForestModel, OcsvmModel, MahalanobisModel>;

/// Versioned JSON round-trip; value-exact for scoring.
std::string model_to_json(const DetectorModel& model);
DetectorModel model_from_json(const std::string& text);
void save_model(const std::string& path, const DetectorModel& model);
DetectorModel load_model(const std::string& path);

}  // namespace vcnet

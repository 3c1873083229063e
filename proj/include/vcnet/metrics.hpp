#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace vcnet {

/// Rank (Mann-Whitney) AUROC with midrank tie handling: the probability that
/// a random positive outscores a random negative, ties counted half. Both
/// classes must be present.
double auroc(const std::vector<double>& scores, const std::vector<int>& labels);

/// Average precision: sum over descending-score thresholds of
/// (R_k - R_{k-1}) P_k, ties grouped at one threshold. Needs >= 1 positive.
double average_precision(const std::vector<double>& scores, const std::vector<int>& labels);

/// 2PR/(P+R), 0 when P+R is 0.
double f1(const std::vector<int>& predicted, const std::vector<int>& labels);

struct OvrResult {
    double weighted = 0.0;
    std::vector<int> classes;           // classes included in the average
    std::vector<double> per_class;      // metric per included class
    std::vector<std::size_t> supports;  // matching class supports
};

/// Support-weighted one-vs-rest AUROC. probabilities has one column per
/// entry of class_ids. Classes absent from labels are excluded with a
/// warning.
OvrResult multiclass_auroc_ovr(const Eigen::MatrixXd& probabilities,
                               const std::vector<int>& class_ids, const std::vector<int>& labels);

/// Same weighting for average precision and F1 (predicted = argmax column).
OvrResult multiclass_aupr_ovr(const Eigen::MatrixXd& probabilities,
                              const std::vector<int>& class_ids, const std::vector<int>& labels);
OvrResult multiclass_f1_ovr(const std::vector<int>& predicted, const std::vector<int>& class_ids,
                            const std::vector<int>& labels);

double accuracy(const std::vector<int>& predicted, const std::vector<int>& labels);

struct PerClassMetrics {
    int class_id = 0;
    std::string class_name;
    std::size_t support_train = 0;
    std::size_t support_test = 0;
    std::optional<double> auroc_train, auroc_test;
    std::optional<double> aupr_train, aupr_test;
    std::optional<double> f1_train, f1_test;
};

/// Evaluation summary serialized with fixed key names (auroc_train,
/// auroc_test, aupr_train, aupr_test, f1_train, f1_test, per_class).
struct EvalReport {
    std::optional<double> auroc_train, auroc_test;
    std::optional<double> aupr_train, aupr_test;
    std::optional<double> f1_train, f1_test;
    std::optional<double> accuracy_train, accuracy_test;  // multiclass runs
    /// Zero-shot runs: fraction of ID training rows scored nonnegative.
    std::optional<double> train_score_nonnegative_fraction;
    std::vector<PerClassMetrics> per_class;
    std::size_t train_positives = 0, train_negatives = 0;
    std::size_t test_positives = 0, test_negatives = 0;

    std::string to_json(int indent = 2) const;
};

}  // namespace vcnet

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcnet/detectors.hpp"
#include "vcnet/embedders.hpp"
#include "vcnet/graph.hpp"
#include "vcnet/metrics.hpp"
#include "vcnet/synset.hpp"

namespace vcnet {

enum class DetectorKind { logistic, gbdt, random_forest, ocsvm, mahalanobis };
DetectorKind detector_kind_from_string(const std::string& name);
std::string to_string(DetectorKind kind);

struct ExperimentConfig {
    std::vector<std::string> class_names;
    std::vector<std::string> json_paths;  // one detection file per class
    double confidence_threshold = 0.5;
    std::string vocabulary_path;
    std::string vocabulary_name = "custom";
    EmbedderConfig embedder = EmbedderConfig::defaults_for(EmbedMethod::fgsd);
    DetectorKind detector = DetectorKind::gbdt;
    MahalanobisMode mahalanobis_mode = MahalanobisMode::per_class;
    double ocsvm_nu = 0.1;
    double ocsvm_gamma = 0.0;  // 0 -> scale heuristic
    double split_fraction = 0.2;
    std::uint64_t seed = 42;
    bool weighted_graphs = true;
    DistanceAnchor distance_anchor = DistanceAnchor::centroid;
    double decision_threshold = 0.5;  // probability cut for F1
    int workers = 1;
    std::string synset_map_path;  // multiclass runs
    std::string output_path;      // empty -> stdout

    void validate_supervised() const;
};

/// Per-class proportional split with a seeded shuffle. Returns index sets
/// into the input; every class contributes round(fraction * n) >= 1 test
/// items (and keeps at least one training item).
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};
SplitIndices stratified_split(const std::vector<int>& labels, double fraction,
                              std::uint64_t seed);

/// One labeled graph corpus, as ingested from per-class detection files.
struct GraphCorpus {
    std::vector<ConceptGraph> graphs;
    std::vector<int> labels;
    std::vector<std::string> image_paths;
    std::vector<std::string> class_names;  // label -> name
};

/// ingest -> confidence filter -> vocabulary resolve -> graphs.
GraphCorpus build_graph_corpus(const ExperimentConfig& cfg, const Vocabulary& vocab);

/// Supervised run: split, embed (fit on train only), fit detector, report
/// train/test AUROC, AUPR, F1.
EvalReport run_supervised(const ExperimentConfig& cfg);

/// Zero-shot run: embedder and one-class SVM fit on in-distribution training
/// graphs only; held-out ID plus all OOD rows are scored for the test
/// metrics. Train-side AUROC/AUPR are undefined (single class) and reported
/// as null; train_score_nonnegative_fraction tracks the nu bound instead.
EvalReport run_zero_shot(const ExperimentConfig& cfg);

/// Mahalanobis evaluation over a persisted embedding file with binary labels.
EvalReport run_mahalanobis_eval(const std::string& embeddings_path, MahalanobisMode mode);

struct MulticlassReport {
    EvalReport random_forest;
    EvalReport gradient_boosting;
    std::string to_json(int indent = 2) const;
};

/// Multiclass run: labels are mapped through the synset map to top-level
/// classes, embedded with graph2vec, and classified with random forest and
/// one-vs-rest gradient boosting.
MulticlassReport run_multiclass(const ExperimentConfig& cfg);

/// Text persistence, one row per line: label, comma, embedding values with
/// full round-trip precision.
void save_embeddings(const std::string& path, const LabeledEmbeddings& data);
LabeledEmbeddings load_embeddings(const std::string& path);

struct EdgeView {
    std::string concept_u;
    std::string concept_v;
    double weight = 0.0;
    double neighbor_weight = 0.0;  // shared edges carry both weights
};

struct ExplainReport {
    std::string target_image;
    std::string neighbor_image;
    std::size_t neighbor_index = 0;
    double latent_distance = 0.0;
    std::vector<EdgeView> only_in_target;
    std::vector<EdgeView> only_in_neighbor;
    std::vector<EdgeView> shared;

    std::string to_json(int indent = 2) const;
};

/// Nearest in-distribution graph by Euclidean distance in embedding space
/// (ties to the lowest corpus index), plus the edge-set diff rendered with
/// concept names.
ExplainReport explain_ood(const ConceptGraph& target, const Eigen::VectorXd& target_embedding,
                          const std::string& target_image,
                          const std::vector<ConceptGraph>& id_corpus,
                          const Eigen::MatrixXd& id_embeddings,
                          const std::vector<std::string>& id_images, const Vocabulary& vocab);

}  // namespace vcnet

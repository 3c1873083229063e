#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vcnet/graph.hpp"
#include "vcnet/wl.hpp"

namespace vcnet {

enum class EmbedMethod { graph2vec, gl2vec, ldp, sf, netlsd, fgsd, feather, wavelet };

EmbedMethod embed_method_from_string(const std::string& name);
std::string to_string(EmbedMethod m);

/// Per-method hyperparameters. Construct through defaults_for so each method
/// starts from its published defaults; override fields afterwards as needed.
struct EmbedderConfig {
    EmbedMethod method = EmbedMethod::fgsd;
    int dimensions = 0;

    // graph2vec / gl2vec
    int wl_iterations = 2;
    int epochs = 10;
    double learning_rate = 0.025;
    double min_learning_rate = 1e-4;
    int negative_samples = 5;
    bool wl_concept_labels = false;  // seed WL with node ids instead of degrees

    // wavelet characteristic
    double tau = 1.0;

    // wavelet + feather
    double theta_max = 2.5;
    int eval_points = 25;

    // ldp / fgsd
    int bins = 32;
    double fgsd_hist_max = 20.0;

    // netlsd
    int eig_approx = 200;  // kept for configurability; spectra are exact at vocabulary scale
    int time_steps = 250;
    double time_min_exp = -2.0;
    double time_max_exp = 2.0;

    // feather
    int order = 5;

    /// Spectral methods (sf, netlsd, fgsd, wavelet) consume edge weights;
    /// clearing this forces the unweighted skeleton everywhere.
    bool use_edge_weights = true;

    std::uint64_t seed = 42;

    static EmbedderConfig defaults_for(EmbedMethod m);
};

// Structural embedders: deterministic pure functions of one graph.
Eigen::VectorXd ldp_embed(const ConceptGraph& g, const EmbedderConfig& cfg);
Eigen::VectorXd sf_embed(const ConceptGraph& g, const EmbedderConfig& cfg);
Eigen::VectorXd netlsd_embed(const ConceptGraph& g, const EmbedderConfig& cfg);
Eigen::VectorXd fgsd_embed(const ConceptGraph& g, const EmbedderConfig& cfg);
Eigen::VectorXd feather_embed(const ConceptGraph& g, const EmbedderConfig& cfg);
Eigen::VectorXd wavelet_char_embed(const ConceptGraph& g, const EmbedderConfig& cfg);

/// Distributed bag-of-WL-features model: each graph is a document, WL
/// subtree labels are its tokens, trained with negative sampling. fit
/// learns token and document vectors; transform trains a fresh document
/// vector against frozen token vectors.
class Graph2Vec {
public:
    explicit Graph2Vec(EmbedderConfig cfg);

    Eigen::MatrixXd fit(const std::vector<ConceptGraph>& corpus);
    Eigen::VectorXd transform(const ConceptGraph& g) const;
    bool fitted() const { return fitted_; }
    const EmbedderConfig& config() const { return cfg_; }

private:
    std::vector<int> tokenize(const WlFeatureBag& bag, bool allow_new);
    Eigen::VectorXd train_document(const std::vector<int>& tokens, Eigen::MatrixXd* token_vectors,
                                   Eigen::VectorXd doc, std::uint64_t seed) const;

    EmbedderConfig cfg_;
    bool fitted_ = false;
    std::vector<std::string> token_names_;
    std::unordered_map<std::string, int> token_ids_;
    std::vector<double> token_counts_;
    std::vector<double> noise_cumulative_;  // unigram^0.75 cumulative sums
    Eigen::MatrixXd token_vectors_;
};

/// Uniform fit/transform facade over all eight methods. Structural methods
/// have a no-op fit; graph2vec and gl2vec train on the fit corpus (gl2vec on
/// its line graphs).
class Embedder {
public:
    explicit Embedder(EmbedderConfig cfg);

    /// Fits (where applicable) and returns one embedding row per graph.
    Eigen::MatrixXd fit(const std::vector<ConceptGraph>& corpus, int workers = 1);
    Eigen::VectorXd transform(const ConceptGraph& g) const;
    Eigen::MatrixXd transform_all(const std::vector<ConceptGraph>& corpus, int workers = 1) const;

    const EmbedderConfig& config() const { return cfg_; }
    bool fitted() const { return fitted_; }

private:
    EmbedderConfig cfg_;
    bool fitted_ = false;
    std::unique_ptr<Graph2Vec> model_;  // graph2vec / gl2vec only
};

/// Algorithm 2 entry point: fit on the corpus, return the embedding matrix
/// together with the fitted embedder.
std::pair<Eigen::MatrixXd, Embedder> embed_corpus(const std::vector<ConceptGraph>& corpus,
                                                  const EmbedderConfig& cfg, int workers = 1);

}  // namespace vcnet

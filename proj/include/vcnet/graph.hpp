#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcnet/detections.hpp"
#include "vcnet/geometry.hpp"

namespace vcnet {

struct Edge {
    std::uint32_t u = 0;  // u < v always
    std::uint32_t v = 0;
    double weight = 1.0;

    bool operator==(const Edge&) const = default;
};

/// Undirected weighted graph over a fixed vocabulary-sized node set.
/// Edges exist only among concepts detected in one image; at most one edge
/// per node pair, no self-loops. In weighted mode every weight is >= 1.
class ConceptGraph {
public:
    ConceptGraph() = default;
    ConceptGraph(std::size_t node_count, bool weighted);

    std::size_t node_count() const { return node_count_; }
    bool weighted() const { return weighted_; }

    /// Edges sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Inserts or max-merges an edge; u == v is rejected.
    void add_edge(std::size_t u, std::size_t v, double weight);

    std::vector<std::size_t> degrees() const;
    std::vector<std::vector<std::uint32_t>> adjacency_lists() const;

    std::string to_json() const;
    static ConceptGraph from_json(const std::string& text);

    bool operator==(const ConceptGraph&) const = default;

private:
    std::size_t node_count_ = 0;
    bool weighted_ = false;
    std::vector<Edge> edges_;  // kept sorted by (u, v)
};

struct GraphBuildOptions {
    bool weighted = true;
    DistanceAnchor distance_anchor = DistanceAnchor::centroid;
    /// Divide centroid distances by the image diagonal. Off by default: the
    /// method operates on raw pixel distances.
    bool normalize_distances = false;
    double image_width = 0.0;   // only used when normalize_distances is set
    double image_height = 0.0;
};

/// Builds the visual concept network for one image. Every detection concept
/// must resolve in the vocabulary (drop unknowns with resolve_detections
/// first). Pairs of detections mapping to the same node produce no edge;
/// repeated node pairs keep the maximum weight.
ConceptGraph create_graph(const Vocabulary& vocab, const ImageDetections& d,
                          const GraphBuildOptions& options = {});

ConceptGraph create_graph(const Vocabulary& vocab, const ImageDetections& d, bool weighted);

/// Line graph: one node per edge of g (in sorted (u,v) order), nodes adjacent
/// iff the original edges share an endpoint. All edge weights 1.
ConceptGraph line_graph(const ConceptGraph& g);

}  // namespace vcnet

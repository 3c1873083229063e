#pragma once

#include <string>
#include <vector>

#include "vcnet/graph.hpp"

namespace vcnet {

/// Multiset of Weisfeiler-Lehman subtree labels for one graph, rounds
/// 0..iterations, node-major within each round. Round-0 labels are plain
/// degree strings (or caller-supplied initial labels); each later round is
/// the 16-hex-digit FNV hash of "own|sorted neighbor labels".
struct WlFeatureBag {
    std::vector<std::string> labels;

    bool operator==(const WlFeatureBag&) const = default;
};

WlFeatureBag wl_features(const ConceptGraph& g, int iterations);

/// Variant with explicit round-0 labels, one per node (used to seed WL with
/// vocabulary concept ids instead of degrees).
WlFeatureBag wl_features(const ConceptGraph& g, int iterations,
                         const std::vector<std::string>& initial_labels);

}  // namespace vcnet

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcnet/detections.hpp"

namespace vcnet {

/// Generation law for one synthetic scene family. Concepts are drawn as
/// unordered pairs from pair_bias (a symmetric relative-frequency matrix
/// over the pool, diagonal = repeated-concept pairs); boxes cluster around a
/// per-image anchor with Gaussian jitter so overlapping pairs occur.
struct SceneFamilySpec {
    std::vector<std::string> concept_pool;
    int min_objects = 3;
    int max_objects = 6;
    std::vector<std::vector<double>> pair_bias;  // |pool| x |pool|, symmetric, entries >= 0
    double cluster_spread = 0.30;                // Gaussian sigma as a fraction of image extent
    double image_width = 640.0;
    double image_height = 480.0;
    double min_box_side = 30.0;
    double max_box_side = 120.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Emits `count` detection records under the family law; deterministic per
/// seed. Image paths are "synth/<family seed>/<index>.jpg".
std::vector<ImageDetections> generate_scenes(const SceneFamilySpec& spec, int count);

/// Same, straight to a JSON-lines detection file.
void generate_scene_file(const SceneFamilySpec& spec, int count, const std::string& path);

/// Far-OOD analog: disjoint concept pools and visibly different scene
/// statistics (object counts, pair structure, box spread). Needs >= 20
/// concepts.
std::pair<SceneFamilySpec, SceneFamilySpec> far_pair(const Vocabulary& vocab,
                                                     std::uint64_t seed = 0);

/// Near-OOD analog: identical pools, shifted co-occurrence bias. Needs >= 20
/// concepts.
std::pair<SceneFamilySpec, SceneFamilySpec> near_pair(const Vocabulary& vocab,
                                                      std::uint64_t seed = 0);

}  // namespace vcnet

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vcnet/geometry.hpp"

namespace vcnet {

/// One detected object: concept name, box, confidence in [0,1].
struct Detection {
    std::string concept;
    BoundingBox box;
    double score = 0.0;

    bool operator==(const Detection&) const = default;
};

/// All detections reported for one image, in file order.
struct ImageDetections {
    std::string image_path;
    std::vector<Detection> detections;

    bool operator==(const ImageDetections&) const = default;
};

/// Ordered set of unique concept names; node set of every concept graph.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::string name, std::vector<std::string> concepts);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& concepts() const { return concepts_; }
    std::size_t size() const { return concepts_.size(); }

    /// Position of a concept, or nullopt if unknown.
    std::optional<std::size_t> index(const std::string& concept) const;

private:
    std::string name_;
    std::vector<std::string> concepts_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Known vocabulary identifiers: coco, objects365, openimages, lvis, custom.
bool is_known_vocabulary_name(const std::string& name);

/// Reads a vocabulary file: UTF-8 text, one concept per line, blank lines
/// ignored. Throws on missing file, empty vocabulary, or duplicates.
Vocabulary load_vocabulary(const std::string& path, const std::string& name = "custom");

/// Parses a JSON-lines detection file. Each line holds an object with keys
/// image_path, names, boxes, scores (parallel arrays, boxes as
/// [x_min,y_min,x_max,y_max]). Throws with the offending line number on
/// malformed input, array length mismatch, inverted boxes, or out-of-range
/// scores.
std::vector<ImageDetections> parse_detection_file(const std::string& path);

/// Same, from an already-open stream (used by tests and the parser itself).
std::vector<ImageDetections> parse_detection_stream(std::istream& in,
                                                    const std::string& origin = "<stream>");

/// Serializes records back to the JSON-lines format accepted by
/// parse_detection_file.
void write_detection_file(const std::string& path, const std::vector<ImageDetections>& records);
std::string detection_record_to_json_line(const ImageDetections& record);

/// Keeps detections with score >= threshold, order preserved.
ImageDetections filter_detections(const ImageDetections& d, double threshold);

/// Drops detections whose concept is not in the vocabulary. Unknown concepts
/// are reported once each through the warning sink (default: stderr).
ImageDetections resolve_detections(const ImageDetections& d, const Vocabulary& vocab,
                                   std::vector<std::string>* warnings = nullptr);

}  // namespace vcnet

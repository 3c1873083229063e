#pragma once

#include <cmath>
#include <stdexcept>

namespace vcnet {

/// Axis-aligned box in pixel coordinates, corners inclusive.
struct BoundingBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    bool valid() const {
        return std::isfinite(x_min) && std::isfinite(y_min) && std::isfinite(x_max) &&
               std::isfinite(y_max) && x_min <= x_max && y_min <= y_max;
    }

    bool operator==(const BoundingBox&) const = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point centroid(const BoundingBox& b) {
    return {(b.x_min + b.x_max) / 2.0, (b.y_min + b.y_max) / 2.0};
}

inline double find_distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// IoU on the inclusive pixel grid: a box covers (x_max - x_min + 1) pixels per axis.
double find_iou(const BoundingBox& a, const BoundingBox& b);

/// Which box point anchors the pairwise distance in edge weights.
enum class DistanceAnchor { centroid, corner };

/// Edge weight between two detected objects: 1 + distance * IoU in weighted
/// mode, plain 1 otherwise.
double edge_weight(const BoundingBox& a, const BoundingBox& b, bool weighted,
                   DistanceAnchor anchor = DistanceAnchor::centroid);

}  // namespace vcnet

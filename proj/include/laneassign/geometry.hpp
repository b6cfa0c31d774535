#pragma once

#include <utility>
#include <vector>

#include "laneassign/errors.hpp"

namespace laneassign {

// Row-anchored sampling grid. Row 0 sits at the image bottom (y = img_h - 1),
// the last row at y = 0.
struct RowGrid {
    int n_rows = 72;
    int img_h = 590;
    int img_w = 1640;

    double y(int r) const {
        return static_cast<double>(img_h - 1) * (n_rows - 1 - r) / (n_rows - 1);
    }

    bool operator==(const RowGrid&) const = default;
};

RowGrid make_grid(int n_rows, int img_h, int img_w);

// (x, y) in pixels
using Polyline = std::vector<std::pair<double, double>>;

// A lane sampled on a row grid. Valid rows form one contiguous run; the start
// point is the lowest (bottom-most) valid row. theta is the angle of the lane
// direction against the image x-axis, in [0, pi) (pi/2 = vertical).
struct Lane {
    RowGrid grid;
    std::vector<double> xs;
    std::vector<bool> valid;
    double start_x = 0.0;
    double start_y = 0.0;
    double theta = 0.0;
    int length = 0;
    double score = 1.0;

    int first_valid() const;
    int last_valid() const;
    // valid samples as (x, y(r)), bottom to top
    Polyline points() const;
};

// Builds a lane from raw per-row samples: clamps xs into [0, img_w-1], checks
// the validity run is contiguous and nonempty, derives start point, theta and
// length. theta comes from a least-squares x(y) fit over the lowest
// min(5, length) valid rows.
Lane make_lane(const RowGrid& grid, std::vector<double> xs, std::vector<bool> valid,
               double score = 1.0);

// Samples a polyline onto the grid by linear interpolation of x at every grid
// row whose y lies inside the polyline's y-span. Points are sorted by y first
// and must have strictly monotonic y.
Lane resample(const Polyline& polyline, const RowGrid& grid, double score = 1.0);

struct IoUParams {
    double line_half_width = 7.5;
    double mask_width = 30.0;
    int canvas_w = 1640;
    int canvas_h = 590;
};

// Per-row strip-overlap IoU with fixed half width. Rows valid in exactly one
// lane contribute 2w to the union and nothing to the overlap. Result in [0,1],
// symmetric. Throws UndefinedIouError when neither lane has a valid row.
double line_iou(const Lane& a, const Lane& b, double half_width);

// line_iou with each lane's per-row half width scaled by its local slope
// factor sqrt(1 + (dx/dy)^2), capped at slope_cap. One-sided differences at
// run ends.
double lane_iou(const Lane& a, const Lane& b, double half_width, double slope_cap = 10.0);

}  // namespace laneassign

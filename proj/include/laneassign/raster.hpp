#pragma once

#include <cstdint>
#include <vector>

#include "laneassign/geometry.hpp"

namespace laneassign {

// Boolean pixel canvas backed by 64-bit words.
class PixelMask {
public:
    PixelMask() = default;
    PixelMask(int w, int h) : w_(w), h_(h), bits_((static_cast<std::size_t>(w) * h + 63) / 64, 0) {}

    int width() const { return w_; }
    int height() const { return h_; }

    void set(int x, int y) {
        std::size_t i = static_cast<std::size_t>(y) * w_ + x;
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    bool get(int x, int y) const {
        std::size_t i = static_cast<std::size_t>(y) * w_ + x;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const;
    static std::size_t intersection_count(const PixelMask& a, const PixelMask& b);
    static std::size_t union_count(const PixelMask& a, const PixelMask& b);

private:
    int w_ = 0, h_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Draws the polyline as a stroke of the given total width: a pixel whose
// integer-coordinate center lies within width/2 Euclidean distance of any
// segment is set. A single point becomes a disc. No anti-aliasing.
PixelMask rasterize_stroke(const Polyline& pts, double stroke_width, int canvas_w, int canvas_h);

// |A and B| / |A or B|; throws UndefinedIouError when the union is empty.
double mask_iou(const PixelMask& a, const PixelMask& b);

// Rasterized segmentation-mask IoU between the two lanes' valid polylines.
double seg_mask_iou(const Lane& a, const Lane& b, const IoUParams& params);

}  // namespace laneassign

#pragma once

#include <cstdint>
#include <vector>

#include <lanekit/image.hpp>

namespace lanekit {

/// Quantized gradient directions, folded into [0, 180).
enum class GradientDir : std::uint8_t { Deg0 = 0, Deg45 = 1, Deg90 = 2, Deg135 = 3 };

/// Per-pixel signed gradients from the Sobel stage. magnitude is
/// hypot(gx, gy); direction_bin is the 4-way quantization of
/// atan2(gy, gx) folded into [0, 180) with bin edges at 22.5 degrees.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<float> gx;
    std::vector<float> gy;
    std::vector<float> magnitude;
    std::vector<GradientDir> direction_bin;

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width + x;
    }
};

/// 3x3 Sobel correlation, Gx = [[-1,0,1],[-2,0,2],[-1,0,1]], Gy its
/// transpose, clamp-to-edge borders, unscaled. Input must be 1-channel
/// and at least 3x3.
GradientField sobel(const ImageBuffer& image);

/// Keeps min(255, round(magnitude)) at pixels that dominate both
/// neighbors along their direction_bin axis; plateau ties resolve toward
/// the smaller coordinate so ridges thin to single-pixel width. Border
/// pixels are zero.
ImageBuffer non_max_suppression(const GradientField& field);

/// Double threshold with 8-connected hysteresis: pixels >= high seed a
/// flood that claims transitively connected pixels in [low, high).
/// Requires low <= high.
ImageBuffer hysteresis_threshold(const ImageBuffer& nms, int low, int high);

/// Full chain: gaussian_blur -> sobel -> non_max_suppression ->
/// hysteresis_threshold.
ImageBuffer canny(const ImageBuffer& image, int low, int high, double sigma,
                  int ksize);

}  // namespace lanekit

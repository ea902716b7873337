#pragma once

#include <lanekit/image.hpp>

namespace lanekit {

/// Standard hexcone RGB -> HSV conversion.
/// Rejects non 3-channel input.
HsvImage rgb_to_hsv(const ImageBuffer& image);

/// Binary mask of pixels whose (h, s, v) fall inside the given ranges,
/// inclusive. hue_lo > hue_hi selects the wrapped range through 0 degrees.
/// Saturation/value bounds must lie in [0, 1].
ImageBuffer hsv_threshold(const HsvImage& image, double hue_lo, double hue_hi,
                          double sat_lo, double sat_hi, double val_lo,
                          double val_hi);

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B), clamped to [0, 255].
ImageBuffer to_grayscale(const ImageBuffer& image);

/// Separable Gaussian smoothing with a sampled, renormalized kernel and
/// clamp-to-edge borders. ksize must be odd and >= 3, sigma > 0.
ImageBuffer gaussian_blur(const ImageBuffer& image, double sigma, int ksize);

}  // namespace lanekit

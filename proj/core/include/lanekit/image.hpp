#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lanekit {

/// Rectangular pixel raster, 8-bit samples, 1 (gray/binary) or 3 (RGB)
/// interleaved channels, row-major. Origin is the top-left corner; x grows
/// rightward and y grows downward. All pipeline stages share this
/// convention.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> data;

    static ImageBuffer create(int width, int height, int channels,
                              std::uint8_t fill = 0);

    std::size_t index(int x, int y, int c = 0) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
    std::uint8_t at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
    std::uint8_t& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }

    /// Sample with clamp-to-edge border replication.
    std::uint8_t at_clamped(int x, int y, int c = 0) const;

    bool valid() const {
        return width >= 1 && height >= 1 && (channels == 1 || channels == 3) &&
               data.size() == static_cast<std::size_t>(width) * height * channels;
    }
};

/// Per-pixel HSV samples, planar layout. Hue in degrees [0, 360),
/// saturation and value in [0, 1]. Achromatic pixels carry hue 0.
struct HsvImage {
    int width = 0;
    int height = 0;
    std::vector<float> hue;
    std::vector<float> sat;
    std::vector<float> val;

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width + x;
    }
};

/// True when every sample is 0 or 255.
bool is_binary(const ImageBuffer& image);

}  // namespace lanekit

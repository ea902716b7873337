#include <lanekit/image.hpp>

#include <algorithm>
#include <stdexcept>

namespace lanekit {

ImageBuffer ImageBuffer::create(int width, int height, int channels,
                                std::uint8_t fill) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("ImageBuffer: dimensions must be >= 1");
    if (channels != 1 && channels != 3)
        throw std::invalid_argument("ImageBuffer: channels must be 1 or 3");
    ImageBuffer img;
    img.width = width;
    img.height = height;
    img.channels = channels;
    img.data.assign(static_cast<std::size_t>(width) * height * channels, fill);
    return img;
}

std::uint8_t ImageBuffer::at_clamped(int x, int y, int c) const {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return data[index(x, y, c)];
}

bool is_binary(const ImageBuffer& image) {
    for (std::uint8_t v : image.data)
        if (v != 0 && v != 255) return false;
    return true;
}

}  // namespace lanekit

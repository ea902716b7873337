#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <lanekit/image.hpp>

namespace lanekit {

struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadMagicError : CodecError {
    using CodecError::CodecError;
};
struct BadMaxvalError : CodecError {
    using CodecError::CodecError;
};
struct TruncatedError : CodecError {
    using CodecError::CodecError;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary PPM ("P6"), maxval 255, Netpbm header grammar with whitespace
/// and '#' comment handling.
ImageBuffer read_ppm(const std::vector<std::uint8_t>& bytes);

/// Binary PGM ("P5"), maxval 255.
ImageBuffer read_pgm(const std::vector<std::uint8_t>& bytes);

/// Canonical encoding: "P6\n<w> <h>\n255\n" + raster. Round-trips with
/// read_ppm bit-exactly. Requires a 3-channel image.
std::vector<std::uint8_t> write_ppm(const ImageBuffer& image);

/// Canonical "P5" encoding; requires a 1-channel image.
std::vector<std::uint8_t> write_pgm(const ImageBuffer& image);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lanekit

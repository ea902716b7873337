#include <lanekit/netpbm.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>

namespace lanekit {

namespace {

struct Cursor {
    const std::vector<std::uint8_t>& bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    int peek() const { return eof() ? -1 : bytes[pos]; }
    int get() { return eof() ? -1 : bytes[pos++]; }
};

bool is_pbm_space(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Whitespace and '#' comments (to end of line) may separate header fields.
void skip_separators(Cursor& cur) {
    for (;;) {
        int c = cur.peek();
        if (is_pbm_space(c)) {
            cur.get();
        } else if (c == '#') {
            while (!cur.eof() && cur.get() != '\n') {
            }
        } else {
            return;
        }
    }
}

int read_header_int(Cursor& cur, const char* what) {
    skip_separators(cur);
    if (cur.eof()) throw TruncatedError(std::string("netpbm: missing ") + what);
    if (!std::isdigit(cur.peek()))
        throw CodecError(std::string("netpbm: malformed ") + what);
    long v = 0;
    while (std::isdigit(cur.peek())) {
        v = v * 10 + (cur.get() - '0');
        if (v > 1000000) throw CodecError(std::string("netpbm: oversized ") + what);
    }
    return static_cast<int>(v);
}

ImageBuffer read_netpbm(const std::vector<std::uint8_t>& bytes, char magic_digit,
                        int channels) {
    Cursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != magic_digit)
        throw BadMagicError("netpbm: bad magic number");
    cur.pos = 2;

    const int width = read_header_int(cur, "width");
    const int height = read_header_int(cur, "height");
    const int maxval = read_header_int(cur, "maxval");
    if (width < 1 || height < 1)
        throw CodecError("netpbm: invalid dimensions");
    if (maxval != 255) throw BadMaxvalError("netpbm: maxval must be 255");

    // Exactly one whitespace byte between maxval and the raster.
    if (cur.eof()) throw TruncatedError("netpbm: missing raster");
    if (!is_pbm_space(cur.get()))
        throw CodecError("netpbm: expected whitespace before raster");

    const std::size_t expect =
        static_cast<std::size_t>(width) * height * channels;
    if (bytes.size() - cur.pos < expect)
        throw TruncatedError("netpbm: truncated raster");

    ImageBuffer img = ImageBuffer::create(width, height, channels);
    std::copy(bytes.begin() + cur.pos, bytes.begin() + cur.pos + expect,
              img.data.begin());
    return img;
}

std::vector<std::uint8_t> write_netpbm(const ImageBuffer& image, const char* magic) {
    char header[48];
    const int n = std::snprintf(header, sizeof(header), "%s\n%d %d\n255\n", magic,
                                image.width, image.height);
    std::vector<std::uint8_t> out(header, header + n);
    out.insert(out.end(), image.data.begin(), image.data.end());
    return out;
}

}  // namespace

ImageBuffer read_ppm(const std::vector<std::uint8_t>& bytes) {
    return read_netpbm(bytes, '6', 3);
}

ImageBuffer read_pgm(const std::vector<std::uint8_t>& bytes) {
    return read_netpbm(bytes, '5', 1);
}

std::vector<std::uint8_t> write_ppm(const ImageBuffer& image) {
    if (!image.valid() || image.channels != 3)
        throw std::invalid_argument("write_ppm: 3-channel image required");
    return write_netpbm(image, "P6");
}

std::vector<std::uint8_t> write_pgm(const ImageBuffer& image) {
    if (!image.valid() || image.channels != 1)
        throw std::invalid_argument("write_pgm: 1-channel image required");
    return write_netpbm(image, "P5");
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace lanekit

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tecu/problem.hpp"

namespace tecu {

class PnmParseError : public std::runtime_error {
 public:
  PnmParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_ = 0;
};

/// Planar image with 1 (gray) or 3 (RGB) channels, values in [0, 1].
/// channels[c](row, col) indexes pixel (row, col).
struct Image {
  std::vector<Matrix> channels;

  Eigen::Index height() const { return channels.empty() ? 0 : channels.front().rows(); }
  Eigen::Index width() const { return channels.empty() ? 0 : channels.front().cols(); }
};

/// Reads plain or raw PGM (P2/P5) and PPM (P3/P6), maxval <= 65535.
/// Pixel values are scaled to [0, 1]. Malformed input raises PnmParseError
/// carrying the byte offset.
Image read_image_pnm(const std::string& path);

/// Writes PGM for 1 channel, PPM for 3. Values are clamped to [0, 1] and
/// rounded, so a write/read round trip is exact to within 1/(2*maxval).
void write_image_pnm(const std::string& path, const Image& image, int maxval = 255,
                     bool binary = true);

/// Pixelwise maximum over channels (the illumination estimate of an RGB
/// observation); identity for grayscale.
Matrix max_channel(const Image& image);

}  // namespace tecu

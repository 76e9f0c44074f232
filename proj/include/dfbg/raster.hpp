#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfbg {

// Thrown for malformed configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for unreadable or inconsistent input data (CLI exit code 2).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Three-channel color sample. Values are real, not bytes, so RGB and LAB
// features flow through the same code paths.
struct Color {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  friend bool operator==(const Color&, const Color&) = default;
};

// Row-major 2-D grid, (x, y) -> index y * width + x.
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    if (width < 1 || height < 1)
      throw std::invalid_argument("Raster: dimensions must be >= 1");
    data_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  T& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  const T& at(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  template <typename U>
  bool same_size(const Raster<U>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using Frame = Raster<Color>;
using ProbabilityMap = Raster<double>;
using BinaryMask = Raster<std::uint8_t>;  // 0 = background, 1 = foreground

inline void require_same_size(const auto& a, const auto& b, const std::string& what) {
  if (!a.same_size(b))
    throw std::invalid_argument(what + ": size mismatch (" +
                                std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                                " vs " + std::to_string(b.width()) + "x" +
                                std::to_string(b.height()) + ")");
}

}  // namespace dfbg

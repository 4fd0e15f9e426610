#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace metdp {

/// Row-major 8-bit grayscale raster.
class GrayImage {
public:
    GrayImage() = default;
    /// Throws InputError when either dimension is zero or the pixel count
    /// does not match width * height.
    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
    GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    bool empty() const noexcept { return pixels_.empty(); }

    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
    std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

}  // namespace metdp

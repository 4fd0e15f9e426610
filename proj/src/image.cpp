#include "metdp/image.hpp"

#include <string>

#include "metdp/errors.hpp"

namespace metdp {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width == 0 || height == 0) {
        throw InputError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
    }
    if (pixels_.size() != width * height) {
        throw InputError("image has " + std::to_string(pixels_.size()) + " pixels, expected " +
                         std::to_string(width * height));
    }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

}  // namespace metdp

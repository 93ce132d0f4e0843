#include "rr/scheme_2d.hpp"

#include <algorithm>

#include "rr/errors.hpp"

namespace rr {

bool is_free_position(size_t row, size_t col) {
    return (row % 4 < 2) == (col % 4 < 2);
}

namespace {

// Number of j in [0, n) with j % 4 < 2.
size_t low_tile_count(size_t n) { return n / 4 * 2 + std::min<size_t>(n % 4, 2); }

} // namespace

size_t free_position_count(size_t rows, size_t cols) {
    const size_t low_cols = low_tile_count(cols);
    const size_t high_cols = cols - low_cols;
    const size_t low_rows = low_tile_count(rows);
    const size_t high_rows = rows - low_rows;
    return low_rows * low_cols + high_rows * high_cols;
}

PagePlane encode_plane(const Bits& message, size_t rows, size_t cols) {
    if (message.size() != free_position_count(rows, cols)) {
        throw RangeError("message length must match the free position count");
    }
    PagePlane plane(rows, cols, 1);
    size_t next = 0;
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            if (is_free_position(r, c)) plane.set(r, c, message[next++]);
        }
    }
    return plane;
}

PlaneDecodeResult decode_plane(const PagePlane& plane) {
    PlaneDecodeResult result;
    result.message.reserve(free_position_count(plane.rows(), plane.cols()));
    for (size_t r = 0; r < plane.rows(); ++r) {
        for (size_t c = 0; c < plane.cols(); ++c) {
            if (is_free_position(r, c)) {
                result.message.push_back(plane.at(r, c));
            } else if (plane.at(r, c) == 0) {
                result.integrity.push_back({r, c});
            }
        }
    }
    return result;
}

} // namespace rr

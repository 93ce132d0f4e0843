#pragma once

#include "rr/bitio.hpp"
#include "rr/grid.hpp"

namespace rr {

// Two-dimensional page coding on a checkerboard of 2x2 tiles. A position is
// free exactly when its row tile parity matches its column tile parity; the
// other half of the positions is forced to 1. Any three consecutive cells in
// a row or a column then cover at least one forced 1 at a window end, so no
// forbidden window can form in either direction, at a rate of one message bit
// per two cells.
bool is_free_position(size_t row, size_t col);
size_t free_position_count(size_t rows, size_t cols);

// A forced position that reads back 0: evidence of outside interference.
struct IntegrityReport {
    size_t row = 0;
    size_t col = 0;
};

// message.size() must equal free_position_count(rows, cols); message bits
// fill the free positions in row-major order.
PagePlane encode_plane(const Bits& message, size_t rows, size_t cols);

struct PlaneDecodeResult {
    Bits message;
    std::vector<IntegrityReport> integrity;
};

// Reads the free positions back in row-major order. Forced positions that
// read 0 are reported, never thrown: the message bits are unaffected.
PlaneDecodeResult decode_plane(const PagePlane& plane);

} // namespace rr

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rr/gray_map.hpp"

namespace rr {

enum class Direction { Wordline, Bitline };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

// One page of a block: a rectangular binary array (rows = wordlines).
class PagePlane {
public:
    PagePlane() = default;
    PagePlane(size_t rows, size_t cols, uint8_t fill = 0)
        : rows_(rows), cols_(cols), bits_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint8_t at(size_t r, size_t c) const { return bits_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint8_t bit) { bits_[r * cols_ + c] = bit ? 1 : 0; }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint8_t> bits_;
};

// A Flash block: rows wordlines by cols cell positions, each cell holding a
// charge level in {0..q-1}.
class LevelGrid {
public:
    LevelGrid() = default;
    LevelGrid(unsigned q, size_t rows, size_t cols);

    unsigned q() const { return q_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t cells() const { return rows_ * cols_; }

    uint16_t at(size_t r, size_t c) const { return levels_[r * cols_ + c]; }
    void set(size_t r, size_t c, unsigned level);

    // Extracts one page across the whole grid via the Gray map.
    PagePlane extract_page(const GrayMap& map, unsigned page) const;

    // Writes one page's bits into every cell, keeping all other pages intact.
    void insert_page(const GrayMap& map, unsigned page, const PagePlane& plane);

private:
    unsigned q_ = 0;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint16_t> levels_;
};

// Text format: header "RRLG 1 q=<q> rows=<r> cols=<c>", then one wordline per
// line as space-separated decimal levels.
void save_grid(const LevelGrid& grid, std::ostream& out);
LevelGrid load_grid(std::istream& in);
void save_grid_file(const LevelGrid& grid, const std::string& path);
LevelGrid load_grid_file(const std::string& path);

} // namespace rr

#include "rr/grid.hpp"

#include <fstream>
#include <sstream>

#include "rr/errors.hpp"

namespace rr {

std::string to_string(Direction d) {
    return d == Direction::Wordline ? "wordline" : "bitline";
}

Direction direction_from_string(const std::string& s) {
    if (s == "wordline") return Direction::Wordline;
    if (s == "bitline") return Direction::Bitline;
    throw ParseError("unknown direction: " + s);
}

LevelGrid::LevelGrid(unsigned q, size_t rows, size_t cols)
    : q_(q), rows_(rows), cols_(cols), levels_(rows * cols, 0) {
    if (q < 2 || q > 65536 || (q & (q - 1)) != 0) {
        throw RangeError("LevelGrid requires q to be a power of 2 in [2, 65536]");
    }
    if (rows == 0 || cols == 0) throw RangeError("LevelGrid requires nonzero dimensions");
}

void LevelGrid::set(size_t r, size_t c, unsigned level) {
    if (level >= q_) throw RangeError("level out of range");
    levels_[r * cols_ + c] = static_cast<uint16_t>(level);
}

PagePlane LevelGrid::extract_page(const GrayMap& map, unsigned page) const {
    PagePlane plane(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            plane.set(r, c, static_cast<uint8_t>(map.page_bit(at(r, c), page)));
        }
    }
    return plane;
}

void LevelGrid::insert_page(const GrayMap& map, unsigned page, const PagePlane& plane) {
    if (plane.rows() != rows_ || plane.cols() != cols_) {
        throw RangeError("page plane dimensions do not match grid");
    }
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            unsigned bits = map.level_to_bits(at(r, c));
            unsigned mask = 1u << page;
            bits = plane.at(r, c) ? (bits | mask) : (bits & ~mask);
            levels_[r * cols_ + c] = static_cast<uint16_t>(map.bits_to_level(bits));
        }
    }
}

void save_grid(const LevelGrid& grid, std::ostream& out) {
    out << "RRLG 1 q=" << grid.q() << " rows=" << grid.rows() << " cols=" << grid.cols()
        << "\n";
    for (size_t r = 0; r < grid.rows(); ++r) {
        for (size_t c = 0; c < grid.cols(); ++c) {
            if (c) out << ' ';
            out << grid.at(r, c);
        }
        out << "\n";
    }
}

namespace {

unsigned long parse_field(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0) {
        throw ParseError("grid header: expected " + key + "=..., got " + token);
    }
    return std::stoul(token.substr(key.size() + 1));
}

} // namespace

LevelGrid load_grid(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("grid file: missing header");
    std::istringstream hs(header);
    std::string magic, version, qtok, rtok, ctok;
    if (!(hs >> magic >> version >> qtok >> rtok >> ctok) || magic != "RRLG") {
        throw ParseError("grid file: bad header");
    }
    if (version != "1") throw ParseError("grid file: unsupported version " + version);
    unsigned q = static_cast<unsigned>(parse_field(qtok, "q"));
    size_t rows = parse_field(rtok, "rows");
    size_t cols = parse_field(ctok, "cols");

    LevelGrid grid = [&] {
        try {
            return LevelGrid(q, rows, cols);
        } catch (const RangeError& e) {
            throw ParseError(std::string("grid file: ") + e.what());
        }
    }();
    for (size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError("grid file: truncated");
        std::istringstream ls(line);
        for (size_t c = 0; c < cols; ++c) {
            long v;
            if (!(ls >> v)) throw ParseError("grid file: short row");
            if (v < 0 || v >= static_cast<long>(q)) throw ParseError("grid file: level out of range");
            grid.set(r, c, static_cast<unsigned>(v));
        }
        long extra;
        if (ls >> extra) throw ParseError("grid file: overlong row");
    }
    return grid;
}

void save_grid_file(const LevelGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    save_grid(grid, out);
}

LevelGrid load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    return load_grid(in);
}

} // namespace rr

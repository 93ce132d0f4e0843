#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rr/gray_map.hpp"
#include "rr/grid.hpp"

namespace rr {

// Which family of harmful level triples to forbid. Full is the complete
// high-low-high family; Relaxed is the strict subset whose avoidance the 4-ary
// page code guarantees.
enum class Variant { Full, Relaxed };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// Full: (x, y, z) with x, z in the upper half {q/2..q-1} and y < min(x, z).
// Relaxed: ends in the top quarter with a lower middle, plus the three
// top-quarter/second-quarter mixes whose middle drops below q/2.
bool is_forbidden_level_triple(Variant variant, unsigned q, unsigned x, unsigned y,
                               unsigned z);

// All forbidden triples in lexicographic order, enumerated against the
// membership predicate over the full q^3 cube.
std::vector<std::array<unsigned, 3>> forbidden_level_triples(Variant variant, unsigned q);

// Binary page windows: 0y0 is forbidden (patterns 000 and 010).
bool is_forbidden_bit_triple(int x, int y, int z);

// 4-ary page windows: the ten patterns with both ends in {alpha, alpha^2} and a
// middle in {0, 1}, plus alpha^2 alpha alpha^2 and alpha^2 alpha^2 alpha^2.
bool is_forbidden_sym4_triple(Sym4 x, Sym4 y, Sym4 z);

// The ten forbidden 4-ary patterns in lexicographic order.
std::vector<std::array<Sym4, 3>> forbidden_sym4_triples();

// A length-3 window that matched the scanned-for set.
struct Violation {
    Direction direction;
    size_t row;      // of the window's first element
    size_t col;      // of the window's first element
    std::array<unsigned, 3> triple;
};

// Reports every forbidden window in a sequence (positions are column indices,
// direction Wordline). Sequences shorter than 3 are vacuously admissible.
std::vector<Violation> scan_levels(const std::vector<unsigned>& seq, Variant variant,
                                   unsigned q);
std::vector<Violation> scan_bits(const std::vector<uint8_t>& seq);
std::vector<Violation> scan_syms(const std::vector<Sym4>& seq);

// Scans a level grid along wordlines and/or bitlines; all overlapping
// violations are reported.
std::vector<Violation> scan_grid(const LevelGrid& grid, Variant variant,
                                 bool wordlines, bool bitlines);

// Same, for a binary page plane against the 0y0 window set.
std::vector<Violation> scan_plane(const PagePlane& plane, bool wordlines, bool bitlines);

} // namespace rr

#pragma once

#include <iosfwd>

#include "rr/bitio.hpp"
#include "rr/constraints.hpp"
#include "rr/grid.hpp"
#include "rr/policy.hpp"
#include "rr/scheme_2d.hpp"

namespace rr {

// How a block protects its cells:
//   Binary1D           one page coded along the write direction
//   Binary1DComplement the same lane stream with every bit flipped
//   Quaternary1D       two pages coded as 4-ary symbols along the direction
//   Binary2D           one page coded by the checkerboard mask in both axes
//   Uncoded            every page raw
enum class Scheme { Binary1D, Binary1DComplement, Quaternary1D, Binary2D, Uncoded };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& s);
bool scheme_is_stream(Scheme scheme); // admissible for file-stream coding

struct BlockConfig {
    unsigned q = 8;
    size_t rows = 0;
    size_t cols = 0;
    Scheme scheme = Scheme::Binary1D;
    Direction direction = Direction::Wordline;
    unsigned m = 11;     // codeword length; ignored by Binary2D and Uncoded
    unsigned rotate = 0; // cyclic page permutation applied at placement
};

// Message bits one block carries. For the 1D schemes the lane length along
// the write direction must be an exact multiple of m + 2.
size_t payload_capacity_bits(const BlockConfig& config);

// Payload layout inside a block: the coded page stream comes first (lane by
// lane along the write direction), then each remaining page in descending
// page order, row-major. payload.size() must equal payload_capacity_bits.
LevelGrid write_block(const BlockConfig& config, const Bits& payload);

struct BlockReadResult {
    Bits payload;
    std::vector<IntegrityReport> integrity; // Binary2D forced-position reports
};

BlockReadResult read_block(const BlockConfig& config, const LevelGrid& grid,
                           DecodePolicy policy = DecodePolicy::Strict);

struct GridStats {
    unsigned q = 0;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<size_t> level_histogram;
    size_t wordline_windows = 0;
    size_t wordline_violations = 0;
    size_t bitline_windows = 0;
    size_t bitline_violations = 0;
};

GridStats measure_stats(const LevelGrid& grid, Variant variant = Variant::Full);

// Writes seeded random payloads and counts forbidden level windows along the
// coded and the orthogonal axes. The coded axis is scanned against the window
// set its scheme guarantees (the relaxed set for Quaternary1D, the full set
// otherwise); the orthogonal axis against the full set, next to the rate an
// uncoded block would show in expectation.
struct ProtectionReport {
    unsigned blocks = 0;
    size_t coded_windows = 0;
    size_t coded_violations = 0;
    size_t orthogonal_windows = 0;
    size_t orthogonal_violations = 0;
    double coded_rate_per_million = 0.0;
    double orthogonal_rate_per_million = 0.0;
    double uncoded_expected_per_million = 0.0;
};

ProtectionReport indirect_protection_report(const BlockConfig& config, uint64_t seed,
                                            unsigned blocks);

// Container for a coded stream: a text header
//   RRPL 1 scheme=<token> q=<q> m=<m> dir=<direction> bits=<n> pad=<p>
// followed by the stream packed most-significant-bit-first. bits counts the
// valid stream bits; pad counts zero message bits appended before encoding.
struct PayloadContainer {
    Scheme scheme = Scheme::Binary1D;
    unsigned q = 8;
    unsigned m = 11;
    Direction direction = Direction::Wordline;
    size_t bits = 0;
    unsigned pad = 0;
    Bits stream;
};

void save_payload(const PayloadContainer& container, std::ostream& out);
PayloadContainer load_payload(std::istream& in);
void save_payload_file(const PayloadContainer& container, const std::string& path);
PayloadContainer load_payload_file(const std::string& path);

// File-stream coding for the 1D schemes: pads the message with zero bits to
// a whole number of blocks, encodes, and records the pad so decoding returns
// exactly the original bits. Quaternary streams pack each symbol as two bits.
PayloadContainer encode_payload(Scheme scheme, unsigned q, unsigned m, const Bits& message);
Bits decode_payload(const PayloadContainer& container,
                    DecodePolicy policy = DecodePolicy::Strict);

} // namespace rr

#include "rr/constraints.hpp"

#include "rr/errors.hpp"

namespace rr {

std::string to_string(Variant v) { return v == Variant::Full ? "full" : "relaxed"; }

Variant variant_from_string(const std::string& s) {
    if (s == "full") return Variant::Full;
    if (s == "relaxed") return Variant::Relaxed;
    throw ParseError("unknown variant: " + s);
}

namespace {

void check_q(Variant variant, unsigned q) {
    if (q < 4 || (q & (q - 1)) != 0) throw RangeError("q must be a power of 2, q >= 4");
    if (variant == Variant::Relaxed && q < 8) {
        throw RangeError("the relaxed set requires q >= 8");
    }
}

} // namespace

bool is_forbidden_level_triple(Variant variant, unsigned q, unsigned x, unsigned y,
                               unsigned z) {
    check_q(variant, q);
    if (x >= q || y >= q || z >= q) throw RangeError("level out of range");
    const unsigned half = q / 2;
    if (variant == Variant::Full) {
        return x >= half && z >= half && y < std::min(x, z);
    }
    const unsigned top = q - q / 4; // start of the highest quarter
    const bool x_top = x >= top, z_top = z >= top;
    const bool x_second = x >= half && x < top, z_second = z >= half && z < top;
    if (x_top && z_top && y < std::min(x, z)) return true;
    const bool mid_low = y < half;
    if (x_top && z_second && mid_low) return true;
    if (x_second && z_top && mid_low) return true;
    if (x_second && z_second && mid_low) return true;
    return false;
}

std::vector<std::array<unsigned, 3>> forbidden_level_triples(Variant variant, unsigned q) {
    check_q(variant, q);
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned x = 0; x < q; ++x) {
        for (unsigned y = 0; y < q; ++y) {
            for (unsigned z = 0; z < q; ++z) {
                if (is_forbidden_level_triple(variant, q, x, y, z)) out.push_back({x, y, z});
            }
        }
    }
    return out;
}

bool is_forbidden_bit_triple(int x, int y, int z) {
    (void)y;
    return x == 0 && z == 0;
}

bool is_forbidden_sym4_triple(Sym4 x, Sym4 y, Sym4 z) {
    if (x >= kSymAlpha && z >= kSymAlpha && y <= kSymOne) return true;
    return x == kSymAlphaSq && z == kSymAlphaSq && y >= kSymAlpha;
}

std::vector<std::array<Sym4, 3>> forbidden_sym4_triples() {
    std::vector<std::array<Sym4, 3>> out;
    for (Sym4 x = 0; x < 4; ++x) {
        for (Sym4 y = 0; y < 4; ++y) {
            for (Sym4 z = 0; z < 4; ++z) {
                if (is_forbidden_sym4_triple(x, y, z)) out.push_back({x, y, z});
            }
        }
    }
    return out;
}

namespace {

template <typename Seq, typename Pred>
std::vector<Violation> scan_impl(const Seq& seq, Pred&& forbidden) {
    std::vector<Violation> out;
    if (seq.size() < 3) return out;
    for (size_t i = 0; i + 2 < seq.size(); ++i) {
        if (forbidden(seq[i], seq[i + 1], seq[i + 2])) {
            out.push_back({Direction::Wordline,
                           0,
                           i,
                           {static_cast<unsigned>(seq[i]), static_cast<unsigned>(seq[i + 1]),
                            static_cast<unsigned>(seq[i + 2])}});
        }
    }
    return out;
}

} // namespace

std::vector<Violation> scan_levels(const std::vector<unsigned>& seq, Variant variant,
                                   unsigned q) {
    return scan_impl(seq, [&](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_level_triple(variant, q, a, b, c);
    });
}

std::vector<Violation> scan_bits(const std::vector<uint8_t>& seq) {
    return scan_impl(seq, [](uint8_t a, uint8_t b, uint8_t c) {
        return is_forbidden_bit_triple(a, b, c);
    });
}

std::vector<Violation> scan_syms(const std::vector<Sym4>& seq) {
    return scan_impl(seq, [](Sym4 a, Sym4 b, Sym4 c) {
        return is_forbidden_sym4_triple(a, b, c);
    });
}

std::vector<Violation> scan_grid(const LevelGrid& grid, Variant variant, bool wordlines,
                                 bool bitlines) {
    std::vector<Violation> out;
    auto test = [&](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_level_triple(variant, grid.q(), a, b, c);
    };
    if (wordlines) {
        for (size_t r = 0; r < grid.rows(); ++r) {
            for (size_t c = 0; c + 2 < grid.cols(); ++c) {
                if (test(grid.at(r, c), grid.at(r, c + 1), grid.at(r, c + 2))) {
                    out.push_back({Direction::Wordline,
                                   r,
                                   c,
                                   {grid.at(r, c), grid.at(r, c + 1), grid.at(r, c + 2)}});
                }
            }
        }
    }
    if (bitlines) {
        for (size_t c = 0; c < grid.cols(); ++c) {
            for (size_t r = 0; r + 2 < grid.rows(); ++r) {
                if (test(grid.at(r, c), grid.at(r + 1, c), grid.at(r + 2, c))) {
                    out.push_back({Direction::Bitline,
                                   r,
                                   c,
                                   {grid.at(r, c), grid.at(r + 1, c), grid.at(r + 2, c)}});
                }
            }
        }
    }
    return out;
}

std::vector<Violation> scan_plane(const PagePlane& plane, bool wordlines, bool bitlines) {
    std::vector<Violation> out;
    if (wordlines) {
        for (size_t r = 0; r < plane.rows(); ++r) {
            for (size_t c = 0; c + 2 < plane.cols(); ++c) {
                if (is_forbidden_bit_triple(plane.at(r, c), plane.at(r, c + 1),
                                            plane.at(r, c + 2))) {
                    out.push_back({Direction::Wordline,
                                   r,
                                   c,
                                   {plane.at(r, c), plane.at(r, c + 1), plane.at(r, c + 2)}});
                }
            }
        }
    }
    if (bitlines) {
        for (size_t c = 0; c < plane.cols(); ++c) {
            for (size_t r = 0; r + 2 < plane.rows(); ++r) {
                if (is_forbidden_bit_triple(plane.at(r, c), plane.at(r + 1, c),
                                            plane.at(r + 2, c))) {
                    out.push_back({Direction::Bitline,
                                   r,
                                   c,
                                   {plane.at(r, c), plane.at(r + 1, c), plane.at(r + 2, c)}});
                }
            }
        }
    }
    return out;
}

} // namespace rr

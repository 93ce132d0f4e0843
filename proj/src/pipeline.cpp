#include "rr/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "rr/codec_binary.hpp"
#include "rr/codec_quaternary.hpp"
#include "rr/errors.hpp"
#include "rr/gray_map.hpp"

namespace rr {

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Binary1D: return "bin1d";
        case Scheme::Binary1DComplement: return "bin1d-c";
        case Scheme::Quaternary1D: return "quat1d";
        case Scheme::Binary2D: return "bin2d";
        case Scheme::Uncoded: return "uncoded";
    }
    throw RangeError("unknown scheme");
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "bin1d") return Scheme::Binary1D;
    if (s == "bin1d-c") return Scheme::Binary1DComplement;
    if (s == "quat1d") return Scheme::Quaternary1D;
    if (s == "bin2d") return Scheme::Binary2D;
    if (s == "uncoded") return Scheme::Uncoded;
    throw ParseError("unknown scheme: " + s);
}

bool scheme_is_stream(Scheme scheme) {
    return scheme == Scheme::Binary1D || scheme == Scheme::Binary1DComplement ||
           scheme == Scheme::Quaternary1D;
}

namespace {

struct Layout {
    unsigned pages = 0;       // log2(q)
    unsigned coded_pages = 0; // topmost pages consumed by the codec
    size_t lanes = 0;
    size_t lane_len = 0;
    size_t blocks_per_lane = 0;
    size_t coded_bits = 0;    // message bits absorbed by the coded stream
    size_t raw_bits = 0;      // message bits stored verbatim in raw pages
};

Layout plan_layout(const BlockConfig& config) {
    const GrayMap gray(config.q);
    if (config.rows == 0 || config.cols == 0) throw RangeError("block must be non-empty");
    Layout layout;
    layout.pages = gray.pages();
    layout.lanes = config.direction == Direction::Wordline ? config.rows : config.cols;
    layout.lane_len = config.direction == Direction::Wordline ? config.cols : config.rows;
    const size_t cells = config.rows * config.cols;
    switch (config.scheme) {
        case Scheme::Binary1D:
        case Scheme::Binary1DComplement: {
            BinaryCodec codec(config.m, config.scheme == Scheme::Binary1DComplement);
            if (layout.lane_len % codec.block_bits() != 0) {
                throw RangeError("lane length must be a multiple of m + 2");
            }
            layout.coded_pages = 1;
            layout.blocks_per_lane = layout.lane_len / codec.block_bits();
            layout.coded_bits = layout.lanes * layout.blocks_per_lane * codec.message_bits();
            break;
        }
        case Scheme::Quaternary1D: {
            QuaternaryCodec codec(config.m);
            if (layout.lane_len % codec.block_syms() != 0) {
                throw RangeError("lane length must be a multiple of m + 2");
            }
            layout.coded_pages = 2;
            layout.blocks_per_lane = layout.lane_len / codec.block_syms();
            layout.coded_bits = layout.lanes * layout.blocks_per_lane * codec.bits_per_block();
            break;
        }
        case Scheme::Binary2D:
            layout.coded_pages = 1;
            layout.coded_bits = free_position_count(config.rows, config.cols);
            break;
        case Scheme::Uncoded:
            layout.coded_pages = 0;
            layout.coded_bits = 0;
            break;
    }
    if (layout.coded_pages > layout.pages) {
        throw RangeError("scheme needs more pages than q provides");
    }
    layout.raw_bits = static_cast<size_t>(layout.pages - layout.coded_pages) * cells;
    return layout;
}

// Lane accessors: lane `ln` runs along the write direction.
uint8_t lane_get(const PagePlane& plane, Direction dir, size_t ln, size_t pos) {
    return dir == Direction::Wordline ? plane.at(ln, pos) : plane.at(pos, ln);
}

void lane_set(PagePlane& plane, Direction dir, size_t ln, size_t pos, uint8_t bit) {
    if (dir == Direction::Wordline) {
        plane.set(ln, pos, bit);
    } else {
        plane.set(pos, ln, bit);
    }
}

PagePlane plane_from_bits(const Bits& payload, size_t& offset, size_t rows, size_t cols) {
    PagePlane plane(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) plane.set(r, c, payload[offset++]);
    }
    return plane;
}

void bits_from_plane(const PagePlane& plane, Bits& payload) {
    for (size_t r = 0; r < plane.rows(); ++r) {
        for (size_t c = 0; c < plane.cols(); ++c) payload.push_back(plane.at(r, c));
    }
}

} // namespace

size_t payload_capacity_bits(const BlockConfig& config) {
    const Layout layout = plan_layout(config);
    return layout.coded_bits + layout.raw_bits;
}

LevelGrid write_block(const BlockConfig& config, const Bits& payload) {
    const Layout layout = plan_layout(config);
    if (payload.size() != layout.coded_bits + layout.raw_bits) {
        throw RangeError("payload length must equal the block capacity");
    }
    const GrayMap gray(config.q);
    const unsigned pages = layout.pages;
    std::vector<PagePlane> planes; // planes[j] = logical page j, lowest first
    planes.reserve(pages);
    for (unsigned j = 0; j < pages; ++j) planes.emplace_back(config.rows, config.cols);

    size_t offset = 0;
    switch (config.scheme) {
        case Scheme::Binary1D:
        case Scheme::Binary1DComplement: {
            BinaryCodec codec(config.m, config.scheme == Scheme::Binary1DComplement);
            const size_t lane_msg = layout.blocks_per_lane * codec.message_bits();
            for (size_t ln = 0; ln < layout.lanes; ++ln) {
                const Bits chunk(payload.begin() + static_cast<ptrdiff_t>(offset),
                                 payload.begin() + static_cast<ptrdiff_t>(offset + lane_msg));
                offset += lane_msg;
                const Bits lane = codec.encode_stream(chunk);
                for (size_t pos = 0; pos < lane.size(); ++pos) {
                    lane_set(planes[pages - 1], config.direction, ln, pos, lane[pos]);
                }
            }
            break;
        }
        case Scheme::Quaternary1D: {
            QuaternaryCodec codec(config.m);
            const size_t lane_msg = layout.blocks_per_lane * codec.bits_per_block();
            for (size_t ln = 0; ln < layout.lanes; ++ln) {
                const Bits chunk(payload.begin() + static_cast<ptrdiff_t>(offset),
                                 payload.begin() + static_cast<ptrdiff_t>(offset + lane_msg));
                offset += lane_msg;
                const Syms lane = codec.encode_stream(chunk);
                for (size_t pos = 0; pos < lane.size(); ++pos) {
                    const auto [hi, lo] = sym4_to_pair(lane[pos]);
                    lane_set(planes[pages - 1], config.direction, ln, pos,
                             static_cast<uint8_t>(hi));
                    lane_set(planes[pages - 2], config.direction, ln, pos,
                             static_cast<uint8_t>(lo));
                }
            }
            break;
        }
        case Scheme::Binary2D: {
            const Bits chunk(payload.begin(),
                             payload.begin() + static_cast<ptrdiff_t>(layout.coded_bits));
            offset += layout.coded_bits;
            planes[pages - 1] = encode_plane(chunk, config.rows, config.cols);
            break;
        }
        case Scheme::Uncoded:
            break;
    }
    for (unsigned j = pages - layout.coded_pages; j-- > 0;) {
        planes[j] = plane_from_bits(payload, offset, config.rows, config.cols);
    }

    LevelGrid grid(config.q, config.rows, config.cols);
    for (unsigned j = 0; j < pages; ++j) {
        grid.insert_page(gray, (j + config.rotate) % pages, planes[j]);
    }
    return grid;
}

BlockReadResult read_block(const BlockConfig& config, const LevelGrid& grid,
                           DecodePolicy policy) {
    if (grid.q() != config.q || grid.rows() != config.rows || grid.cols() != config.cols) {
        throw RangeError("grid shape does not match the block configuration");
    }
    const Layout layout = plan_layout(config);
    const GrayMap gray(config.q);
    const unsigned pages = layout.pages;
    std::vector<PagePlane> planes;
    planes.reserve(pages);
    for (unsigned j = 0; j < pages; ++j) {
        planes.push_back(grid.extract_page(gray, (j + config.rotate) % pages));
    }

    BlockReadResult result;
    result.payload.reserve(layout.coded_bits + layout.raw_bits);
    switch (config.scheme) {
        case Scheme::Binary1D:
        case Scheme::Binary1DComplement: {
            BinaryCodec codec(config.m, config.scheme == Scheme::Binary1DComplement);
            for (size_t ln = 0; ln < layout.lanes; ++ln) {
                Bits lane(layout.lane_len);
                for (size_t pos = 0; pos < layout.lane_len; ++pos) {
                    lane[pos] = lane_get(planes[pages - 1], config.direction, ln, pos);
                }
                const Bits chunk = codec.decode_stream(lane, policy);
                result.payload.insert(result.payload.end(), chunk.begin(), chunk.end());
            }
            break;
        }
        case Scheme::Quaternary1D: {
            QuaternaryCodec codec(config.m);
            for (size_t ln = 0; ln < layout.lanes; ++ln) {
                Syms lane(layout.lane_len);
                for (size_t pos = 0; pos < layout.lane_len; ++pos) {
                    lane[pos] = pair_to_sym4(
                        lane_get(planes[pages - 1], config.direction, ln, pos),
                        lane_get(planes[pages - 2], config.direction, ln, pos));
                }
                const Bits chunk = codec.decode_stream(lane, policy);
                result.payload.insert(result.payload.end(), chunk.begin(), chunk.end());
            }
            break;
        }
        case Scheme::Binary2D: {
            PlaneDecodeResult decoded = decode_plane(planes[pages - 1]);
            result.payload.insert(result.payload.end(), decoded.message.begin(),
                                  decoded.message.end());
            result.integrity = std::move(decoded.integrity);
            break;
        }
        case Scheme::Uncoded:
            break;
    }
    for (unsigned j = pages - layout.coded_pages; j-- > 0;) {
        bits_from_plane(planes[j], result.payload);
    }
    return result;
}

GridStats measure_stats(const LevelGrid& grid, Variant variant) {
    GridStats stats;
    stats.q = grid.q();
    stats.rows = grid.rows();
    stats.cols = grid.cols();
    stats.level_histogram.assign(grid.q(), 0);
    for (size_t r = 0; r < grid.rows(); ++r) {
        for (size_t c = 0; c < grid.cols(); ++c) ++stats.level_histogram[grid.at(r, c)];
    }
    stats.wordline_windows = grid.cols() >= 2 ? grid.rows() * (grid.cols() - 2) : 0;
    stats.bitline_windows = grid.rows() >= 2 ? grid.cols() * (grid.rows() - 2) : 0;
    for (const Violation& v : scan_grid(grid, variant, true, true)) {
        if (v.direction == Direction::Wordline) {
            ++stats.wordline_violations;
        } else {
            ++stats.bitline_violations;
        }
    }
    return stats;
}

ProtectionReport indirect_protection_report(const BlockConfig& config, uint64_t seed,
                                            unsigned blocks) {
    ProtectionReport report;
    report.blocks = blocks;
    const Variant coded_variant =
        config.scheme == Scheme::Quaternary1D ? Variant::Relaxed : Variant::Full;
    const bool coded_wordline =
        config.scheme == Scheme::Binary2D ||
        (scheme_is_stream(config.scheme) && config.direction == Direction::Wordline);
    const bool coded_bitline =
        config.scheme == Scheme::Binary2D ||
        (scheme_is_stream(config.scheme) && config.direction == Direction::Bitline);
    const size_t capacity = payload_capacity_bits(config);
    BitRng rng(seed);
    for (unsigned b = 0; b < blocks; ++b) {
        const LevelGrid grid = write_block(config, rng.next_bits(capacity));
        const size_t ww = grid.cols() >= 2 ? grid.rows() * (grid.cols() - 2) : 0;
        const size_t bw = grid.rows() >= 2 ? grid.cols() * (grid.rows() - 2) : 0;
        report.coded_violations +=
            scan_grid(grid, coded_variant, coded_wordline, coded_bitline).size();
        report.orthogonal_violations +=
            scan_grid(grid, Variant::Full, !coded_wordline, !coded_bitline).size();
        report.coded_windows += (coded_wordline ? ww : 0) + (coded_bitline ? bw : 0);
        report.orthogonal_windows += (!coded_wordline ? ww : 0) + (!coded_bitline ? bw : 0);
    }
    if (report.coded_windows > 0) {
        report.coded_rate_per_million =
            1e6 * static_cast<double>(report.coded_violations) /
            static_cast<double>(report.coded_windows);
    }
    if (report.orthogonal_windows > 0) {
        report.orthogonal_rate_per_million =
            1e6 * static_cast<double>(report.orthogonal_violations) /
            static_cast<double>(report.orthogonal_windows);
    }
    const double q3 = static_cast<double>(config.q) * config.q * config.q;
    report.uncoded_expected_per_million =
        1e6 * static_cast<double>(forbidden_level_triples(Variant::Full, config.q).size()) /
        q3;
    return report;
}

void save_payload(const PayloadContainer& container, std::ostream& out) {
    out << "RRPL 1 scheme=" << to_string(container.scheme) << " q=" << container.q
        << " m=" << container.m << " dir=" << to_string(container.direction)
        << " bits=" << container.bits << " pad=" << container.pad << "\n";
    const std::vector<uint8_t> bytes = pack_bits(container.stream);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ParseError("failed to write payload container");
}

PayloadContainer load_payload(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("missing payload header");
    std::istringstream hs(header);
    std::string magic;
    int version = 0;
    hs >> magic >> version;
    if (magic != "RRPL" || version != 1) throw ParseError("bad payload magic or version");
    PayloadContainer container;
    bool have_scheme = false, have_q = false, have_m = false, have_dir = false,
         have_bits = false, have_pad = false;
    std::string token;
    while (hs >> token) {
        const size_t eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("malformed payload header field");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            if (key == "scheme") {
                container.scheme = scheme_from_string(value);
                have_scheme = true;
            } else if (key == "q") {
                container.q = static_cast<unsigned>(std::stoul(value));
                have_q = true;
            } else if (key == "m") {
                container.m = static_cast<unsigned>(std::stoul(value));
                have_m = true;
            } else if (key == "dir") {
                container.direction = direction_from_string(value);
                have_dir = true;
            } else if (key == "bits") {
                container.bits = std::stoull(value);
                have_bits = true;
            } else if (key == "pad") {
                container.pad = static_cast<unsigned>(std::stoul(value));
                have_pad = true;
            } else {
                throw ParseError("unknown payload header field: " + key);
            }
        } catch (const std::logic_error&) {
            throw ParseError("malformed payload header value: " + token);
        }
    }
    if (!(have_scheme && have_q && have_m && have_dir && have_bits && have_pad)) {
        throw ParseError("payload header is missing fields");
    }
    std::vector<uint8_t> bytes((container.bits + 7) / 8);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<size_t>(in.gcount()) != bytes.size()) {
        throw ParseError("payload container truncated");
    }
    container.stream = unpack_bits(bytes, container.bits);
    return container;
}

void save_payload_file(const PayloadContainer& container, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    save_payload(container, out);
}

PayloadContainer load_payload_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open for reading: " + path);
    return load_payload(in);
}

PayloadContainer encode_payload(Scheme scheme, unsigned q, unsigned m, const Bits& message) {
    if (!scheme_is_stream(scheme)) {
        throw RangeError("only the 1D schemes code file streams");
    }
    PayloadContainer container;
    container.scheme = scheme;
    container.q = q;
    container.m = m;
    if (scheme == Scheme::Quaternary1D) {
        QuaternaryCodec codec(m);
        Bits padded = message;
        const size_t chunk = codec.bits_per_block();
        container.pad = static_cast<unsigned>((chunk - padded.size() % chunk) % chunk);
        padded.resize(padded.size() + container.pad, 0);
        const Syms lane = codec.encode_stream(padded);
        container.stream.reserve(lane.size() * 2);
        for (Sym4 sym : lane) {
            container.stream.push_back(static_cast<uint8_t>(sym >> 1));
            container.stream.push_back(static_cast<uint8_t>(sym & 1));
        }
    } else {
        BinaryCodec codec(m, scheme == Scheme::Binary1DComplement);
        Bits padded = message;
        const size_t chunk = codec.message_bits();
        container.pad = static_cast<unsigned>((chunk - padded.size() % chunk) % chunk);
        padded.resize(padded.size() + container.pad, 0);
        container.stream = codec.encode_stream(padded);
    }
    container.bits = container.stream.size();
    return container;
}

Bits decode_payload(const PayloadContainer& container, DecodePolicy policy) {
    if (!scheme_is_stream(container.scheme)) {
        throw RangeError("only the 1D schemes code file streams");
    }
    Bits message;
    if (container.scheme == Scheme::Quaternary1D) {
        QuaternaryCodec codec(container.m);
        if (container.stream.size() % 2 != 0) {
            throw ParseError("quaternary stream must hold whole symbols");
        }
        Syms lane(container.stream.size() / 2);
        for (size_t i = 0; i < lane.size(); ++i) {
            lane[i] = static_cast<Sym4>((container.stream[2 * i] << 1) |
                                        container.stream[2 * i + 1]);
        }
        message = codec.decode_stream(lane, policy);
    } else {
        BinaryCodec codec(container.m, container.scheme == Scheme::Binary1DComplement);
        message = codec.decode_stream(container.stream, policy);
    }
    if (container.pad > message.size()) throw ParseError("pad exceeds the decoded length");
    message.resize(message.size() - container.pad);
    return message;
}

} // namespace rr

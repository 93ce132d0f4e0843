#include "doctest.h"

#include <cstdio>
#include <sstream>

#include "rr/cardinality.hpp"
#include "rr/errors.hpp"
#include "rr/pipeline.hpp"

using namespace rr;

namespace {

BlockConfig make_config(Scheme scheme, unsigned q = 8, size_t rows = 8, size_t cols = 8,
                        unsigned m = 6) {
    BlockConfig config;
    config.q = q;
    config.rows = rows;
    config.cols = cols;
    config.scheme = scheme;
    config.m = m;
    return config;
}

} // namespace

TEST_CASE("scheme tokens round-trip") {
    for (Scheme scheme : {Scheme::Binary1D, Scheme::Binary1DComplement, Scheme::Quaternary1D,
                          Scheme::Binary2D, Scheme::Uncoded}) {
        CHECK(scheme_from_string(to_string(scheme)) == scheme);
    }
    CHECK(to_string(Scheme::Binary1DComplement) == "bin1d-c");
    CHECK_THROWS_AS(scheme_from_string("3d"), ParseError);
    CHECK(scheme_is_stream(Scheme::Binary1D));
    CHECK(scheme_is_stream(Scheme::Binary1DComplement));
    CHECK(scheme_is_stream(Scheme::Quaternary1D));
    CHECK(!scheme_is_stream(Scheme::Binary2D));
    CHECK(!scheme_is_stream(Scheme::Uncoded));
}

TEST_CASE("payload capacity counts coded and raw pages") {
    CardinalityTable table(8);
    // 8x8 grid at q=8: three pages of 64 bits; wordline lanes are 8 cells, one
    // length-6 block each.
    const size_t s2 = table.binary_message_bits(6);
    CHECK(payload_capacity_bits(make_config(Scheme::Binary1D)) == 8 * s2 + 2 * 64);
    const size_t s4 = table.quaternary_message_bits(6);
    CHECK(payload_capacity_bits(make_config(Scheme::Quaternary1D)) == 8 * (s4 + 2) + 64);
    CHECK(payload_capacity_bits(make_config(Scheme::Binary2D)) == 32 + 2 * 64);
    CHECK(payload_capacity_bits(make_config(Scheme::Uncoded)) == 3 * 64);
}

TEST_CASE("blocks round-trip under every scheme, direction, and rotation") {
    BitRng rng(41);
    for (Scheme scheme : {Scheme::Binary1D, Scheme::Binary1DComplement, Scheme::Quaternary1D,
                          Scheme::Binary2D, Scheme::Uncoded}) {
        for (Direction direction : {Direction::Wordline, Direction::Bitline}) {
            for (unsigned rotate : {0u, 1u, 2u}) {
                BlockConfig config = make_config(scheme);
                config.direction = direction;
                config.rotate = rotate;
                const Bits payload = rng.next_bits(payload_capacity_bits(config));
                const LevelGrid grid = write_block(config, payload);
                const BlockReadResult back = read_block(config, grid);
                CHECK(back.payload == payload);
                CHECK(back.integrity.empty());
            }
        }
    }
}

TEST_CASE("blocks round-trip at other level counts") {
    BitRng rng(43);
    for (unsigned q : {4u, 16u}) {
        for (Scheme scheme : {Scheme::Binary1D, Scheme::Binary2D, Scheme::Uncoded}) {
            BlockConfig config = make_config(scheme, q);
            const Bits payload = rng.next_bits(payload_capacity_bits(config));
            const BlockReadResult back = read_block(config, write_block(config, payload));
            CHECK(back.payload == payload);
        }
    }
    BlockConfig config = make_config(Scheme::Quaternary1D, 16);
    const Bits payload = rng.next_bits(payload_capacity_bits(config));
    CHECK(read_block(config, write_block(config, payload)).payload == payload);
}

TEST_CASE("coded direction of a written block has no forbidden windows") {
    BitRng rng(47);
    BlockConfig config = make_config(Scheme::Binary1D, 8, 8, 16, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const Bits payload = rng.next_bits(payload_capacity_bits(config));
        const LevelGrid grid = write_block(config, payload);
        CHECK(scan_grid(grid, Variant::Full, true, false).empty());
    }

    BlockConfig quat = make_config(Scheme::Quaternary1D, 8, 8, 16, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const Bits payload = rng.next_bits(payload_capacity_bits(quat));
        const LevelGrid grid = write_block(quat, payload);
        CHECK(scan_grid(grid, Variant::Relaxed, true, false).empty());
    }

    BlockConfig planar = make_config(Scheme::Binary2D, 8, 8, 16);
    for (int trial = 0; trial < 10; ++trial) {
        const Bits payload = rng.next_bits(payload_capacity_bits(planar));
        const LevelGrid grid = write_block(planar, payload);
        CHECK(scan_grid(grid, Variant::Full, true, true).empty());
    }
}

TEST_CASE("the coded page decodes regardless of the raw pages") {
    BitRng rng(53);
    BlockConfig config = make_config(Scheme::Binary1D);
    const Bits payload = rng.next_bits(payload_capacity_bits(config));
    LevelGrid grid = write_block(config, payload);

    // Stomp the two raw pages; the lane stream on the coded page must survive.
    GrayMap map(8);
    const PagePlane zeros(grid.rows(), grid.cols(), 0);
    grid.insert_page(map, 0, zeros);
    grid.insert_page(map, 1, zeros);

    const BlockReadResult back = read_block(config, grid);
    CardinalityTable table(8);
    const size_t coded_bits = 8 * table.binary_message_bits(6);
    for (size_t i = 0; i < coded_bits; ++i) {
        CHECK(back.payload[i] == payload[i]);
    }
}

TEST_CASE("rotation moves the coded page to a different physical page") {
    BitRng rng(59);
    BlockConfig config = make_config(Scheme::Binary1D);
    const Bits payload = rng.next_bits(payload_capacity_bits(config));
    config.rotate = 1;
    const LevelGrid grid = write_block(config, payload);

    BlockConfig wrong = config;
    wrong.rotate = 0;
    bool differs = false;
    try {
        differs = read_block(wrong, grid).payload != payload;
    } catch (const Error&) {
        differs = true; // misaligned read may also fail framing outright
    }
    CHECK(differs);
    CHECK(read_block(config, grid).payload == payload);
}

TEST_CASE("payload sizes are validated exactly") {
    BlockConfig config = make_config(Scheme::Binary1D);
    const size_t capacity = payload_capacity_bits(config);
    CHECK_THROWS_AS(write_block(config, Bits(capacity - 1, 0)), RangeError);
    CHECK_THROWS_AS(write_block(config, Bits(capacity + 1, 0)), RangeError);
}

TEST_CASE("lane lengths must divide into whole blocks") {
    BlockConfig config = make_config(Scheme::Binary1D, 8, 8, 9, 6);
    CHECK_THROWS_AS(payload_capacity_bits(config), RangeError);
    config.cols = 8;
    config.rows = 9;
    config.direction = Direction::Bitline;
    CHECK_THROWS_AS(payload_capacity_bits(config), RangeError);
}

TEST_CASE("grid dimensions must match the block configuration") {
    BlockConfig config = make_config(Scheme::Uncoded);
    const Bits payload = BitRng(61).next_bits(payload_capacity_bits(config));
    const LevelGrid grid = write_block(config, payload);
    BlockConfig other = config;
    other.cols = 16;
    CHECK_THROWS_AS(read_block(other, grid), RangeError);
}

TEST_CASE("block statistics count levels and windows") {
    LevelGrid grid(8, 3, 4);
    grid.set(0, 0, 7);
    grid.set(0, 1, 0);
    grid.set(0, 2, 7); // forbidden wordline window at (0,0)
    const GridStats stats = measure_stats(grid);
    CHECK(stats.q == 8);
    CHECK(stats.level_histogram[0] == 10);
    CHECK(stats.level_histogram[7] == 2);
    CHECK(stats.wordline_windows == 3 * 2);
    CHECK(stats.bitline_windows == 4 * 1);
    CHECK(stats.wordline_violations == 1);
    CHECK(stats.bitline_violations == 0);
}

TEST_CASE("indirect protection keeps the coded axis clean") {
    BlockConfig config = make_config(Scheme::Binary1D, 8, 8, 16, 6);
    const ProtectionReport report = indirect_protection_report(config, 7, 20);
    CHECK(report.blocks == 20);
    CHECK(report.coded_violations == 0);
    CHECK(report.coded_windows == 20 * 8 * 14);
    CHECK(report.orthogonal_windows == 20 * 16 * 6);
    CHECK(report.coded_rate_per_million == 0.0);
    CHECK(report.uncoded_expected_per_million ==
          doctest::Approx(78.0 / 512.0 * 1e6).epsilon(1e-12));

    const ProtectionReport uncoded =
        indirect_protection_report(make_config(Scheme::Uncoded), 7, 5);
    CHECK(uncoded.coded_windows == 0);
}

TEST_CASE("payload containers round-trip through streams and files") {
    BitRng rng(67);
    const Bits message = rng.next_bits(137);
    const PayloadContainer container = encode_payload(Scheme::Quaternary1D, 8, 5, message);
    CHECK(container.q == 8);
    CHECK(container.m == 5);
    CHECK(container.bits == container.stream.size());

    std::stringstream stream;
    save_payload(container, stream);
    const PayloadContainer loaded = load_payload(stream);
    CHECK(loaded.scheme == container.scheme);
    CHECK(loaded.q == container.q);
    CHECK(loaded.m == container.m);
    CHECK(loaded.direction == container.direction);
    CHECK(loaded.bits == container.bits);
    CHECK(loaded.pad == container.pad);
    CHECK(loaded.stream == container.stream);
    CHECK(decode_payload(loaded) == message);

    const std::string path = "test_pipeline_payload.rrpl";
    save_payload_file(container, path);
    CHECK(decode_payload(load_payload_file(path)) == message);
    std::remove(path.c_str());
}

TEST_CASE("every stream scheme pads and strips odd message sizes") {
    BitRng rng(71);
    for (Scheme scheme : {Scheme::Binary1D, Scheme::Binary1DComplement, Scheme::Quaternary1D}) {
        for (size_t size : {1u, 63u, 64u, 257u}) {
            const Bits message = rng.next_bits(size);
            const PayloadContainer container = encode_payload(scheme, 8, 7, message);
            CHECK(decode_payload(container) == message);
        }
    }
}

TEST_CASE("non-stream schemes cannot encode payload files") {
    CHECK_THROWS_AS(encode_payload(Scheme::Binary2D, 8, 6, Bits(8, 0)), RangeError);
    CHECK_THROWS_AS(encode_payload(Scheme::Uncoded, 8, 6, Bits(8, 0)), RangeError);
}

TEST_CASE("payload loading rejects malformed headers") {
    {
        std::stringstream s("RRXX 1 scheme=bin1d q=8 m=6 dir=wordline bits=0 pad=0\n");
        CHECK_THROWS_AS(load_payload(s), ParseError);
    }
    {
        std::stringstream s("RRPL 1 scheme=bin1d q=8 m=6 dir=wordline bits=0\n");
        CHECK_THROWS_AS(load_payload(s), ParseError); // missing pad
    }
    {
        std::stringstream s("RRPL 1 scheme=bin1d q=8 m=6 dir=wordline bits=abc pad=0\n");
        CHECK_THROWS_AS(load_payload(s), ParseError);
    }
    {
        // Header promises more stream bytes than the file holds.
        std::stringstream s("RRPL 1 scheme=bin1d q=8 m=6 dir=wordline bits=64 pad=0\nxx");
        CHECK_THROWS_AS(load_payload(s), ParseError);
    }
}

TEST_CASE("a corrupted stream fails strict decoding but not lenient") {
    BitRng rng(73);
    const Bits message = rng.next_bits(40);
    PayloadContainer container = encode_payload(Scheme::Binary1D, 8, 6, message);
    // Clear a bridge bit: bit 6 of the first 8-bit block.
    container.stream[6] ^= 1;
    CHECK_THROWS_AS(decode_payload(container), FramingError);
    const Bits lenient = decode_payload(container, DecodePolicy::Lenient);
    CHECK(lenient.size() == message.size());
}

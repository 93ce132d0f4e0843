#include "rr/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "rr/capacity.hpp"
#include "rr/cardinality.hpp"
#include "rr/codec_binary.hpp"
#include "rr/codec_quaternary.hpp"
#include "rr/constraints.hpp"
#include "rr/errors.hpp"
#include "rr/gray_map.hpp"
#include "rr/oracle.hpp"
#include "rr/pipeline.hpp"

namespace rr::cli {

namespace {

void require_q(unsigned q) {
    if (q < 4 || (q & (q - 1)) != 0) {
        throw CLI::ValidationError("--q must be a power of two, at least 4");
    }
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open for reading: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {data.begin(), data.end()};
}

void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ParseError("failed to write: " + path);
}

std::string fixed6(double v) { return format_fixed(v, 6); }

int run_verify(bool deep, std::ostream& out) {
    struct Check {
        std::string name;
        std::function<bool()> fn;
    };
    std::vector<Check> checks;

    checks.push_back({"binary word counts match enumeration", [&] {
        CardinalityTable table(16);
        const unsigned top = deep ? 12 : 9;
        for (unsigned m = 1; m <= top; ++m) {
            if (table.binary(static_cast<int>(m)) != oracle::count_binary_words(m)) return false;
            if (BigInt(oracle::enumerate_binary(m).size()) !=
                table.binary(static_cast<int>(m))) {
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"quaternary word counts match enumeration", [&] {
        CardinalityTable table(16);
        const unsigned top = deep ? 9 : 6;
        for (unsigned m = 1; m <= top; ++m) {
            if (table.quaternary(static_cast<int>(m)) != oracle::count_quaternary_words(m)) {
                return false;
            }
            if (BigInt(oracle::enumerate_quaternary(m).size()) !=
                table.quaternary(static_cast<int>(m))) {
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"binary ranks are lexicographic", [&] {
        const unsigned top = deep ? 12 : 8;
        for (unsigned m = 4; m <= top; ++m) {
            BinaryCodec codec(m);
            const auto words = oracle::enumerate_binary(m);
            for (size_t i = 0; i < words.size(); ++i) {
                if (codec.index_of(words[i]) != BigInt(i)) return false;
                if (codec.codeword_of(BigInt(i)) != words[i]) return false;
            }
        }
        return true;
    }});

    checks.push_back({"complement ranks reverse the order", [&] {
        for (unsigned m = 2; m <= 8; ++m) {
            BinaryCodec straight(m), flipped(m, true);
            const BigInt last = straight.codebook_size() - 1;
            const auto words = oracle::enumerate_binary(m);
            for (const auto& w : words) {
                Bits c = w;
                for (auto& b : c) b ^= 1;
                if (flipped.index_of(c) != last - straight.index_of(w)) return false;
            }
        }
        return true;
    }});

    checks.push_back({"quaternary ranks are lexicographic", [&] {
        const unsigned top = deep ? 8 : 5;
        for (unsigned m = 3; m <= top; ++m) {
            QuaternaryCodec codec(m);
            const auto words = oracle::enumerate_quaternary(m);
            for (size_t i = 0; i < words.size(); ++i) {
                if (codec.index_of(words[i]) != BigInt(i)) return false;
                if (codec.codeword_of(BigInt(i)) != words[i]) return false;
            }
        }
        return true;
    }});

    checks.push_back({"level map flips one bit per step", [&] {
        for (unsigned q : {4u, 8u, 16u, 32u}) {
            GrayMap gray(q);
            for (unsigned n = 0; n < q; ++n) {
                const unsigned expected = ~(n ^ (n >> 1)) & (q - 1);
                if (gray.level_to_bits(n) != expected) return false;
                if (n > 0) {
                    const unsigned diff = gray.level_to_bits(n) ^ gray.level_to_bits(n - 1);
                    if ((diff & (diff - 1)) != 0 || diff == 0) return false;
                }
            }
        }
        return true;
    }});

    checks.push_back({"forbidden window counts", [&] {
        if (forbidden_level_triples(Variant::Full, 4).size() != 9) return false;
        if (forbidden_level_triples(Variant::Full, 8).size() != 78) return false;
        if (forbidden_level_triples(Variant::Relaxed, 8).size() != 73) return false;
        return true;
    }});

    checks.push_back({"coded pages shield level windows", [&] {
        for (unsigned q : deep ? std::vector<unsigned>{4, 8, 16}
                                : std::vector<unsigned>{4, 8}) {
            GrayMap gray(q);
            for (unsigned x = 0; x < q; ++x) {
                for (unsigned y = 0; y < q; ++y) {
                    for (unsigned z = 0; z < q; ++z) {
                        if (is_forbidden_level_triple(Variant::Full, q, x, y, z) &&
                            !is_forbidden_bit_triple(gray.leftmost_bit(x),
                                                     gray.leftmost_bit(y),
                                                     gray.leftmost_bit(z))) {
                            return false;
                        }
                        if (q >= 8 &&
                            is_forbidden_level_triple(Variant::Relaxed, q, x, y, z) &&
                            !is_forbidden_sym4_triple(sym4_of_level(x, q),
                                                      sym4_of_level(y, q),
                                                      sym4_of_level(z, q))) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }});

    checks.push_back({"aggregated spectra match pair states", [&] {
        for (unsigned q : deep ? std::vector<unsigned>{4, 8, 16}
                                : std::vector<unsigned>{4, 8}) {
            const double fast = spectral_radius(level_adjacency(q));
            const double slow =
                spectral_radius(oracle::pair_state_matrix_levels(Variant::Full, q));
            if (std::fabs(fast - slow) > 1e-9) return false;
        }
        const double fast = spectral_radius(symbol_adjacency());
        const double slow = spectral_radius(oracle::pair_state_matrix_quaternary());
        return std::fabs(fast - slow) <= 1e-9;
    }});

    checks.push_back({"symbol matrix polynomial", [&] {
        const std::vector<BigInt> expected{1, -3, 2, -9, -7, -6, -4};
        if (characteristic_polynomial(symbol_adjacency()) != expected) return false;
        const double lambda = spectral_radius(symbol_adjacency());
        std::vector<double> coeffs(expected.size());
        for (size_t i = 0; i < expected.size(); ++i) {
            coeffs[i] = static_cast<double>(expected[i]);
        }
        return std::fabs(eval_polynomial(coeffs, lambda)) < 1e-8;
    }});

    checks.push_back({"stream roundtrips stay admissible", [&] {
        BitRng rng(7);
        for (bool complemented : {false, true}) {
            BinaryCodec codec(11, complemented);
            const Bits message = rng.next_bits(codec.message_bits() * 12);
            const Bits lane = codec.encode_stream(message);
            if (codec.decode_stream(lane) != message) return false;
            Bits view = lane;
            if (complemented) {
                for (auto& b : view) b ^= 1;
            }
            if (!scan_bits(view).empty()) return false;
        }
        QuaternaryCodec codec(6);
        const Bits message = rng.next_bits(codec.bits_per_block() * 12);
        const Syms lane = codec.encode_stream(message);
        if (codec.decode_stream(lane) != message) return false;
        return scan_syms(lane).empty();
    }});

    checks.push_back({"blocks roundtrip under every scheme", [&] {
        BitRng rng(11);
        for (Scheme scheme : {Scheme::Binary1D, Scheme::Binary1DComplement,
                              Scheme::Quaternary1D, Scheme::Binary2D, Scheme::Uncoded}) {
            for (Direction dir : {Direction::Wordline, Direction::Bitline}) {
                BlockConfig config;
                config.q = 8;
                config.rows = 8;
                config.cols = 8;
                config.scheme = scheme;
                config.direction = dir;
                config.m = 6;
                const Bits payload = rng.next_bits(payload_capacity_bits(config));
                const LevelGrid grid = write_block(config, payload);
                const BlockReadResult back = read_block(config, grid);
                if (back.payload != payload || !back.integrity.empty()) return false;
            }
        }
        return true;
    }});

    bool all = true;
    for (const Check& check : checks) {
        bool ok = false;
        try {
            ok = check.fn();
        } catch (const std::exception&) {
            ok = false;
        }
        out << (ok ? "ok   " : "FAIL ") << check.name << "\n";
        all = all && ok;
    }
    out << (all ? "all checks passed" : "checks failed") << "\n";
    return all ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"read-and-run constrained coding for multi-level memory"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string scheme_token = "bin1d";
    std::string dir_token = "wordline";
    std::string policy_token = "strict";
    std::string variant_token = "full";
    std::string in_path, out_path, grid_path;
    unsigned q = 8, m = 11, rotate = 0, alphabet = 2, max_m = 64;
    int which = 1;
    size_t rows = 0, cols = 0;
    double rate_target = 0.0;
    bool random_payload = false, deep = false;
    uint64_t seed = 1;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output style: text or records")
            ->check(CLI::IsMember({"text", "records"}));
    };

    CLI::App* cmd_encode = app.add_subcommand("encode", "code a file into a payload stream");
    cmd_encode->add_option("--scheme", scheme_token, "bin1d, bin1d-c or quat1d")
        ->check(CLI::IsMember({"bin1d", "bin1d-c", "quat1d"}));
    cmd_encode->add_option("--q", q, "number of cell levels")->required();
    cmd_encode->add_option("--m", m, "codeword length")->required();
    cmd_encode->add_option("--in", in_path, "raw input file")->required();
    cmd_encode->add_option("--out", out_path, "payload container to write")->required();
    add_format(cmd_encode);

    CLI::App* cmd_decode = app.add_subcommand("decode", "recover a file from a payload stream");
    cmd_decode->add_option("--in", in_path, "payload container to read")->required();
    cmd_decode->add_option("--out", out_path, "raw output file")->required();
    cmd_decode->add_option("--policy", policy_token, "strict or lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));
    add_format(cmd_decode);

    CLI::App* cmd_block_write =
        app.add_subcommand("block-write", "code a payload into a level grid");
    cmd_block_write->add_option("--scheme", scheme_token, "block coding scheme")
        ->check(CLI::IsMember({"bin1d", "bin1d-c", "quat1d", "bin2d", "uncoded"}));
    cmd_block_write->add_option("--q", q, "number of cell levels")->required();
    cmd_block_write->add_option("--rows", rows, "wordlines per block")->required();
    cmd_block_write->add_option("--cols", cols, "cells per wordline")->required();
    cmd_block_write->add_option("--m", m, "codeword length for the 1D schemes");
    cmd_block_write->add_option("--dir", dir_token, "write direction")
        ->check(CLI::IsMember({"wordline", "bitline"}));
    cmd_block_write->add_option("--rotate", rotate, "cyclic page permutation");
    cmd_block_write->add_option("--in", in_path, "raw payload file");
    cmd_block_write->add_flag("--random", random_payload, "fill with seeded random payload");
    cmd_block_write->add_option("--seed", seed, "random payload seed");
    cmd_block_write->add_option("--out", out_path, "grid file to write")->required();
    add_format(cmd_block_write);

    CLI::App* cmd_block_read =
        app.add_subcommand("block-read", "recover the payload from a level grid");
    cmd_block_read->add_option("--grid", grid_path, "grid file to read")->required();
    cmd_block_read->add_option("--scheme", scheme_token, "block coding scheme")
        ->check(CLI::IsMember({"bin1d", "bin1d-c", "quat1d", "bin2d", "uncoded"}));
    cmd_block_read->add_option("--m", m, "codeword length for the 1D schemes");
    cmd_block_read->add_option("--dir", dir_token, "write direction")
        ->check(CLI::IsMember({"wordline", "bitline"}));
    cmd_block_read->add_option("--rotate", rotate, "cyclic page permutation");
    cmd_block_read->add_option("--policy", policy_token, "strict or lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));
    cmd_block_read->add_option("--out", out_path, "raw payload file to write")->required();
    add_format(cmd_block_read);

    CLI::App* cmd_capacity = app.add_subcommand("capacity", "asymptotic per-cell capacities");
    cmd_capacity->add_option("--q", q, "number of cell levels")->required();
    add_format(cmd_capacity);

    CLI::App* cmd_table = app.add_subcommand("table", "reference tables");
    cmd_table->add_option("--which", which, "1 = capacities, 2 = fixed lengths, 3 = targets")
        ->required()
        ->check(CLI::Range(1, 3));

    CLI::App* cmd_metrics = app.add_subcommand("metrics", "rate and cost at one length");
    cmd_metrics->add_option("--scheme", scheme_token, "bin1d, quat1d or bin2d")
        ->required()
        ->check(CLI::IsMember({"bin1d", "quat1d", "bin2d"}));
    cmd_metrics->add_option("--q", q, "number of cell levels")->required();
    cmd_metrics->add_option("--m", m, "codeword length for the 1D schemes");
    add_format(cmd_metrics);

    CLI::App* cmd_minlen = app.add_subcommand("minlen", "shortest length reaching a rate");
    cmd_minlen->add_option("--scheme", scheme_token, "bin1d or quat1d")
        ->required()
        ->check(CLI::IsMember({"bin1d", "quat1d"}));
    cmd_minlen->add_option("--q", q, "number of cell levels")->required();
    cmd_minlen->add_option("--rate", rate_target, "normalized rate target")->required();
    add_format(cmd_minlen);

    CLI::App* cmd_probs = app.add_subcommand("probs", "stationary level probabilities");
    cmd_probs->add_option("--scheme", scheme_token, "bin1d, quat1d or uncoded")
        ->required()
        ->check(CLI::IsMember({"bin1d", "quat1d", "uncoded"}));
    cmd_probs->add_option("--q", q, "number of cell levels")->required();
    add_format(cmd_probs);

    CLI::App* cmd_stats = app.add_subcommand("stats", "histogram and window scan of a grid");
    cmd_stats->add_option("--grid", grid_path, "grid file to read")->required();
    cmd_stats->add_option("--variant", variant_token, "window set: full or relaxed")
        ->check(CLI::IsMember({"full", "relaxed"}));
    add_format(cmd_stats);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the built-in cross-checks");
    cmd_verify->add_flag("--deep", deep, "widen the checked ranges");

    CLI::App* cmd_graymap = app.add_subcommand("graymap", "level-to-page-bits table");
    cmd_graymap->add_option("--q", q, "number of cell levels")->required();
    add_format(cmd_graymap);

    CLI::App* cmd_cardinality =
        app.add_subcommand("cardinality", "admissible word counts by length");
    cmd_cardinality->add_option("--alphabet", alphabet, "2 or 4");
    cmd_cardinality->add_option("--max", max_m, "largest length to print")->required();

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("rr");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        const bool records = format == "records";

        if (cmd_encode->parsed()) {
            require_q(q);
            const Scheme scheme = scheme_from_string(scheme_token);
            const std::vector<uint8_t> bytes = read_file_bytes(in_path);
            const Bits message = unpack_bits(bytes, bytes.size() * 8);
            const PayloadContainer container = encode_payload(scheme, q, m, message);
            save_payload_file(container, out_path);
            if (records) {
                out << "scheme=" << scheme_token << " q=" << q << " m=" << m
                    << " message_bits=" << message.size() << " pad=" << container.pad
                    << " stream_bits=" << container.bits << "\n";
            } else {
                out << "coded " << message.size() << " message bits (pad " << container.pad
                    << ") into " << container.bits << " stream bits\n";
            }
            return 0;
        }

        if (cmd_decode->parsed()) {
            const DecodePolicy policy = decode_policy_from_string(policy_token);
            const PayloadContainer container = load_payload_file(in_path);
            const Bits message = decode_payload(container, policy);
            write_file_bytes(out_path, pack_bits(message));
            if (records) {
                out << "scheme=" << to_string(container.scheme) << " q=" << container.q
                    << " m=" << container.m << " message_bits=" << message.size() << "\n";
            } else {
                out << "recovered " << message.size() << " message bits\n";
            }
            return 0;
        }

        if (cmd_block_write->parsed()) {
            require_q(q);
            BlockConfig config;
            config.q = q;
            config.rows = rows;
            config.cols = cols;
            config.scheme = scheme_from_string(scheme_token);
            config.direction = direction_from_string(dir_token);
            config.m = m;
            config.rotate = rotate;
            const size_t capacity = payload_capacity_bits(config);
            Bits payload;
            unsigned pad = 0;
            if (random_payload) {
                payload = BitRng(seed).next_bits(capacity);
                out << "seed=" << seed << "\n";
            } else {
                if (in_path.empty()) {
                    throw CLI::ValidationError("block-write needs --in or --random");
                }
                const std::vector<uint8_t> bytes = read_file_bytes(in_path);
                if (bytes.size() * 8 > capacity) {
                    throw RangeError("payload exceeds the block capacity");
                }
                payload = unpack_bits(bytes, bytes.size() * 8);
                pad = static_cast<unsigned>(capacity - payload.size());
                payload.resize(capacity, 0);
            }
            save_grid_file(write_block(config, payload), out_path);
            if (records) {
                out << "scheme=" << scheme_token << " q=" << q << " rows=" << rows
                    << " cols=" << cols << " capacity=" << capacity << " pad=" << pad << "\n";
            } else {
                out << "wrote " << capacity << " payload bits (pad " << pad << ") into a "
                    << rows << "x" << cols << " block\n";
            }
            return 0;
        }

        if (cmd_block_read->parsed()) {
            const LevelGrid grid = load_grid_file(grid_path);
            BlockConfig config;
            config.q = grid.q();
            config.rows = grid.rows();
            config.cols = grid.cols();
            config.scheme = scheme_from_string(scheme_token);
            config.direction = direction_from_string(dir_token);
            config.m = m;
            config.rotate = rotate;
            const DecodePolicy policy = decode_policy_from_string(policy_token);
            const BlockReadResult result = read_block(config, grid, policy);
            write_file_bytes(out_path, pack_bits(result.payload));
            if (records) {
                out << "scheme=" << scheme_token << " q=" << config.q
                    << " payload_bits=" << result.payload.size()
                    << " integrity=" << result.integrity.size() << "\n";
            } else {
                out << "read " << result.payload.size() << " payload bits, "
                    << result.integrity.size() << " integrity reports\n";
            }
            for (const IntegrityReport& report : result.integrity) {
                out << (records ? "integrity_row=" : "integrity at row=") << report.row
                    << " col=" << report.col << "\n";
            }
            return 0;
        }

        if (cmd_capacity->parsed()) {
            require_q(q);
            const CapacityRecord record = capacities(q);
            if (records) {
                out << "q=" << q << " levels=" << fixed6(record.levels)
                    << " binary_2d=" << fixed6(record.binary_2d)
                    << " binary_1d=" << fixed6(record.binary_1d)
                    << " quaternary_1d=" << fixed6(record.quaternary_1d)
                    << " gap_percent=" << fixed6(record.gap_percent) << "\n";
            } else {
                out << "q=" << q << "\n";
                out << "levels         " << fixed6(record.levels) << "\n";
                out << "binary-2d      " << fixed6(record.binary_2d) << "\n";
                out << "binary-1d      " << fixed6(record.binary_1d) << "\n";
                out << "quaternary-1d  " << fixed6(record.quaternary_1d) << "\n";
                out << "gap            " << fixed6(record.gap_percent) << "%\n";
            }
            return 0;
        }

        if (cmd_table->parsed()) {
            out << render_table(which);
            return 0;
        }

        if (cmd_metrics->parsed()) {
            require_q(q);
            if (scheme_token == "bin2d") {
                if (records) {
                    out << "scheme=bin2d q=" << q << " rate=" << fixed6(rate_2d(q))
                        << " efficiency=" << fixed6(efficiency_2d()) << "\n";
                } else {
                    out << "scheme bin2d q=" << q << "\n";
                    out << "rate        " << fixed6(rate_2d(q)) << "\n";
                    out << "efficiency  " << fixed6(efficiency_2d()) << "\n";
                }
                return 0;
            }
            const bool quaternary = scheme_token == "quat1d";
            CardinalityTable table(m);
            const unsigned s =
                quaternary ? table.quaternary_message_bits(m) : table.binary_message_bits(m);
            const double rate =
                quaternary ? rate_quaternary_1d(q, m) : rate_binary_1d(q, m);
            const double eff = quaternary ? efficiency_quaternary_1d(q, m)
                                          : efficiency_binary_1d(q, m);
            if (records) {
                out << "scheme=" << scheme_token << " q=" << q << " m=" << m << " s=" << s
                    << " rate=" << fixed6(rate) << " efficiency=" << fixed6(eff)
                    << " latency=" << fixed6(write_latency(q, m)) << "\n";
            } else {
                out << "scheme " << scheme_token << " q=" << q << " m=" << m << "\n";
                out << "rate        " << fixed6(rate) << "\n";
                out << "s           " << s << "\n";
                out << "efficiency  " << fixed6(eff) << "\n";
                out << "latency     " << fixed6(write_latency(q, m)) << "\n";
            }
            return 0;
        }

        if (cmd_minlen->parsed()) {
            require_q(q);
            const MinLengthResult result = scheme_token == "quat1d"
                                               ? min_quaternary_length_for_rate(q, rate_target)
                                               : min_binary_length_for_rate(q, rate_target);
            if (!result.achievable) {
                if (records) {
                    out << "scheme=" << scheme_token << " q=" << q
                        << " rate_target=" << fixed6(rate_target) << " achievable=0\n";
                } else {
                    out << "rate " << fixed6(rate_target) << " is not achievable for "
                        << scheme_token << " at q=" << q << "\n";
                }
                return 0;
            }
            if (records) {
                out << "scheme=" << scheme_token << " q=" << q
                    << " rate_target=" << fixed6(rate_target) << " achievable=1 m=" << result.m
                    << " s=" << result.message_bits << " rate=" << fixed6(result.rate)
                    << " efficiency=" << fixed6(result.efficiency)
                    << " latency=" << fixed6(result.latency) << "\n";
            } else {
                out << "scheme " << scheme_token << " q=" << q << " target "
                    << fixed6(rate_target) << "\n";
                out << "m           " << result.m << "\n";
                out << "s           " << result.message_bits << "\n";
                out << "rate        " << fixed6(result.rate) << "\n";
                out << "efficiency  " << fixed6(result.efficiency) << "\n";
                out << "latency     " << fixed6(result.latency) << "\n";
            }
            return 0;
        }

        if (cmd_probs->parsed()) {
            require_q(q);
            std::vector<double> probs;
            if (scheme_token == "bin1d") {
                probs = level_probabilities_binary(q);
            } else if (scheme_token == "quat1d") {
                probs = level_probabilities_quaternary(q);
            } else {
                probs = level_probabilities_uncoded(q);
            }
            for (unsigned level = 0; level < q; ++level) {
                if (records) {
                    out << "level=" << level << " p=" << fixed6(probs[level]) << "\n";
                } else {
                    out << "level " << level << "  p " << fixed6(probs[level]) << "\n";
                }
            }
            return 0;
        }

        if (cmd_stats->parsed()) {
            const LevelGrid grid = load_grid_file(grid_path);
            const GridStats stats = measure_stats(grid, variant_from_string(variant_token));
            if (records) {
                out << "q=" << stats.q << " rows=" << stats.rows << " cols=" << stats.cols
                    << " wordline_violations=" << stats.wordline_violations
                    << " wordline_windows=" << stats.wordline_windows
                    << " bitline_violations=" << stats.bitline_violations
                    << " bitline_windows=" << stats.bitline_windows;
                for (unsigned level = 0; level < stats.q; ++level) {
                    out << " level_" << level << "=" << stats.level_histogram[level];
                }
                out << "\n";
            } else {
                out << "q=" << stats.q << " rows=" << stats.rows << " cols=" << stats.cols
                    << "\n";
                out << "wordline violations " << stats.wordline_violations << " of "
                    << stats.wordline_windows << " windows\n";
                out << "bitline violations  " << stats.bitline_violations << " of "
                    << stats.bitline_windows << " windows\n";
                out << "levels";
                for (unsigned level = 0; level < stats.q; ++level) {
                    out << " " << level << ":" << stats.level_histogram[level];
                }
                out << "\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            return run_verify(deep, out);
        }

        if (cmd_graymap->parsed()) {
            require_q(q);
            const GrayMap gray(q);
            for (unsigned level = 0; level < q; ++level) {
                std::string bits;
                for (unsigned page = gray.pages(); page-- > 0;) {
                    bits += static_cast<char>('0' + gray.page_bit(level, page));
                }
                const unsigned band = band_of_level(level, q);
                if (records) {
                    out << "level=" << level << " bits=" << bits << " band=" << band << "\n";
                } else {
                    out << "level " << level << "  bits " << bits << "  band " << band
                        << "\n";
                }
            }
            return 0;
        }

        if (cmd_cardinality->parsed()) {
            if (alphabet != 2 && alphabet != 4) {
                throw CLI::ValidationError("--alphabet must be 2 or 4");
            }
            if (max_m > 10000) {
                throw CLI::ValidationError("--max must be at most 10000");
            }
            CardinalityTable table(max_m);
            for (unsigned mm = 0; mm <= max_m; ++mm) {
                const BigInt n = alphabet == 2 ? table.binary(static_cast<int>(mm))
                                               : table.quaternary(static_cast<int>(mm));
                out << mm << "\t" << n << "\n";
            }
            return 0;
        }

        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rr::cli

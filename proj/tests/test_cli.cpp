#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rr/cli.hpp"

using namespace rr;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void write_bytes(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("the capacity table prints through the tool") {
    const RunResult r = run_cli({"table", "--which", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          " q  levels  binary     gap  quaternary\n"
          " 4  0.8941  0.8471  5.257%  0.8859\n"
          " 8  0.9235  0.8981  2.750%  0.9239\n"
          "16  0.9401  0.9235  1.766%  0.9429\n"
          "32  0.9509  0.9388  1.272%  0.9544\n");
}

TEST_CASE("usage errors exit with one") {
    CHECK(run_cli({"no-such-command"}).code == 1);
    CHECK(run_cli({"table"}).code == 1);          // --which is required
    CHECK(run_cli({"table", "--which", "7"}).code == 1);
    CHECK(run_cli({"capacity", "--q", "7"}).code == 1);
    CHECK(run_cli({"encode", "--scheme", "bin3d", "--q", "8", "--m", "6", "--in", "x",
                   "--out", "y"})
              .code == 1);
    CHECK(run_cli({}).code == 1); // a subcommand is required
}

TEST_CASE("data errors exit with two") {
    const RunResult r = run_cli({"decode", "--in", "cli_missing_payload.rrpl", "--out",
                                 "cli_unused.bin"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("encode and decode round-trip a file") {
    const std::string original = "constrained coding keeps the charge in line";
    write_bytes("cli_message.bin", original);
    const RunResult enc = run_cli({"encode", "--scheme", "bin1d", "--q", "8", "--m", "11",
                                   "--in", "cli_message.bin", "--out", "cli_payload.rrpl"});
    CHECK(enc.code == 0);
    CHECK(enc.out.find("stream bits") != std::string::npos);

    const RunResult dec = run_cli({"decode", "--in", "cli_payload.rrpl", "--out",
                                   "cli_restored.bin"});
    CHECK(dec.code == 0);
    const std::string restored = read_bytes("cli_restored.bin");
    REQUIRE(restored.size() >= original.size());
    CHECK(restored.substr(0, original.size()) == original);

    std::remove("cli_message.bin");
    std::remove("cli_payload.rrpl");
    std::remove("cli_restored.bin");
}

TEST_CASE("block write, stats, and read work through files") {
    const RunResult wr = run_cli({"block-write", "--scheme", "quat1d", "--q", "8", "--rows",
                                  "8", "--cols", "8", "--m", "6", "--random", "--seed", "5",
                                  "--out", "cli_block.rrlg"});
    CHECK(wr.code == 0);
    CHECK(wr.out.find("seed=5") != std::string::npos);

    const RunResult st = run_cli({"stats", "--grid", "cli_block.rrlg"});
    CHECK(st.code == 0);
    CHECK(st.out.find("q=8 rows=8 cols=8") != std::string::npos);

    const RunResult rd = run_cli({"block-read", "--grid", "cli_block.rrlg", "--scheme",
                                  "quat1d", "--m", "6", "--out", "cli_block_payload.bin"});
    CHECK(rd.code == 0);
    CHECK(rd.out.find("168 payload bits") != std::string::npos);

    std::remove("cli_block.rrlg");
    std::remove("cli_block_payload.bin");
}

TEST_CASE("metrics and minlen answer in records form") {
    const RunResult m = run_cli({"metrics", "--scheme", "bin1d", "--q", "8", "--m", "11",
                                 "--format", "records"});
    CHECK(m.code == 0);
    CHECK(m.out.find("s=8") != std::string::npos);
    CHECK(m.out.find("rate=0.871795") != std::string::npos);

    const RunResult ok = run_cli({"minlen", "--scheme", "quat1d", "--q", "16", "--rate",
                                  "0.93", "--format", "records"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("achievable=1 m=23") != std::string::npos);

    const RunResult no = run_cli({"minlen", "--scheme", "bin1d", "--q", "8", "--rate",
                                  "0.9"});
    CHECK(no.code == 0);
    CHECK(no.out.find("not achievable") != std::string::npos);
}

TEST_CASE("probabilities and the level map print per level") {
    const RunResult p = run_cli({"probs", "--scheme", "uncoded", "--q", "8"});
    CHECK(p.code == 0);
    CHECK(p.out.find("level 0  p 0.125000") != std::string::npos);

    const RunResult g = run_cli({"graymap", "--q", "8"});
    CHECK(g.code == 0);
    CHECK(g.out.find("level 0  bits 111  band 3") != std::string::npos);
    CHECK(g.out.find("level 5  bits 000  band 1") != std::string::npos);
}

TEST_CASE("cardinality lists the counting sequence") {
    const RunResult r = run_cli({"cardinality", "--alphabet", "2", "--max", "21"});
    CHECK(r.code == 0);
    CHECK(r.out.find("21\t33552\n") != std::string::npos);
    CHECK(r.out.find("4\t9\n") != std::string::npos);
    CHECK(run_cli({"cardinality", "--alphabet", "3", "--max", "5"}).code == 1);
}

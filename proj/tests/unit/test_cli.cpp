#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hs/cache.hpp"
#include "hs/cli.hpp"
#include "hs/errors.hpp"
#include "hs/json_io.hpp"
#include "hs/tables.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace hs;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("hs-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("range parsing") {
    CHECK(parse_range("3") == std::pair{3, 3});
    CHECK(parse_range("0..3") == std::pair{0, 3});
    CHECK(parse_range("-1..1") == std::pair{-1, 1});
    CHECK_THROWS_AS(parse_range("3..1"), ParseError);
    CHECK_THROWS_AS(parse_range("a..1"), ParseError);
    CHECK_THROWS_AS(parse_range(""), ParseError);
    CHECK_THROWS_AS(parse_range("1..2x"), ParseError);
}

TEST_CASE("profile parsing") {
    CHECK(parse_mu("2,1,1") == std::vector<int>{2, 1, 1});
    CHECK(parse_mu(" 3 , 2") == std::vector<int>{3, 2});
    CHECK(mu_compact({2, 1, 1}) == "211");
    CHECK_THROWS_AS(parse_mu("2,,1"), ParseError);
    CHECK_THROWS_AS(parse_mu("0"), ParseError);
    CHECK_THROWS_AS(parse_mu(""), ParseError);
}

TEST_CASE("correlator command") {
    Run r = run({"correlator", "--mu", "2,2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[6][2]^3 + 3[2]^4"));
    r = run({"correlator", "--word", "1:1,1:1,-2:1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[3]"));
    CHECK(contains(r.out, "u^3 - u^-3"));
    r = run({"correlator", "--mu", "5"});
    CHECK(contains(r.out, "[5]^4"));
    r = run({"correlator", "--mu", "1,1", "--disconnected"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "disconnected"));
    r = run({"correlator", "--word", "1:1,x:1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "item 2"));
    CHECK(run({"correlator"}).code == 2);
}

TEST_CASE("hurwitz command") {
    Run r = run({"hurwitz", "--mu", "2,1", "--g", "0..3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "g,k,H\n0,3,4\n1,5,40\n2,7,364\n3,9,3280\n");
    r = run({"hurwitz", "--mu", "2,1,1", "--g", "0"});
    CHECK(contains(r.out, "240"));
    CHECK(contains(r.out, "2/(4!*2*1*1) * (6^k - 8*3^k - 3*2^k + 24*1^k)"));
    r = run({"hurwitz", "--mu", "2", "--g", "0", "--r", "2", "--format", "json"});
    const Json j = Json::parse(r.out);
    CHECK(j["values"][0]["value"] == "1/2");
    r = run({"hurwitz", "--mu", "3,2", "--g", "3", "--asymptotic", "--digits", "8"});
    CHECK(contains(r.out, "1.0023779"));
    CHECK(contains(r.out, "0.99762775"));
    r = run({"hurwitz", "--mu", "1,1", "--g", "-1..1", "--disconnected", "--format", "csv"});
    CHECK(r.out == "g,k,H\n-1,0,1\n0,2,1\n1,4,1\n");
    CHECK(run({"hurwitz", "--mu", "3", "--r", "2"}).code == 2);
    CHECK(run({"hurwitz", "--mu", "2,1", "--g", "3..1"}).code == 2);
    CHECK(run({"hurwitz"}).code == 2);
}

TEST_CASE("coeffs command") {
    Run r = run({"coeffs", "--classical", "5", "--format", "json"});
    const Json j = Json::parse(r.out);
    CHECK(j["B"]["10"] == "1");
    CHECK(j["B"]["1"] == "-4000");
    CHECK(j["exponent"] == "2g+8");
    r = run({"coeffs", "--mu", "2,1", "--format", "markdown"});
    CHECK(contains(r.out, "| m | C(m) |"));
    CHECK(contains(r.out, "| 1 | -3 |"));
}

TEST_CASE("tables command") {
    for (const char* which : {"1", "2", "3"}) {
        const Run r = run({"tables", which});
        CHECK_MESSAGE(r.code == 0, r.err);
        CHECK(contains(r.out, "17/17 rows match"));
    }
    CHECK(run({"tables", "4"}).code == 2);
}

TEST_CASE("a corrupted golden copy is reported as a mismatch") {
    std::ifstream in(std::string(HS_DATA_DIR) + "/golden_tables.json");
    Json j = Json::parse(in);
    j["table2"][0]["C"][0] = 999;
    const GoldenTables g = parse_golden_tables(j.dump());
    const TableReport rep = reproduce_table(2, g);
    CHECK_FALSE(rep.all_match());
    CHECK_FALSE(rep.rows[0].match);
    CHECK(rep.rows[1].match);
    CHECK_THROWS_AS(parse_golden_tables("{"), ParseError);
}

TEST_CASE("oracle command") {
    Run r = run({"oracle", "--mu", "2,1", "--g", "0", "--transitive", "--format", "json"});
    Json j = Json::parse(r.out);
    CHECK(j["count"] == "24");
    CHECK(j["weighted"] == "4");
    CHECK(j["method"] == "exhaustive");
    r = run({"oracle", "--mu", "2,1", "--k", "3", "--transitive", "--method", "convolution", "--format", "json"});
    j = Json::parse(r.out);
    CHECK(j["weighted"] == "4");
    CHECK(j["method"] == "convolution");
    r = run({"oracle", "--mu", "3", "--k", "2", "--monotone", "--fixed-target", "--method", "dp", "--format", "csv"});
    CHECK(contains(r.out, ",2,2,dp"));
    r = run({"oracle", "--mu", "4", "--r", "2", "--g", "1", "--method", "convolution", "--format", "json"});
    j = Json::parse(r.out);
    CHECK(j["count"] == "336");
    CHECK(run({"oracle", "--mu", "6", "--k", "12", "--budget", "1000"}).code == 2);
    CHECK(run({"oracle", "--mu", "2,1", "--k", "3", "--method", "dp"}).code == 2);
    CHECK(run({"oracle", "--mu", "2,1", "--method", "nope"}).code == 2);
}

TEST_CASE("monotone command") {
    Run r = run({"monotone", "--mu", "2,2", "--g", "0..8", "--verify"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "model (fixed-target): -1/2*k + 7/24*1^k - 2/3*2^k + 3/8*3^k"));
    CHECK(contains(r.out, "normalisation bridge holds"));
    r = run({"monotone", "--mu", "3", "--g", "0", "--format", "csv"});
    CHECK(r.out == "g,value\n0,2\n");
    r = run({"monotone", "--mu", "3", "--g", "0", "--normalisation", "definition", "--format", "csv"});
    CHECK(r.out == "g,value\n0,2/3\n");
    CHECK(run({"monotone", "--mu", "3,2", "--g", "0..2", "--verify"}).code == 2);
}

TEST_CASE("check command") {
    Run r = run({"check", "asymptotics"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "asymptotics: PASS"));
    r = run({"check", "score", "--max-degree", "4"});
    CHECK(r.code == 0);
    CHECK(run({"check", "nonsense"}).code == 2);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("result cache") {
    const fs::path dir = fresh_dir("cache");
    const ResultCache cache(dir);
    CHECK(cache.enabled());
    CHECK_FALSE(ResultCache().enabled());
    CHECK_FALSE(cache.get("k").has_value());
    cache.put("k", Json{{"x", 1}});
    REQUIRE(cache.get("k").has_value());
    CHECK((*cache.get("k"))["x"] == 1);
    CHECK_FALSE(cache.get("other").has_value());
    {
        std::ofstream out(cache.path_for("k"), std::ios::trunc);
        out << "{\"truncated";
    }
    CHECK_FALSE(cache.get("k").has_value());
    {
        // valid JSON, wrong checksum
        Json e = Json::parse(R"({"version":"hs-1","key":"k","checksum":"0","payload":{"x":2}})");
        std::ofstream out(cache.path_for("k"), std::ios::trunc);
        out << e.dump();
    }
    CHECK_FALSE(cache.get("k").has_value());
    fs::remove_all(dir);
}

TEST_CASE("cache hits reproduce the output byte for byte") {
    const fs::path dir = fresh_dir("cli");
    ::setenv("HURWITZ_CACHE_DIR", dir.c_str(), 1);
    const std::vector<std::string> args{"hurwitz", "--mu", "3,2", "--g", "0..4", "--digits", "6"};
    const Run miss = run(args);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".json";
    CHECK(files == 1);
    const Run hit = run(args);
    CHECK(hit.code == miss.code);
    CHECK(hit.out == miss.out);
    // A corrupted entry is recomputed.
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ofstream out(e.path(), std::ios::trunc);
        out << "garbage";
    }
    const Run again = run(args);
    CHECK(again.out == miss.out);
    for (const auto& e : fs::directory_iterator(dir)) CHECK(slurp(e.path()) != "garbage");
    // Different flags are a different entry.
    run({"hurwitz", "--mu", "3,2", "--g", "0..4"});
    files = 0;
    for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".json";
    CHECK(files == 2);
    ::unsetenv("HURWITZ_CACHE_DIR");
    fs::remove_all(dir);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "correlator"));
}

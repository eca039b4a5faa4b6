#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "liechar/cache.hpp"
#include "liechar/cli.hpp"
#include "support/expr.hpp"
#include "support/random.hpp"

using namespace liechar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("liechar-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path path;
};

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "liechar");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Points LIECHAR_CACHE at a fresh directory for the lifetime of the guard.
struct CacheGuard {
    CacheGuard() { ::setenv("LIECHAR_CACHE", dir.path.c_str(), 1); }
    ~CacheGuard() { ::unsetenv("LIECHAR_CACHE"); }
    TempDir dir;
};

} // namespace

TEST_CASE("polynomial JSON round trip") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = fixture::random_poly<ZPoly>(rng, 3, 0, 4, 6);
        CHECK(zpoly_from_json(json::parse(to_json(p).dump()), 3) == p);
        auto l = fixture::random_poly<LaurentPoly>(rng, 2, -3, 3, 6);
        CHECK(laurent_from_json(to_json(l), 2) == l);
    }
    const TPoly t = fixture::tpoly("1 - z1*t1 + (z2 - 3)*t1*t2^2", 2, 2);
    CHECK(tpoly_from_json(json::parse(to_json(t).dump()), 2, 2) == t);
}

TEST_CASE("big coefficients serialize as decimal strings") {
    ZPoly p(1);
    p.add_term({2}, Integer("123456789012345678901234567890"));
    const json j = to_json(p);
    CHECK(j[0]["coeff"] == "123456789012345678901234567890");
    CHECK(zpoly_from_json(j, 1) == p);
}

TEST_CASE("operator JSON round trip") {
    const CSOperator cs = build_cs_operator(parse_algebra("C2"));
    const json j = operator_to_json(cs);
    const CSOperator back = operator_from_json(json::parse(j.dump()));
    CHECK(back.op == cs.op);
    CHECK(back.eigen.quadratic == cs.eigen.quadratic);
    CHECK(back.eigen.linear == cs.eigen.linear);
    CHECK(j["a"][0]["j"] == 1);
}

TEST_CASE("generating function JSON round trip") {
    const CharacterTable table(build_cs_operator(parse_algebra("C2")));
    for (const auto& r : {generating_function(table), ray_genfun(table, {1, 1})}) {
        const std::string text = genfun_to_json(r).dump();
        const GenFunResult back = genfun_from_json(json::parse(text));
        CHECK(back.gf == r.gf);
        CHECK(back.denominator_factors == r.denominator_factors);
        CHECK(back.dim_gf.P == r.dim_gf.P);
        CHECK(back.dim_gf.Q == r.dim_gf.Q);
        CHECK(back.support == r.support);
        CHECK(back.direction == r.direction);
        CHECK(genfun_to_json(back).dump() == text);
    }
}

TEST_CASE("schema mismatch is reported") {
    json j = genfun_to_json(generating_function(CharacterTable(build_cs_operator(parse_algebra("A1")))));
    j["schema_version"] = kSchemaVersion + 1;
    CHECK_THROWS_AS(genfun_from_json(j), SchemaMismatch);
}

TEST_CASE("sha256 known vector") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache store, load and corruption handling") {
    TempDir dir;
    const ResultCache cache(dir.path);
    const json key = ResultCache::make_key("A2", "test", {{"n", 1}});
    CHECK_FALSE(cache.load(key).has_value());
    cache.store(key, "{\"x\":1}");
    CHECK(cache.load(key) == std::optional<std::string>("{\"x\":1}"));
    CHECK_FALSE(cache.load(ResultCache::make_key("A2", "test", {{"n", 2}})).has_value());

    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir.path)) {
        ++files;
        CHECK(entry.path().extension() == ".json");
        json stored = json::parse(slurp(entry.path()));
        stored["payload"] = "{\"x\":2}";
        std::ofstream(entry.path()) << stored.dump();
    }
    CHECK(files == 1);
    CHECK_FALSE(cache.load(key).has_value());
}

TEST_CASE("cli chars") {
    CacheGuard guard;
    Run r = cli({"chars", "--algebra", "C2", "--max", "1", "--format", "text"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("chi(1,1) = -z1 + z1*z2\n") != std::string::npos);

    r = cli({"chars", "--algebra", "A1", "--max", "0", "--format", "text"});
    CHECK(r.out == "chi(0) = 1\n");

    r = cli({"chars", "--algebra", "B3", "--max", "2"});
    REQUIRE(r.status == kExitOk);
    const json doc = json::parse(r.out);
    const WeylOracle oracle(parse_algebra("B3"));
    CHECK(doc["characters"].size() == 27);
    for (const auto& row : doc["characters"]) {
        const Weight m = weight_from_json(row["weight"]);
        CHECK(zpoly_from_json(row["poly"], 3) == oracle.rewrite_to_z(oracle.char_x(m).poly));
    }
}

TEST_CASE("cli genfun output is identical with a cold cache, a warm cache and no cache") {
    CacheGuard guard;
    const Run cold = cli({"genfun", "--algebra", "C2", "--direction", "1,1"});
    const Run warm = cli({"genfun", "--algebra", "C2", "--direction", "1,1"});
    const Run none = cli({"genfun", "--algebra", "C2", "--direction", "1,1", "--no-cache"});
    CHECK(cold.status == kExitOk);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == none.out);
    CHECK(json::parse(cold.out)["verified"] == true);
    CHECK_FALSE(fs::is_empty(guard.dir.path));
}

TEST_CASE("cli verify on its own output") {
    CacheGuard guard;
    TempDir dir;
    const fs::path file = dir.path / "a2.json";
    REQUIRE(cli({"genfun", "--algebra", "A2", "--out", file.string()}).status == kExitOk);
    const json doc = json::parse(slurp(file));
    CHECK(doc["numerator"] == to_json(fixture::tpoly("1 - t1*t2", 2, 2)));
    CHECK_FALSE(doc.contains("timings"));

    Run r = cli({"verify", file.string()});
    CHECK(r.status == kExitOk);
    CHECK(json::parse(r.out)["verified"] == true);

    json tampered = doc;
    tampered["numerator"] = to_json(fixture::tpoly("1 - t1*t2 + t1", 2, 2));
    std::ofstream(dir.path / "bad.json") << tampered.dump();
    r = cli({"verify", (dir.path / "bad.json").string()});
    CHECK(r.status == kExitUnverified);

    tampered = doc;
    tampered["schema_version"] = 99;
    std::ofstream(dir.path / "old.json") << tampered.dump();
    CHECK(cli({"verify", (dir.path / "old.json").string()}).status == kExitUsage);
    CHECK(cli({"verify", (dir.path / "missing.json").string()}).status == kExitUsage);
}

TEST_CASE("cli timings are opt-in") {
    const Run r = cli({"genfun", "--algebra", "A1", "--timings", "--no-cache"});
    CHECK(r.status == kExitOk);
    CHECK(json::parse(r.out).contains("timings"));
}

TEST_CASE("cli usage errors") {
    CHECK(cli({}).status == kExitUsage);
    CHECK(cli({"chars"}).status == kExitUsage);
    CHECK(cli({"chars", "--algebra", "G2", "--no-cache"}).status == kExitUsage);
    CHECK(cli({"chars", "--algebra", "A7", "--no-cache"}).status == kExitUsage);
    CHECK(cli({"genfun", "--algebra", "A2", "--direction", "1,2", "--no-cache"}).status == kExitUsage);
    CHECK(cli({"recurrence", "--algebra", "A2", "--axis", "3", "--no-cache"}).status == kExitUsage);
    CHECK(cli({"chars", "--algebra", "A2", "--format", "xml"}).status == kExitUsage);
}

TEST_CASE("cli solver errors exit with status 3") {
    CacheGuard guard;
    // Seed the cache with an operator whose b2 is inconsistent with eps(0,1).
    CSOperator cs = build_cs_operator(parse_algebra("C2"));
    cs.op.first[1] = fixture::zpoly("4*z2", 2);
    ResultCache(guard.dir.path).store(ResultCache::make_key("C2", "operator", json::object()), operator_to_json(cs).dump());
    const Run r = cli({"chars", "--algebra", "C2", "--max", "1"});
    CHECK(r.status == kExitSolver);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli operator, dims and recurrence") {
    CacheGuard guard;
    Run r = cli({"operator", "--algebra", "A1", "--format", "text"});
    CHECK(r.out.find("a11 = -4 + z1^2\n") != std::string::npos);
    CHECK(r.out.find("b1 = 3*z1\n") != std::string::npos);

    r = cli({"dims", "--algebra", "A2", "--max", "1"});
    CHECK(r.status == kExitOk);
    const json dims = json::parse(r.out);
    CHECK(dims["P"] == int_tpoly_to_json(fixture::tpoly("1 - t1*t2", 2, 2)));
    CHECK(dims["dimensions"].back()["dim"] == "8");

    r = cli({"recurrence", "--algebra", "A2", "--axis", "1"});
    CHECK(r.status == kExitOk);
    const json rec = json::parse(r.out);
    CHECK(rec["threshold"] == 3);
    CHECK(rec["holds"] == true);
    CHECK(rec["checked_through"] == 12);
}

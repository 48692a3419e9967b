#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "regspec/manifest.hpp"

using namespace regspec;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "regspec-manifest-test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("content digests are stable") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("hello") == "a430d84680aabd0b");
    CHECK(digest_hex("hello") != digest_hex("hello\n"));
}

TEST_CASE("canonical serialization keeps insertion order") {
    Json j;
    j["zeta"] = 1;
    j["alpha"] = Json::array({1, 2});
    CHECK(dump_canonical(j) == "{\n  \"zeta\": 1,\n  \"alpha\": [\n    1,\n    2\n  ]\n}\n");
    CHECK(dump_canonical(j).back() == '\n');
}

TEST_CASE("artifact write/read roundtrip") {
    TempDir tmp;
    Json j;
    j["n"] = 100;
    j["values"] = Json::array({1.5, 2.5});
    const fs::path file = tmp.path / "out.json";
    const std::string digest = write_artifact(file, j);
    const std::string body = slurp(file);
    CHECK(body == dump_canonical(j));
    CHECK(digest == digest_hex(body));
    CHECK(Json::parse(body) == j);
    CHECK_THROWS_AS(write_artifact(tmp.path / "no-such-dir" / "x.json", j),
                    std::runtime_error);
}

TEST_CASE("csv projection is a flat comma/newline table") {
    TempDir tmp;
    const fs::path file = tmp.path / "out.csv";
    const std::string digest =
        write_csv(file, {"k", "count"}, {{"3", "4"}, {"4", "3"}});
    const std::string body = slurp(file);
    CHECK(body == "k,count\n3,4\n4,3\n");
    CHECK(digest == digest_hex(body));
}

TEST_CASE("manifest sidecar captures reproduction inputs and digests") {
    TempDir tmp;
    const fs::path file = tmp.path / "run.manifest.json";
    Json params;
    params["n"] = 60;
    write_manifest(file, "census", params, 42, 0.125,
                   {{"out.json", "cbf29ce484222325"}});
    const Json m = Json::parse(slurp(file));
    CHECK(m.at("command") == "census");
    CHECK(m.at("version") == std::string(kToolkitVersion));
    CHECK(m.at("params").at("n") == 60);
    CHECK(m.at("seed") == 42);
    CHECK(m.at("artifacts").at("out.json") == "cbf29ce484222325");
    CHECK(m.at("wall_clock_seconds").get<double>() == doctest::Approx(0.125));
    // Keys serialize in insertion order so reruns produce identical bytes
    // apart from the wall clock.
    const std::string body = slurp(file);
    CHECK(body.find("\"command\"") < body.find("\"version\""));
    CHECK(body.find("\"version\"") < body.find("\"params\""));
    CHECK(body.find("\"artifacts\"") < body.find("\"wall_clock_seconds\""));
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "wdist/serialize.hpp"

using namespace wdist;
using serialize::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("wdist_test_" + name);
}

}  // namespace

TEST_CASE("predict") {
    auto r = run({"predict", "--p", "5", "--m", "3", "--k", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["distribution"] == json::parse("[[0,1],[50,248],[100,15376]]"));
    CHECK(j["case"] == "ODD_M");
    CHECK(j["modulus"] == json::parse("[3,3,0,1]"));
    CHECK(serialize::to_json(serialize::distribution_from_json(j)) == j);

    r = run({"predict", "--p", "3", "--m", "6", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1+364X^216+1092X^252+33124X^432+198744X^468+298116X^504") != std::string::npos);
    CHECK(r.out.find("modulus: ") != std::string::npos);

    CHECK(run({"predict", "--p", "3", "--m", "5", "--k", "0"}).code == cli::kExitBadParameters);
    CHECK(run({"predict", "--p", "4", "--m", "5", "--k", "1"}).code == cli::kExitBadParameters);
    CHECK(run({"predict", "--p", "3", "--m", "2", "--k", "1"}).code == cli::kExitBadParameters);

    r = run({"predict", "--p", "5", "--m", "3", "--k", "1", "--format", "csv"});
    CHECK(r.out == "weight,frequency\n0,1\n50,248\n100,15376\n");
}

TEST_CASE("enumerate") {
    auto r = run({"enumerate", "--p", "3", "--m", "4", "--t", "2", "--method", "direct"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1+120X^24+40X^36+3600X^48+2400X^60+400X^72") != std::string::npos);

    r = run({"enumerate", "--p", "3", "--m", "6", "--t", "2", "--method", "fast"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1+364X^216+1092X^252+33124X^432+198744X^468+298116X^504") != std::string::npos);
    CHECK(r.out.find("minimum distance: 216") != std::string::npos);

    CHECK(run({"enumerate", "--p", "3", "--m", "2", "--t", "2"}).code == cli::kExitInadmissible);
    CHECK(run({"enumerate", "--p", "3", "--m", "8", "--t", "1", "--method", "direct"}).code == cli::kExitTooLarge);
    CHECK(run({"enumerate", "--p", "3", "--m", "4", "--t", "2", "--method", "slow"}).code == cli::kExitBadParameters);
    CHECK(run({"enumerate", "--p", "3", "--m", "4"}).code == cli::kExitBadParameters);

    // Outside the family: enumeration still works, no k is reported.
    r = run({"enumerate", "--p", "3", "--m", "4", "--t", "7", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["k"].is_null());
}

TEST_CASE("json output is identical across methods and worker counts") {
    const auto direct = run({"enumerate", "--p", "3", "--m", "4", "--t", "2", "--method", "direct", "--format", "json",
                             "--workers", "1"});
    const auto fast = run({"enumerate", "--p", "3", "--m", "4", "--t", "2", "--method", "fast", "--format", "json",
                           "--workers", "4"});
    CHECK(direct.code == 0);
    CHECK(direct.out == fast.out);
    const auto d53 = run({"enumerate", "--p", "5", "--m", "3", "--t", "3", "--method", "direct", "--format", "json"});
    const auto f53 = run({"enumerate", "--p", "5", "--m", "3", "--t", "3", "--method", "fast", "--format", "json",
                          "--workers", "3"});
    CHECK(d53.out == f53.out);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--p", "3", "--m", "6", "--t", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
    r = run({"verify", "--p", "5", "--m", "3", "--t", "3", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["status"] == "PASS");
    CHECK(serialize::to_json(serialize::report_from_json(j)) == j);

    r = run({"verify", "--p", "3", "--m", "4", "--t", "7"});
    CHECK(r.code == cli::kExitNoMatch);
    CHECK(r.err.find("NoMatch") != std::string::npos);
}

TEST_CASE("expsum, coset, minpoly") {
    auto r = run({"expsum", "--p", "3", "--m", "6", "--k", "1", "--which", "r_alpha", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["entries"] == json::parse("[[-54,546],[162,182],[1458,1]]"));
    auto s = serialize::sum_from_json(json::parse(r.out));
    CHECK(serialize::to_json(s) == json::parse(r.out));

    r = run({"expsum", "--p", "5", "--m", "3", "--k", "1", "--which", "t_alpha"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[5, 0, 10, 10, 0]") != std::string::npos);

    r = run({"expsum", "--p", "3", "--m", "6", "--k", "1", "--which", "t_ab"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-108") != std::string::npos);
    CHECK(run({"expsum", "--p", "3", "--m", "6", "--k", "0"}).code == cli::kExitBadParameters);

    r = run({"coset", "--p", "3", "--m", "4", "--i", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 3 9 27\n");
    r = run({"coset", "--p", "3", "--m", "4", "--i", "1", "--format", "json"});
    CHECK(serialize::to_json(serialize::coset_from_json(json::parse(r.out))) == json::parse(r.out));
    CHECK(run({"coset", "--p", "3", "--m", "4", "--i", "80"}).code == cli::kExitBadParameters);

    r = run({"minpoly", "--p", "3", "--m", "6", "--t", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto mp = serialize::minpoly_from_json(json::parse(r.out));
    CHECK(mp.h1.size() == 7);
    CHECK(mp.h2.size() == 7);
    CHECK(mp.h1 != mp.h2);
    CHECK(run({"minpoly", "--p", "3", "--m", "6", "--t", "2"}).out.find("degree 6") != std::string::npos);
}

TEST_CASE("modulus file, environment fallback and output file") {
    const auto path = temp_file("modulus.txt");
    {
        std::ofstream f(path);
        f << "# alternative primitive quartic\n3 4 2 1 0 0 1\n";
    }
    auto r = run({"enumerate", "--p", "3", "--m", "4", "--t", "2", "--modulus-file", path.string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["modulus"] == json::parse("[2,1,0,0,1]"));
    CHECK(j["distribution"] == json::parse("[[0,1],[24,120],[36,40],[48,3600],[60,2400],[72,400]]"));

    ::setenv("WDIST_MODULUS_PATH", path.string().c_str(), 1);
    r = run({"coset", "--p", "3", "--m", "4", "--i", "2"});
    CHECK(r.code == 0);
    r = run({"minpoly", "--p", "3", "--m", "4", "--t", "2", "--format", "json"});
    CHECK(json::parse(r.out)["modulus"] == json::parse("[2,1,0,0,1]"));
    ::unsetenv("WDIST_MODULUS_PATH");

    const auto bad = temp_file("bad_modulus.txt");
    {
        std::ofstream f(bad);
        f << "3 4 1 0 0 0 1\n";  // x^4 + 1 is not irreducible
    }
    CHECK(run({"enumerate", "--p", "3", "--m", "4", "--t", "2", "--modulus-file", bad.string()}).code ==
          cli::kExitBadParameters);

    const auto out = temp_file("out.json");
    r = run({"predict", "--p", "5", "--m", "3", "--k", "1", "--format", "json", "--output", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    CHECK(json::parse(in)["n"] == 124);

    std::filesystem::remove(path);
    std::filesystem::remove(bad);
    std::filesystem::remove(out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitBadParameters);
    CHECK(run({"frobnicate"}).code == cli::kExitBadParameters);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

#include "msp/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "msperiods");
    std::ostringstream out, err;
    const int code = msp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content)
{
    const fs::path p = fs::temp_directory_path() / ("msperiods_test_" + name);
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("realize")
{
    auto r = run({"realize", "--set", "2,3", "--kind", "preserving"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["genus"] == 6);
    CHECK(j["achieved"] == Json::array({2, 3}));
    CHECK(j["dold"] == Json::parse(R"({"2": -2, "3": -2})"));
    CHECK(j["flags"].empty());

    r = run({"realize", "--set", "3", "--kind", "reversing"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());

    r = run({"realize", "--set", "4", "--kind", "reversing", "--mode", "faithful", "--strict"});
    CHECK(r.code == 3);
    CHECK(r.json()["achieved"] == Json::array({2, 4}));

    r = run({"realize", "--set", "4", "--kind", "reversing", "--mode", "faithful"});
    CHECK(r.code == 0);
    CHECK(r.json()["flags"].size() == 1);

    r = run({"realize", "--set", "4", "--kind", "reversing", "--strict"});
    CHECK(r.code == 0);
    CHECK(r.json()["genus"] == 9);

    CHECK(run({"realize", "--set", "2", "--kind", "preserving", "--mode", "faithful"}).code == 1);
    CHECK(run({"realize", "--set", "0,2", "--kind", "preserving"}).code == 1);
    CHECK(run({"realize", "--set", "a", "--kind", "preserving"}).code == 1);
    CHECK(run({"realize", "--set", "2", "--kind", "torus"}).code == 1);
    CHECK(run({"realize", "--kind", "preserving"}).code == 1);
    CHECK(run({}).code == 1);

    r = run({"--format", "text", "realize", "--set", "1,3", "--kind", "nonorientable"});
    CHECK(r.code == 0);
    CHECK(r.out.find("genus: 3") != std::string::npos);
}

TEST_CASE("analyze")
{
    const auto periodic = write_temp("periodic.json", R"({"dim": 2, "rows": [[0, -1], [1, 0]]})");
    auto r = run({"analyze", "--matrix", periodic, "--kind", "preserving"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["genus"] == 1);
    CHECK(j["period"] == 4);
    CHECK(j["verdict"] == "ok");
    CHECK(j["lefschetz"].size() == 8);
    CHECK(j["lefschetz"][0] == 2);

    const auto cat = write_temp("cat.json", R"({"dim": 2, "rows": [[2, 1], [1, 1]]})");
    r = run({"analyze", "--matrix", cat, "--kind", "preserving", "--max-iter", "5"});
    CHECK(r.code == 4);
    CHECK(r.json()["quasi_unipotent"] == false);
    CHECK(r.json()["lefschetz"].size() == 5);

    const auto flip = write_temp("flip.json", R"({"dim": 2, "rows": [[1, 0], [0, -1]]})");
    CHECK(run({"analyze", "--matrix", flip, "--kind", "preserving"}).code == 5);
    CHECK(run({"analyze", "--matrix", flip, "--kind", "preserving", "--no-strict"}).code == 0);
    r = run({"analyze", "--matrix", flip, "--kind", "reversing"});
    CHECK(r.code == 0);
    CHECK(r.json()["odd_vanishing"] == true);

    CHECK(run({"analyze", "--matrix", flip, "--kind", "preserving", "--genus", "3"}).code == 5);
    CHECK(run({"analyze", "--matrix", write_temp("bad.json", "{"), "--kind", "preserving"}).code == 1);
    CHECK(run({"analyze", "--matrix", "/nonexistent/m.json", "--kind", "preserving"}).code == 1);
}

TEST_CASE("zeta")
{
    auto r = run({"zeta", "--factors", "-,1,-1;-,2,-1", "--series", "4", "--canonicalize", "--mper"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["series"] == Json::array({1, 1, 2, 2, 3}));
    CHECK(j["canonical"] == Json::parse(R"({"1": -1, "2": -1})"));
    CHECK(j["mper"] == Json::array({1}));

    r = run({"zeta", "--dold", R"({"3": -2})", "--lefschetz", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["factors"] == "-,3,2");
    CHECK(r.json()["lefschetz"] == Json::array({0, 0, -6, 0, 0, -6}));

    CHECK(run({"zeta", "--factors", "*,1,1"}).code == 1);
    CHECK(run({"zeta"}).code == 1);
    CHECK(run({"zeta", "--factors", "+,1,1", "--dold", "{}"}).code == 1);
}

TEST_CASE("census")
{
    auto r = run({"census", "--genus", "12"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["exact_count"] == 77);

    r = run({"census", "--genus", "2", "--list-partitions"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["classes"].size() == 2);

    r = run({"census", "--genus", "5", "--list-partitions", "--correspondence", "nonorientable", "--limit", "3"});
    CHECK(r.json()["classes"].size() == 3);
    CHECK(run({"census", "--genus", "0"}).code == 1);
}

TEST_CASE("certify")
{
    auto r = run({"certify", "--dold", R"({"3": -2, "4": 1})"});
    REQUIRE(r.code == 0);
    auto certs = r.json()["certificates"];
    REQUIRE(certs.size() == 2);
    CHECK(certs[0]["kind"] == "odd");
    CHECK(certs[1]["kind"] == "either");
    CHECK(certs[1]["periods"] == Json::array({4, 2}));

    const auto periodic = write_temp("periodic3.json", R"({"dim": 2, "rows": [[0, -1], [1, -1]]})");
    r = run({"certify", "--matrix", periodic, "--kind", "preserving"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["dold"] == Json::parse(R"({"1": 3, "3": -1})"));

    const auto cat = write_temp("cat2.json", R"({"dim": 2, "rows": [[2, 1], [1, 1]]})");
    r = run({"certify", "--matrix", cat, "--kind", "preserving"});
    CHECK(r.code == 4);
    CHECK(r.json()["verdict"] == "NotQuasiUnipotent");
    CHECK(run({"certify"}).code == 1);
}

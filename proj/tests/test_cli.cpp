#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = torusconv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval: single points")
{
    Run r = run({"eval", "--fn", "Z", "--x", "0.5", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["values"][0]["value"][0].get<double>()) < 1e-10);
    CHECK(std::abs(j["values"][0]["value"][1].get<double>()) < 1e-10);

    r = run({"eval", "--fn", "g", "--n", "0", "--x", "0.3+0.2i", "--format", "json"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["values"][0]["value"][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("eval: numeric convolution matches the closed form")
{
    Run a = run({"eval", "--fn", "conv", "--f", "Z", "--g", "Z", "--x", "0.25+0.9i", "--format", "json"});
    Run b = run({"eval", "--fn", "zconv", "--n", "2", "--x", "0.25+0.9i", "--format", "json"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    auto ja = nlohmann::json::parse(a.out)["values"][0]["value"];
    auto jb = nlohmann::json::parse(b.out)["values"][0]["value"];
    CHECK(std::abs(ja[0].get<double>() - jb[0].get<double>()) < 1e-8);
    CHECK(std::abs(ja[1].get<double>() - jb[1].get<double>()) < 1e-8);
}

TEST_CASE("eval: grid rows carry a status")
{
    Run r = run({"eval", "--fn", "wp", "--grid-re", "0", "0.5", "2", "--grid-im", "0", "0.5", "2"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "re(x),im(x),re(f),im(f),status");
    int rows = 0, poles = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.find(",pole") != std::string::npos) {
            ++poles;
            CHECK(line.find("nan") != std::string::npos);
        }
    }
    CHECK(rows == 4);
    CHECK(poles == 1);
}

TEST_CASE("coeffs")
{
    Run r = run({"coeffs", "--matrix", "C", "--n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto &e : j["entries"]) {
        if (e["k"] == 0) {
            found = true;
            CHECK(e["num"] == 7);
            CHECK(e["den"] == 360);
            CHECK(e["dz_power"] == 4);
        }
    }
    CHECK(found);

    r = run({"coeffs", "--matrix", "c", "--n", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0,-1,6,2") != std::string::npos);

    r = run({"coeffs", "--poly", "p", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    std::vector<long> nums;
    for (const auto &e : j["coefficients"]) {
        nums.push_back(e["num"].get<long>());
    }
    CHECK(nums == std::vector<long>{0, 1, -1});
}

TEST_CASE("zeros")
{
    Run r = run({"zeros", "--n", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["roots"].size() == 3);
    CHECK(j["roots"][1].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("verify: exit code, schema and determinism")
{
    Run a = run({"verify", "--suite", "polynomials", "--no-wall-time"});
    Run b = run({"verify", "--suite", "polynomials", "--no-wall-time"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["seed"].is_number());
    CHECK_FALSE(j.contains("wall_time"));
}

TEST_CASE("usage and range errors")
{
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({"eval", "--fn", "Z", "--x", "0.3", "--tau-im", "0.2"}).code == 2);
    CHECK(run({"coeffs", "--matrix", "c", "--n", "99"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"eval", "--fn", "Z", "--x", "what"}).code == 2);
}

TEST_CASE("global flags may follow the subcommand")
{
    Run r = run({"eval", "--fn", "Z", "--x", "0.3+0.1i", "--tau-im", "1.5", "--format", "json"});
    CHECK(r.code == 0);
}

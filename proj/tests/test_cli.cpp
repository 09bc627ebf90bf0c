#include "gfc/canonical_ideal.hpp"
#include "gfc/cli.hpp"

#include <doctest.h>

#include <stdexcept>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "gfc");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    Run r;
    r.code = gfc::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("info")
{
    const auto r = run({"info", "--k", "2", "--n", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["genus"] == 5);
    CHECK(r.doc()["plane_quintic"] == false);

    const auto bad = run({"info", "--k", "2", "--n", "3"});
    CHECK(bad.code == 2);
    CHECK(json::parse(bad.err).contains("error"));

    CHECK(run({"info", "--k", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("basis")
{
    const auto r1 = run({"basis", "--k", "3", "--n", "3", "--m", "1"});
    REQUIRE(r1.code == 0);
    CHECK(r1.doc()["rows"].size() == 10);
    CHECK(r1.doc()["all_holomorphic"] == true);

    const auto r2 = run({"basis", "--k", "3", "--n", "3", "--m", "2"});
    REQUIRE(r2.code == 0);
    CHECK(r2.doc()["rows"].size() == 27);
    CHECK(r2.doc()["count_matches"] == true);
}

TEST_CASE("multiplicities")
{
    for (const char* kind : {"nu", "mu", "syzygy"}) {
        const auto r = run({"multiplicities", "--k", "3", "--n", "3", "--d", "2", "--kind", kind});
        REQUIRE(r.code == 0);
        const auto doc = r.doc();
        CHECK(doc["total_matches"] == true);
        CHECK(doc["ok"] == true);
    }
    const auto nu = run({"multiplicities", "--k", "2", "--n", "4", "--m", "2", "--kind", "nu"});
    CHECK(nu.doc()["total"] == 12);
    CHECK(nu.doc()["oracle_agrees"] == true);

    const auto syz = run({"multiplicities", "--k", "2", "--n", "4", "--d", "2", "--kind", "syzygy"});
    CHECK(syz.doc()["total"] == 3);

    CHECK(run({"multiplicities", "--k", "2", "--n", "4", "--kind", "bogus"}).code == 2);
}

TEST_CASE("verify single curves")
{
    const auto q = run({"verify", "--k", "5", "--n", "2"});
    CHECK(q.code == 0);
    CHECK(q.doc()["warnings"].size() == 1);
    CHECK_FALSE(q.doc().contains("degree2"));

    const auto h = run({"verify", "--k", "4", "--n", "2", "--seed", "5"});
    CHECK(h.code == 0);
    CHECK(h.doc()["ok"] == true);

    const auto r = run({"verify", "--k", "3", "--n", "3", "--lambda", "1,2", "--prime", "103"});
    CHECK(r.code == 1);
    const auto doc = r.doc();
    CHECK(doc["failed"] == json::array({"standard_monomial_count", "standard_set_identity"}));
    CHECK(doc["degree2"]["span_rank"] == 28);
    CHECK(doc["degree2"]["kernel_generated"] == true);
    CHECK(doc["checks"]["per_character_matches_mu_minus_nu"] == true);

    const auto pretty = run({"verify", "--k", "2", "--n", "4", "--pretty"});
    CHECK(pretty.out.find("degree2.span_rank: 3") != std::string::npos);

    CHECK(run({"verify", "--k", "3", "--n", "3", "--lambda", "1,2", "--seed", "4"}).code == 2);
    CHECK(run({"verify", "--k", "3", "--n", "3", "--prime", "101"}).code == 2);
    CHECK(run({"verify", "--k", "3", "--n", "3", "--lambda", "2,3"}).code == 2);
}

TEST_CASE("verify grid")
{
    const auto r = run({"verify", "--grid", "3", "3", "2"});
    const auto doc = r.doc();
    REQUIRE(doc.contains("curves"));
    for (const auto& c : doc["curves"]) {
        CHECK(c["properties"]["basis_cardinality"] == true);
        CHECK(c["properties"]["nu_oracle"] == true);
        CHECK(c["properties"]["mu_totals"] == true);
    }
}

TEST_CASE("export")
{
    const auto path = (std::filesystem::temp_directory_path() / "gfc_cli_export.json").string();
    const auto r = run({"export", "--k", "3", "--n", "3", "--seed", "2", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    const auto parsed = gfc::parse_ideal_json(ss.str());
    CHECK(parsed.binomials.size() == 20);
    CHECK(parsed.trinomials.size() == 8);
    CHECK(parsed.variables.size() == 10);
    std::remove(path.c_str());

    const auto cas = run({"export", "--k", "2", "--n", "4", "--format", "cas-text"});
    REQUIRE(cas.code == 0);
    CHECK(cas.out.rfind("// k=2 n=4", 0) == 0);
    CHECK(cas.out.find("ideal I =") != std::string::npos);
}

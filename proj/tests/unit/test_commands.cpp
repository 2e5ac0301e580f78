#include <doctest.h>

#include "pacert/commands.hpp"
#include "pacert/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace pacert;

namespace {

bool has_check(const Report& r, const std::string& name, Status s) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.status == s;
    return false;
}

} // namespace

TEST_CASE("ranges") {
    CHECK(parse_range("1..40") == std::pair<long, long>{1, 40});
    CHECK(parse_range("-2..+8") == std::pair<long, long>{-2, 8});
    CHECK_THROWS_AS(parse_range("1-4"), UsageError);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("report exit codes") {
    Report r;
    r.check("a", true);
    r.observe("o", "x");
    r.assume("z");
    CHECK(r.exit_code() == 0);
    r.partial("p", "budget");
    CHECK(r.exit_code() == 3);
    r.check("b", false);
    CHECK(r.exit_code() == 1);
}

TEST_CASE("report rendering") {
    Report r;
    r.command = "demo";
    r.inputs.push_back({"r", "2"});
    r.check("x, with comma", true, "say \"hi\"");
    Table& t = r.table("t", {"a", "b"});
    t.rows.push_back({"1", "2"});
    auto j = nlohmann::json::parse(render(r, Format::json));
    CHECK(j["command"] == "demo");
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["exit_code"] == 0);
    CHECK(render(r, Format::csv) == "a,b\n1,2\n");
    r.table("u", {"c"});
    std::string csv = render(r, Format::csv);
    CHECK(csv.find("\"x, with comma\"") != std::string::npos);
    CHECK(csv.find("\"say \"\"hi\"\"\"") != std::string::npos);
    CHECK(render(r, Format::text).find("exit status 0") != std::string::npos);
}

TEST_CASE("verify-figure1") {
    RunConfig cfg;
    Report a = cmd_verify_figure1(cfg);
    CHECK(a.exit_code() == 0);
    CHECK(a.summary == "all Figure 1 checks pass");
    CHECK(render(a, Format::json) == render(cmd_verify_figure1(cfg), Format::json));

    auto path = std::filesystem::temp_directory_path() / "pacert_corrupt.rg";
    {
        std::string text = write_ribbon(build_figure1());
        text.replace(text.find("edge "), 5, "edge_");
        std::ofstream(path) << text;
    }
    cfg.graph_file = path.string();
    Report bad = cmd_verify_figure1(cfg);
    CHECK(bad.exit_code() == 1);
    CHECK(has_check(bad, "graph invariants", Status::fail));
    std::filesystem::remove(path);

    // a valid graph whose invariants differ: the torus square
    auto tor = std::filesystem::temp_directory_path() / "pacert_torus.rg";
    std::ofstream(tor) << write_ribbon(build_torus_square());
    cfg.graph_file = tor.string();
    Report t = cmd_verify_figure1(cfg);
    CHECK(t.exit_code() == 1);
    CHECK(has_check(t, "genus 3", Status::fail));
    std::filesystem::remove(tor);
}

TEST_CASE("degree-sweep") {
    RunConfig cfg;
    Report r = cmd_degree_sweep(cfg);
    CHECK(r.exit_code() == 0);
    REQUIRE(r.tables.size() == 1);
    CHECK(r.tables[0].rows.size() == 40);
    CHECK(r.tables[0].rows.back()[2] == "4");
    cfg.m_lo = 1;
    cfg.m_hi = 0;
    CHECK_THROWS_AS(cmd_degree_sweep(cfg), UsageError);
    RunConfig low;
    low.g = 3;
    CHECK_THROWS_AS(cmd_degree_sweep(low), GenusBoundError);
    RunConfig short_range;
    short_range.m_hi = 3;
    CHECK(cmd_degree_sweep(short_range).exit_code() == 1);   // fewer than 5 rows
}

TEST_CASE("twist-probe gates and a small run") {
    RunConfig cfg;
    cfg.m = 0;
    CHECK_THROWS_AS(cmd_twist_probe(cfg), UsageError);
    cfg.m = 2;
    cfg.r = 3;
    CHECK_THROWS_AS(cmd_twist_probe(cfg), UsageError);
    cfg.r = 2;
    cfg.j_range = std::pair<long, long>{0, 4};
    Report r = cmd_twist_probe(cfg);
    CHECK(has_check(r, "f(gamma_j) = gamma_{j+n}", Status::pass));
    CHECK(has_check(r, "pairwise i(gamma_i,gamma_j) != 0", Status::pass));
    CHECK(has_check(r, "gamma_1..gamma_n fill", Status::pass));
    CHECK(has_check(r, "twist sign self-test", Status::pass));
}

TEST_CASE("certify") {
    RunConfig cfg;
    Report r = cmd_certify(cfg);
    CHECK(r.exit_code() == 0);
    CHECK(r.summary.find("(g, d) = (4, 4)") == 0);
    CHECK(nlohmann::json::parse(r.attachment)["conclusion"] == "obstructed");
    CHECK(render(r, Format::json) == render(cmd_certify(cfg), Format::json));

    RunConfig below;
    below.m = 1;
    below.r = 3;
    CHECK(cmd_certify(below).exit_code() == 0);   // onset at 1

    RunConfig gate;
    gate.g = 3;
    try {
        cmd_certify(gate);
        FAIL("gate not enforced");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("g ≥ d/2 + 2") != std::string::npos);
    }
}

TEST_CASE("output files") {
    RunConfig cfg;
    auto dir = std::filesystem::temp_directory_path() / "pacert_out_test";
    std::filesystem::remove_all(dir);
    cfg.out_dir = dir.string();
    cfg.format = Format::json;
    auto files = write_outputs(cmd_certify(cfg), cfg);
    CHECK(std::filesystem::exists(dir / "certify.json"));
    CHECK(std::filesystem::exists(dir / "certificate.json"));
    CHECK(std::filesystem::exists(dir / "degree.csv"));
    CHECK(files.size() == 3);
    std::filesystem::remove_all(dir);
}

// ───────────────────────────────────────────────────────────────────────────
// End-to-end checks of the command-line binary: exit codes, JSON report
// shape, byte-stable reruns, rule-file loading, tracing, and the frame
// subcommands.  The binary path arrives in S2IC_BIN and the bundled rule
// files in S2IC_RULES (both set by the test harness).
// ───────────────────────────────────────────────────────────────────────────

#include <catch2/catch_amalgamated.hpp>
#include "json.hpp"

#include <cstdio>
#include <fstream>

#include "testutil.hpp"

using Json = nlohmann::json;
using testutil::run_cmd;

namespace {

std::string bin() { return testutil::env_or("S2IC_BIN", "./build/s2ic"); }
std::string rules_dir() { return testutil::env_or("S2IC_RULES", "./rules"); }

std::string q(const std::string& s) { return "'" + s + "'"; }

Json parse_json(const std::string& text) {
    INFO("raw output: " << text);
    return Json::parse(text);
}

// First line of a multi-line output.
std::string first_line(const std::string& text) {
    auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/s2ic_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

// ── exit codes ──────────────────────────────────────────────────────────────

TEST_CASE("clean runs exit 0", "[cli]") {
    auto r = run_cmd(bin() + " sat " + q("~(x << !x)"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sat") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with a position", "[cli]") {
    auto r = run_cmd(bin() + " sat " + q("x <<"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("parse error") != std::string::npos);
}

TEST_CASE("unknown rules exit 2", "[cli]") {
    auto r = run_cmd(bin() + " admit no_such_rule");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bad usage exits 2", "[cli]") {
    CHECK(run_cmd(bin() + " qe " + q("x << y")).exit_code == 2);  // --drop missing
    CHECK(run_cmd(bin() + " frame split " + q("frame f; points a;") +
                  " --axiom BOGUS").exit_code == 2);
    CHECK(run_cmd(bin() + " no_such_command").exit_code == 2);
}

TEST_CASE("resource limits exit 3 with a partial report", "[cli]") {
    auto r = run_cmd(bin() + " --json --max-atoms 1 admit rho_s1");
    CHECK(r.exit_code == 3);
    Json j = parse_json(r.out);
    CHECK(j["status"] == "resource_limit");
    CHECK(j.contains("where"));

    auto t = run_cmd(bin() + " --json --timeout 0.000001 admit rho_s1");
    CHECK(t.exit_code == 3);
    CHECK(parse_json(t.out)["status"] == "resource_limit");
}

TEST_CASE("oversized frames exit 3", "[cli]") {
    std::string big = "frame big; points";
    for (int i = 0; i < 20; ++i) big += " q" + std::to_string(i);
    big += ";";
    auto r = run_cmd(bin() + " frame cover " + q(big));
    CHECK(r.exit_code == 3);
    // The bound is adjustable where no subset enumeration is involved...
    auto ok = run_cmd(bin() + " --max-frame-size 20 --json frame cover " + q(big));
    CHECK(ok.exit_code == 0);
    // ...but subset-enumerating operations stay capped at 16 points.
    auto dual = run_cmd(bin() + " --max-frame-size 20 --json frame dual " + q(big));
    CHECK(dual.exit_code == 3);
}

// ── JSON reports ────────────────────────────────────────────────────────────

TEST_CASE("JSON reports carry the schema tag and a model", "[cli]") {
    auto r = run_cmd(bin() + " --json sat " + q("~(x << !x)"));
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["schema"] == "s2ic-report/1");
    CHECK(j["command"] == "sat");
    CHECK(j["status"] == "sat");
    REQUIRE(j.contains("model"));
    CHECK(j["model"]["points"].size() == 2);
    CHECK(j["model"]["valuation"]["x"].size() == 2);
}

TEST_CASE("reruns with timing suppressed are byte-identical", "[cli]") {
    const std::string cmd =
        bin() + " --json --no-timing admit rho9";
    auto a = run_cmd(cmd);
    auto b = run_cmd(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    Json j = parse_json(a.out);
    CHECK(j["stats"]["time_ms"] == 0.0);
}

TEST_CASE("the oracle cross-check reports agreement", "[cli]") {
    auto r = run_cmd(bin() + " --json sat " + q("(x << y) /\\ ~(x << x)") +
                     " --oracle-check --oracle-points 3");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    REQUIRE(j.contains("oracle"));
    CHECK(j["oracle"]["status"] == "sat");
    CHECK(j["oracle"]["agrees"] == true);
}

// ── qe and valid ────────────────────────────────────────────────────────────

TEST_CASE("qe reports the projection and honors --simplify", "[cli]") {
    auto r = run_cmd(bin() + " --json qe " + q("(z << z) /\\ (x << z) /\\ (z << y)") +
                     " --drop z --simplify");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["command"] == "qe");
    CHECK(j["simplified"] == true);
    // The reported formula parses and mentions only kept variables.
    s2ic::FormPtr back = s2ic::parse_contact(j["formula"].get<std::string>());
    std::set<std::string> vars;
    s2ic::form_vars(back, vars);
    CHECK(vars == std::set<std::string>{"x", "y"});
    CHECK(s2ic::entails(back, testutil::cf("x << y")).holds);
    CHECK(s2ic::entails(testutil::cf("x << y"), back).holds);
}

TEST_CASE("valid prints verdicts and countermodels", "[cli]") {
    auto yes = run_cmd(bin() + " valid " + q("(x ~> y) & (y ~> v) -> (x ~> v)"));
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("valid") != std::string::npos);

    auto no = run_cmd(bin() + " --json valid " + q("x ~> y"));
    CHECK(no.exit_code == 0);
    Json j = parse_json(no.out);
    CHECK(j["status"] == "invalid");
    REQUIRE(j.contains("countermodel"));
    CHECK(j["verified"] == true);
}

// ── rule loading ────────────────────────────────────────────────────────────

TEST_CASE("the shipped rule files match the bundled table", "[cli]") {
    for (const s2ic::Pi2Rule& builtin : s2ic::builtin_rules()) {
        std::string path = rules_dir() + "/" + builtin.name + ".p2r";
        std::ifstream in(path);
        REQUIRE(in.good());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::vector<s2ic::Pi2Rule> parsed = s2ic::parse_rules(text);
        REQUIRE(parsed.size() == 1);
        CHECK(s2ic::rule_to_text(parsed[0]) == s2ic::rule_to_text(builtin));
    }
}

TEST_CASE("admit accepts names, file paths, and inline text", "[cli]") {
    auto by_name = run_cmd(bin() + " --json --no-timing admit rho9");
    auto by_file = run_cmd(bin() + " --json --no-timing admit " + q(rules_dir() + "/rho9.p2r"));
    REQUIRE(by_name.exit_code == 0);
    REQUIRE(by_file.exit_code == 0);
    CHECK(by_name.out == by_file.out);

    auto inline_rule = run_cmd(
        bin() + " --json admit " +
        q("rule tiny\nxvars x\npvars p\nF: x ~> p\nG: 0\n"));
    REQUIRE(inline_rule.exit_code == 0);
    CHECK(parse_json(inline_rule.out)["verdict"] == "admissible");
}

TEST_CASE("the fixture rule yields a verified countermodel", "[cli]") {
    auto r = run_cmd(bin() + " --json admit not_admissible_fixture");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["verdict"] == "not_admissible");
    REQUIRE(j.contains("countermodel"));
    CHECK(j["verified"] == true);
}

TEST_CASE("tracing streams one JSON line per branch before the report", "[cli]") {
    auto r = run_cmd(bin() + " --json admit rho9 --trace");
    REQUIRE(r.exit_code == 0);
    Json t = parse_json(first_line(r.out));
    CHECK(t["branch"] == 0);
    CHECK(t.contains("consequent"));
    CHECK(t.contains("existential_part"));
    CHECK(t.contains("qe_result"));
    CHECK(t.contains("residue"));
    CHECK(t["surviving"] == true);

    // The traced elimination result is exactly the interpolated atom.
    s2ic::FormPtr qe = s2ic::parse_contact(t["qe_result"].get<std::string>());
    CHECK(testutil::equivalent(qe, testutil::cf("x1 << x2")));
}

// ── frame subcommands ───────────────────────────────────────────────────────

TEST_CASE("frame dual reports the algebra of an inline frame", "[cli]") {
    auto r = run_cmd(bin() + " --json frame dual " + q("frame pair; points a b; edges a-b;"));
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["elements"] == 4);
    CHECK(j["prec_count"] == 7);
}

TEST_CASE("frame cover emits a 1-step cover with its map", "[cli]") {
    auto r = run_cmd(bin() + " --json frame cover " + q("frame tri; points a b c; edges a-b b-c a-c;"));
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["one_step"] == true);
    // Map endpoints are embedded as full frame objects.
    CHECK(j["map"]["dom"]["name"] == j["cover"]["name"]);
}

TEST_CASE("frame minext splits a point into two copies", "[cli]") {
    auto r = run_cmd(bin() + " --json frame minext " +
                     q("frame path; points a b c; edges a-b b-c;") +
                     " --point b --s1 a --s2 c");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    auto points = j["extension"]["points"];
    CHECK(points.size() == 4);
    bool has_b1 = false, has_b2 = false;
    for (const auto& p : points) {
        if (p == "b_1") has_b1 = true;
        if (p == "b_2") has_b2 = true;
    }
    CHECK(has_b1);
    CHECK(has_b2);
}

TEST_CASE("frame split finds no resolution on a bare pair", "[cli]") {
    auto r = run_cmd(bin() + " --json frame split " + q("frame pair; points a b; edges a-b;") +
                     " --axiom S3");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["holds"] == false);
    CHECK(j["witnesses"].size() >= 1);
}

TEST_CASE("frame quotient collapses the named blocks", "[cli]") {
    auto r = run_cmd(bin() + " --json frame quotient " +
                     q("frame path; points a b c; edges a-b b-c;") + " --blocks " + q("a,c|b"));
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r.out);
    CHECK(j["quotient"]["points"].size() == 2);
}

TEST_CASE("frame amalgam and factor read scenario files", "[cli]") {
    std::string scenario = write_temp(
        "cospan.fsc",
        "frame A; points u v; edges u-v;\n"
        "frame B; points a b c; edges a-b b-c a-c;\n"
        "frame C; points x y; edges x-y;\n"
        "map f B A a>u b>u c>v\n"
        "map g C A x>u y>v\n");
    auto am = run_cmd(bin() + " --json frame amalgam " + q(scenario) + " --left f --right g");
    REQUIRE(am.exit_code == 0);
    Json j = parse_json(am.out);
    CHECK(j["frame"]["points"].size() >= 1);
    CHECK(j["pi1"]["cod"]["name"] == "B");
    CHECK(j["pi2"]["cod"]["name"] == "C");

    auto fc = run_cmd(bin() + " --json frame factor " + q(scenario) + " --map f");
    REQUIRE(fc.exit_code == 0);
    Json k = parse_json(fc.out);
    CHECK(k["steps"].size() == 1);  // |B| − |A| = 1 minimal step
}

TEST_CASE("text mode stays readable", "[cli]") {
    auto r = run_cmd(bin() + " sat " + q("(x << y) /\\ ~(x << x)"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("x = {") != std::string::npos);

    auto a = run_cmd(bin() + " admit rho9");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out.find("admissible") != std::string::npos);
}

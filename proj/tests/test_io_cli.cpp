#include <catch2/catch_amalgamated.hpp>

#include <symcay/cli.hpp>
#include <symcay/io.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace symcay;

static const std::string kDir = SYMCAY_TEST_CATALOG_DIR;

static SpecFile parse(const std::string& text) {
    std::istringstream in(text);
    return parse_spec(in);
}

static std::size_t fail_line(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_spec(in);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 0;
}

TEST_CASE("spec files parse names, groups and directives") {
    SpecFile spec = parse(
        "# a comment\n"
        "degree 5\n"
        "perm a = (1,2,3)  # trailing comment\n"
        "perm b = (1,2,3,4,5)\n"
        "perm g = (2,4)(3,5)\n"
        "group G = <a, b>\n"
        "group H = <a>\n"
        "coset G H g\n");
    CHECK(spec.degree == 5);
    CHECK(spec.perms.size() == 3);
    CHECK(spec.group_names == std::vector<std::string>{"G", "H"});
    CHECK(spec.group("G").order() == 60);
    CHECK(spec.group("H").order() == 3);
    CHECK(spec.perm("g").order() == 2);
    CHECK(spec.directive.kind == DirectiveKind::coset);
    CHECK(spec.directive.group_a == "G");
    CHECK(spec.directive.group_b == "H");
    CHECK(spec.directive.perm == "g");
    CHECK_THROWS_AS(spec.perm("zz"), InvalidParameter);
    CHECK_THROWS_AS(spec.group("zz"), InvalidParameter);
}

TEST_CASE("perm lines multiply repeated cycles in listed order") {
    SpecFile spec = parse(
        "degree 3\n"
        "perm p = (1,2)(1,2)\n"
        "perm q = (1,2)(2,3)\n");
    CHECK(spec.perm("p") == Permutation(3));
    // right-action product: 1 -> 2 under (1,2), then 2 -> 3 under (2,3)
    CHECK(spec.perm("q")(0) == 2);
}

TEST_CASE("cayley and quotient and search directives") {
    SpecFile c = parse(
        "degree 4\n"
        "perm r = (1,2,3,4)\n"
        "perm s = (1,4,3,2)\n"
        "group R = <r>\n"
        "cayley R S = {r, s}\n");
    CHECK(c.directive.kind == DirectiveKind::cayley);
    CHECK(c.directive.set_name == "S");
    CHECK(c.directive.set == std::vector<std::string>{"r", "s"});

    SpecFile q = parse(
        "degree 4\n"
        "perm r = (1,2,3,4)\n"
        "group X = <r>\n"
        "group N = <r>\n"
        "quotient square.edges X N\n");
    CHECK(q.directive.kind == DirectiveKind::quotient);
    CHECK(q.directive.graph_file == "square.edges");

    SpecFile s = parse(
        "degree 4\n"
        "perm r = (1,2,3,4)\n"
        "group G = <r>\n"
        "search G G 2\n");
    CHECK(s.directive.kind == DirectiveKind::search);
    REQUIRE(s.directive.valency.has_value());
    CHECK(*s.directive.valency == 2);
}

TEST_CASE("spec parse errors carry the offending line") {
    CHECK(fail_line("perm a = (1,2)\n") == 1);                               // degree missing
    CHECK(fail_line("degree 4\ndegree 4\n") == 2);                           // duplicated
    CHECK(fail_line("degree 4\nperm a = (1,2)\nperm a = (1,3)\n") == 3);     // duplicate name
    CHECK(fail_line("degree 4\ngroup G = <a>\n") == 2);                      // unknown member
    CHECK(fail_line("degree 4\nperm a = (1,9)\n") == 2);                     // point too large
    CHECK(fail_line("degree 4\nwibble\n") == 2);                             // unknown keyword
    CHECK(fail_line("degree 4\nperm a = (1,2)\ngroup G = <a>\n"
                    "search G G\nsearch G G\n") == 5);                       // two directives
    CHECK(fail_line("degree 4\nperm a = (1,2)\ngroup G = [a]\n") == 3);      // bad brackets
    CHECK(fail_line("degree 4\nperm a = (1,2)\ngroup G = <a>\n"
                    "cayley G S = {a} extra\n") == 4);                       // trailing text
    CHECK(fail_line("degree 4\nperm a = (1,2)\ngroup G = <a>\n"
                    "search G G -3\n") == 4);                                // bad valency
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(load_spec("/nonexistent.spec"), InvalidParameter);
}

TEST_CASE("edge lists parse and validate") {
    std::istringstream in(
        "# triangle plus isolated vertex\n"
        "vertices 4\n"
        "1 2\n"
        "2 3\n"
        "3 1\n");
    SimpleGraph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(3) == 0);

    auto bad = [](const std::string& text) {
        std::istringstream s(text);
        return parse_edge_list(s);
    };
    CHECK_THROWS_AS(bad("1 2\n"), ParseError);                  // no vertices line
    CHECK_THROWS_AS(bad("vertices 3\n1 5\n"), ParseError);      // out of range
    CHECK_THROWS_AS(bad("vertices 3\n2 2\n"), ParseError);      // loop
    CHECK_THROWS_AS(bad("vertices 3\n1 2 3\n"), ParseError);    // trailing token
    CHECK_THROWS_AS(bad(""), ParseError);
}

TEST_CASE("relative graph paths resolve against the spec file") {
    CHECK(resolve_relative("/a/b/c.spec", "d.edges") == "/a/b/d.edges");
    CHECK(resolve_relative("/a/b/c.spec", "/abs.edges") == "/abs.edges");
    CHECK(resolve_relative("c.spec", "d.edges") == "d.edges");
}

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli exit code 0: passing commands") {
    CHECK(cli({"check-stab-table"}).code == 0);
    CHECK(cli({"check-table1"}).code == 0);
    CHECK(cli({"--catalog", kDir, "verify-example", "a39"}).code == 0);
    CHECK(cli({"coset", kDir + "/petersen.spec"}).code == 0);
    CHECK(cli({"cayley", kDir + "/cayley_c5.spec"}).code == 0);
    CHECK(cli({"quotient", kDir + "/cube_quotient.spec"}).code == 0);
    CHECK(cli({"search", kDir + "/petersen_search.spec"}).code == 0);
    CHECK(cli({"aut", kDir + "/petersen.edges"}).code == 0);
}

TEST_CASE("cli exit code 1: a failing check") {
    namespace fs = std::filesystem;
    fs::path spec = fs::temp_directory_path() / "symcay_failing_coset.spec";
    std::ofstream(spec) << "degree 4\n"
                           "perm a = (1,2)\n"
                           "perm b = (1,2,3,4)\n"
                           "perm g = (3,4)\n"
                           "group G = <a, b>\n"
                           "group H = <a>\n"
                           "coset G H g\n";
    CliRun run = cli({"coset", spec.string()});
    CHECK(run.code == 1);
    CHECK(run.out.find("✗") != std::string::npos);
    CHECK(run.out.find("FAIL") != std::string::npos);
    fs::remove(spec);
}

TEST_CASE("cli exit code 2: input errors") {
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"verify-example", "bogus"}).code == 2);
    CHECK(cli({"verify-example"}).code == 2);
    CHECK(cli({"coset", "/nope.spec"}).code == 2);
    CHECK(cli({"--enum-cap", "-5", "check-table1"}).code == 2);
    CHECK(cli({"aut", kDir + "/petersen.spec"}).code == 2);  // spec fed to an edge-list command
    CHECK(cli({"search", kDir + "/petersen.spec"}).code == 2);  // wrong directive kind
    CHECK(cli({}).code == 2);
}

TEST_CASE("cli exit code 3: caps exceeded") {
    CHECK(cli({"search", kDir + "/search_a104.spec"}).code == 3);
    CHECK(cli({"coset", kDir + "/coset_a39.spec"}).code == 3);
    CHECK(cli({"--vertex-cap", "5", "aut", kDir + "/petersen.edges"}).code == 3);
    CHECK(cli({"--enum-cap", "10", "--catalog", kDir, "verify-example", "a39"}).code == 3);
}

TEST_CASE("json reports are byte-stable and round-trip") {
    CliRun first = cli({"--json", "check-table1"});
    CliRun second = cli({"--json", "check-table1"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    auto parsed = nlohmann::json::parse(first.out);
    CHECK(parsed["overall"] == "pass");
    CHECK(parsed["command"] == "check-table1");
    CHECK(parsed["version"] == "1.0");
    CHECK(parsed["checks"].is_array());
    CHECK(parsed["checks"].size() == 63);
    for (const auto& c : parsed["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("claim"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("actual"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("flag"));
    }
    CHECK(nlohmann::json::parse(parsed.dump(2)) == parsed);
}

TEST_CASE("json mode flags the amended and constant rows") {
    CliRun run = cli({"--json", "check-table1"});
    auto parsed = nlohmann::json::parse(run.out);
    int amended = 0, constant = 0;
    for (const auto& c : parsed["checks"]) {
        if (c["flag"] == "amended") ++amended;
        if (c["flag"] == "constant") ++constant;
    }
    CHECK(amended == 1);
    CHECK(constant == 4);
}

TEST_CASE("merged verification keeps checks sorted by name") {
    CliRun run = cli({"--json", "--catalog", kDir, "--workers", "2", "verify-example", "all"});
    REQUIRE(run.code == 0);
    auto parsed = nlohmann::json::parse(run.out);
    CHECK(parsed["command"] == "verify-example all");
    std::vector<std::string> names;
    for (const auto& c : parsed["checks"]) names.push_back(c["name"].get<std::string>());
    CHECK(names.size() == 45);
    CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("help text is reachable") {
    CliRun run = cli({"--help"});
    CHECK(run.code == 0);
    CHECK(run.out.find("verify-example") != std::string::npos);
}

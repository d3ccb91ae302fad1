#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "lsc/error.hpp"
#include "lsc/generate.hpp"
#include "lsc/io.hpp"

using namespace lsc;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_instance_text(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return 0;
}

}  // namespace

TEST_CASE("instance parsing") {
    Instance inst = parse_instance_text(
        "# leading comment\n"
        "LSC 1\n"
        "# name: hash\n"
        "# source: hand\n"
        "\n"
        "-1 0 2 0   # bottom rail\n"
        "-1 1 2 1\n"
        "0 -1 0 2\n"
        "1 -1 1 2\n");
    CHECK(inst.size() == 4);
    CHECK(inst.metadata.name == "hash");
    CHECK(inst.metadata.source == "hand");
    CHECK(inst.segment(0).a == Point(-1, 0));
    CHECK(inst == validate_raw({{-1, 0, 2, 0}, {-1, 1, 2, 1}, {0, -1, 0, 2}, {1, -1, 1, 2}}, {"hash", "hand"}));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("LSC 2\n") == 1);
    CHECK(parse_error_line("0 0 1 1\n") == 1);
    CHECK(parse_error_line("LSC 1\n0 0 1 1\n0 0 1\n") == 3);
    CHECK(parse_error_line("LSC 1\n\n0 0 1.5 1\n") == 3);
    CHECK(parse_error_line("") == 1);
    CHECK_THROWS_AS(parse_instance_text("LSC 1\n0 0 2 0\n1 0 3 0\n"), OverlapViolation);
}

TEST_CASE("large coordinates survive") {
    Instance inst = parse_instance_text("LSC 1\n0 0 123456789012345678901234567890 1\n");
    CHECK(inst.segment(0).b.x == Rational(Integer("123456789012345678901234567890")));
    CHECK(parse_instance_text(emit_instance(inst)) == inst);
}

TEST_CASE("emit then parse is the identity") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance a = random_axis_parallel(12, 32, seed);
        Instance b = random_general(10, 32, seed);
        CHECK(parse_instance_text(emit_instance(a)) == a);
        CHECK(parse_instance_text(emit_instance(b)) == b);
        CHECK(emit_instance(parse_instance_text(emit_instance(a))) == emit_instance(a));
    }
    CHECK(parse_instance_text(emit_instance(triple_tight())) == triple_tight());
}

TEST_CASE("solutions") {
    std::istringstream in("SOL 3\n0\n4\n7\n");
    Cover c = parse_solution(in);
    CHECK(c.chosen == std::vector<int>{0, 4, 7});
    CHECK(emit_solution(c) == "SOL 3\n0\n4\n7\n");
    std::istringstream bad("SOL 2\n1\n");
    CHECK_THROWS_AS(parse_solution(bad), ParseError);
    std::istringstream unsorted("SOL 2\n3\n1\n");
    CHECK_THROWS_AS(parse_solution(unsorted), ParseError);
}

TEST_CASE("graphs and roles") {
    std::istringstream in("3 2\n0 1\n2 1\n");
    Graph g = parse_graph(in);
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(emit_graph(g) == "3 2\n0 1\n1 2\n");
    std::istringstream wrong("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_graph(wrong), ParseError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(parse_graph(loop), ParseError);

    std::istringstream roles("0 H 0\n1 E 0 1 v\n2 B\n");
    auto r = parse_roles(roles);
    REQUIRE(r.size() == 3);
    CHECK(emit_roles(r) == "0 H 0\n1 E 0 1 v\n2 B\n");
}

TEST_CASE("atomic file writes") {
    auto dir = std::filesystem::temp_directory_path() / "lsc_io_test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "grid.lsc").string();
    write_file_atomic(path, emit_instance(grid(2, 2)));
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    Instance back = load_instance(path);
    CHECK(back == grid(2, 2));
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_file((dir / "missing").string()), Error);
}

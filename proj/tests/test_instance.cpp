#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsc/error.hpp"
#include "lsc/instance.hpp"

using namespace lsc;

TEST_CASE("valid single crossing") {
    Instance inst = validate_raw({{0, 0, 2, 0}, {1, -1, 1, 1}});
    CHECK(inst.size() == 2);
    CHECK(inst.segment(1).id == 1);
    CHECK(inst.axis_parallel());
}

TEST_CASE("overlap is rejected with the pair") {
    try {
        validate_raw({{0, 0, 2, 0}, {1, 0, 3, 0}});
        FAIL("expected OverlapViolation");
    } catch (const OverlapViolation& e) {
        CHECK(e.first == 0);
        CHECK(e.second == 1);
    }
}

TEST_CASE("three segments through a point violate general position") {
    try {
        validate_raw({{0, 0, 2, 0}, {1, -1, 1, 1}, {0, -1, 2, 1}});
        FAIL("expected GeneralPositionViolation");
    } catch (const GeneralPositionViolation& e) {
        CHECK(e.point == "(1,0)");
        CHECK(e.segments == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("three segments meeting at a shared endpoint violate general position") {
    CHECK_THROWS_AS(validate_raw({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, -1}}), GeneralPositionViolation);
}

TEST_CASE("two segments sharing an endpoint are fine") {
    CHECK_NOTHROW(validate_raw({{0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("degenerate and duplicate segments") {
    try {
        validate_raw({{0, 0, 1, 0}, {2, 2, 2, 2}});
        FAIL("expected DegenerateSegment");
    } catch (const DegenerateSegment& e) {
        CHECK(e.id == 1);
    }
    try {
        validate_raw({{0, 0, 1, 0}, {5, 5, 6, 7}, {1, 0, 0, 0}});
        FAIL("expected DuplicateSegment");
    } catch (const DuplicateSegment& e) {
        CHECK(e.first == 0);
        CHECK(e.second == 2);
    }
}

TEST_CASE("general orientations and equality") {
    Instance a = validate_raw({{0, 0, 4, 4}, {0, 4, 4, 0}}, {"x", "test"});
    Instance b = validate_raw({{0, 0, 4, 4}, {0, 4, 4, 0}}, {"x", "test"});
    CHECK_FALSE(a.axis_parallel());
    CHECK(a == b);
    Instance c = validate_raw({{0, 0, 4, 4}, {0, 4, 4, 0}}, {"y", "test"});
    CHECK_FALSE(a == c);
}

TEST_CASE("empty instance is valid") {
    CHECK(validate_raw({}).size() == 0);
}

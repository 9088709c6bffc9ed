#include <doctest.h>

#include "brt/errors.hpp"
#include "brt/permutation.hpp"

using brt::parse_cycles;
using brt::Permutation;

TEST_CASE("identity and composition") {
    const Permutation id(5);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);
    CHECK(id.cycle_string() == "()");

    const Permutation a = parse_cycles("(1,2,3)");
    const Permutation b = parse_cycles("(1,2)");
    CHECK((a * a * a).is_identity());
    CHECK((a * a.inverse()).is_identity());
    // composition applies the right factor first
    const Permutation ab = a * b;       // 1 -> 2 -> 3
    CHECK(ab(0) == 2);
    CHECK(a.power(-1) == a.inverse());
    CHECK(a.power(5) == a * a);
}

TEST_CASE("orders from cycle type") {
    CHECK(parse_cycles("(1,2,3)(4,5)").order() == 6);
    CHECK(parse_cycles("(1,2,3,4,5)").order() == 5);
    CHECK(parse_cycles("(1,2)(3,4)").order() == 2);
}

TEST_CASE("cycle notation round trip") {
    for (const char* text : {"(1,2,3)(4,5)", "(2,3)(4,5)", "(1,2,3,4,5)", "()"}) {
        const Permutation p = parse_cycles(text);
        CHECK(parse_cycles(p.cycle_string()) == p);
    }
    CHECK(parse_cycles("(1,2,3)(4,5)").cycle_string() == "(1,2,3)(4,5)");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_cycles("(1,2"), brt::spec_parse_error);
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)"), brt::spec_parse_error);  // repeated point
    CHECK_THROWS_AS(parse_cycles("(0,1)"), brt::spec_parse_error);
    CHECK_THROWS_AS(parse_cycles("1,2"), brt::spec_parse_error);
    CHECK_THROWS_AS(parse_cycles("(1,99999)"), brt::spec_parse_error);  // degree cap
    try {
        parse_cycles("(1,2)(2,3)");
    } catch (const brt::spec_parse_error& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("bijection validation") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
}

TEST_CASE("extension pads fixed points") {
    const Permutation p = parse_cycles("(1,2)").extended(4);
    CHECK(p.degree() == 4);
    CHECK(p(2) == 2);
    CHECK(p(3) == 3);
}

#include <doctest.h>

#include "dtroots/notation.hpp"

using namespace dtroots;

TEST_CASE("text round trip") {
    const auto d = canonical_form(parse_text("(6, 0, 5; (1, 2), (2, 3))"));
    CHECK(to_text(d) == "(6, 0, 5; (1, 2), (2, 3))");
    CHECK(canonical_form(parse_text(to_text(d))) == d);
    CHECK(to_text(DataSet::trivial(2)) == "(1, 2, 1;)");
    CHECK(parse_text("(1, 2, 1;)") == RawTuple{1, 2, 1, {}});
}

TEST_CASE("whitespace is free-form") {
    const RawTuple expect{8, 0, 1, {{1, 2}, {3, 8}}};
    CHECK(parse_text("(8,0,1;(1,2),(3,8))") == expect);
    CHECK(parse_text("  ( 8 ,0,  1 ;\n (1 , 2),(3,8) )  ") == expect);
}

TEST_CASE("negative residues are reduced by the parser only") {
    CHECK(parse_text("(4, 0, -1; (1, 2), (-3, 4))") == RawTuple{4, 0, 3, {{1, 2}, {1, 4}}});
    const auto kept = parse_text("(4, 0, 9; (1, 2), (5, 4))");
    CHECK(kept.a == 9);
    CHECK(kept.cones[1].c == 5);
    CHECK(validate(kept).has(Condition::Range));
}

TEST_CASE("json round trip") {
    const auto d = canonical_form(parse_text("(4, 0, 1; (1, 2), (1, 4))"));
    const auto j = to_json(d);
    CHECK(j.dump() == R"({"n":4,"gt":0,"a":1,"cones":[[1,2],[1,4]]})");
    CHECK(parse_json(nlohmann::json::parse(j.dump())) == d.raw());
    CHECK(parse_literal(j.dump()) == d.raw());
    CHECK(parse_literal(" (4,0,1;(1,2),(1,4))") == d.raw());
}

TEST_CASE("malformed literals") {
    CHECK_THROWS_AS((void)parse_text("(4, 0, 1 (1, 2))"), ParseError);
    CHECK_THROWS_AS((void)parse_text("(4, 0; (1, 2))"), ParseError);
    CHECK_THROWS_AS((void)parse_text("(4, 0, 1; (1, 2)"), ParseError);
    CHECK_THROWS_AS((void)parse_text("(4, 0, 1; (1, 2)) junk"), ParseError);
    CHECK_THROWS_AS((void)parse_literal(""), ParseError);
    CHECK_THROWS_AS((void)parse_literal("{\"n\": 4}"), ParseError);
    CHECK_THROWS_AS((void)parse_literal("{not json"), ParseError);
}

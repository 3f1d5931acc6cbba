#include <map>

#include "doctest.h"
#include "test_support.hpp"

using namespace knotoid;

TEST_SUITE_BEGIN("gauss code");

TEST_CASE("parsing the empty string gives the trivial diagram") {
    GaussCode code = parse_code("");
    CHECK(code.empty());
    CHECK(code.chord_count() == 0);
    CHECK(parse_code("   \t ").empty());
}

TEST_CASE("parsing a single kink") {
    GaussCode code = parse_code("O1+U1+");
    REQUIRE(code.passage_count() == 2);
    CHECK(code.chord_count() == 1);
    CHECK(code.passages[0] == Passage{1, Role::Over, +1});
    CHECK(code.passages[1] == Passage{1, Role::Under, +1});
}

TEST_CASE("space-separated tokens and larger labels") {
    GaussCode code = parse_code("O12-  U12-");
    REQUIRE(code.passage_count() == 2);
    CHECK(code.passages[0].chord == 12);
    CHECK(code.passages[0].sign == -1);
}

TEST_CASE("three-chord example validates") {
    GaussCode code = testsupport::e3();
    CHECK(code.passage_count() == 6);
    CHECK(code.chord_count() == 3);
    CHECK(!validate(code).has_value());
}

TEST_CASE("parse errors carry their error codes") {
    CHECK_THROWS_WITH_AS(parse_code("O1"), doctest::Contains("MalformedToken"), Error);
    CHECK_THROWS_WITH_AS(parse_code("X1+"), doctest::Contains("MalformedToken"), Error);
    CHECK_THROWS_WITH_AS(parse_code("O0+U0+"), doctest::Contains("MalformedToken"), Error);
    CHECK_THROWS_WITH_AS(parse_code("O1+O1+"), doctest::Contains("ChordArity"), Error);
    CHECK_THROWS_WITH_AS(parse_code("O1+"), doctest::Contains("ChordArity"), Error);
    CHECK_THROWS_WITH_AS(parse_code("O1+U1+O1+U1+"), doctest::Contains("ChordArity"), Error);
    CHECK_THROWS_WITH_AS(parse_code("O1+U1-"), doctest::Contains("SignMismatch"), Error);
}

TEST_CASE("serialization round-trips and preserves labels") {
    CHECK(serialize_code(parse_code("")) == "");
    CHECK(serialize_code(parse_code("O1+U1+")) == "O1+U1+");
    CHECK(serialize_code(parse_code("O2-U2-")) == "O2-U2-");
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        CHECK(parse_code(serialize_code(code)) == code);
    }
}

TEST_CASE("reverse flips the sequence only") {
    CHECK(serialize_code(reverse(parse_code(""))) == "");
    CHECK(serialize_code(reverse(parse_code("O1+U1+"))) == "U1+O1+");
    CHECK(serialize_code(reverse(testsupport::e3())) == "U3+O2+U1+O3+U2+O1+");
}

TEST_CASE("mirror flips roles and signs in place") {
    CHECK(serialize_code(mirror(parse_code(""))) == "");
    CHECK(serialize_code(mirror(parse_code("O1+U1+"))) == "U1-O1-");
}

TEST_CASE("reverse and mirror are involutions and commute") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        CHECK(reverse(reverse(code)) == code);
        CHECK(mirror(mirror(code)) == code);
        CHECK(mirror(reverse(code)) == reverse(mirror(code)));
    }
}

TEST_CASE("virtual closure keeps the passage data") {
    CHECK(virtual_closure(parse_code("")).passage_count() == 0);
    CyclicGaussCode closed = virtual_closure(parse_code("O1+U1+"));
    REQUIRE(closed.passage_count() == 2);
    CHECK(closed.passages[0].role == Role::Over);
    CHECK(virtual_closure(testsupport::e3()).chord_count() == 3);
}

TEST_CASE("canonical key relabels by first appearance") {
    CHECK(canonical_key(parse_code("O7-U7-")) == "O1-U1-");
    CHECK(canonical_key(parse_code("O2+O1+U2+U1+")) == "O1+O2+U1+U2+");
    CHECK(canonical_key(parse_code("")) == "");
}

TEST_CASE("canonical key is invariant under relabeling and nothing else") {
    std::mt19937_64 rng(7);
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        GaussCode relabeled = code;
        std::map<int, int> rename;
        int base = 1 + static_cast<int>(rng() % 40);
        for (Passage& p : relabeled.passages) {
            if (!rename.count(p.chord)) rename[p.chord] = base + 3 * static_cast<int>(rename.size());
            p.chord = rename[p.chord];
        }
        CHECK(canonical_key(code) == canonical_key(relabeled));
    }
    // Distinct structures in the first-appearance stream get distinct keys.
    std::set<std::string> keys;
    std::size_t total = 0;
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        keys.insert(canonical_key(code));
        ++total;
    }
    CHECK(keys.size() == total);
}

TEST_CASE("passage count is twice the chord count") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        CHECK(code.passage_count() == 2 * code.chord_count());
    }
}

TEST_SUITE_END();

#include "doctest.h"
#include "test_support.hpp"

using namespace knotoid;
using testsupport::e3;

TEST_SUITE_BEGIN("warping");

TEST_CASE("base class counts") {
    CHECK(base_class_count(parse_code("")) == 1);
    CHECK(base_class_count(parse_code("O1+U1+")) == 2);
    CHECK(base_class_count(e3()) == 6);
}

TEST_CASE("traversals are rotations with the break after position 2n") {
    Traversal t0 = traversal(e3(), 0);
    CHECK(t0.order == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(t0.break_index == 6);

    Traversal t1 = traversal(e3(), 1);
    CHECK(t1.order == std::vector<std::size_t>{1, 2, 3, 4, 5, 0});
    CHECK(t1.break_index == 5);

    Traversal k = traversal(parse_code("O1+U1+"), 1);
    CHECK(k.order == std::vector<std::size_t>{1, 0});

    CHECK_THROWS_WITH_AS(traversal(e3(), 6), doctest::Contains("BaseOutOfRange"), Error);
}

TEST_CASE("warping crossings of the example code") {
    CHECK(warping_crossings(e3(), 0) == std::set<int>{2});
    CHECK(warping_crossings(e3(), 3) == std::set<int>{1, 3});
    CHECK(warping_crossings(parse_code("O1+U1+"), 0).empty());
}

TEST_CASE("warping degrees per class and the minimum") {
    CHECK(warping_degree_profile(e3()) == std::vector<std::size_t>{1, 2, 1, 2, 1, 2});
    CHECK(warping_degree(parse_code("")) == 0);
    CHECK(warping_degree(e3()) == 1);
    CHECK(warping_degree(parse_code("U1+U2+O1+O2+")) == 0);  // class 2 reads O1 O2 U1 U2
    CHECK(warping_degree_at(parse_code(""), 0) == 0);
}

TEST_CASE("warping set matches an independent rank-arithmetic oracle") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        for (std::size_t b = 0; b < base_class_count(code); ++b) {
            CHECK(warping_crossings(code, b) == testsupport::oracle_warping_set(code, b));
        }
    }
}

TEST_CASE("arc labels cut at the base point, under passages and the break") {
    ArcLabeling arcs = arc_labels(e3(), 0);
    CHECK(arcs.arc_of_passage == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK(arcs.arc_count == 5);  // cr + 2

    CHECK(arc_labels(parse_code("O1+U1+"), 0).arc_count == 3);
    CHECK(arc_labels(parse_code(""), 0).arc_count == 2);
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        for (std::size_t b = 0; b < base_class_count(code); ++b) {
            CHECK(arc_labels(code, b).arc_count ==
                  static_cast<int>(code.chord_count()) + 2);
        }
    }
}

TEST_CASE("cutting numbers of the example code at class 0") {
    CHECK(cutting_number(e3(), 0, 2) == 3);
    CHECK(cutting_number(e3(), 0, 1) == -3);
    CHECK(cutting_number(e3(), 0, 3) == -3);
    CHECK_THROWS_WITH_AS(cutting_number(e3(), 0, 9), doctest::Contains("UnknownChord"), Error);
    CHECK_THROWS_WITH_AS(cutting_number(e3(), 7, 1), doctest::Contains("BaseOutOfRange"), Error);
}

TEST_CASE("cut sign decides warping status; cuts are odd and nonzero") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        for (std::size_t b = 0; b < base_class_count(code); ++b) {
            auto warping = warping_crossings(code, b);
            for (std::size_t c = 1; c <= code.chord_count(); ++c) {
                const int cut = cutting_number(code, b, static_cast<int>(c));
                CHECK(cut != 0);
                CHECK(cut % 2 != 0);
                CHECK((cut > 0) == (warping.count(static_cast<int>(c)) > 0));
            }
        }
    }
}

TEST_CASE("degree sum across orientations equals the crossing number") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        const GaussCode rev = reverse(code);
        for (std::size_t b = 0; b < base_class_count(code); ++b) {
            CHECK(warping_degree_at(code, b) +
                      warping_degree_at(rev, reversed_base_class(code, b)) ==
                  code.chord_count());
        }
    }
}

TEST_CASE("adjacent base classes differ by the crossed passage's role") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        if (code.empty()) continue;
        auto d = warping_degree_profile(code);
        const std::size_t m = code.passage_count();
        for (std::size_t b = 0; b < m; ++b) {
            const int step = code.passages[b].role == Role::Over ? 1 : -1;
            CHECK(static_cast<int>(d[(b + 1) % m]) == static_cast<int>(d[b]) + step);
        }
    }
}

TEST_CASE("alternation predicate") {
    CHECK(is_alternating(e3()));
    CHECK(!is_alternating(parse_code("O1+O2+U1+U2+")));
    CHECK(is_alternating(parse_code("O1+U1+")));
    CHECK(is_alternating(parse_code("")));
    // For even-length single-strand codes the two rules agree.
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        CHECK(is_alternating(code, AlternationRule::Cyclic) ==
              is_alternating(code, AlternationRule::Linear));
    }
}

TEST_CASE("descending predicate") {
    CHECK(is_descending(parse_code("")));
    CHECK(is_descending(parse_code("O1+O2+U1+U2+")));
    CHECK(!is_descending(e3()));
}

TEST_CASE("unknotting upper bounds") {
    UpperBounds b3 = unknotting_upper_bounds(e3());
    CHECK(b3.warping_bound == 1);
    REQUIRE(b3.half_crossing_bound.has_value());
    CHECK(*b3.half_crossing_bound == doctest::Approx(1.0));

    UpperBounds b1 = unknotting_upper_bounds(parse_code("O1+U1+"));
    CHECK(b1.warping_bound == 0);
    CHECK(*b1.half_crossing_bound == doctest::Approx(0.0));

    UpperBounds b0 = unknotting_upper_bounds(parse_code(""));
    CHECK(b0.warping_bound == 0);
    CHECK(!b0.half_crossing_bound.has_value());
}

TEST_CASE("invariant reports") {
    InvariantReport r3 = report(e3());
    CHECK(r3.cr == 3);
    CHECK(r3.d == 1);
    CHECK(r3.d_rev == 1);
    CHECK(r3.alternating);
    CHECK(!r3.descending);

    InvariantReport r0 = report(parse_code(""));
    CHECK(r0.cr == 0);
    CHECK(r0.d == 0);
    CHECK(r0.descending);

    InvariantReport r1 = report(parse_code("U1+O1+"));
    CHECK(r1.cr == 1);
    CHECK(r1.d == 0);
    CHECK(r1.d_at == std::vector<std::size_t>{1, 0});
    CHECK(r1.descending);
}

TEST_CASE("cyclic warping degree of closures") {
    CHECK(cyclic_warping_degree(virtual_closure(parse_code(""))) == 0);
    CHECK(cyclic_warping_degree(virtual_closure(parse_code("O1+U1+"))) == 0);
    CHECK(cyclic_warping_degree(virtual_closure(e3())) == 1);
}

TEST_CASE("monotone diagrams close to monotone welded diagrams") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        if (warping_degree(code) == 0) {
            CHECK(cyclic_warping_degree(virtual_closure(code)) == 0);
        }
    }
}

TEST_SUITE_END();

#include "doctest.h"
#include "knotoid/unknot.hpp"
#include "test_support.hpp"

using namespace knotoid;
using testsupport::e3;

TEST_SUITE_BEGIN("unknot");

TEST_CASE("warping witness by crossing changes on the example code") {
    UnknotResult res = warping_unknot_certificate(e3(), UnknotOp::Change);
    REQUIRE(res.found);
    CHECK(res.upper_bound == 1);
    CHECK(res.modified_chords == std::vector<int>{2});
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->start == e3());
    VerifyResult vr = verify_certificate(*res.certificate);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
    CHECK(vr.crossing_changes == 1);
    CHECK(vr.virtualizations == 0);
}

TEST_CASE("warping witness by virtualization on the example code") {
    UnknotResult res = warping_unknot_certificate(e3(), UnknotOp::Virtualize);
    REQUIRE(res.found);
    CHECK(res.upper_bound == 1);
    CHECK(res.modified_chords == std::vector<int>{2});
    VerifyResult vr = verify_certificate(*res.certificate);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
    CHECK(vr.virtualizations == 1);
}

TEST_CASE("monotone codes get zero-modification witnesses") {
    for (UnknotOp op : {UnknotOp::Change, UnknotOp::Virtualize}) {
        UnknotResult res = warping_unknot_certificate(parse_code("O1+O2+U1+U2+"), op);
        CHECK(res.upper_bound == 0);
        CHECK(res.modified_chords.empty());
        VerifyResult vr = verify_certificate(*res.certificate);
        REQUIRE(vr.ok());
        CHECK(vr.crossing_changes == 0);
        CHECK(vr.virtualizations == 0);
    }
}

TEST_CASE("a reverse-orientation winner still certifies from the input code") {
    // d = 1 but the reversal is descending, so the bound is 0.
    GaussCode code = parse_code("O1+U2+O2+U1+");
    CHECK(warping_degree(code) == 1);
    CHECK(warping_degree(reverse(code)) == 0);
    UnknotResult res = warping_unknot_certificate(code, UnknotOp::Change);
    REQUIRE(res.found);
    CHECK(res.upper_bound == 0);
    CHECK(res.used_reverse_orientation);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->start == code);
    VerifyResult vr = verify_certificate(*res.certificate);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
}

TEST_CASE("subset search finds zero-change witnesses for descending codes") {
    UnknotResult res = unknot_search(parse_code("O1+O2+U1+U2+"), UnknotOp::Change, 2);
    REQUIRE(res.found);
    CHECK(res.upper_bound == 0);
    CHECK(res.exhaustive_below == 0);
}

TEST_CASE("subset search on the trefoil-pattern code certifies triviality") {
    // The endpoint-adjacent over passage lets the search succeed at k = 0.
    for (UnknotOp op : {UnknotOp::Change, UnknotOp::Virtualize}) {
        UnknotResult res = unknot_search(e3(), op, 2, SearchBudget{5000, 10, 0});
        REQUIRE(res.found);
        CHECK(res.upper_bound == 0);
        VerifyResult vr = verify_certificate(*res.certificate);
        REQUIRE(vr.ok());
        CHECK(vr.final_code.empty());
    }
}

TEST_CASE("the warping-bound level always certifies even with a minimal budget") {
    // Level k = min(d, d_rev) contains the warping subset, whose result is
    // monotone, so the search succeeds there regardless of the node budget.
    GaussCode code = parse_code("U1+O2+U3+O1+U2+O3+");
    const std::size_t bound = std::min(warping_degree(code), warping_degree(reverse(code)));
    REQUIRE(bound == 1);
    UnknotResult res = unknot_search(code, UnknotOp::Change, 3, SearchBudget{1, 12, 0});
    REQUIRE(res.found);
    CHECK(res.upper_bound == bound);
    CHECK(res.exhaustive_below == bound);
    VerifyResult vr = verify_certificate(*res.certificate);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
    CHECK(vr.crossing_changes == bound);
}

TEST_CASE("an exhausted search reports Unknown with the searched range") {
    GaussCode code = parse_code("U1+O2+U3+O1+U2+O3+");
    UnknotResult res = unknot_search(code, UnknotOp::Change, 0, SearchBudget{1, 12, 0});
    CHECK(!res.found);
    CHECK(res.exhaustive_below == 1);
    CHECK(!res.certificate.has_value());
}

TEST_CASE("search bounds never exceed the warping bounds") {
    for (const GaussCode& code : testsupport::corpus_upto(2)) {
        for (UnknotOp op : {UnknotOp::Change, UnknotOp::Virtualize}) {
            UnknotResult warping = warping_unknot_certificate(code, op);
            UnknotResult search =
                unknot_search(code, op, warping.upper_bound, SearchBudget{300, 6, 0});
            REQUIRE(search.found);
            CHECK(search.upper_bound <= warping.upper_bound);
            VerifyResult vr = verify_certificate(*search.certificate);
            REQUIRE(vr.ok());
            CHECK(vr.final_code.empty());
            const std::size_t modifications =
                op == UnknotOp::Change ? vr.crossing_changes : vr.virtualizations;
            CHECK(modifications == search.upper_bound);
        }
    }
}

TEST_CASE("closure data") {
    ClosureData a = closure_unknot_data(parse_code("O1+O2+U1+U2+"));
    CHECK(a.cyclic_d == 0);
    CHECK(a.monotone_closure);

    ClosureData b = closure_unknot_data(parse_code(""));
    CHECK(b.cyclic_d == 0);
    CHECK(b.monotone_closure);

    ClosureData c = closure_unknot_data(e3());
    CHECK(c.cyclic_d == 1);
    CHECK(!c.monotone_closure);
}

TEST_SUITE_END();

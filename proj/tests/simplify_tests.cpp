#include "doctest.h"
#include "knotoid/simplify.hpp"
#include "test_support.hpp"

using namespace knotoid;
using testsupport::e3;

TEST_SUITE_BEGIN("simplify");

namespace {

std::map<MoveKind, std::size_t> kind_counts(const Certificate& cert) {
    std::map<MoveKind, std::size_t> counts;
    for (const CertificateStep& step : cert.steps) ++counts[kind_of(step.move)];
    return counts;
}

}  // namespace

TEST_CASE("sliding out a chord through its kink side") {
    Certificate cert = slide_out_chord(parse_code("O1+O2+U1+U2+"), 1, 0);
    REQUIRE(cert.steps.size() == 2);
    CHECK(kind_of(cert.steps[0].move) == MoveKind::FOverSwap);
    CHECK(kind_of(cert.steps[1].move) == MoveKind::R1Remove);
    VerifyResult vr = verify_certificate(cert);
    REQUIRE(vr.ok());
    CHECK(serialize_code(vr.final_code) == "O2+U2+");
}

TEST_CASE("sliding out a chord across the endpoint side") {
    Certificate cert = slide_out_chord(parse_code("O1+U2+O2+U1+"), 1, 0);
    REQUIRE(cert.steps.size() == 1);
    CHECK(kind_of(cert.steps[0].move) == MoveKind::FPlusRemove);
    VerifyResult vr = verify_certificate(cert);
    REQUIRE(vr.ok());
    CHECK(serialize_code(vr.final_code) == "U2+O2+");
}

TEST_CASE("an isolated kink slides out in one step") {
    Certificate cert = slide_out_chord(parse_code("O1+U1+"), 1, 0);
    REQUIRE(cert.steps.size() == 1);
    CHECK(kind_of(cert.steps[0].move) == MoveKind::R1Remove);
    CHECK(verify_certificate(cert).final_code.empty());
}

TEST_CASE("slide-out needs one clear side") {
    // Both sides of chord 2 in the example code contain under passages.
    CHECK_THROWS_WITH_AS((void)slide_out_chord(e3(), 2, 0),
                         doctest::Contains("PreconditionFailed"), Error);
    CHECK_THROWS_WITH_AS((void)slide_out_chord(parse_code("O1+U1+"), 9, 0),
                         doctest::Contains("UnknownChord"), Error);
    CHECK_THROWS_WITH_AS((void)slide_out_chord(parse_code("O1+U1+"), 1, 5),
                         doctest::Contains("BaseOutOfRange"), Error);
}

TEST_CASE("descending reduction of the double-over code") {
    Certificate cert = descending_certificate(parse_code("O1+O2+U1+U2+"), 0);
    CHECK(cert.steps.size() == 3);
    auto counts = kind_counts(cert);
    CHECK(counts[MoveKind::FOverSwap] == 1);
    CHECK(counts[MoveKind::R1Remove] == 2);
    VerifyResult vr = verify_certificate(cert);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
    CHECK(vr.relation() == "plus-welded equivalence");
}

TEST_CASE("the empty code has the empty reduction") {
    Certificate cert = descending_certificate(parse_code(""), 0);
    CHECK(cert.steps.empty());
    CHECK(verify_certificate(cert).final_code.empty());
}

TEST_CASE("non-descending inputs are refused") {
    CHECK_THROWS_WITH_AS((void)descending_certificate(e3(), 0),
                         doctest::Contains("NotDescending"), Error);
    // No base class of this code has degree zero (its profile is 1,2,1,2).
    GaussCode code = parse_code("O1+U2+O2+U1+");
    for (std::size_t b = 0; b < base_class_count(code); ++b) {
        CHECK_THROWS_AS((void)descending_certificate(code, b), Error);
    }
}

TEST_CASE("every descending corpus code reduces within the step bound") {
    for (const GaussCode& code : testsupport::corpus_upto(3)) {
        auto cls = first_descending_class(code);
        if (!cls) continue;
        Certificate cert = descending_certificate(code, *cls);
        const std::size_t n = code.chord_count();
        CHECK(cert.steps.size() <= n * (2 * n + 1));
        VerifyResult vr = verify_certificate(cert);
        REQUIRE(vr.ok());
        CHECK(vr.final_code.empty());
        CHECK(vr.crossing_changes == 0);
        CHECK(vr.virtualizations == 0);
    }
}

TEST_CASE("already-descending codes trivialize with zero search") {
    TrivialityVerdict verdict = bounded_trivialize(parse_code("U1+O1+"));
    REQUIRE(verdict.trivial());
    CHECK(verdict.nodes_generated == 1);
    VerifyResult vr = verify_certificate(*verdict.certificate);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
}

TEST_CASE("every two-chord code trivializes at depth zero") {
    for (std::size_t n = 0; n <= 2; ++n) {
        for (const GaussCode& code : all_codes(n, 2)) {
            CHECK((is_descending(code) || is_descending(reverse(code))));
            TrivialityVerdict verdict = bounded_trivialize(code, SearchBudget{1, 0, 0});
            REQUIRE(verdict.trivial());
            VerifyResult vr = verify_certificate(*verdict.certificate);
            REQUIRE(vr.ok());
            CHECK(vr.final_code.empty());
        }
    }
}

TEST_CASE("the trefoil-pattern code is certified trivial via its endpoint chord") {
    // Its over passage for chord 1 is tail-adjacent, so the endpoint slide
    // applies and the remainder is descending.
    TrivialityVerdict verdict = bounded_trivialize(e3(), SearchBudget{100000, 12, 0});
    REQUIRE(verdict.trivial());
    VerifyResult vr = verify_certificate(*verdict.certificate);
    REQUIRE(vr.ok());
    CHECK(vr.final_code.empty());
    CHECK(vr.crossing_changes == 0);
    CHECK(vr.virtualizations == 0);
}

TEST_CASE("budget exhaustion reports Unknown, not an error") {
    // Not descending in either orientation, and the node budget only covers
    // the start code, so the search must stop inconclusively.
    GaussCode code = parse_code("U1+O2+U3+O1+U2+O3+");
    CHECK(!is_descending(code));
    CHECK(!is_descending(reverse(code)));
    TrivialityVerdict verdict = bounded_trivialize(code, SearchBudget{1, 12, 0});
    CHECK(!verdict.trivial());
    CHECK(!verdict.certificate.has_value());
}

TEST_CASE("verdicts and certificates are deterministic") {
    auto run = [] {
        return bounded_trivialize(parse_code("O1+U2+O2+U1+"), SearchBudget{5000, 10, 0});
    };
    TrivialityVerdict a = run();
    TrivialityVerdict b = run();
    REQUIRE(a.trivial());
    REQUIRE(b.trivial());
    CHECK(a.nodes_generated == b.nodes_generated);
    CHECK(*a.certificate == *b.certificate);
}

TEST_SUITE_END();

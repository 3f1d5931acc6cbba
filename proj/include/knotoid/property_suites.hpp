#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "knotoid/enumerate.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/simplify.hpp"
#include "knotoid/unknot.hpp"
#include "knotoid/warping.hpp"

namespace knotoid {

// Property suites over enumerated corpora. Each suite checks one exact
// combinatorial identity of the warping/moves machinery; a violation is an
// implementation bug, never tolerated.

struct SuiteOptions {
    std::size_t max_chords = 3;     // exhaustive corpus 0..max_chords
    std::size_t random_count = 0;   // extra random codes
    std::size_t random_max_n = 8;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::vector<std::string> samples;  // first few violation descriptions

    bool pass() const { return violations == 0; }
};

namespace detail {

inline std::vector<GaussCode> suite_corpus(const SuiteOptions& opt) {
    std::vector<GaussCode> corpus;
    for (std::size_t n = 0; n <= opt.max_chords; ++n) {
        std::vector<GaussCode> batch = all_codes(n, opt.max_chords);
        corpus.insert(corpus.end(), batch.begin(), batch.end());
    }
    for (std::size_t i = 0; i < opt.random_count; ++i) {
        const std::size_t n = 1 + (i % opt.random_max_n);
        corpus.push_back(random_code(n, opt.seed + i));
    }
    return corpus;
}

inline void record(SuiteResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) {
        ++r.violations;
        if (r.samples.size() < 5) r.samples.push_back(what);
    }
}

}  // namespace detail

// d(D_b) + d(-D_b') = cr(D) with b' the reversed image of the same gap.
inline SuiteResult suite_degree_sum(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "degree_sum";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        const GaussCode rev = reverse(code);
        for (std::size_t b = 0; b < base_class_count(code); ++b) {
            const std::size_t total =
                warping_degree_at(code, b) + warping_degree_at(rev, reversed_base_class(code, b));
            detail::record(r, total == code.chord_count(),
                           serialize_code(code) + " class " + std::to_string(b));
        }
    }
    return r;
}

// Warping status of every chord equals the sign of its cutting number; the
// cutting number is odd and never zero.
inline SuiteResult suite_cut_sign(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "cut_sign";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        std::set<int> chords;
        for (const Passage& p : code.passages) chords.insert(p.chord);
        for (std::size_t b = 0; b < base_class_count(code); ++b) {
            const std::set<int> warping = warping_crossings(code, b);
            for (int chord : chords) {
                const int cut = cutting_number(code, b, chord);
                const bool is_warping = warping.count(chord) > 0;
                const bool ok = cut % 2 != 0 && cut != 0 && (cut > 0) == is_warping;
                detail::record(r, ok,
                               serialize_code(code) + " class " + std::to_string(b) + " chord " +
                                   std::to_string(chord) + " cut " + std::to_string(cut));
            }
        }
    }
    return r;
}

// d(mirror(D)) = d(reverse(D)).
inline SuiteResult suite_mirror_degree(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "mirror_degree";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        detail::record(r, warping_degree(mirror(code)) == warping_degree(reverse(code)),
                       serialize_code(code));
    }
    return r;
}

// Crossing one passage moves the per-class degree by +1 (over) or -1
// (under), wrap included.
inline SuiteResult suite_adjacent_step(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "adjacent_step";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        if (code.empty()) continue;
        const std::vector<std::size_t> d = warping_degree_profile(code);
        const std::size_t m = code.passage_count();
        for (std::size_t b = 0; b < m; ++b) {
            const int step = code.passages[b].role == Role::Over ? +1 : -1;
            const bool ok = static_cast<int>(d[(b + 1) % m]) == static_cast<int>(d[b]) + step;
            detail::record(r, ok, serialize_code(code) + " class " + std::to_string(b));
        }
    }
    return r;
}

// On an alternating diagram every base class just before an over passage
// attains the minimal degree.
inline SuiteResult suite_alternating_min(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "alternating_min";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        if (code.empty() || !is_alternating(code)) continue;
        const std::vector<std::size_t> d = warping_degree_profile(code);
        const std::size_t min_d = *std::min_element(d.begin(), d.end());
        for (std::size_t b = 0; b < code.passage_count(); ++b) {
            if (code.passages[b].role != Role::Over) continue;
            detail::record(r, d[b] == min_d, serialize_code(code) + " class " + std::to_string(b));
        }
    }
    return r;
}

// For cr >= 3: d(D) + d(-D) + 1 <= cr, equality iff alternating; the
// per-class profile spreads by at least one, exactly one iff alternating;
// the cyclic and linear alternation rules agree.
inline SuiteResult suite_alternating_bound(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "alternating_bound";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        detail::record(r,
                       is_alternating(code, AlternationRule::Cyclic) ==
                           is_alternating(code, AlternationRule::Linear),
                       serialize_code(code) + " rule disagreement");
        if (code.chord_count() < 3) continue;
        const std::vector<std::size_t> d = warping_degree_profile(code);
        const std::size_t min_d = *std::min_element(d.begin(), d.end());
        const std::size_t max_d = *std::max_element(d.begin(), d.end());
        const std::size_t d_rev = warping_degree(reverse(code));
        const std::size_t cr = code.chord_count();
        const bool alternating = is_alternating(code);
        detail::record(r, min_d + d_rev + 1 <= cr, serialize_code(code) + " inequality");
        detail::record(r, (min_d + d_rev + 1 == cr) == alternating,
                       serialize_code(code) + " equality case");
        detail::record(r, max_d - min_d >= 1 && (max_d - min_d == 1) == alternating,
                       serialize_code(code) + " profile spread");
    }
    return r;
}

// Every diagram with at most two chords is descending on itself or its
// reversal and trivializes at depth zero with a verifying certificate.
inline SuiteResult suite_small_trivial(const SuiteOptions& opt) {
    (void)opt;  // the small-diagram statement is exhaustive by definition
    SuiteResult r;
    r.suite = "small_trivial";
    for (std::size_t n = 0; n <= 2; ++n) {
        for (const GaussCode& code : all_codes(n, 2)) {
            const bool has_zero_class =
                is_descending(code) || is_descending(reverse(code));
            TrivialityVerdict verdict = bounded_trivialize(code, SearchBudget{1, 0, 0});
            bool ok = has_zero_class && verdict.trivial() && verdict.certificate.has_value();
            if (ok) {
                VerifyResult vr = verify_certificate(*verdict.certificate);
                ok = vr.ok() && vr.final_code.empty() && vr.crossing_changes == 0 &&
                     vr.virtualizations == 0;
            }
            detail::record(r, ok, serialize_code(code));
        }
    }
    return r;
}

// Every descending corpus code reduces to the empty code with a verified
// certificate of at most n*(2n+1) steps.
inline SuiteResult suite_descending_reduction(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "descending_reduction";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        auto cls = first_descending_class(code);
        if (!cls) continue;
        const std::size_t n = code.chord_count();
        Certificate cert = descending_certificate(code, *cls);
        VerifyResult vr = verify_certificate(cert);
        const bool ok = vr.ok() && vr.final_code.empty() && vr.crossing_changes == 0 &&
                        vr.virtualizations == 0 && cert.steps.size() <= n * (2 * n + 1);
        detail::record(r, ok, serialize_code(code));
    }
    return r;
}

// The warping witness modifies exactly min(d(D), d(-D)) crossings for both
// operations and its certificate verifies with that count.
inline SuiteResult suite_unknot_bounds(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "unknot_bounds";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        const std::size_t bound =
            std::min(warping_degree(code), warping_degree(reverse(code)));
        for (UnknotOp op : {UnknotOp::Change, UnknotOp::Virtualize}) {
            UnknotResult res = warping_unknot_certificate(code, op);
            bool ok = res.found && res.upper_bound == bound && res.certificate.has_value() &&
                      res.certificate->start == code;
            if (ok) {
                VerifyResult vr = verify_certificate(*res.certificate);
                const std::size_t modifications =
                    op == UnknotOp::Change ? vr.crossing_changes : vr.virtualizations;
                ok = vr.ok() && vr.final_code.empty() && modifications == bound;
            }
            detail::record(r, ok, serialize_code(code) + " op " + to_string(op));
        }
    }
    return r;
}

// For cr >= 3: 2 * min(d(D), d(-D)) <= cr - 1.
inline SuiteResult suite_half_crossing(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "half_crossing";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        if (code.chord_count() < 3) continue;
        const std::size_t bound =
            std::min(warping_degree(code), warping_degree(reverse(code)));
        detail::record(r, 2 * bound <= code.chord_count() - 1, serialize_code(code));
    }
    return r;
}

// A monotone diagram has a monotone virtual closure.
inline SuiteResult suite_closure_monotone(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "closure_monotone";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        if (warping_degree(code) != 0) continue;
        detail::record(r, cyclic_warping_degree(virtual_closure(code)) == 0,
                       serialize_code(code));
    }
    return r;
}

// Applying any legal move yields a valid code with the right chord-count
// delta and never pairs positions across the head->tail break; removals and
// additions invert each other; the involutive kinds square to the identity.
inline SuiteResult suite_move_soundness(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "move_soundness";
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        const AddPolicy policy{code.chord_count() + 2};
        for (const Move& move : legal_moves(code, kAllKinds, policy)) {
            GaussCode after = apply_move(code, move);
            bool ok = !validate(after).has_value();
            const MoveKind kind = kind_of(move);
            const std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(after.chord_count()) -
                                         static_cast<std::ptrdiff_t>(code.chord_count());
            switch (kind) {
                case MoveKind::R1Add:
                case MoveKind::FPlusAdd: ok = ok && delta == +1; break;
                case MoveKind::R1Remove:
                case MoveKind::FPlusRemove:
                case MoveKind::Virtualize: ok = ok && delta == -1; break;
                case MoveKind::R2Add: ok = ok && delta == +2; break;
                case MoveKind::R2Remove: ok = ok && delta == -2; break;
                default: ok = ok && delta == 0; break;
            }
            if (kind != MoveKind::Virtualize) {
                GaussCode back = apply_move(after, invert_move(move));
                ok = ok && back == code;
            }
            if (kind == MoveKind::FOverSwap || kind == MoveKind::CrossingChange ||
                kind == MoveKind::R3) {
                ok = ok && apply_move(after, move) == code;
            }
            detail::record(r, ok, serialize_code(code) + " " + to_string(kind));
        }
    }
    return r;
}

// Canonical keys are invariant under relabeling and separate the
// first-appearance-labeled stream.
inline SuiteResult suite_canonical_keys(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "canonical_keys";
    std::mt19937_64 rng(opt.seed);
    for (const GaussCode& code : detail::suite_corpus(opt)) {
        const std::size_t n = code.chord_count();
        std::vector<int> labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i) + 1;
        for (std::size_t i = n; i > 1; --i) {
            std::swap(labels[i - 1], labels[rng() % i]);
        }
        GaussCode relabeled = code;
        std::map<int, int> target;
        {
            int next = 0;
            std::map<int, bool> seen;
            for (const Passage& p : code.passages) {
                if (!seen[p.chord]) {
                    seen[p.chord] = true;
                    target[p.chord] = labels[next++] * 7;  // sparse labels
                }
            }
        }
        for (Passage& p : relabeled.passages) p.chord = target[p.chord];
        detail::record(r, canonical_key(code) == canonical_key(relabeled),
                       serialize_code(code) + " relabel");
    }
    std::set<std::string> keys;
    std::size_t stream = 0;
    for (std::size_t n = 0; n <= std::min<std::size_t>(opt.max_chords, 3); ++n) {
        for (const GaussCode& code : all_codes(n)) {
            keys.insert(canonical_key(code));
            ++stream;
        }
    }
    detail::record(r, keys.size() == stream, "distinct structures must have distinct keys");
    return r;
}

using SuiteFunction = std::function<SuiteResult(const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFunction>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFunction>> registry = {
        {"degree_sum", suite_degree_sum},
        {"cut_sign", suite_cut_sign},
        {"mirror_degree", suite_mirror_degree},
        {"adjacent_step", suite_adjacent_step},
        {"alternating_min", suite_alternating_min},
        {"alternating_bound", suite_alternating_bound},
        {"small_trivial", suite_small_trivial},
        {"descending_reduction", suite_descending_reduction},
        {"unknot_bounds", suite_unknot_bounds},
        {"half_crossing", suite_half_crossing},
        {"closure_monotone", suite_closure_monotone},
        {"move_soundness", suite_move_soundness},
        {"canonical_keys", suite_canonical_keys},
    };
    return registry;
}

}  // namespace knotoid

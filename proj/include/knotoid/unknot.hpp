#pragma once

#include <optional>
#include <vector>

#include "knotoid/simplify.hpp"

namespace knotoid {

enum class UnknotOp { Change, Virtualize };

inline const char* to_string(UnknotOp op) {
    return op == UnknotOp::Change ? "change" : "virtualize";
}

inline Move make_unknot_move(UnknotOp op, int chord) {
    if (op == UnknotOp::Change) return CrossingChangeMove{chord};
    return VirtualizeMove{chord};
}

// Certified upper bound for the diagram-level unknotting numbers. Bounds are
// upper bounds only; upper_bound = 0 is exact (triviality is witnessed).
struct UnknotResult {
    UnknotOp op = UnknotOp::Change;
    bool found = false;
    std::size_t upper_bound = 0;               // valid when found
    std::vector<int> modified_chords;          // ascending labels
    bool used_reverse_orientation = false;
    std::optional<Certificate> certificate;    // starts at the input code
    std::size_t exhaustive_below = 0;          // all smaller sets were searched
    SearchBudget budget;
};

// Applies the chosen operation to exactly the warping crossings of the
// orientation (input or its reversal) attaining min(d(D), d(-D)); the result
// is monotone, so the constructive trivialization finishes the certificate.
// Reverse-orientation witnesses are mapped back so the certificate starts at
// the input code.
inline UnknotResult warping_unknot_certificate(const GaussCode& code, UnknotOp op) {
    UnknotResult result;
    result.op = op;

    const GaussCode reversed = reverse(code);
    std::size_t best_forward = code.chord_count();
    std::size_t best_forward_class = 0;
    for (std::size_t b = 0; b < base_class_count(code); ++b) {
        const std::size_t d = warping_degree_at(code, b);
        if (d < best_forward) {
            best_forward = d;
            best_forward_class = b;
        }
    }
    std::size_t best_reverse = reversed.chord_count();
    std::size_t best_reverse_class = 0;
    for (std::size_t b = 0; b < base_class_count(reversed); ++b) {
        const std::size_t d = warping_degree_at(reversed, b);
        if (d < best_reverse) {
            best_reverse = d;
            best_reverse_class = b;
        }
    }

    const bool use_forward = best_forward <= best_reverse;
    const GaussCode& target = use_forward ? code : reversed;
    const std::size_t base = use_forward ? best_forward_class : best_reverse_class;

    std::set<int> warping = warping_crossings(target, base);
    CertificateBuilder builder(target);
    for (int chord : warping) builder.push(make_unknot_move(op, chord));
    auto cls = first_descending_class(builder.current());
    if (!cls) {
        throw Error(ErrorCode::PreconditionFailed,
                    "modified diagram is unexpectedly not monotone");
    }
    builder.append(descending_certificate(builder.current(), *cls));
    Certificate cert = std::move(builder).finish();

    result.found = true;
    result.upper_bound = warping.size();
    result.modified_chords.assign(warping.begin(), warping.end());
    result.used_reverse_orientation = !use_forward;
    result.certificate = use_forward ? std::move(cert) : detail::reverse_certificate(cert);
    result.exhaustive_below = 0;
    return result;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Exhaustive search over k-subsets of chords (lexicographic by label,
// smallest k first); each modified diagram goes through bounded_trivialize.
// The level k = min(d(D), d(-D)) is seeded with the constructive warping
// witness, so the returned bound never exceeds the warping bound. Absence of
// a result within max_k is Unknown, not an error.
inline UnknotResult unknot_search(const GaussCode& code, UnknotOp op, std::size_t max_k,
                                  SearchBudget budget = {}) {
    UnknotResult result;
    result.op = op;
    result.budget = budget;

    std::vector<int> labels;
    {
        std::set<int> chords;
        for (const Passage& p : code.passages) chords.insert(p.chord);
        labels.assign(chords.begin(), chords.end());
    }
    const std::size_t n = labels.size();
    const std::size_t warping_bound =
        std::min(warping_degree(code), warping_degree(reverse(code)));

    for (std::size_t k = 0; k <= std::min(max_k, n); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            CertificateBuilder builder(code);
            std::vector<int> subset;
            subset.reserve(k);
            for (std::size_t i : idx) {
                subset.push_back(labels[i]);
                builder.push(make_unknot_move(op, labels[i]));
            }
            TrivialityVerdict verdict = bounded_trivialize(builder.current(), budget);
            if (verdict.trivial()) {
                builder.append(*verdict.certificate);
                result.found = true;
                result.upper_bound = k;
                result.modified_chords = std::move(subset);
                result.certificate = std::move(builder).finish();
                result.exhaustive_below = k;
                return result;
            }
            more = k > 0 && detail::next_combination(idx, n);
            if (k == 0) break;
        }
        if (k == warping_bound) {
            UnknotResult seeded = warping_unknot_certificate(code, op);
            seeded.budget = budget;
            seeded.exhaustive_below = k;
            return seeded;
        }
    }
    result.found = false;
    result.exhaustive_below = max_k + 1;
    return result;
}

struct ClosureData {
    std::size_t cyclic_d = 0;
    bool monotone_closure = false;  // witnesses unknotting number 0 of the closure
};

inline ClosureData closure_unknot_data(const GaussCode& code) {
    ClosureData out;
    out.cyclic_d = cyclic_warping_degree(virtual_closure(code));
    out.monotone_closure = out.cyclic_d == 0;
    return out;
}

}  // namespace knotoid

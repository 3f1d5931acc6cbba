#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "knotoid/gauss_code.hpp"

namespace knotoid {

// Base classes are the 2n gap types between consecutive passages. Class b is
// the gap immediately before passage b+1 (1-indexed passages); the gap after
// passage 2n is the same class as b = 0 because both traversals read the
// passages in identical order. A code with no chords has the single class 0.
inline std::size_t base_class_count(const GaussCode& code) {
    return code.empty() ? 1 : code.passage_count();
}

namespace detail {

inline void require_base_class(const GaussCode& code, std::size_t b) {
    if (b >= base_class_count(code)) {
        throw Error(ErrorCode::BaseOutOfRange,
                    "base class " + std::to_string(b) + " out of range for " +
                        std::to_string(base_class_count(code)) + " classes");
    }
}

}  // namespace detail

// Traversal from base class b: passages b+1..2n toward the head, then the
// head->tail jump, then passages 1..b. `order` holds 0-based positions;
// `break_index` is how many passages precede the jump.
struct Traversal {
    std::vector<std::size_t> order;
    std::size_t break_index = 0;
};

inline Traversal traversal(const GaussCode& code, std::size_t b) {
    detail::require_base_class(code, b);
    const std::size_t m = code.passage_count();
    Traversal t;
    t.order.reserve(m);
    for (std::size_t k = 0; k < m; ++k) t.order.push_back((b + k) % m);
    t.break_index = m - b;
    return t;
}

// A chord is a warping crossing for class b when the traversal meets its
// under passage before its over passage.
inline std::set<int> warping_crossings(const GaussCode& code, std::size_t b) {
    detail::require_base_class(code, b);
    const std::size_t m = code.passage_count();
    std::set<int> warping;
    std::set<int> seen;
    for (std::size_t k = 0; k < m; ++k) {
        const Passage& p = code.passages[(b + k) % m];
        if (seen.insert(p.chord).second && p.role == Role::Under) {
            warping.insert(p.chord);
        }
    }
    return warping;
}

inline std::size_t warping_degree_at(const GaussCode& code, std::size_t b) {
    return warping_crossings(code, b).size();
}

inline std::vector<std::size_t> warping_degree_profile(const GaussCode& code) {
    std::vector<std::size_t> degrees;
    const std::size_t classes = base_class_count(code);
    degrees.reserve(classes);
    for (std::size_t b = 0; b < classes; ++b) degrees.push_back(warping_degree_at(code, b));
    return degrees;
}

inline std::size_t warping_degree(const GaussCode& code) {
    std::size_t best = code.chord_count();
    for (std::size_t b = 0; b < base_class_count(code); ++b) {
        best = std::min(best, warping_degree_at(code, b));
        if (best == 0) break;
    }
    return best;
}

// Smallest base class attaining degree 0, if the diagram is descending.
inline std::optional<std::size_t> first_descending_class(const GaussCode& code) {
    for (std::size_t b = 0; b < base_class_count(code); ++b) {
        if (warping_degree_at(code, b) == 0) return b;
    }
    return std::nullopt;
}

// Reversal sends the gap between positions i and i+1 to the gap between the
// reversed positions 2n-i and 2n-i+1, i.e. class b to class (2n - b) mod 2n.
inline std::size_t reversed_base_class(const GaussCode& code, std::size_t b) {
    detail::require_base_class(code, b);
    const std::size_t m = code.passage_count();
    return m == 0 ? 0 : (m - b) % m;
}

// Arc labels for the traversal from class b. The circuit is cut at the base
// point, at each under passage and at the head->tail jump, giving cr(D)+2
// arcs numbered 1.. along the traversal. Over passages take the label of the
// arc containing them; an under passage takes the label of the arc it ends.
struct ArcLabeling {
    std::vector<int> arc_of_passage;  // indexed by 0-based position
    int arc_count = 0;
};

inline ArcLabeling arc_labels(const GaussCode& code, std::size_t b) {
    detail::require_base_class(code, b);
    const std::size_t m = code.passage_count();
    ArcLabeling out;
    out.arc_of_passage.assign(m, 0);
    int arc = 1;
    Traversal t = traversal(code, b);
    for (std::size_t k = 0; k < m; ++k) {
        if (k == t.break_index) ++arc;
        const std::size_t pos = t.order[k];
        out.arc_of_passage[pos] = arc;
        if (code.passages[pos].role == Role::Under) ++arc;
    }
    if (t.break_index == m) ++arc;
    out.arc_count = arc;
    return out;
}

// 2*alpha - beta - gamma, with alpha the over passage's arc and (beta, gamma)
// the consecutive arcs meeting at the under passage. Always odd, never zero;
// positive exactly on warping crossings.
inline int cutting_number(const GaussCode& code, std::size_t b, int chord) {
    detail::require_base_class(code, b);
    int alpha = -1;
    int beta = -1;
    ArcLabeling arcs = arc_labels(code, b);
    for (std::size_t pos = 0; pos < code.passage_count(); ++pos) {
        const Passage& p = code.passages[pos];
        if (p.chord != chord) continue;
        if (p.role == Role::Over) {
            alpha = arcs.arc_of_passage[pos];
        } else {
            beta = arcs.arc_of_passage[pos];
        }
    }
    if (alpha < 0 || beta < 0) {
        throw Error(ErrorCode::UnknownChord, "no chord " + std::to_string(chord));
    }
    const int gamma = beta + 1;
    return 2 * alpha - beta - gamma;
}

enum class AlternationRule { Cyclic, Linear };

// Over and under passages alternate along the diagram. With the cyclic rule
// the head->tail wrap counts as an adjacency; for codes of even length the
// two rules agree, the switch exists for experiments.
inline bool is_alternating(const GaussCode& code, AlternationRule rule = AlternationRule::Cyclic) {
    const std::size_t m = code.passage_count();
    if (m == 0) return true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (code.passages[i].role == code.passages[i + 1].role) return false;
    }
    if (rule == AlternationRule::Cyclic && m > 1 &&
        code.passages[m - 1].role == code.passages[0].role) {
        return false;
    }
    return true;
}

// Monotone and descending coincide: some base class has warping degree 0.
inline bool is_descending(const GaussCode& code) {
    return warping_degree(code) == 0;
}

struct UpperBounds {
    std::size_t warping_bound = 0;             // min(d(D), d(-D)); bounds u and u_v
    std::optional<double> half_crossing_bound; // (cr-1)/2, absent when cr = 0
};

inline UpperBounds unknotting_upper_bounds(const GaussCode& code) {
    UpperBounds out;
    out.warping_bound = std::min(warping_degree(code), warping_degree(reverse(code)));
    const std::size_t cr = code.chord_count();
    if (cr >= 1) out.half_crossing_bound = static_cast<double>(cr - 1) / 2.0;
    return out;
}

struct InvariantReport {
    std::size_t cr = 0;
    std::vector<std::size_t> d_at;  // indexed by base class
    std::size_t d = 0;
    std::size_t d_rev = 0;
    bool alternating = true;
    bool descending = true;
    std::size_t bound_warping = 0;
    std::optional<double> bound_half_cr;
};

inline InvariantReport report(const GaussCode& code,
                              AlternationRule rule = AlternationRule::Cyclic) {
    InvariantReport r;
    r.cr = code.chord_count();
    r.d_at = warping_degree_profile(code);
    r.d = *std::min_element(r.d_at.begin(), r.d_at.end());
    r.d_rev = warping_degree(reverse(code));
    r.alternating = is_alternating(code, rule);
    r.descending = r.d == 0;
    UpperBounds bounds = unknotting_upper_bounds(code);
    r.bound_warping = bounds.warping_bound;
    r.bound_half_cr = bounds.half_crossing_bound;
    return r;
}

// Warping degree of a closed (welded-knot) diagram: minimum over the 2n
// cyclic gaps of the chords first met at their under passage. There is no
// head->tail break in the scan.
inline std::size_t cyclic_warping_degree(const CyclicGaussCode& code) {
    const std::size_t m = code.passage_count();
    if (m == 0) return 0;
    std::size_t best = code.chord_count();
    for (std::size_t g = 0; g < m && best > 0; ++g) {
        std::set<int> seen;
        std::size_t degree = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const Passage& p = code.passages[(g + k) % m];
            if (seen.insert(p.chord).second && p.role == Role::Under) ++degree;
        }
        best = std::min(best, degree);
    }
    return best;
}

}  // namespace knotoid

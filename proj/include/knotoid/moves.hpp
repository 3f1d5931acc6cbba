#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "knotoid/gauss_code.hpp"

namespace knotoid {

// Positions in move parameters are 1-based and refer to the code the move is
// applied to; a position pair (pos, pos+1) never wraps across the head->tail
// break. Gap indices are 0-based: gap g sits after passage g.

enum class End : unsigned char { Tail, Head };

inline End flipped(End e) { return e == End::Tail ? End::Head : End::Tail; }

struct R1AddMove {
    std::size_t pos = 1;   // resulting pair occupies (pos, pos+1)
    int chord = 0;         // fresh label
    Role first_role = Role::Over;
    int sign = +1;
    bool operator==(const R1AddMove&) const = default;
};

struct R1RemoveMove {
    std::size_t pos = 1;   // leftmost of the adjacent pair holding both passages
    int chord = 0;
    Role first_role = Role::Over;
    int sign = +1;
    bool operator==(const R1RemoveMove&) const = default;
};

struct R2AddMove {
    std::size_t over_gap = 0;
    std::size_t under_gap = 0;
    bool over_site_first = true;  // site order when both gaps coincide
    int chord_first = 0;          // chord whose over passage leads the over site
    int chord_second = 0;
    int sign_first = +1;          // chord_second carries the opposite sign
    bool antiparallel = false;    // under site reads (second, first)
    bool operator==(const R2AddMove&) const = default;
};

struct R2RemoveMove {
    std::size_t over_pos = 1;   // leftmost of the adjacent over pair
    std::size_t under_pos = 1;  // leftmost of the adjacent under pair
    int chord_first = 0;
    int chord_second = 0;
    int sign_first = +1;
    bool antiparallel = false;
    bool operator==(const R2RemoveMove&) const = default;
};

struct R3Move {
    std::size_t pos1 = 1;  // leftmost indices of the three pairs, ascending
    std::size_t pos2 = 1;
    std::size_t pos3 = 1;
    bool operator==(const R3Move&) const = default;
};

struct FOverSwapMove {
    std::size_t pos = 1;  // transposes the over passages at (pos, pos+1)
    bool operator==(const FOverSwapMove&) const = default;
};

struct FPlusAddMove {
    int chord = 0;
    End end = End::Tail;        // where the over passage lands (position 1 or last)
    std::size_t under_pos = 1;  // final position of the under passage
    int sign = +1;
    bool operator==(const FPlusAddMove&) const = default;
};

struct FPlusRemoveMove {
    int chord = 0;
    End end = End::Tail;
    std::size_t under_pos = 1;  // position of the under passage before removal
    int sign = +1;
    bool operator==(const FPlusRemoveMove&) const = default;
};

struct CrossingChangeMove {
    int chord = 0;
    bool operator==(const CrossingChangeMove&) const = default;
};

struct VirtualizeMove {
    int chord = 0;
    bool operator==(const VirtualizeMove&) const = default;
};

using Move = std::variant<R1AddMove, R1RemoveMove, R2AddMove, R2RemoveMove, R3Move,
                          FOverSwapMove, FPlusAddMove, FPlusRemoveMove, CrossingChangeMove,
                          VirtualizeMove>;

enum class MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    FOverSwap,
    FPlusAdd,
    FPlusRemove,
    CrossingChange,
    Virtualize,
};

inline MoveKind kind_of(const Move& m) {
    return static_cast<MoveKind>(m.index());
}

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1Add: return "R1Add";
        case MoveKind::R1Remove: return "R1Remove";
        case MoveKind::R2Add: return "R2Add";
        case MoveKind::R2Remove: return "R2Remove";
        case MoveKind::R3: return "R3";
        case MoveKind::FOverSwap: return "FOverSwap";
        case MoveKind::FPlusAdd: return "FPlusAdd";
        case MoveKind::FPlusRemove: return "FPlusRemove";
        case MoveKind::CrossingChange: return "CrossingChange";
        case MoveKind::Virtualize: return "Virtualize";
    }
    return "Unknown";
}

inline bool is_equivalence_kind(MoveKind k) {
    return k != MoveKind::CrossingChange && k != MoveKind::Virtualize;
}

// Reduction kinds first: searches reach small codes before exploring adds.
constexpr std::array<MoveKind, 8> kEquivalenceKinds = {
    MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::FPlusRemove, MoveKind::FOverSwap,
    MoveKind::R3,       MoveKind::R1Add,    MoveKind::R2Add,       MoveKind::FPlusAdd,
};

constexpr std::array<MoveKind, 10> kAllKinds = {
    MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::FPlusRemove,   MoveKind::FOverSwap,
    MoveKind::R3,       MoveKind::R1Add,    MoveKind::R2Add,         MoveKind::FPlusAdd,
    MoveKind::CrossingChange, MoveKind::Virtualize,
};

enum class MoveReason {
    PositionOutOfRange,
    NotSameChord,
    NotBothOver,
    RecordMismatch,
    ChordNotFound,
    ChordAlreadyPresent,
    NotEndpointAdjacent,
    SitesOverlap,
    SignsNotOpposite,
    PatternMismatch,
    ParamInvalid,
};

inline const char* to_string(MoveReason r) {
    switch (r) {
        case MoveReason::PositionOutOfRange: return "PositionOutOfRange";
        case MoveReason::NotSameChord: return "NotSameChord";
        case MoveReason::NotBothOver: return "NotBothOver";
        case MoveReason::RecordMismatch: return "RecordMismatch";
        case MoveReason::ChordNotFound: return "ChordNotFound";
        case MoveReason::ChordAlreadyPresent: return "ChordAlreadyPresent";
        case MoveReason::NotEndpointAdjacent: return "NotEndpointAdjacent";
        case MoveReason::SitesOverlap: return "SitesOverlap";
        case MoveReason::SignsNotOpposite: return "SignsNotOpposite";
        case MoveReason::PatternMismatch: return "PatternMismatch";
        case MoveReason::ParamInvalid: return "ParamInvalid";
    }
    return "Unknown";
}

struct MoveIssue {
    MoveReason reason;
    std::string detail;
};

namespace detail {

inline bool has_chord(const GaussCode& code, int chord) {
    for (const Passage& p : code.passages) {
        if (p.chord == chord) return true;
    }
    return false;
}

// 1-based positions of a chord's (over, under) passages.
inline std::optional<std::pair<std::size_t, std::size_t>> chord_positions(const GaussCode& code,
                                                                          int chord) {
    std::size_t over = 0;
    std::size_t under = 0;
    for (std::size_t i = 0; i < code.passages.size(); ++i) {
        const Passage& p = code.passages[i];
        if (p.chord != chord) continue;
        (p.role == Role::Over ? over : under) = i + 1;
    }
    if (over == 0 || under == 0) return std::nullopt;
    return std::make_pair(over, under);
}

inline int max_label(const GaussCode& code) {
    int best = 0;
    for (const Passage& p : code.passages) best = std::max(best, p.chord);
    return best;
}

struct R3Sites {
    // Per the oriented tile model: one all-over pair carrying the over
    // passages of chords x and y (x leads the pair), a pair B holding U_x and
    // one passage of the third chord z, a pair C holding U_y and z's other
    // passage. Legal iff sgn(x)*o_B == sgn(y)*o_C and
    // sgn(z) == w*o_C*sgn(x), where w = +1 when z is over inside B and
    // o_B/o_C record whether U_x/U_y lead their pairs.
    int x = 0, y = 0, z = 0;
};

inline std::optional<MoveIssue> check_r3_pattern(const GaussCode& code, const R3Move& m,
                                                 R3Sites* sites_out = nullptr) {
    const std::size_t n = code.passage_count();
    if (!(m.pos1 >= 1 && m.pos3 + 1 <= n && m.pos1 < m.pos2 && m.pos2 < m.pos3)) {
        return MoveIssue{MoveReason::PositionOutOfRange, "pair positions must be ascending and in range"};
    }
    if (m.pos2 < m.pos1 + 2 || m.pos3 < m.pos2 + 2) {
        return MoveIssue{MoveReason::SitesOverlap, "the three pairs must be disjoint"};
    }
    const std::array<std::size_t, 3> starts = {m.pos1, m.pos2, m.pos3};
    std::array<std::array<Passage, 2>, 3> pairs;
    for (int i = 0; i < 3; ++i) {
        pairs[i][0] = code.passages[starts[i] - 1];
        pairs[i][1] = code.passages[starts[i]];
    }
    // Exactly three chords, each with its two passages in two different pairs.
    std::map<int, int> chord_pairs;
    for (int i = 0; i < 3; ++i) {
        if (pairs[i][0].chord == pairs[i][1].chord) {
            return MoveIssue{MoveReason::PatternMismatch, "a pair holds both passages of one chord"};
        }
        for (const Passage& p : pairs[i]) chord_pairs[p.chord] += 1;
    }
    if (chord_pairs.size() != 3) {
        return MoveIssue{MoveReason::PatternMismatch, "the six passages must belong to three chords"};
    }
    for (const auto& [chord, count] : chord_pairs) {
        if (count != 2) {
            return MoveIssue{MoveReason::PatternMismatch,
                             "chord " + std::to_string(chord) + " must contribute both passages"};
        }
    }
    int over_pair = -1;
    for (int i = 0; i < 3; ++i) {
        if (pairs[i][0].role == Role::Over && pairs[i][1].role == Role::Over) {
            if (over_pair != -1) {
                return MoveIssue{MoveReason::PatternMismatch, "more than one all-over pair"};
            }
            over_pair = i;
        }
    }
    if (over_pair == -1) {
        return MoveIssue{MoveReason::PatternMismatch, "no all-over pair"};
    }
    const int x = pairs[over_pair][0].chord;
    const int y = pairs[over_pair][1].chord;
    const int sx = pairs[over_pair][0].sign;
    const int sy = pairs[over_pair][1].sign;
    int pair_b = -1;  // pair holding U_x
    int pair_c = -1;  // pair holding U_y
    for (int i = 0; i < 3; ++i) {
        if (i == over_pair) continue;
        for (const Passage& p : pairs[i]) {
            if (p.chord == x) {
                if (p.role != Role::Under) {
                    return MoveIssue{MoveReason::PatternMismatch, "second passage of an over-pair chord is not under"};
                }
                pair_b = i;
            }
            if (p.chord == y) {
                if (p.role != Role::Under) {
                    return MoveIssue{MoveReason::PatternMismatch, "second passage of an over-pair chord is not under"};
                }
                pair_c = i;
            }
        }
    }
    if (pair_b == -1 || pair_c == -1 || pair_b == pair_c) {
        return MoveIssue{MoveReason::PatternMismatch, "under passages of the over-pair chords must split"};
    }
    int z = 0;
    int sz = 0;
    bool w_over_in_b = false;
    for (const Passage& p : pairs[pair_b]) {
        if (p.chord != x) {
            z = p.chord;
            sz = p.sign;
            w_over_in_b = p.role == Role::Over;
        }
    }
    const bool o_b = pairs[pair_b][0].chord == x;
    const bool o_c = pairs[pair_c][0].chord == y;
    const int ob = o_b ? 1 : -1;
    const int oc = o_c ? 1 : -1;
    const int w = w_over_in_b ? 1 : -1;
    if (sx * ob != sy * oc) {
        return MoveIssue{MoveReason::PatternMismatch, "orientation constraint on the over-pair chords fails"};
    }
    if (sz != w * oc * sx) {
        return MoveIssue{MoveReason::PatternMismatch, "orientation constraint on the third chord fails"};
    }
    if (sites_out) *sites_out = R3Sites{x, y, z};
    return std::nullopt;
}

}  // namespace detail

// Non-throwing legality check; nullopt means the move applies.
inline std::optional<MoveIssue> check_move(const GaussCode& code, const Move& move) {
    const std::size_t m = code.passage_count();
    using detail::chord_positions;
    using detail::has_chord;

    if (const auto* mv = std::get_if<R1AddMove>(&move)) {
        if (mv->chord <= 0 || (mv->sign != 1 && mv->sign != -1)) {
            return MoveIssue{MoveReason::ParamInvalid, "bad chord label or sign"};
        }
        if (has_chord(code, mv->chord)) {
            return MoveIssue{MoveReason::ChordAlreadyPresent, "label " + std::to_string(mv->chord)};
        }
        if (mv->pos < 1 || mv->pos > m + 1) {
            return MoveIssue{MoveReason::PositionOutOfRange, "insertion position"};
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<R1RemoveMove>(&move)) {
        if (mv->pos < 1 || mv->pos + 1 > m) {
            return MoveIssue{MoveReason::PositionOutOfRange, "pair position"};
        }
        const Passage& a = code.passages[mv->pos - 1];
        const Passage& b = code.passages[mv->pos];
        if (a.chord != b.chord) {
            return MoveIssue{MoveReason::NotSameChord, "positions do not hold a trivial chord"};
        }
        if (a.chord != mv->chord || a.role != mv->first_role || a.sign != mv->sign) {
            return MoveIssue{MoveReason::RecordMismatch, "recorded chord data disagrees with the code"};
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<R2AddMove>(&move)) {
        if (mv->chord_first <= 0 || mv->chord_second <= 0 || mv->chord_first == mv->chord_second ||
            (mv->sign_first != 1 && mv->sign_first != -1)) {
            return MoveIssue{MoveReason::ParamInvalid, "bad chord labels or sign"};
        }
        if (has_chord(code, mv->chord_first) || has_chord(code, mv->chord_second)) {
            return MoveIssue{MoveReason::ChordAlreadyPresent, "labels must be fresh"};
        }
        if (mv->over_gap > m || mv->under_gap > m) {
            return MoveIssue{MoveReason::PositionOutOfRange, "gap index"};
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<R2RemoveMove>(&move)) {
        if (mv->over_pos < 1 || mv->over_pos + 1 > m || mv->under_pos < 1 || mv->under_pos + 1 > m) {
            return MoveIssue{MoveReason::PositionOutOfRange, "site position"};
        }
        const std::size_t lo = std::min(mv->over_pos, mv->under_pos);
        const std::size_t hi = std::max(mv->over_pos, mv->under_pos);
        if (hi < lo + 2) {
            return MoveIssue{MoveReason::SitesOverlap, "over and under sites overlap"};
        }
        const Passage& o1 = code.passages[mv->over_pos - 1];
        const Passage& o2 = code.passages[mv->over_pos];
        const Passage& u1 = code.passages[mv->under_pos - 1];
        const Passage& u2 = code.passages[mv->under_pos];
        if (o1.role != Role::Over || o2.role != Role::Over) {
            return MoveIssue{MoveReason::PatternMismatch, "over site must hold two over passages"};
        }
        if (u1.role != Role::Under || u2.role != Role::Under) {
            return MoveIssue{MoveReason::PatternMismatch, "under site must hold two under passages"};
        }
        if (o1.chord == o2.chord) {
            return MoveIssue{MoveReason::PatternMismatch, "over site chords must differ"};
        }
        if (o1.chord != mv->chord_first || o2.chord != mv->chord_second) {
            return MoveIssue{MoveReason::RecordMismatch, "recorded over-site chords disagree"};
        }
        const int expect_u1 = mv->antiparallel ? mv->chord_second : mv->chord_first;
        const int expect_u2 = mv->antiparallel ? mv->chord_first : mv->chord_second;
        if (u1.chord != expect_u1 || u2.chord != expect_u2) {
            return MoveIssue{MoveReason::RecordMismatch, "under site does not match the recorded pairing"};
        }
        if (o1.sign != mv->sign_first) {
            return MoveIssue{MoveReason::RecordMismatch, "recorded sign disagrees"};
        }
        if (o2.sign != -o1.sign) {
            return MoveIssue{MoveReason::SignsNotOpposite, "the two chords must carry opposite signs"};
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<R3Move>(&move)) {
        return detail::check_r3_pattern(code, *mv);
    }
    if (const auto* mv = std::get_if<FOverSwapMove>(&move)) {
        if (mv->pos < 1 || mv->pos + 1 > m) {
            return MoveIssue{MoveReason::PositionOutOfRange, "pair position"};
        }
        if (code.passages[mv->pos - 1].role != Role::Over || code.passages[mv->pos].role != Role::Over) {
            return MoveIssue{MoveReason::NotBothOver, "both passages must be over passages"};
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<FPlusAddMove>(&move)) {
        if (mv->chord <= 0 || (mv->sign != 1 && mv->sign != -1)) {
            return MoveIssue{MoveReason::ParamInvalid, "bad chord label or sign"};
        }
        if (has_chord(code, mv->chord)) {
            return MoveIssue{MoveReason::ChordAlreadyPresent, "label " + std::to_string(mv->chord)};
        }
        if (mv->end == End::Tail) {
            if (mv->under_pos < 2 || mv->under_pos > m + 2) {
                return MoveIssue{MoveReason::PositionOutOfRange, "under position"};
            }
        } else {
            if (mv->under_pos < 1 || mv->under_pos > m + 1) {
                return MoveIssue{MoveReason::PositionOutOfRange, "under position"};
            }
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<FPlusRemoveMove>(&move)) {
        auto positions = chord_positions(code, mv->chord);
        if (!positions) {
            return MoveIssue{MoveReason::ChordNotFound, "no chord " + std::to_string(mv->chord)};
        }
        const auto [over, under] = *positions;
        const std::size_t expected_over = mv->end == End::Tail ? 1 : m;
        if (over != expected_over) {
            return MoveIssue{MoveReason::NotEndpointAdjacent,
                             "the chord's over passage must sit at position " + std::to_string(expected_over)};
        }
        if (under != mv->under_pos) {
            return MoveIssue{MoveReason::RecordMismatch, "recorded under position disagrees"};
        }
        if (code.passages[over - 1].sign != mv->sign) {
            return MoveIssue{MoveReason::RecordMismatch, "recorded sign disagrees"};
        }
        return std::nullopt;
    }
    if (const auto* mv = std::get_if<CrossingChangeMove>(&move)) {
        if (!has_chord(code, mv->chord)) {
            return MoveIssue{MoveReason::ChordNotFound, "no chord " + std::to_string(mv->chord)};
        }
        return std::nullopt;
    }
    const auto& mv = std::get<VirtualizeMove>(move);
    if (!has_chord(code, mv.chord)) {
        return MoveIssue{MoveReason::ChordNotFound, "no chord " + std::to_string(mv.chord)};
    }
    return std::nullopt;
}

namespace detail {

inline GaussCode apply_unchecked(const GaussCode& code, const Move& move) {
    GaussCode out = code;
    auto& ps = out.passages;

    if (const auto* mv = std::get_if<R1AddMove>(&move)) {
        const Passage first{mv->chord, mv->first_role, mv->sign};
        const Passage second{mv->chord, flipped(mv->first_role), mv->sign};
        ps.insert(ps.begin() + static_cast<std::ptrdiff_t>(mv->pos - 1), {first, second});
        return out;
    }
    if (const auto* mv = std::get_if<R1RemoveMove>(&move)) {
        ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(mv->pos - 1),
                 ps.begin() + static_cast<std::ptrdiff_t>(mv->pos + 1));
        return out;
    }
    if (const auto* mv = std::get_if<R2AddMove>(&move)) {
        const Passage over1{mv->chord_first, Role::Over, mv->sign_first};
        const Passage over2{mv->chord_second, Role::Over, -mv->sign_first};
        const Passage under_a{mv->antiparallel ? mv->chord_second : mv->chord_first, Role::Under,
                              mv->antiparallel ? -mv->sign_first : mv->sign_first};
        const Passage under_b{mv->antiparallel ? mv->chord_first : mv->chord_second, Role::Under,
                              mv->antiparallel ? mv->sign_first : -mv->sign_first};
        struct Site {
            std::size_t gap;
            int tie;
            std::array<Passage, 2> pair;
        };
        std::array<Site, 2> sites = {
            Site{mv->over_gap, mv->over_site_first ? 0 : 1, {over1, over2}},
            Site{mv->under_gap, mv->over_site_first ? 1 : 0, {under_a, under_b}},
        };
        if (sites[1].gap < sites[0].gap ||
            (sites[1].gap == sites[0].gap && sites[1].tie < sites[0].tie)) {
            std::swap(sites[0], sites[1]);
        }
        std::vector<Passage> merged;
        merged.reserve(ps.size() + 4);
        std::size_t site_idx = 0;
        for (std::size_t gap = 0; gap <= ps.size(); ++gap) {
            while (site_idx < 2 && sites[site_idx].gap == gap) {
                merged.push_back(sites[site_idx].pair[0]);
                merged.push_back(sites[site_idx].pair[1]);
                ++site_idx;
            }
            if (gap < ps.size()) merged.push_back(ps[gap]);
        }
        out.passages = std::move(merged);
        return out;
    }
    if (const auto* mv = std::get_if<R2RemoveMove>(&move)) {
        std::vector<Passage> kept;
        kept.reserve(ps.size() - 4);
        for (std::size_t i = 1; i <= ps.size(); ++i) {
            if (i == mv->over_pos || i == mv->over_pos + 1 || i == mv->under_pos ||
                i == mv->under_pos + 1) {
                continue;
            }
            kept.push_back(ps[i - 1]);
        }
        out.passages = std::move(kept);
        return out;
    }
    if (const auto* mv = std::get_if<R3Move>(&move)) {
        std::swap(ps[mv->pos1 - 1], ps[mv->pos1]);
        std::swap(ps[mv->pos2 - 1], ps[mv->pos2]);
        std::swap(ps[mv->pos3 - 1], ps[mv->pos3]);
        return out;
    }
    if (const auto* mv = std::get_if<FOverSwapMove>(&move)) {
        std::swap(ps[mv->pos - 1], ps[mv->pos]);
        return out;
    }
    if (const auto* mv = std::get_if<FPlusAddMove>(&move)) {
        const Passage over{mv->chord, Role::Over, mv->sign};
        const Passage under{mv->chord, Role::Under, mv->sign};
        if (mv->end == End::Tail) {
            // The over passage is prepended afterwards, shifting by one.
            ps.insert(ps.begin() + static_cast<std::ptrdiff_t>(mv->under_pos - 2), under);
            ps.insert(ps.begin(), over);
        } else {
            ps.insert(ps.begin() + static_cast<std::ptrdiff_t>(mv->under_pos - 1), under);
            ps.push_back(over);
        }
        return out;
    }
    if (const auto* mv = std::get_if<FPlusRemoveMove>(&move)) {
        const std::size_t over_pos = mv->end == End::Tail ? 1 : ps.size();
        const std::size_t hi = std::max(over_pos, mv->under_pos);
        const std::size_t lo = std::min(over_pos, mv->under_pos);
        ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(hi - 1));
        ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(lo - 1));
        return out;
    }
    if (const auto* mv = std::get_if<CrossingChangeMove>(&move)) {
        for (Passage& p : ps) {
            if (p.chord == mv->chord) {
                p.role = flipped(p.role);
                p.sign = -p.sign;
            }
        }
        return out;
    }
    const auto& mv = std::get<VirtualizeMove>(move);
    std::erase_if(ps, [&](const Passage& p) { return p.chord == mv.chord; });
    return out;
}

}  // namespace detail

inline GaussCode apply_move(const GaussCode& code, const Move& move) {
    if (auto issue = check_move(code, move)) {
        throw Error(ErrorCode::IllegalMove,
                    std::string(to_string(kind_of(move))) + " rejected (" +
                        to_string(issue->reason) + "): " + issue->detail);
    }
    return detail::apply_unchecked(code, move);
}

// Generation policy for the Add kinds: instances are enumerated only while
// the chord count stays at or below max_chords; fresh labels are
// max existing label + 1 (and + 2 for the two-chord add).
struct AddPolicy {
    std::size_t max_chords = 0;
};

inline std::vector<Move> legal_moves(const GaussCode& code, std::span<const MoveKind> kinds,
                                     AddPolicy policy = {}) {
    std::vector<Move> out;
    const std::size_t m = code.passage_count();
    const std::size_t n = code.chord_count();
    const int fresh = detail::max_label(code) + 1;

    std::set<int> chords;
    for (const Passage& p : code.passages) chords.insert(p.chord);

    for (MoveKind kind : kinds) {
        switch (kind) {
            case MoveKind::R1Add: {
                if (n + 1 > policy.max_chords) break;
                for (std::size_t pos = 1; pos <= m + 1; ++pos) {
                    for (Role role : {Role::Over, Role::Under}) {
                        for (int sign : {+1, -1}) {
                            out.push_back(R1AddMove{pos, fresh, role, sign});
                        }
                    }
                }
                break;
            }
            case MoveKind::R1Remove: {
                for (std::size_t pos = 1; pos + 1 <= m; ++pos) {
                    const Passage& a = code.passages[pos - 1];
                    const Passage& b = code.passages[pos];
                    if (a.chord == b.chord) {
                        out.push_back(R1RemoveMove{pos, a.chord, a.role, a.sign});
                    }
                }
                break;
            }
            case MoveKind::R2Add: {
                if (n + 2 > policy.max_chords) break;
                for (std::size_t og = 0; og <= m; ++og) {
                    for (std::size_t ug = 0; ug <= m; ++ug) {
                        for (bool anti : {false, true}) {
                            for (int sign : {+1, -1}) {
                                out.push_back(R2AddMove{og, ug, true, fresh, fresh + 1, sign, anti});
                            }
                        }
                    }
                }
                break;
            }
            case MoveKind::R2Remove: {
                for (std::size_t op = 1; op + 1 <= m; ++op) {
                    const Passage& o1 = code.passages[op - 1];
                    const Passage& o2 = code.passages[op];
                    if (o1.role != Role::Over || o2.role != Role::Over) continue;
                    if (o1.chord == o2.chord || o1.sign != -o2.sign) continue;
                    for (std::size_t up = 1; up + 1 <= m; ++up) {
                        const std::size_t lo = std::min(op, up);
                        const std::size_t hi = std::max(op, up);
                        if (hi < lo + 2) continue;
                        const Passage& u1 = code.passages[up - 1];
                        const Passage& u2 = code.passages[up];
                        if (u1.role != Role::Under || u2.role != Role::Under) continue;
                        bool anti;
                        if (u1.chord == o1.chord && u2.chord == o2.chord) {
                            anti = false;
                        } else if (u1.chord == o2.chord && u2.chord == o1.chord) {
                            anti = true;
                        } else {
                            continue;
                        }
                        out.push_back(R2RemoveMove{op, up, o1.chord, o2.chord, o1.sign, anti});
                    }
                }
                break;
            }
            case MoveKind::R3: {
                for (std::size_t p1 = 1; p1 + 1 <= m; ++p1) {
                    for (std::size_t p2 = p1 + 2; p2 + 1 <= m; ++p2) {
                        for (std::size_t p3 = p2 + 2; p3 + 1 <= m; ++p3) {
                            R3Move mv{p1, p2, p3};
                            if (!detail::check_r3_pattern(code, mv)) out.push_back(mv);
                        }
                    }
                }
                break;
            }
            case MoveKind::FOverSwap: {
                for (std::size_t pos = 1; pos + 1 <= m; ++pos) {
                    if (code.passages[pos - 1].role == Role::Over &&
                        code.passages[pos].role == Role::Over) {
                        out.push_back(FOverSwapMove{pos});
                    }
                }
                break;
            }
            case MoveKind::FPlusAdd: {
                if (n + 1 > policy.max_chords) break;
                for (End end : {End::Tail, End::Head}) {
                    const std::size_t lo = end == End::Tail ? 2 : 1;
                    const std::size_t hi = end == End::Tail ? m + 2 : m + 1;
                    for (std::size_t up = lo; up <= hi; ++up) {
                        for (int sign : {+1, -1}) {
                            out.push_back(FPlusAddMove{fresh, end, up, sign});
                        }
                    }
                }
                break;
            }
            case MoveKind::FPlusRemove: {
                for (int chord : chords) {
                    auto positions = detail::chord_positions(code, chord);
                    const auto [over, under] = *positions;
                    if (over == 1) {
                        out.push_back(FPlusRemoveMove{chord, End::Tail, under,
                                                      code.passages[over - 1].sign});
                    } else if (over == m) {
                        out.push_back(FPlusRemoveMove{chord, End::Head, under,
                                                      code.passages[over - 1].sign});
                    }
                }
                break;
            }
            case MoveKind::CrossingChange: {
                for (int chord : chords) out.push_back(CrossingChangeMove{chord});
                break;
            }
            case MoveKind::Virtualize: {
                for (int chord : chords) out.push_back(VirtualizeMove{chord});
                break;
            }
        }
    }
    return out;
}

// Inverse of an equivalence move (CrossingChange is its own inverse and
// allowed; Virtualize has none).
inline Move invert_move(const Move& move) {
    if (const auto* mv = std::get_if<R1AddMove>(&move)) {
        return R1RemoveMove{mv->pos, mv->chord, mv->first_role, mv->sign};
    }
    if (const auto* mv = std::get_if<R1RemoveMove>(&move)) {
        return R1AddMove{mv->pos, mv->chord, mv->first_role, mv->sign};
    }
    if (const auto* mv = std::get_if<R2AddMove>(&move)) {
        // Positions of the sites in the enlarged code.
        std::size_t over_pos;
        std::size_t under_pos;
        const bool over_first = mv->over_gap < mv->under_gap ||
                                (mv->over_gap == mv->under_gap && mv->over_site_first);
        if (over_first) {
            over_pos = mv->over_gap + 1;
            under_pos = mv->under_gap + 3;
        } else {
            under_pos = mv->under_gap + 1;
            over_pos = mv->over_gap + 3;
        }
        return R2RemoveMove{over_pos, under_pos, mv->chord_first, mv->chord_second,
                            mv->sign_first, mv->antiparallel};
    }
    if (const auto* mv = std::get_if<R2RemoveMove>(&move)) {
        const bool over_first = mv->over_pos < mv->under_pos;
        std::size_t over_gap;
        std::size_t under_gap;
        if (over_first) {
            over_gap = mv->over_pos - 1;
            under_gap = mv->under_pos - 3;
        } else {
            under_gap = mv->under_pos - 1;
            over_gap = mv->over_pos - 3;
        }
        return R2AddMove{over_gap, under_gap, over_first, mv->chord_first, mv->chord_second,
                         mv->sign_first, mv->antiparallel};
    }
    if (const auto* mv = std::get_if<R3Move>(&move)) {
        return *mv;
    }
    if (const auto* mv = std::get_if<FOverSwapMove>(&move)) {
        return *mv;
    }
    if (const auto* mv = std::get_if<FPlusAddMove>(&move)) {
        return FPlusRemoveMove{mv->chord, mv->end, mv->under_pos, mv->sign};
    }
    if (const auto* mv = std::get_if<FPlusRemoveMove>(&move)) {
        return FPlusAddMove{mv->chord, mv->end, mv->under_pos, mv->sign};
    }
    if (const auto* mv = std::get_if<CrossingChangeMove>(&move)) {
        return *mv;
    }
    throw Error(ErrorCode::NotInvertible, "Virtualize has no inverse");
}

// ---------------------------------------------------------------------------
// Certificates: a replayable witness of plus-welded equivalence (or of
// equivalence after the flagged crossing changes / virtualizations).

struct CertificateStep {
    Move move;
    std::string key;  // canonical key of the code after the move

    bool operator==(const CertificateStep&) const = default;
};

struct Certificate {
    GaussCode start;
    std::vector<CertificateStep> steps;
    bool uses_crossing_change = false;
    bool uses_virtualization = false;

    bool operator==(const Certificate&) const = default;
};

class CertificateBuilder {
public:
    explicit CertificateBuilder(GaussCode start) : current_(start) {
        cert_.start = std::move(start);
    }

    const GaussCode& current() const { return current_; }

    void push(const Move& move) {
        current_ = apply_move(current_, move);
        cert_.steps.push_back({move, canonical_key(current_)});
        const MoveKind kind = kind_of(move);
        if (kind == MoveKind::CrossingChange) cert_.uses_crossing_change = true;
        if (kind == MoveKind::Virtualize) cert_.uses_virtualization = true;
    }

    void append(const Certificate& tail) {
        for (const CertificateStep& step : tail.steps) push(step.move);
    }

    Certificate finish() && { return std::move(cert_); }
    const Certificate& certificate() const { return cert_; }

private:
    GaussCode current_;
    Certificate cert_;
};

struct VerifyResult {
    enum class Status { Ok, StepIllegal, KeyMismatch, FlagsInconsistent };

    Status status = Status::Ok;
    std::size_t step_index = 0;  // offending step for rejections
    MoveReason reason = MoveReason::ParamInvalid;
    std::string detail;
    GaussCode final_code;
    std::size_t crossing_changes = 0;
    std::size_t virtualizations = 0;

    bool ok() const { return status == Status::Ok; }

    std::string relation() const {
        if (crossing_changes == 0 && virtualizations == 0) return "plus-welded equivalence";
        std::string out = "plus-welded equivalence after ";
        out += std::to_string(crossing_changes) + " crossing change(s) and ";
        out += std::to_string(virtualizations) + " virtualization(s)";
        return out;
    }
};

inline const char* to_string(VerifyResult::Status s) {
    switch (s) {
        case VerifyResult::Status::Ok: return "Ok";
        case VerifyResult::Status::StepIllegal: return "StepIllegal";
        case VerifyResult::Status::KeyMismatch: return "KeyMismatch";
        case VerifyResult::Status::FlagsInconsistent: return "FlagsInconsistent";
    }
    return "Unknown";
}

// Replays every step with full legality checking and canonical-key
// comparison. Independent of how the certificate was produced.
inline VerifyResult verify_certificate(const Certificate& cert) {
    VerifyResult result;
    if (auto issue = validate(cert.start)) {
        result.status = VerifyResult::Status::StepIllegal;
        result.step_index = 0;
        result.reason = MoveReason::ParamInvalid;
        result.detail = "start code invalid: " + issue->detail;
        return result;
    }
    GaussCode current = cert.start;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertificateStep& step = cert.steps[i];
        if (auto issue = check_move(current, step.move)) {
            result.status = VerifyResult::Status::StepIllegal;
            result.step_index = i;
            result.reason = issue->reason;
            result.detail = issue->detail;
            return result;
        }
        current = detail::apply_unchecked(current, step.move);
        if (canonical_key(current) != step.key) {
            result.status = VerifyResult::Status::KeyMismatch;
            result.step_index = i;
            result.detail = "recorded key does not match the replayed code";
            return result;
        }
        const MoveKind kind = kind_of(step.move);
        if (kind == MoveKind::CrossingChange) ++result.crossing_changes;
        if (kind == MoveKind::Virtualize) ++result.virtualizations;
    }
    if (cert.uses_crossing_change != (result.crossing_changes > 0) ||
        cert.uses_virtualization != (result.virtualizations > 0)) {
        result.status = VerifyResult::Status::FlagsInconsistent;
        result.step_index = cert.steps.size();
        result.detail = "stored flags disagree with the replayed step counts";
        return result;
    }
    result.final_code = std::move(current);
    return result;
}

}  // namespace knotoid

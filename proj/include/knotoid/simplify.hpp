#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotoid/moves.hpp"
#include "knotoid/warping.hpp"

namespace knotoid {

struct SearchBudget {
    std::size_t max_nodes = 100000;
    std::size_t max_depth = 12;
    std::size_t max_chords = 0;  // 0 = chord count of the input + 2

    bool operator==(const SearchBudget&) const = default;
};

namespace detail {

// A certificate built from FOverSwap / R1Remove / FPlusRemove /
// CrossingChange / Virtualize steps maps move-by-move through reversal:
// roles and signs survive reversal, endpoint adjacency swaps tail<->head and
// position pairs mirror. The mapped certificate starts at the reversal of
// the input's start and ends at the reversal of its final code.
inline Certificate reverse_certificate(const Certificate& cert) {
    CertificateBuilder builder(knotoid::reverse(cert.start));
    GaussCode forward = cert.start;
    for (const CertificateStep& step : cert.steps) {
        const std::size_t m = forward.passage_count();
        Move mapped;
        if (const auto* mv = std::get_if<FOverSwapMove>(&step.move)) {
            mapped = FOverSwapMove{m - mv->pos};
        } else if (const auto* mv = std::get_if<R1RemoveMove>(&step.move)) {
            mapped = R1RemoveMove{m - mv->pos, mv->chord, flipped(mv->first_role), mv->sign};
        } else if (const auto* mv = std::get_if<FPlusRemoveMove>(&step.move)) {
            mapped = FPlusRemoveMove{mv->chord, flipped(mv->end), m + 1 - mv->under_pos, mv->sign};
        } else if (const auto* mv = std::get_if<CrossingChangeMove>(&step.move)) {
            mapped = *mv;
        } else if (const auto* mv = std::get_if<VirtualizeMove>(&step.move)) {
            mapped = *mv;
        } else {
            throw Error(ErrorCode::BadInput,
                        std::string("cannot map ") + to_string(kind_of(step.move)) +
                            " through reversal");
        }
        builder.push(mapped);
        forward = apply_move(forward, step.move);
    }
    return std::move(builder).finish();
}

}  // namespace detail

// Removes chord x when one of the two sides of the chord is free of under
// passages: the over passage is slid across the intervening over passages
// with FOverSwap steps and the chord then leaves either as a kink
// (R1Remove, when the side between the two passages is clear) or across the
// nearer endpoint (FPlusRemove, when the side through the head->tail break
// is clear). The kink route is preferred when both sides qualify.
inline Certificate slide_out_chord(const GaussCode& code, int chord, std::size_t base_class) {
    detail::require_base_class(code, base_class);
    auto positions = detail::chord_positions(code, chord);
    if (!positions) {
        throw Error(ErrorCode::UnknownChord, "no chord " + std::to_string(chord));
    }
    const std::size_t m = code.passage_count();
    const auto [over, under] = *positions;
    const std::size_t i = std::min(over, under);
    const std::size_t j = std::max(over, under);

    bool inside_clear = true;
    for (std::size_t pos = i + 1; pos < j; ++pos) {
        if (code.passages[pos - 1].role == Role::Under) inside_clear = false;
    }
    bool outside_clear = true;
    for (std::size_t pos = 1; pos < i; ++pos) {
        if (code.passages[pos - 1].role == Role::Under) outside_clear = false;
    }
    for (std::size_t pos = j + 1; pos <= m; ++pos) {
        if (code.passages[pos - 1].role == Role::Under) outside_clear = false;
    }

    const int sign = code.passages[i - 1].sign;
    CertificateBuilder builder(code);
    if (inside_clear) {
        if (over == i) {
            for (std::size_t pos = i; pos + 1 < j; ++pos) builder.push(FOverSwapMove{pos});
            builder.push(R1RemoveMove{j - 1, chord, Role::Over, sign});
        } else {
            for (std::size_t pos = j - 1; pos > i; --pos) builder.push(FOverSwapMove{pos});
            builder.push(R1RemoveMove{i, chord, Role::Under, sign});
        }
    } else if (outside_clear) {
        if (over == i) {
            for (std::size_t pos = i - 1; pos >= 1; --pos) builder.push(FOverSwapMove{pos});
            builder.push(FPlusRemoveMove{chord, End::Tail, j, sign});
        } else {
            for (std::size_t pos = j; pos + 1 <= m; ++pos) builder.push(FOverSwapMove{pos});
            builder.push(FPlusRemoveMove{chord, End::Head, i, sign});
        }
    } else {
        throw Error(ErrorCode::PreconditionFailed,
                    "both sides of chord " + std::to_string(chord) + " contain under passages");
    }
    return std::move(builder).finish();
}

// Constructive trivialization of a descending diagram: repeatedly remove the
// first chord met at its under passage along the traversal of a degree-zero
// base class. Step count stays below n*(2n+1) for n starting chords.
inline Certificate descending_certificate(const GaussCode& code, std::size_t base_class) {
    detail::require_base_class(code, base_class);
    if (warping_degree_at(code, base_class) != 0) {
        throw Error(ErrorCode::NotDescending,
                    "base class " + std::to_string(base_class) + " has nonzero warping degree");
    }
    CertificateBuilder builder(code);
    std::size_t cls = base_class;
    while (!builder.current().empty()) {
        const GaussCode& working = builder.current();
        Traversal t = traversal(working, cls);
        int target = 0;
        for (std::size_t pos : t.order) {
            if (working.passages[pos].role == Role::Under) {
                target = working.passages[pos].chord;
                break;
            }
        }
        Certificate elimination = slide_out_chord(working, target, cls);
        builder.append(elimination);
        if (builder.current().empty()) break;
        auto next = first_descending_class(builder.current());
        if (!next) {
            throw Error(ErrorCode::NotDescending, "elimination lost the descending property");
        }
        cls = *next;
    }
    return std::move(builder).finish();
}

struct TrivialityVerdict {
    enum class Status { Trivial, Unknown };

    Status status = Status::Unknown;
    std::optional<Certificate> certificate;
    std::size_t nodes_generated = 0;

    bool trivial() const { return status == Status::Trivial; }
};

namespace detail {

// A node succeeds when it, or its reversal, is descending; the reversal
// route maps the reversed descending certificate back through reversal so
// the tail still starts at the node itself.
inline std::optional<Certificate> descending_tail(const GaussCode& code) {
    if (auto cls = first_descending_class(code)) {
        return descending_certificate(code, *cls);
    }
    const GaussCode reversed = knotoid::reverse(code);
    if (auto cls = first_descending_class(reversed)) {
        return reverse_certificate(descending_certificate(reversed, *cls));
    }
    return std::nullopt;
}

}  // namespace detail

// Breadth-first search over the equivalence moves with canonical-key
// memoization, layered by move count and ordered by canonical key inside a
// layer. Trivial verdicts splice the constructive tail; Unknown never
// asserts knottedness. Deterministic for a fixed budget.
inline TrivialityVerdict bounded_trivialize(const GaussCode& code, SearchBudget budget = {}) {
    TrivialityVerdict verdict;
    const std::size_t max_chords =
        budget.max_chords > 0 ? budget.max_chords : code.chord_count() + 2;

    struct Node {
        GaussCode code;
        std::size_t parent;
        std::optional<Move> via;
        std::size_t depth;
    };

    auto assemble = [&](const std::vector<Node>& nodes, std::size_t leaf,
                        const Certificate& tail) {
        std::vector<Move> path;
        for (std::size_t at = leaf; nodes[at].via; at = nodes[at].parent) {
            path.push_back(*nodes[at].via);
        }
        std::reverse(path.begin(), path.end());
        CertificateBuilder builder(code);
        for (const Move& move : path) builder.push(move);
        builder.append(tail);
        return std::move(builder).finish();
    };

    std::vector<Node> nodes;
    nodes.push_back({code, 0, std::nullopt, 0});
    verdict.nodes_generated = 1;

    if (auto tail = detail::descending_tail(code)) {
        verdict.status = TrivialityVerdict::Status::Trivial;
        verdict.certificate = assemble(nodes, 0, *tail);
        return verdict;
    }

    std::set<std::string> seen;
    seen.insert(canonical_key(code));
    std::vector<std::size_t> layer = {0};
    const AddPolicy policy{max_chords};

    for (std::size_t depth = 0; depth < budget.max_depth && !layer.empty(); ++depth) {
        std::sort(layer.begin(), layer.end(), [&](std::size_t a, std::size_t b) {
            return canonical_key(nodes[a].code) < canonical_key(nodes[b].code);
        });
        std::vector<std::size_t> next_layer;
        for (std::size_t idx : layer) {
            const std::vector<Move> moves =
                legal_moves(nodes[idx].code, kEquivalenceKinds, policy);
            for (const Move& move : moves) {
                if (verdict.nodes_generated >= budget.max_nodes) {
                    return verdict;  // budget exhausted: Unknown
                }
                GaussCode child = detail::apply_unchecked(nodes[idx].code, move);
                std::string key = canonical_key(child);
                if (!seen.insert(std::move(key)).second) continue;
                nodes.push_back({std::move(child), idx, move, depth + 1});
                ++verdict.nodes_generated;
                const std::size_t child_idx = nodes.size() - 1;
                if (auto tail = detail::descending_tail(nodes[child_idx].code)) {
                    verdict.status = TrivialityVerdict::Status::Trivial;
                    verdict.certificate = assemble(nodes, child_idx, *tail);
                    return verdict;
                }
                next_layer.push_back(child_idx);
            }
        }
        layer = std::move(next_layer);
    }
    return verdict;
}

}  // namespace knotoid

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/error.hpp"

namespace knotoid {

// A chord passage is either the over-strand or the under-strand visit of a
// classical crossing. The over passage is the chord's starting point.
enum class Role : unsigned char { Over, Under };

inline Role flipped(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct Passage {
    int chord = 0;         // positive label, stable under every operation except canonical_key
    Role role = Role::Over;
    int sign = +1;         // both passages of a chord carry the same sign

    bool operator==(const Passage&) const = default;
};

// Open Gauss code: passages in order from the tail (position 1) to the head
// (position 2n). Welded/virtual crossings have no representation here; the
// passage list is the complete state of a diagram.
struct GaussCode {
    std::vector<Passage> passages;

    std::size_t passage_count() const { return passages.size(); }
    std::size_t chord_count() const { return passages.size() / 2; }
    bool empty() const { return passages.empty(); }

    bool operator==(const GaussCode&) const = default;
};

// The same passage data read cyclically (head joined to tail through
// crossings that are all virtual, hence absent).
struct CyclicGaussCode {
    std::vector<Passage> passages;

    std::size_t passage_count() const { return passages.size(); }
    std::size_t chord_count() const { return passages.size() / 2; }

    bool operator==(const CyclicGaussCode&) const = default;
};

struct ValidationIssue {
    ErrorCode code;
    std::string detail;
};

namespace detail {

inline std::optional<ValidationIssue> validate_passages(const std::vector<Passage>& passages) {
    struct Seen {
        int count = 0;
        int over = 0;
        int under = 0;
        int first_sign = 0;
        bool sign_conflict = false;
    };
    std::map<int, Seen> chords;
    for (const Passage& p : passages) {
        if (p.chord <= 0) {
            return ValidationIssue{ErrorCode::ChordArity,
                                   "chord label must be a positive integer, got " + std::to_string(p.chord)};
        }
        if (p.sign != 1 && p.sign != -1) {
            return ValidationIssue{ErrorCode::SignMismatch,
                                   "sign must be +1 or -1, got " + std::to_string(p.sign)};
        }
        Seen& s = chords[p.chord];
        s.count += 1;
        (p.role == Role::Over ? s.over : s.under) += 1;
        if (s.count == 1) {
            s.first_sign = p.sign;
        } else if (p.sign != s.first_sign) {
            s.sign_conflict = true;
        }
    }
    for (const auto& [label, s] : chords) {
        if (s.count != 2 || s.over != 1 || s.under != 1) {
            return ValidationIssue{ErrorCode::ChordArity,
                                   "chord " + std::to_string(label) + " must appear exactly once as O and once as U"};
        }
        if (s.sign_conflict) {
            return ValidationIssue{ErrorCode::SignMismatch,
                                   "chord " + std::to_string(label) + " carries two different signs"};
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline std::optional<ValidationIssue> validate(const GaussCode& code) {
    return detail::validate_passages(code.passages);
}

inline std::optional<ValidationIssue> validate(const CyclicGaussCode& code) {
    return detail::validate_passages(code.passages);
}

// Text format: concatenated or space-separated tokens "(O|U)<digits>(+|-)",
// tail first. The empty string is the trivial diagram.
inline GaussCode parse_code(std::string_view text) {
    GaussCode code;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        Passage p;
        if (text[i] == 'O') {
            p.role = Role::Over;
        } else if (text[i] == 'U') {
            p.role = Role::Under;
        } else {
            throw Error(ErrorCode::MalformedToken,
                        "expected 'O' or 'U' at offset " + std::to_string(i));
        }
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw Error(ErrorCode::MalformedToken,
                        "expected digits after role at offset " + std::to_string(i));
        }
        long label = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000000L) {
                throw Error(ErrorCode::MalformedToken, "chord label too large");
            }
            ++i;
        }
        if (label == 0) {
            throw Error(ErrorCode::MalformedToken, "chord label must be positive");
        }
        p.chord = static_cast<int>(label);
        if (i >= n || (text[i] != '+' && text[i] != '-')) {
            throw Error(ErrorCode::MalformedToken,
                        "expected '+' or '-' at offset " + std::to_string(i));
        }
        p.sign = text[i] == '+' ? +1 : -1;
        ++i;
        code.passages.push_back(p);
    }
    if (auto issue = validate(code)) {
        throw Error(issue->code, issue->detail);
    }
    return code;
}

inline std::string serialize_passage(const Passage& p) {
    std::string out;
    out += p.role == Role::Over ? 'O' : 'U';
    out += std::to_string(p.chord);
    out += p.sign > 0 ? '+' : '-';
    return out;
}

// Round-trips with parse_code; labels are emitted as given, never renumbered.
inline std::string serialize_code(const GaussCode& code) {
    std::string out;
    for (const Passage& p : code.passages) out += serialize_passage(p);
    return out;
}

inline std::string serialize_code(const CyclicGaussCode& code) {
    std::string out;
    for (const Passage& p : code.passages) out += serialize_passage(p);
    return out;
}

// Reversing the diagram reverses the passage sequence; every crossing keeps
// its over/under roles and its sign, and tail and head swap.
inline GaussCode reverse(const GaussCode& code) {
    GaussCode out = code;
    std::reverse(out.passages.begin(), out.passages.end());
    return out;
}

// Mirror image: every role flips and every sign negates; order unchanged.
inline GaussCode mirror(const GaussCode& code) {
    GaussCode out = code;
    for (Passage& p : out.passages) {
        p.role = flipped(p.role);
        p.sign = -p.sign;
    }
    return out;
}

// Virtual closure: the shortcut head->tail meets the diagram in virtual
// crossings only, so no chord is added; adjacency just becomes cyclic.
inline CyclicGaussCode virtual_closure(const GaussCode& code) {
    return CyclicGaussCode{code.passages};
}

// Relabels chords 1..n in order of first appearance.
inline GaussCode relabel_first_appearance(const GaussCode& code) {
    GaussCode out = code;
    std::map<int, int> rename;
    int next = 1;
    for (Passage& p : out.passages) {
        auto [it, inserted] = rename.try_emplace(p.chord, next);
        if (inserted) ++next;
        p.chord = it->second;
    }
    return out;
}

// Memoization key: equal keys iff the codes agree up to chord relabeling.
inline std::string canonical_key(const GaussCode& code) {
    return serialize_code(relabel_first_appearance(code));
}

}  // namespace knotoid

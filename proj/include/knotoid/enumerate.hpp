#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "knotoid/gauss_code.hpp"

namespace knotoid {

// Exhaustive generation of all valid codes with n chords, labeled 1..n in
// first-appearance order (so the stream carries no relabel-duplicates).
// Order: pairing of the 2n slots (smallest open slot pairs with each later
// open slot, ascending), then role mask, then sign mask. Count is
// (2n-1)!! * 2^n * 2^n.
inline std::vector<GaussCode> all_codes(std::size_t n, std::size_t ceiling = 3) {
    if (n > ceiling) {
        throw Error(ErrorCode::CeilingExceeded,
                    "exhaustive enumeration is capped at " + std::to_string(ceiling) + " chords");
    }
    std::vector<GaussCode> out;
    const std::size_t slots = 2 * n;

    std::vector<std::vector<int>> pairings;  // slot -> chord label
    std::vector<int> assignment(slots, 0);
    auto recurse = [&](auto&& self, int next_label) -> void {
        std::size_t first = slots;
        for (std::size_t s = 0; s < slots; ++s) {
            if (assignment[s] == 0) {
                first = s;
                break;
            }
        }
        if (first == slots) {
            pairings.push_back(assignment);
            return;
        }
        assignment[first] = next_label;
        for (std::size_t mate = first + 1; mate < slots; ++mate) {
            if (assignment[mate] != 0) continue;
            assignment[mate] = next_label;
            self(self, next_label + 1);
            assignment[mate] = 0;
        }
        assignment[first] = 0;
    };
    recurse(recurse, 1);

    for (const std::vector<int>& pairing : pairings) {
        for (std::uint64_t role_mask = 0; role_mask < (1ull << n); ++role_mask) {
            for (std::uint64_t sign_mask = 0; sign_mask < (1ull << n); ++sign_mask) {
                GaussCode code;
                code.passages.reserve(slots);
                std::vector<bool> seen(n + 1, false);
                for (std::size_t s = 0; s < slots; ++s) {
                    const int label = pairing[s];
                    const bool first_visit = !seen[label];
                    seen[label] = true;
                    const bool under_first = (role_mask >> (label - 1)) & 1;
                    Passage p;
                    p.chord = label;
                    p.role = first_visit == under_first ? Role::Under : Role::Over;
                    p.sign = ((sign_mask >> (label - 1)) & 1) ? -1 : +1;
                    code.passages.push_back(p);
                }
                out.push_back(std::move(code));
            }
        }
    }
    return out;
}

// Reproducible uniform sample over pairings x roles x signs. Fixed
// algorithm so seeds are portable: mt19937_64 seeded directly; a
// Fisher-Yates shuffle of the 2n slots (j = rng() % (i+1)) pairs consecutive
// shuffled slots; then one role bit and one sign bit per chord in label
// order (even = over-first / plus).
inline GaussCode random_code(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t slots = 2 * n;
    std::vector<std::size_t> order(slots);
    for (std::size_t i = 0; i < slots; ++i) order[i] = i;
    for (std::size_t i = slots; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
    }
    std::vector<int> assignment(slots, 0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs(n);
    for (std::size_t k = 0; k < n; ++k) {
        pairs[k] = {order[2 * k], order[2 * k + 1]};
    }
    // Label chords by first appearance along the code.
    std::vector<int> label_of_pair(n, 0);
    int next = 1;
    for (std::size_t s = 0; s < slots; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            if (pairs[k].first == s || pairs[k].second == s) {
                if (label_of_pair[k] == 0) label_of_pair[k] = next++;
                assignment[s] = label_of_pair[k];
            }
        }
    }
    GaussCode code;
    code.passages.resize(slots);
    std::vector<bool> under_first(n + 1, false);
    std::vector<int> sign_of(n + 1, +1);
    for (std::size_t label = 1; label <= n; ++label) {
        under_first[label] = (rng() % 2) == 1;
        sign_of[label] = (rng() % 2) == 1 ? -1 : +1;
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t s = 0; s < slots; ++s) {
        const int label = assignment[s];
        const bool first_visit = !seen[label];
        seen[label] = true;
        code.passages[s] = Passage{label,
                                   first_visit == under_first[label] ? Role::Under : Role::Over,
                                   sign_of[label]};
    }
    return code;
}

}  // namespace knotoid

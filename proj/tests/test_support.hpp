#pragma once

#include <random>
#include <vector>

#include "knotoid/enumerate.hpp"
#include "knotoid/gauss_code.hpp"
#include "knotoid/warping.hpp"

namespace testsupport {

// Three-crossing alternating pattern used throughout the examples.
inline knotoid::GaussCode e3() { return knotoid::parse_code("O1+U2+O3+U1+O2+U3+"); }

inline std::vector<knotoid::GaussCode> corpus_upto(std::size_t max_n) {
    std::vector<knotoid::GaussCode> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto batch = knotoid::all_codes(n, max_n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

// Independent oracle for the warping set: compares traversal indices of the
// two passages of each chord by plain gap arithmetic instead of scanning.
inline std::set<int> oracle_warping_set(const knotoid::GaussCode& code, std::size_t b) {
    const std::size_t m = code.passage_count();
    std::set<int> warping;
    std::map<int, std::pair<std::size_t, std::size_t>> at;  // chord -> (over rank, under rank)
    for (std::size_t pos = 0; pos < m; ++pos) {
        const knotoid::Passage& p = code.passages[pos];
        const std::size_t rank = (pos + m - b) % m;  // index along the traversal
        if (p.role == knotoid::Role::Over) {
            at[p.chord].first = rank;
        } else {
            at[p.chord].second = rank;
        }
    }
    for (const auto& [chord, ranks] : at) {
        if (ranks.second < ranks.first) warping.insert(chord);
    }
    return warping;
}

}  // namespace testsupport

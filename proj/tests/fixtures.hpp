#pragma once

// Worked arrangements used across the suites.

#include "equisyz/arrangement.hpp"

namespace fixtures {

using equisyz::Arrangement;
using equisyz::RationalVector;
using equisyz::Subspace;
using equisyz::subspace_from_vectors;

inline Subspace span(std::vector<std::vector<int>> rows, std::size_t m) {
    std::vector<RationalVector> vs;
    for (const auto& r : rows)
        vs.emplace_back(r.begin(), r.end());
    return subspace_from_vectors(vs, m);
}

/// t copies of the origin in K^1; the product ideal is the t-th power of the
/// maximal ideal.
inline Arrangement origin_copies(std::size_t t) {
    return Arrangement(1, std::vector<Subspace>(t, Subspace(1)));
}

inline Arrangement two_axes() { return Arrangement(2, {span({{1, 0}}, 2), span({{0, 1}}, 2)}); }

/// The (x,y)-plane and the z-axis in K^3.
inline Arrangement plane_and_normal_line() {
    return Arrangement(3, {span({{1, 0, 0}, {0, 1, 0}}, 3), span({{0, 0, 1}}, 3)});
}

inline Arrangement three_axes() {
    return Arrangement(3, {span({{1, 0, 0}}, 3), span({{0, 1, 0}}, 3), span({{0, 0, 1}}, 3)});
}

/// t distinct lines through the origin of K^2 (t <= 4).
inline Arrangement lines_in_plane(std::size_t t) {
    const std::vector<std::vector<int>> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < t; ++i)
        out.push_back(span({dirs[i]}, 2));
    return Arrangement(2, std::move(out));
}

} // namespace fixtures

#pragma once

// Test-only reference computations. These deliberately avoid the library's
// algorithms (no memoized LR enumeration, no horizontal-strip recursion, no
// hook formulas) and just enumerate fillings.

#include <functional>
#include <map>
#include <vector>

#include "equisyz/partition.hpp"

namespace testing {

using equisyz::Partition;

struct Cell {
    int row;
    int col;
};

inline std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < outer.length(); ++r)
        for (int c = inner[r]; c < outer[r]; ++c)
            cells.push_back({static_cast<int>(r), c});
    return cells;
}

// Visits every semistandard filling of outer/inner with entries 1..max_value.
inline void for_each_ssyt(const Partition& outer, const Partition& inner, int max_value,
                          const std::function<void(const std::map<std::pair<int, int>, int>&)>& visit) {
    const auto cells = skew_cells(outer, inner);
    std::map<std::pair<int, int>, int> fill;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            visit(fill);
            return;
        }
        const auto [r, c] = cells[k];
        for (int v = 1; v <= max_value; ++v) {
            auto left = fill.find({r, c - 1});
            if (left != fill.end() && left->second > v)
                continue;
            auto up = fill.find({r - 1, c});
            if (up != fill.end() && up->second >= v)
                continue;
            fill[{r, c}] = v;
            rec(k + 1);
            fill.erase({r, c});
        }
    };
    rec(0);
}

inline long brute_force_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu))
        return 0;
    const int k = static_cast<int>(nu.length());
    if (k == 0)
        return lambda == mu ? 1 : 0;
    long count = 0;
    for_each_ssyt(lambda, mu, k, [&](const std::map<std::pair<int, int>, int>& fill) {
        std::vector<int> content(static_cast<std::size_t>(k) + 1, 0);
        for (const auto& [cell, v] : fill)
            ++content[static_cast<std::size_t>(v)];
        for (int i = 1; i <= k; ++i)
            if (content[static_cast<std::size_t>(i)] != nu[static_cast<std::size_t>(i - 1)])
                return;
        // Reverse reading word: rows top to bottom, each right to left.
        std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
        for (std::size_t r = 0; r < lambda.length(); ++r)
            for (int c = lambda[r] - 1; c >= mu[r]; --c) {
                const int v = fill.at({static_cast<int>(r), c});
                ++seen[static_cast<std::size_t>(v)];
                if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)])
                    return;
            }
        ++count;
    });
    return count;
}

inline long brute_force_kostka(const Partition& lambda, const std::vector<int>& content) {
    const int k = static_cast<int>(content.size());
    long count = 0;
    for_each_ssyt(lambda, Partition{}, k, [&](const std::map<std::pair<int, int>, int>& fill) {
        std::vector<int> seen(static_cast<std::size_t>(k), 0);
        for (const auto& [cell, v] : fill)
            ++seen[static_cast<std::size_t>(v - 1)];
        if (seen == content)
            ++count;
    });
    return count;
}

inline long count_ssyt(const Partition& lambda, int n) {
    long count = 0;
    for_each_ssyt(lambda, Partition{}, n, [&](const auto&) { ++count; });
    return count;
}

// s_lambda(x_1..x_n) as a map from exponent vectors to coefficients.
using PolyN = std::map<std::vector<int>, long>;

inline PolyN schur_polynomial(const Partition& lambda, int n) {
    PolyN out;
    for_each_ssyt(lambda, Partition{}, n, [&](const std::map<std::pair<int, int>, int>& fill) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (const auto& [cell, v] : fill)
            ++e[static_cast<std::size_t>(v - 1)];
        ++out[e];
    });
    return out;
}

inline PolyN poly_mul(const PolyN& a, const PolyN& b) {
    PolyN out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline void poly_add(PolyN& acc, const PolyN& p, long scale) {
    for (const auto& [e, c] : p)
        acc[e] += scale * c;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

} // namespace testing

#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed so runs
// are reproducible.

#include <random>

#include "equisyz/arrangement.hpp"
#include "equisyz/symfunc.hpp"

namespace testing {

inline equisyz::SchurSeries random_series(std::mt19937& rng, int degree, int max_terms = 5,
                                          int max_coeff = 3) {
    std::uniform_int_distribution<int> deg(0, degree);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> count(0, max_terms);
    equisyz::SchurSeries out(degree);
    const int terms = count(rng);
    for (int k = 0; k < terms; ++k) {
        const auto parts = equisyz::partitions_of(deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        out += equisyz::SchurSeries::term(parts[pick(rng)], coeff(rng), degree);
    }
    return out;
}

inline equisyz::Subspace random_subspace(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<std::size_t> dim(0, m);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<equisyz::RationalVector> vectors(dim(rng), equisyz::RationalVector(m));
    for (auto& v : vectors)
        for (auto& x : v)
            x = entry(rng);
    return equisyz::subspace_from_vectors(vectors, m);
}

inline equisyz::Arrangement random_arrangement(std::mt19937& rng, std::size_t max_m, std::size_t max_t) {
    std::uniform_int_distribution<std::size_t> mdist(1, max_m);
    std::uniform_int_distribution<std::size_t> tdist(0, max_t);
    const std::size_t m = mdist(rng);
    const std::size_t t = tdist(rng);
    std::vector<equisyz::Subspace> subspaces;
    for (std::size_t i = 0; i < t; ++i)
        subspaces.push_back(random_subspace(rng, m));
    return equisyz::Arrangement(m, std::move(subspaces));
}

} // namespace testing

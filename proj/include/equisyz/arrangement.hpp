#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equisyz/linarith.hpp"
#include "equisyz/symfunc.hpp"

namespace equisyz {

/// Subsets of the index set {0, ..., t-1} as bitmasks.
using SubsetMask = std::uint32_t;

inline constexpr int kDefaultMaxSubspaces = 16;

/// An ordered list of subspaces Y_1..Y_t of one ambient space K^m.
/// Repeated subspaces are allowed.
class Arrangement {
public:
    /// Throws InputError when a subspace lives in a different ambient space.
    Arrangement(std::size_t ambient_dim, std::vector<Subspace> subspaces);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t size() const noexcept { return subspaces_.size(); }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
    const Subspace& operator[](std::size_t i) const { return subspaces_[i]; }

private:
    std::size_t ambient_;
    std::vector<Subspace> subspaces_;
};

/// rank(B) = m - dim(intersection of Y_i, i in B), with rank(empty) = 0.
class Polymatroid {
public:
    Polymatroid(std::size_t ground_size, std::vector<int> ranks);

    std::size_t ground_size() const noexcept { return ground_; }
    int rank(SubsetMask subset) const { return ranks_.at(subset); }
    SubsetMask full_set() const noexcept { return static_cast<SubsetMask>((1ULL << ground_) - 1); }

private:
    std::size_t ground_;
    std::vector<int> ranks_;
};

/// Throws CapExceeded when the arrangement has more than max_subspaces members.
Polymatroid polymatroid_of(const Arrangement& arr, int max_subspaces = kDefaultMaxSubspaces);

/// Evaluates the polymatroid polynomials P(B) and the equivariant Hilbert
/// series H(J_B) of all sub-products, each subset computed once.
///
/// P(empty) = 1 and, for B nonempty, P(B) is the part of degree < |B| of
///     - sum_{C proper subset of B} (-1)^{|B|-|C|} sigma^{rank(B)-rank(C)} P(C).
/// H(J_empty) = sigma^m and
///     (-1)^{|B|} H(J_B) = sigma^{m-rank(B)} P(B) - sum_{C proper} (-1)^{|C|} H(J_C).
///
/// Not thread-safe; use one instance per thread.
class ProductSeriesSolver {
public:
    /// Throws InputError if degree < t.
    ProductSeriesSolver(Polymatroid pm, std::size_t ambient_dim, int degree);

    const Polymatroid& polymatroid() const noexcept { return pm_; }
    int degree() const noexcept { return degree_; }

    const SchurSeries& p_polynomial(SubsetMask subset);
    const SchurSeries& hilbert_series(SubsetMask subset);
    const SchurSeries& sigma_power(int k);

private:
    Polymatroid pm_;
    std::size_t ambient_;
    int degree_;
    std::vector<std::optional<SchurSeries>> p_;
    std::vector<std::optional<SchurSeries>> h_;
    std::vector<std::optional<SchurSeries>> sigma_powers_;
};

SchurSeries p_polynomial(const Polymatroid& pm, SubsetMask subset, int degree);

/// Equivariant Hilbert series of the product ideal J_1 ... J_t, up to degree D.
SchurSeries hilbert_product(const Arrangement& arr, int degree);

struct LinesCheck {
    bool agrees = false;             // agreement in every degree t..D
    int first_disagreement = -1;     // lowest degree >= t that disagrees, or -1
    int agreement_from = -1;         // least d0 with agreement on d0..D, -1 if none
    SchurSeries hilbert{0};
};

/// Compares H(J_A) with sigma^m - t sigma for an arrangement of t distinct
/// lines. Throws InputError if the subspaces are not distinct lines.
LinesCheck check_lines_leading_terms(const Arrangement& arr, int degree);

int popcount(SubsetMask mask);

} // namespace equisyz

#pragma once

#include <map>
#include <string>
#include <vector>

#include "equisyz/arrangement.hpp"
#include "equisyz/symfunc.hpp"

namespace equisyz {

/// Size limits for the brute-force computations.
struct OracleCaps {
    int max_m = 4;   // dim W
    int max_n = 4;   // dim V
    int max_d = 4;   // top degree
    int max_t = 4;   // number of subspaces

    /// Parses EQUISYZ_CAPS: either one integer applied to every limit, or a
    /// comma list such as "m=5,n=6,d=5,t=4". Unset means the defaults.
    /// Throws InputError on a malformed value.
    static OracleCaps from_env();
    static OracleCaps parse(const std::string& text);

    /// Throws CapExceeded naming the first limit exceeded.
    void check(int m, int n, int d_max, int t) const;
};

/// A linear form on W (x) V. Coordinates are indexed j*n + i for W-index j and
/// V-index i; a form a (x) e_i has V-weight e_i.
struct LinearForm {
    RationalVector coeffs;
    int weight_index = 0;
};

/// Degree-one generators of each J_k(V) = I(Y_k (x) V^*): the annihilator
/// basis of Y_k tensored with the standard basis of V.
struct CoordinateIdealBasis {
    int m = 0;
    int n = 0;
    std::vector<std::vector<LinearForm>> generators;
};

CoordinateIdealBasis coordinate_ideal_basis(const Arrangement& arr, int n);

/// Weight multiplicities of a graded GL(V)-representation, one table per
/// computed degree.
struct GradedCharacter {
    int n = 0;
    std::map<int, WeightTable> degrees;

    /// Throws InputError for a degree that was not computed.
    const WeightTable& at(int d) const;
    Integer total_dimension(int d) const;
};

/// Number of degree-d monomials in the m*n coordinates of W (x) V.
Integer monomial_space_dimension(int m, int n, int d, bool exterior);

/// Character of J_1(V) ... J_t(V) in degrees 0..d_max, from the span of
/// products g_1 ... g_t * (monomial of degree d - t).
GradedCharacter product_ideal_character(const Arrangement& arr, int n, int d_max,
                                        const OracleCaps& caps = {});

/// Character of J_1(V) cap ... cap J_t(V) in degrees 0..d_max.
GradedCharacter intersection_ideal_character(const Arrangement& arr, int n, int d_max,
                                             const OracleCaps& caps = {});

/// Character of J_1(V) ^ ... ^ J_t(V) inside the exterior algebra of W (x) V.
/// Exterior monomials list their variables in increasing index order; a
/// wedge product is sorted into that order with the sign of the permutation.
/// Requires d_max <= m*n.
GradedCharacter wedge_ideal_character(const Arrangement& arr, int n, int d_max,
                                      const OracleCaps& caps = {});

/// Schur expansion of the degree-d part. Requires n >= d so the expansion is
/// faithful. Errors from from_weight_multiplicities propagate.
SchurSeries character_to_schur(const GradedCharacter& gc, int d);

/// True if every weight table is invariant under the transposition (a b) of
/// V-coordinates, for every a < b.
bool is_weight_symmetric(const GradedCharacter& gc);

} // namespace equisyz

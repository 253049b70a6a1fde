#pragma once

#include <map>
#include <vector>

#include "json.hpp"

#include "equisyz/partition.hpp"

namespace equisyz {

/// Weight vector (composition) -> multiplicity.
using WeightTable = std::map<std::vector<int>, Integer>;

/// A symmetric function in the Schur basis, known up to a truncation degree D.
/// Terms of degree > D are never stored and zero coefficients are dropped.
///
/// Binary operations on series with different truncation degrees produce a
/// result truncated to the smaller one; the result's degree() reports it.
class SchurSeries {
public:
    using Terms = std::map<Partition, Integer>;

    explicit SchurSeries(int degree = 0);
    SchurSeries(int degree, Terms terms);

    static SchurSeries zero(int degree) { return SchurSeries(degree); }
    static SchurSeries one(int degree);
    /// The single term c * s_lambda (dropped if |lambda| > degree).
    static SchurSeries term(const Partition& lambda, const Integer& c, int degree);

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Partition& lambda) const;
    /// Lowest degree carrying a nonzero term, or -1 for the zero series.
    int lowest_degree() const noexcept;
    int highest_degree() const noexcept;

    SchurSeries truncate_to(int k) const;
    SchurSeries graded_part(int d) const;

    SchurSeries& operator+=(const SchurSeries& other);
    SchurSeries& operator-=(const SchurSeries& other);
    SchurSeries& operator*=(const Integer& c);

    friend SchurSeries operator+(SchurSeries a, const SchurSeries& b) { return a += b; }
    friend SchurSeries operator-(SchurSeries a, const SchurSeries& b) { return a -= b; }
    friend SchurSeries operator-(SchurSeries a) { return a *= -1; }
    friend SchurSeries operator*(SchurSeries a, const Integer& c) { return a *= c; }
    friend SchurSeries operator*(const SchurSeries& a, const SchurSeries& b);

    /// Equality compares terms and truncation degree.
    friend bool operator==(const SchurSeries&, const SchurSeries&) = default;

    std::string to_string() const;

private:
    void add_scaled(const SchurSeries& other, const Integer& c);

    int degree_;
    Terms terms_;
};

/// 1 + s_1 + s_2 + ... + s_D.
SchurSeries sigma(int degree);

SchurSeries add(const SchurSeries& f, const SchurSeries& g);
SchurSeries negate(const SchurSeries& f);
SchurSeries multiply(const SchurSeries& f, const SchurSeries& g);
/// f^k for k >= 0.
SchurSeries power(const SchurSeries& f, int k);
/// Multiplicative inverse up to the truncation degree. Throws NotInvertible
/// unless the constant term is +1 or -1.
SchurSeries invert(const SchurSeries& f);
/// The involution s_lambda -> s_{lambda'}.
SchurSeries omega(const SchurSeries& f);

/// Schur expansion of s_mu * s_nu, memoized.
const SchurSeries::Terms& schur_product(const Partition& mu, const Partition& nu);

/// Character value in degree d at x_1 = ... = x_n = 1.
Integer evaluate_dimension(const SchurSeries& f, int n, int d);

/// Weight multiplicities of the degree-d part of f restricted to n variables.
WeightTable weight_multiplicities(const SchurSeries& f, int n, int d);

/// Inverse of weight_multiplicities: recovers the Schur expansion of a
/// degree-d polynomial character of GL_n from its weight multiplicities.
/// Missing weights count as zero. Throws ValidationError when the table is
/// not symmetric or is not the character of a polynomial representation.
SchurSeries from_weight_multiplicities(const WeightTable& weights, int d, int n);

/// All compositions of d into n nonnegative parts, lexicographically decreasing.
std::vector<std::vector<int>> compositions(int d, int n);

/// [[parts...], coefficient] pairs in canonical order. Coefficients that fit
/// a 64-bit integer are JSON numbers, larger ones decimal strings.
nlohmann::json to_json(const SchurSeries& f);
nlohmann::json integer_to_json(const Integer& value);

} // namespace equisyz

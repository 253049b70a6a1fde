#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace equisyz {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. gmp keeps every entry in
/// lowest terms with a positive denominator.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Throws InputError if the rows have different lengths.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    std::vector<RationalVector> row_list() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowReduction {
    RationalMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape is
/// unchanged.
RowReduction row_reduce(RationalMatrix m);

/// Rank computed by incremental elimination; rows are consumed one at a time,
/// and reduction stops early once the rank reaches the column count.
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t cols) : cols_(cols) {}
    /// Returns true if `v` was independent of the rows seen so far.
    bool add(RationalVector v);
    std::size_t rank() const noexcept { return basis_.size(); }
    bool full() const noexcept { return basis_.size() == cols_; }

private:
    std::size_t cols_;
    std::vector<RationalVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// A linear subspace of K^m stored as the RREF of a spanning set. The
/// representation is canonical: equal subspaces compare equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const RationalMatrix& basis() const noexcept { return basis_; }
    bool contains(std::span<const Rational> v) const;

    std::string to_string() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

    friend Subspace subspace_from_vectors(const std::vector<RationalVector>& vectors,
                                          std::size_t ambient_dim);

private:
    std::size_t ambient_;
    RationalMatrix basis_;
};

/// Span of `vectors` in K^ambient_dim. Throws InputError on a wrong length.
Subspace subspace_from_vectors(const std::vector<RationalVector>& vectors, std::size_t ambient_dim);

Subspace full_space(std::size_t ambient_dim);

/// Vectors whose dot product with every element of S is zero, i.e. the
/// coefficient vectors of the linear forms vanishing on S.
Subspace annihilator(const Subspace& s);

/// Intersection of a nonempty list of subspaces of one ambient space.
Subspace intersect(std::span<const Subspace> subspaces);
Subspace intersect(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);

/// Parses "3", "-2", "5/7". Throws InputError on anything else.
Rational parse_rational(const std::string& text);

} // namespace equisyz

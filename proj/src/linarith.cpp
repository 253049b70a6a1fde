#include "equisyz/linarith.hpp"

#include <algorithm>
#include <regex>

#include "equisyz/error.hpp"

namespace equisyz {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("row " + std::to_string(r) + " has length " +
                             std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<long>(r * cols));
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    auto first = data_.begin() + static_cast<long>(r * cols_);
    return RationalVector(first, first + static_cast<long>(cols_));
}

std::vector<RationalVector> RationalMatrix::row_list() const {
    std::vector<RationalVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

RowReduction row_reduce(RationalMatrix m) {
    RowReduction out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(lead, c));
        const Rational inv = 1 / m(lead, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(lead, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, col) == 0)
                continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(lead, c);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    out.rref = std::move(m);
    return out;
}

bool IncrementalRank::add(RationalVector v) {
    if (v.size() != cols_)
        throw InputError("IncrementalRank: vector length mismatch");
    if (full())
        return false;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p] == 0)
            continue;
        const Rational factor = v[p];
        const RationalVector& b = basis_[k];
        for (std::size_t c = p; c < cols_; ++c)
            if (b[c] != 0)
                v[c] -= factor * b[c];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end())
        return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const Rational inv = 1 / v[p];
    for (std::size_t c = p; c < cols_; ++c)
        v[c] *= inv;
    // Keep earlier rows reduced against the new pivot so later vectors see
    // an echelon basis with unit pivots.
    for (auto& b : basis_) {
        if (b[p] == 0)
            continue;
        const Rational factor = b[p];
        for (std::size_t c = p; c < cols_; ++c)
            b[c] -= factor * v[c];
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_)
        throw InputError("Subspace::contains: vector length mismatch");
    auto rows = basis_.row_list();
    rows.emplace_back(v.begin(), v.end());
    return row_reduce(RationalMatrix::from_rows(rows, ambient_)).rank == dim();
}

std::string Subspace::to_string() const {
    std::string out = "span{";
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        out += r ? ", (" : "(";
        for (std::size_t c = 0; c < ambient_; ++c)
            out += (c ? "," : "") + basis_(r, c).get_str();
        out += ")";
    }
    return out + "} in K^" + std::to_string(ambient_);
}

Subspace subspace_from_vectors(const std::vector<RationalVector>& vectors, std::size_t ambient_dim) {
    auto reduced = row_reduce(RationalMatrix::from_rows(vectors, ambient_dim));
    Subspace s(ambient_dim);
    s.basis_ = RationalMatrix(reduced.rank, ambient_dim);
    for (std::size_t r = 0; r < reduced.rank; ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c)
            s.basis_(r, c) = reduced.rref(r, c);
    return s;
}

Subspace full_space(std::size_t ambient_dim) {
    return subspace_from_vectors(RationalMatrix::identity(ambient_dim).row_list(), ambient_dim);
}

Subspace annihilator(const Subspace& s) {
    const std::size_t m = s.ambient_dim();
    const RationalMatrix& b = s.basis();
    // basis is already in RREF; free columns parametrize the null space.
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (b(r, c) != 0) {
                pivots.push_back(c);
                break;
            }
    std::vector<RationalVector> null_vectors;
    for (std::size_t free = 0; free < m; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
            continue;
        RationalVector v(m);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -b(r, free);
        null_vectors.push_back(std::move(v));
    }
    return subspace_from_vectors(null_vectors, m);
}

Subspace intersect(std::span<const Subspace> subspaces) {
    if (subspaces.empty())
        throw InputError("intersect: empty list");
    const std::size_t m = subspaces.front().ambient_dim();
    std::vector<RationalVector> equations;
    for (const auto& s : subspaces) {
        if (s.ambient_dim() != m)
            throw InputError("intersect: ambient dimensions differ (" + std::to_string(m) + " vs " +
                             std::to_string(s.ambient_dim()) + ")");
        for (auto& row : annihilator(s).basis().row_list())
            equations.push_back(std::move(row));
    }
    return annihilator(subspace_from_vectors(equations, m));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    const Subspace pair[] = {a, b};
    return intersect(pair);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("sum: ambient dimensions differ");
    auto rows = a.basis().row_list();
    for (auto& r : b.basis().row_list())
        rows.push_back(std::move(r));
    return subspace_from_vectors(rows, a.ambient_dim());
}

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw InputError("not a rational number: \"" + text + "\"");
    Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    Integer den = match[2].matched ? Integer(match[2].str()) : Integer(1);
    if (den == 0)
        throw InputError("zero denominator in \"" + text + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace equisyz

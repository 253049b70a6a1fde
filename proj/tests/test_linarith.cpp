#include "doctest.h"

#include <random>

#include "equisyz/error.hpp"
#include "equisyz/linarith.hpp"
#include "generators.hpp"

using namespace equisyz;

namespace {

RationalMatrix mat(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    std::vector<RationalVector> out;
    for (const auto& r : rows)
        out.emplace_back(r.begin(), r.end());
    return RationalMatrix::from_rows(out, cols);
}

Subspace span(const std::vector<std::vector<int>>& rows, std::size_t m) {
    return subspace_from_vectors(mat(rows, m).row_list(), m);
}

} // namespace

TEST_CASE("row_reduce") {
    const auto id = row_reduce(RationalMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.rref == RationalMatrix::identity(3));

    const auto zero = row_reduce(RationalMatrix(2, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.rref == RationalMatrix(2, 3));

    const auto dep = row_reduce(mat({{1, 2}, {2, 4}}, 2));
    CHECK(dep.rank == 1);
    CHECK(dep.rref == mat({{1, 2}, {0, 0}}, 2));

    const auto frac = row_reduce(mat({{2, 1}, {0, 3}}, 2));
    CHECK(frac.rref == RationalMatrix::identity(2));
    CHECK_THROWS_AS(mat({{1, 2}, {1}}, 2), InputError);
}

TEST_CASE("incremental rank matches row_reduce") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + trial % 6;
        const std::size_t cols = 1 + (trial / 6) % 5;
        std::vector<RationalVector> vs(rows, RationalVector(cols));
        for (auto& v : vs)
            for (auto& x : v)
                x = entry(rng) * (trial % 2 ? 1 : 0) + entry(rng);
        IncrementalRank inc(cols);
        for (const auto& v : vs)
            inc.add(v);
        CHECK(inc.rank() == row_reduce(RationalMatrix::from_rows(vs, cols)).rank);
    }
}

TEST_CASE("subspace_from_vectors") {
    CHECK(span({{1, 0}, {0, 1}}, 2).dim() == 2);
    CHECK(subspace_from_vectors({}, 3).dim() == 0);
    CHECK(span({{1, 1}, {2, 2}}, 2).dim() == 1);
    CHECK(span({{1, 1}}, 2) == span({{-3, -3}}, 2));
    CHECK(span({{1, 0}, {0, 1}}, 2) == full_space(2));
    CHECK_THROWS_AS(span({{1, 0, 0}}, 2), InputError);
}

TEST_CASE("intersect") {
    const Subspace x = span({{1, 0}}, 2);
    const Subspace y = span({{0, 1}}, 2);
    CHECK(intersect(x, y).dim() == 0);
    const Subspace plane = span({{1, 0, 0}, {0, 1, 0}}, 3);
    const Subspace zaxis = span({{0, 0, 1}}, 3);
    CHECK(intersect(plane, zaxis).dim() == 0);
    CHECK(intersect(plane, plane) == plane);
    const Subspace single[] = {plane};
    CHECK(intersect(single) == plane);
    CHECK(intersect(plane, span({{1, 1, 1}, {0, 1, 0}}, 3)) == span({{0, 1, 0}}, 3));
    CHECK_THROWS_AS(intersect(x, plane), InputError);
    CHECK_THROWS_AS(intersect(std::span<const Subspace>{}), InputError);
}

TEST_CASE("annihilator") {
    CHECK(annihilator(span({{1, 0}}, 2)) == span({{0, 1}}, 2));
    CHECK(annihilator(Subspace(1)) == span({{1}}, 1));
    CHECK(annihilator(full_space(3)).dim() == 0);
    const Subspace line = span({{1, 2, 3}}, 3);
    const Subspace ann = annihilator(line);
    CHECK(ann.dim() == 2);
    for (const auto& row : ann.basis().row_list())
        CHECK(row[0] + 2 * row[1] + 3 * row[2] == 0);
}

TEST_CASE("subspace properties on random pairs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + trial % 6;
        const Subspace a = testing::random_subspace(rng, m);
        const Subspace b = testing::random_subspace(rng, m);
        const Subspace c = testing::random_subspace(rng, m);
        CHECK(intersect(a, b).dim() + sum(a, b).dim() == a.dim() + b.dim());
        CHECK(annihilator(annihilator(a)) == a);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        for (const auto& row : intersect(a, b).basis().row_list()) {
            CHECK(a.contains(row));
            CHECK(b.contains(row));
        }
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2") == -2);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("+1/2") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
}

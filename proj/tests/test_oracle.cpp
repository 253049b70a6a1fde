#include "doctest.h"

#include "equisyz/error.hpp"
#include "equisyz/oracle.hpp"
#include "fixtures.hpp"

using namespace equisyz;

namespace {

SchurSeries s(const Partition& p, int degree, int c = 1) { return SchurSeries::term(p, c, degree); }

} // namespace

TEST_CASE("coordinate ideal basis") {
    const auto basis = coordinate_ideal_basis(fixtures::plane_and_normal_line(), 2);
    REQUIRE(basis.generators.size() == 2);
    CHECK(basis.generators[0].size() == 2);   // (3 - 2) * n
    CHECK(basis.generators[1].size() == 4);   // (3 - 1) * n
    // the plane's form is z (x) e_i: coordinate 2*n + i
    CHECK(basis.generators[0][1].weight_index == 1);
    CHECK(basis.generators[0][1].coeffs[5] == 1);
}

TEST_CASE("product character of two axes") {
    const auto gc = product_ideal_character(fixtures::two_axes(), 2, 2);
    CHECK(gc.at(2) == WeightTable{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
    CHECK(gc.total_dimension(2) == 4);
    CHECK(gc.at(1).empty());
    CHECK(character_to_schur(gc, 2) == s({2}, 2) + s({1, 1}, 2));
    const SchurSeries sm1 = sigma(2) - SchurSeries::one(2);
    CHECK(character_to_schur(gc, 2).terms() == (sm1 * sm1).graded_part(2).terms());
}

TEST_CASE("maximal ideal, degree one") {
    const auto gc = product_ideal_character(fixtures::origin_copies(1), 2, 1);
    CHECK(gc.total_dimension(1) == 2);
    CHECK(character_to_schur(gc, 1) == s({1}, 1));
}

TEST_CASE("intersection character of three axes") {
    const auto narrow = intersection_ideal_character(fixtures::three_axes(), 1, 2);
    CHECK(narrow.total_dimension(2) == 3);   // xy, xz, yz
    CHECK(narrow.total_dimension(1) == 0);
    const auto gc = intersection_ideal_character(fixtures::three_axes(), 2, 2);
    CHECK(character_to_schur(gc, 2) == s({2}, 2, 3) + s({1, 1}, 2, 3));

    // one subspace: intersection and product coincide
    const Arrangement single(2, {fixtures::span({{1, 1}}, 2)});
    const auto inter = intersection_ideal_character(single, 2, 3);
    const auto prod = product_ideal_character(single, 2, 3);
    for (int d = 0; d <= 3; ++d)
        CHECK(inter.at(d) == prod.at(d));
}

TEST_CASE("wedge character") {
    const auto axes = wedge_ideal_character(fixtures::two_axes(), 2, 2);
    CHECK(character_to_schur(axes, 2) == s({1, 1}, 2) + s({2}, 2));
    const auto origin = wedge_ideal_character(fixtures::origin_copies(1), 3, 2);
    CHECK(character_to_schur(origin, 2) == s({1, 1}, 2));
    const auto three = wedge_ideal_character(fixtures::three_axes(), 3, 3);
    CHECK(three.at(0).empty());
    CHECK(three.at(1).empty());
    CHECK(three.at(2).empty());
    CHECK_THROWS_AS(wedge_ideal_character(fixtures::origin_copies(1), 2, 3), InputError);
}

TEST_CASE("exterior sign bookkeeping: x ^ x = 0 in a square of the maximal ideal") {
    // With n = 1 the exterior algebra of K^1 has nothing in degree 2.
    const auto gc = wedge_ideal_character(fixtures::origin_copies(2), 1, 1);
    CHECK(gc.at(1).empty());
    const auto gc2 = wedge_ideal_character(fixtures::origin_copies(2), 2, 2);
    CHECK(gc2.total_dimension(2) == 1);   // x1 ^ x2 only
}

TEST_CASE("full-ring characters") {
    const auto sym = product_ideal_character(Arrangement(1, {}), 2, 2);
    CHECK(character_to_schur(sym, 2) == s({2}, 2));
    const auto ext = wedge_ideal_character(Arrangement(1, {}), 2, 2);
    CHECK(character_to_schur(ext, 2) == s({1, 1}, 2));
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(product_ideal_character(fixtures::origin_copies(1), 5, 2), CapExceeded);
    CHECK_THROWS_AS(product_ideal_character(fixtures::origin_copies(5), 2, 2), CapExceeded);
    CHECK_THROWS_AS(product_ideal_character(fixtures::origin_copies(1), 2, 5), CapExceeded);
    CHECK_THROWS_WITH(product_ideal_character(fixtures::origin_copies(1), 5, 2),
                      doctest::Contains("n (dim V)=5"));
    OracleCaps raised = OracleCaps::parse("6");
    CHECK(raised.max_n == 6);
    CHECK_NOTHROW(product_ideal_character(fixtures::origin_copies(1), 5, 2, raised));
    const auto custom = OracleCaps::parse("m=5,t=2");
    CHECK(custom.max_m == 5);
    CHECK(custom.max_t == 2);
    CHECK(custom.max_n == 4);
    CHECK_THROWS_AS(OracleCaps::parse("q=3"), InputError);
    CHECK_THROWS_AS(OracleCaps::parse("m=0"), InputError);
    CHECK(monomial_space_dimension(2, 2, 2, false) == 10);
    CHECK(monomial_space_dimension(2, 2, 2, true) == 6);
}

TEST_CASE("character_to_schur needs n >= d") {
    const auto gc = product_ideal_character(fixtures::two_axes(), 1, 2);
    CHECK_THROWS_AS(character_to_schur(gc, 2), InputError);
}

TEST_CASE("oracle invariants") {
    const Arrangement arrangements[] = {fixtures::two_axes(), fixtures::plane_and_normal_line(),
                                        fixtures::origin_copies(2), fixtures::lines_in_plane(3)};
    for (const auto& arr : arrangements) {
        const int n = 3;
        const auto prod = product_ideal_character(arr, n, 3);
        const auto inter = intersection_ideal_character(arr, n, 3);
        const auto wedge = wedge_ideal_character(arr, n, 3);
        CHECK(is_weight_symmetric(prod));
        CHECK(is_weight_symmetric(inter));
        CHECK(is_weight_symmetric(wedge));
        for (int d = 0; d <= 3; ++d) {
            for (const auto& [w, mult] : prod.at(d)) {
                auto it = inter.at(d).find(w);
                REQUIRE(it != inter.at(d).end());
                CHECK(it->second >= mult);
            }
            CHECK(prod.total_dimension(d) == evaluate_dimension(character_to_schur(prod, d), n, d));
            CHECK(wedge.total_dimension(d) == evaluate_dimension(character_to_schur(wedge, d), n, d));
        }
    }
}

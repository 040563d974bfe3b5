#include <catch2/catch_amalgamated.hpp>

#include "addact/presentation.hpp"

using namespace addact;

TEST_CASE("bipoly evaluation at operator pairs", "[presentation]") {
    auto [d1, d2] = delta_matrices(1, 1, 2);

    CHECK(evaluate(MultiPoly::constant(2, 1), d1.matrix, d2.matrix) == Matrix::identity(5));
    CHECK(evaluate(bipoly_monomial(0, 2), d1.matrix, d2.matrix).is_zero());

    BiPoly rel = bipoly_monomial(3, 0) + bipoly_monomial(1, 1, Rational(-3));
    CHECK(bipoly_str(rel) == "u^3 - 3*u*w");
    CHECK(evaluate(rel, d1.matrix, d2.matrix).is_zero());
    CHECK_FALSE(evaluate(bipoly_monomial(3, 0), d1.matrix, d2.matrix).is_zero());

    Matrix a{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
    Matrix b{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
    CHECK_THROWS_AS(evaluate(rel, a, b), NonCommuting);
}

TEST_CASE("kernel slices collect relations degree by degree", "[presentation]") {
    auto [d1, d2] = delta_matrices(1, 1, 2);
    auto slices = kernel_slices(d1.matrix, d2.matrix, 4);
    REQUIRE(slices.size() == 5);
    CHECK(slices[0].dim() == 0);
    CHECK(slices[1].dim() == 0);
    REQUIRE(slices[2].dim() == 1);
    CHECK(slices[2].basis[0] == bipoly_monomial(0, 2));

    REQUIRE(slices[3].dim() == 5);
    CHECK(slices[3].basis[0] ==
          bipoly_monomial(3, 0) + bipoly_monomial(1, 1, Rational(-3)));
    CHECK(slices[3].basis[1] == bipoly_monomial(2, 1));
    CHECK(slices[3].basis[4] == bipoly_monomial(0, 2));
    CHECK(slices[4].dim() == 10);

    // Every slice element really evaluates to zero.
    for (const auto& s : slices)
        for (const auto& p : s.basis)
            REQUIRE(evaluate(p, d1.matrix, d2.matrix).is_zero());

    CHECK(quotient_dimension(slices) == 5);
}

TEST_CASE("relation structure for the five dimensional case", "[presentation]") {
    RelationsReport r = verify_allrelations(1, 2);
    CHECK(r.pass());
    CHECK(r.item1);
    CHECK(r.item2);
    CHECK(r.item3);
    CHECK(r.item4);
    CHECK(r.quotient_dim == 5);
    CHECK(r.family_relation_counts == std::vector<std::size_t>{1, 0});

    REQUIRE(r.generators.size() == 4);
    CHECK(r.generators[0] == bipoly_monomial(0, 2));  // w^2
    CHECK(r.generators[1] == bipoly_monomial(2, 1));  // boundary layer
    CHECK(r.generators[2] == bipoly_monomial(4, 0));
    CHECK(r.generators[3] ==
          bipoly_monomial(3, 0) + bipoly_monomial(1, 1, Rational(-3)));
}

TEST_CASE("relation structure pairs the power monomials", "[presentation]") {
    RelationsReport r = verify_allrelations(1, 3);
    CHECK(r.pass());
    CHECK(r.quotient_dim == 7);
    CHECK(r.family_relation_counts == std::vector<std::size_t>{1, 0});

    // The single degree-4 combination relates u^4 and u^2 w.
    REQUIRE(r.generators.size() == 4);
    const BiPoly& combo = r.generators[3];
    CHECK(combo.coeff({4, 0}) == 1);
    CHECK(combo.coeff({2, 1}) != 0);
    CHECK(combo.terms().size() == 2);
}

TEST_CASE("relation structure scales to wider families", "[presentation]") {
    RelationsReport r = verify_allrelations(2, 4);
    CHECK(r.pass());
    CHECK(r.quotient_dim == 12);
    CHECK(r.family_relation_counts == std::vector<std::size_t>{2, 1, 0});
    // w^3, three boundary monomials, and 2 + 1 family combinations.
    CHECK(r.generators.size() == 7);

    CHECK(verify_allrelations(2, 5).pass());
    CHECK(verify_allrelations(2, 5).quotient_dim == 15);
}

TEST_CASE("relation structure preconditions", "[presentation]") {
    CHECK_THROWS_AS(verify_allrelations(1, 1), Error);
    CHECK_THROWS_AS(verify_allrelations(0, 5), Error);
}

TEST_CASE("quotient dimension matches the section count on a grid",
          "[presentation][property]") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 4}}) {
        auto [d1, d2] = delta_matrices(1, a, b);
        auto slices = kernel_slices(d1.matrix, d2.matrix, a + b + 1);
        std::size_t expected = static_cast<std::size_t>((a + 1) * (b + 1) - a * (a + 1) / 2);
        REQUIRE(quotient_dimension(slices) == expected);
    }
}

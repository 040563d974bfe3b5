#include <catch2/catch_amalgamated.hpp>

#include "addact/derivation.hpp"

using namespace addact;

TEST_CASE("section basis enumeration", "[derivation]") {
    SectionBasis s = SectionBasis::create(1, 1, 2);
    CHECK(s.dim() == 5);
    CHECK(s.monomials == std::vector<std::pair<int, int>>{
                             {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}});
    CHECK(s.index_of(2, 0) == 2);
    CHECK(s.index_of(1, 1) == 4);
    CHECK(s.index_of(2, 1) == SectionBasis::npos);
    CHECK(s.index_of(-1, 0) == SectionBasis::npos);
    CHECK(s.index_of(0, 2) == SectionBasis::npos);

    // Single-row region for a = 0 and the empty region for b < 0.
    CHECK(SectionBasis::create(3, 0, 4).dim() == 5);
    CHECK(SectionBasis::create(2, 1, -1).dim() == 0);
    CHECK_THROWS_AS(SectionBasis::create(-1, 1, 2), Error);
}

TEST_CASE("derivation matrices on the five dimensional section space", "[derivation]") {
    auto [d1, d2] = delta_matrices(1, 1, 2);
    const SectionBasis& s = d1.basis;
    CHECK(d1.label == OperatorLabel::delta1);
    CHECK(d2.label == OperatorLabel::delta2);

    std::size_t one = s.index_of(0, 0), x = s.index_of(1, 0), x2 = s.index_of(2, 0);
    std::size_t y = s.index_of(0, 1), xy = s.index_of(1, 1);

    // delta2: y -> 1, xy -> x, everything else -> 0.
    Matrix expect2(5, 5);
    expect2(one, y) = 1;
    expect2(x, xy) = 1;
    CHECK(d2.matrix == expect2);

    // delta1: x -> 1, x^2 -> 2x, y -> x (the twist), xy -> y + x^2.
    Matrix expect1(5, 5);
    expect1(one, x) = 1;
    expect1(x, x2) = 2;
    expect1(x, y) = 1;
    expect1(y, xy) = 1;
    expect1(x2, xy) = 1;
    CHECK(d1.matrix == expect1);

    // delta1^3 annihilates everything except xy, which it sends to 3.
    Matrix cube = mat_pow(d1.matrix, 3);
    CHECK(cube(one, xy) == 3);
    Matrix only(5, 5);
    only(one, xy) = 3;
    CHECK(cube == only);
    CHECK(mat_pow(d1.matrix, 4).is_zero());
}

TEST_CASE("ampleness is required for the twisted operators", "[derivation]") {
    CHECK_THROWS_AS(delta_matrices(1, 1, 1), NotAmple);
    CHECK_THROWS_AS(delta_matrices(2, 1, 2), NotAmple);
    CHECK_THROWS_AS(delta_matrices(1, 0, 3), NotAmple);
    CHECK_NOTHROW(delta_matrices(2, 1, 3));
}

TEST_CASE("the split operators satisfy the commutator relation", "[derivation]") {
    // [x dy, dx] = -dy on every section space with n = 1.
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 5}}) {
        SectionBasis s = SectionBasis::create(1, a, b);
        Matrix A = x_n_dy_matrix(s).matrix;
        Matrix B = dx_matrix(s).matrix;
        auto [d1, d2] = delta_matrices(1, a, b);
        CHECK(A * B - B * A == d2.matrix.scaled(Rational(-1)));
        CHECK(d1.matrix == A + B);
        CHECK(d1.matrix * d2.matrix == d2.matrix * d1.matrix);
    }
}

TEST_CASE("derivations stay inside the section space on the ample grid",
          "[derivation][property]") {
    for (int n = 0; n <= 4; ++n)
        for (int a = 1; a <= 4; ++a)
            for (int b = n * a + 1; b <= n * a + 4; ++b) {
                auto [d1, d2] = delta_matrices(n, a, b);
                REQUIRE(d1.matrix * d2.matrix == d2.matrix * d1.matrix);
                std::size_t dim = d1.basis.dim();
                int count = (a + 1) * (b + 1) - n * a * (a + 1) / 2;
                REQUIRE(dim == static_cast<std::size_t>(count));
                REQUIRE(mat_pow(d2.matrix, static_cast<unsigned>(a + 1)).is_zero());
                if (n == 1)
                    REQUIRE(mat_pow(d1.matrix, static_cast<unsigned>(a + b + 1)).is_zero());
            }
}

TEST_CASE("power expansion of the twisted derivation", "[derivation]") {
    CHECK(bch_power_check(1, 1, 2, 1));
    CHECK(bch_power_check(1, 1, 2, 2));
    for (unsigned N = 1; N <= 5; ++N) CHECK(bch_power_check(1, 1, 3, N));
    for (int a = 1; a <= 2; ++a)
        for (int b = 2 * a; b <= 2 * a + 2; ++b)
            for (unsigned N = 1; N <= static_cast<unsigned>(a + b + 1); ++N)
                CHECK(bch_power_check(1, a, b, N));
    CHECK_THROWS_AS(bch_power_check(2, 1, 3, 2), Error);
}

TEST_CASE("vanishing pattern of twisted powers", "[derivation]") {
    VanishingReport r = vanishing_check(1, 2);
    CHECK(r.pass());
    CHECK(r.delta2_power_vanishes);
    CHECK(r.all_boundary_vanish);
    CHECK(r.boundary == std::vector<std::tuple<int, int, bool>>{{4, 0, true}, {2, 1, true}});
    CHECK(r.delta1_top_nonzero);
    CHECK(r.nonvanishing_below ==
          std::vector<std::pair<int, int>>{{3, 0}, {1, 1}});

    CHECK(vanishing_check(1, 3).pass());
    CHECK(vanishing_check(2, 4).pass());
    CHECK(vanishing_check(2, 6).pass());
}

TEST_CASE("span dimensions of the power families", "[derivation]") {
    SpanDimsReport r = span_dims(1, 2, 1);
    CHECK(r.dim == 2);
    CHECK(r.equals_l_plus_1);
    CHECK(r.tail_independent);

    CHECK(span_dims(1, 2, 0).dim == 1);
    CHECK(span_dims(2, 4, 0).dim == 1);
    CHECK(span_dims(2, 4, 1).dim == 2);
    CHECK(span_dims(2, 4, 2).dim == 3);
    CHECK(span_dims(2, 5, 2).dim == 3);

    CHECK_THROWS_AS(span_dims(2, 3, 1), Error);   // needs b >= 2a
    CHECK_THROWS_AS(span_dims(1, 2, 2), Error);   // l out of range
}

TEST_CASE("span dimension equality on a grid", "[derivation][property]") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 2 * a; b <= 2 * a + 2; ++b)
            for (int l = 0; l <= a; ++l) {
                SpanDimsReport r = span_dims(a, b, l);
                REQUIRE(r.equals_l_plus_1);
                REQUIRE(r.tail_independent);
            }
}

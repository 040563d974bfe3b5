#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "addact/exactlin.hpp"

using namespace addact;

TEST_CASE("rational parsing and formatting round-trip", "[exactlin]") {
    CHECK(rational_str(Rational(1, 2)) == "1/2");
    CHECK(rational_str(Rational(-3)) == "-3");
    CHECK(rational_str(make_rational(4, -6)) == "-2/3");
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("factorial and binomial", "[exactlin]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rref of a rank deficient matrix", "[exactlin]") {
    Matrix m{{Rational(2), Rational(4)}, {Rational(1), Rational(2)}};
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.mat == Matrix{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}});
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent", "[exactlin]") {
    Matrix m{{Rational(0), Rational(1), Rational(3)},
             {Rational(2), Rational(0), Rational(1)},
             {Rational(2), Rational(1), Rational(4)}};
    RrefResult once = rref(m);
    RrefResult twice = rref(once.mat);
    CHECK(once.mat == twice.mat);
    CHECK(once.rank == twice.rank);
}

TEST_CASE("kernel vectors satisfy m v = 0", "[exactlin]") {
    Matrix m{{Rational(1), Rational(0), Rational(-2)}};
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 2);
    for (const auto& v : k.basis()) CHECK(vec_is_zero(m.apply(v)));
}

TEST_CASE("rank plus nullity equals column count on random matrices", "[exactlin][property]") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = size(rng), cols = size(rng);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
        RrefResult r = rref(m);
        Subspace k = kernel_basis(m);
        CHECK(r.rank + k.dim() == cols);
        for (const auto& v : k.basis()) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("subspace membership", "[exactlin]") {
    Subspace s(2, {VecQ{Rational(2), Rational(4)}});
    CHECK(s.dim() == 1);
    CHECK(s.member(VecQ{Rational(1), Rational(2)}));
    CHECK_FALSE(s.member(VecQ{Rational(1), Rational(3)}));
    CHECK_THROWS_AS(s.member(VecQ{Rational(1)}), DimensionMismatch);
}

TEST_CASE("subspace canonical form is representation independent", "[exactlin]") {
    Subspace a(3, {VecQ{Rational(1), Rational(1), Rational(0)}, VecQ{Rational(0), Rational(2), Rational(2)}});
    Subspace b(3, {VecQ{Rational(2), Rational(2), Rational(0)}, VecQ{Rational(1), Rational(2), Rational(1)}});
    CHECK(a == b);
    CHECK(a.sum(b) == a);
}

TEST_CASE("membership is closed under addition and scaling", "[exactlin][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<VecQ> gens;
        for (int g = 0; g < 2; ++g) {
            VecQ v(4);
            for (auto& x : v) x = entry(rng);
            gens.push_back(v);
        }
        Subspace s(4, gens);
        VecQ sum = vec_add(gens[0], vec_scale(gens[1], Rational(entry(rng))));
        CHECK(s.member(sum));
    }
}

TEST_CASE("solve_linear finds exact solutions and detects inconsistency", "[exactlin]") {
    Matrix a{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    auto x = solve_linear(a, VecQ{Rational(3), Rational(1)});
    REQUIRE(x.has_value());
    CHECK(*x == VecQ{Rational(2), Rational(1)});

    Matrix b{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_FALSE(solve_linear(b, VecQ{Rational(1), Rational(3)}).has_value());
}

TEST_CASE("express_in recovers coordinates", "[exactlin]") {
    std::vector<VecQ> basis = {VecQ{Rational(1), Rational(0), Rational(1)},
                               VecQ{Rational(0), Rational(1), Rational(1)}};
    VecQ v{Rational(2), Rational(3), Rational(5)};
    auto c = express_in(basis, v);
    REQUIRE(c.has_value());
    CHECK(*c == VecQ{Rational(2), Rational(3)});
    CHECK_FALSE(express_in(basis, VecQ{Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("matrix arithmetic basics", "[exactlin]") {
    Matrix a{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    Matrix b{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK((a * b) == Matrix{{Rational(2), Rational(1)}, {Rational(1), Rational(0)}});
    CHECK((a + b) - b == a);
    CHECK(a.transposed().transposed() == a);
    CHECK(mat_pow(b, 2) == Matrix::identity(2));
    CHECK(a.trace() == Rational(2));
    CHECK_THROWS_AS(a * Matrix(3, 2), DimensionMismatch);
}

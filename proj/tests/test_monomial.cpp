#include <catch2/catch_amalgamated.hpp>

#include "addact/monomial.hpp"

using namespace addact;

TEST_CASE("quotient by monomial generators", "[monomial]") {
    MonomialQuotient q = quotient_from_generators(2, {{3, 0}, {1, 1}, {0, 3}});
    CHECK(q.dim() == 5);
    CHECK(q.staircase == std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}});
    CHECK(q.ideal_generators == std::vector<Exponent>{{1, 1}, {3, 0}, {0, 3}});
    CHECK(q.in_staircase({2, 0}));
    CHECK_FALSE(q.in_staircase({1, 1}));
    CHECK(q.index_of({0, 1}) == 2);
}

TEST_CASE("minimal generators are recovered from a staircase", "[monomial]") {
    // Staircase of (x^3, x^2 y, y^2): 1, x, y, x^2, xy.
    std::set<Exponent> stairs{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
    MonomialQuotient q = quotient_from_staircase(2, stairs);
    CHECK(q.ideal_generators == std::vector<Exponent>{{0, 2}, {3, 0}, {2, 1}});
    MonomialQuotient back =
        quotient_from_generators(2, q.ideal_generators, q.var_names);
    CHECK(back == q);
}

TEST_CASE("non-cofinite ideals are rejected", "[monomial]") {
    CHECK_THROWS_AS(quotient_from_generators(2, {{1, 1}}), InfiniteQuotient);
    try {
        quotient_from_generators(2, {{2, 0}, {1, 1}});
    } catch (const InfiniteQuotient& e) {
        CHECK(e.variable == 1);
    }
    CHECK_THROWS_AS(quotient_from_generators(2, {{0, 0}}), TableInvalid);
    CHECK_THROWS_AS(quotient_from_generators(2, {{1, 0, 0}}), DimensionMismatch);
}

TEST_CASE("staircase algebra table", "[monomial]") {
    MonomialQuotient q = quotient_from_generators(2, {{3, 0}, {1, 1}, {0, 3}});
    AlgebraTable t = to_algebra_table(q);
    CHECK(t.verify().empty());
    CHECK(t.basis_labels() == std::vector<std::string>{"1", "x", "y", "x^2", "y^2"});
    VecQ x(5, Rational(0)), y(5, Rational(0));
    x[1] = 1;
    y[2] = 1;
    CHECK(t.multiply(x, y) == VecQ(5, Rational(0)));
    VecQ x2 = t.multiply(x, x);
    CHECK(x2[3] == 1);
    CHECK(t.multiply(x, x2) == VecQ(5, Rational(0)));
}

TEST_CASE("degree filtration matches the generic local view", "[monomial]") {
    std::vector<std::vector<Exponent>> ideals = {
        {{3, 0}, {1, 1}, {0, 3}},
        {{3, 0}, {2, 1}, {0, 2}},
        {{2, 0}, {0, 3}},
        {{4, 0}, {1, 1}, {0, 2}},
    };
    for (const auto& gens : ideals) {
        MonomialQuotient q = quotient_from_generators(2, gens);
        LocalView fast = monomial_local_view(q);
        LocalView slow = local_view(to_algebra_table(q));
        REQUIRE(fast.nilpotency_index == slow.nilpotency_index);
        CHECK(fast.maximal_ideal == slow.maximal_ideal);
        for (std::size_t k = 0; k < fast.nilpotency_index; ++k)
            CHECK(fast.power_of_m(k) == slow.power_of_m(k));
        CHECK(hilbert_samuel(fast) == hilbert_samuel(slow));
        CHECK(socle(fast).dim() == socle(slow).dim());
    }
}

TEST_CASE("box detection", "[monomial]") {
    BoxCheck box = is_box(quotient_from_generators(2, {{2, 0}, {0, 3}}));
    CHECK(box.is_box);
    CHECK(box.sides == std::vector<int>{1, 2});
    CHECK_FALSE(is_box(quotient_from_generators(2, {{3, 0}, {1, 1}, {0, 3}})).is_box);
    BoxCheck cube = is_box(quotient_from_generators(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(cube.is_box);
    CHECK(cube.sides == std::vector<int>{1, 1, 1});
}

TEST_CASE("gorenstein monomial quotients in two variables are boxes",
          "[monomial][property]") {
    // All staircases of dimension <= 8, walked as column-height partitions.
    for (int total = 1; total <= 8; ++total) {
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int remaining, int max_part) {
            if (remaining == 0) {
                std::set<Exponent> stairs;
                for (std::size_t col = 0; col < parts.size(); ++col)
                    for (int row = 0; row < parts[col]; ++row)
                        stairs.insert({static_cast<int>(col), row});
                MonomialQuotient q = quotient_from_staircase(2, stairs);
                bool gorenstein = is_gorenstein(monomial_local_view(q));
                REQUIRE(gorenstein == is_box(q).is_box);
                return;
            }
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                parts.push_back(p);
                rec(remaining - p, p);
                parts.pop_back();
            }
        };
        rec(total, total);
    }
}

TEST_CASE("staircase enumeration by graded dimensions", "[monomial]") {
    auto two = enumerate_staircases_2v({1, 1});
    CHECK(two.size() == 2);
    CHECK(dedupe_by_swap(two).size() == 1);

    // Dimension counts (1,2,1): heights (2,1,1), (3,1) and (2,2) fit.
    auto three = enumerate_staircases_2v({1, 2, 1});
    CHECK(three.size() == 3);
    CHECK(dedupe_by_swap(three).size() == 2);

    auto five = enumerate_staircases_2v({1, 2, 1, 1});
    REQUIRE(five.size() == 2);
    auto five_reps = dedupe_by_swap(five);
    REQUIRE(five_reps.size() == 1);
    CHECK(five_reps[0].ideal_generators ==
          std::vector<Exponent>{{1, 1}, {0, 2}, {4, 0}});

    auto seven = enumerate_staircases_2v({1, 2, 2, 1, 1});
    REQUIRE(seven.size() == 4);
    auto seven_reps = dedupe_by_swap(seven);
    REQUIRE(seven_reps.size() == 2);
    CHECK(seven_reps[0].ideal_generators ==
          std::vector<Exponent>{{0, 2}, {2, 1}, {5, 0}});
    CHECK(seven_reps[1].ideal_generators ==
          std::vector<Exponent>{{1, 1}, {0, 3}, {5, 0}});
}

TEST_CASE("every enumerated staircase has the requested dimensions", "[monomial][property]") {
    std::vector<std::vector<std::size_t>> profiles = {
        {1, 2, 2, 2, 1}, {1, 2, 3, 2}, {1, 1, 1, 1, 1, 1}, {1, 2, 2, 1, 1}};
    for (const auto& hs : profiles) {
        for (const auto& q : enumerate_staircases_2v(hs)) {
            LocalView v = monomial_local_view(q);
            REQUIRE(hilbert_samuel(v) == hs);
        }
    }
}

TEST_CASE("enumeration bound", "[monomial]") {
    CHECK_THROWS_AS(enumerate_staircases_2v({1, 2, 3, 4, 3}, 12), BoundExceeded);
    CHECK_NOTHROW(enumerate_staircases_2v({1, 2, 3, 4, 3}, 13));
}

TEST_CASE("variable swap and column heights", "[monomial]") {
    MonomialQuotient q = quotient_from_generators(2, {{3, 0}, {2, 1}, {0, 2}});
    CHECK(column_heights(q) == std::vector<int>{2, 2, 1});
    MonomialQuotient s = swap_variables(q);
    CHECK(column_heights(s) == std::vector<int>{3, 2});
    CHECK(swap_variables(s) == q);
    CHECK(dedupe_by_swap({q, s}).size() == 1);
}

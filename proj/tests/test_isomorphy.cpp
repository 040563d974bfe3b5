#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "addact/hirzebruch.hpp"
#include "addact/isomorphy.hpp"

using namespace addact;

namespace {

MonomialQuotient crossed_axes() { return quotient_from_generators(2, {{3, 0}, {1, 1}, {0, 3}}); }
MonomialQuotient hook_axes() { return quotient_from_generators(2, {{3, 0}, {2, 1}, {0, 2}}); }
MonomialQuotient tall_hook() { return quotient_from_generators(2, {{5, 0}, {1, 1}, {0, 3}}); }
MonomialQuotient wide_hook() { return quotient_from_generators(2, {{5, 0}, {2, 1}, {0, 2}}); }

VecQ basis_vec(std::size_t dim, std::size_t i) {
    VecQ v(dim, Rational(0));
    v[i] = 1;
    return v;
}

/// The same algebra presented in the basis g(e_0), ..., g(e_{n-1}).
AlgebraTable conjugate_table(const AlgebraTable& t, const Matrix& g) {
    std::size_t n = t.dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    AlgebraTable out(n, labels, t.unit_index());
    auto col = [&](std::size_t i) {
        VecQ v(n, Rational(0));
        for (std::size_t r = 0; r < n; ++r) v[r] = g(r, i);
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            VecQ prod = t.multiply(col(i), col(j));
            VecQ back = *solve_linear(g, prod);
            out.set_product(i, j, back);
        }
    return out;
}

/// Random change of basis fixing the unit vector: unipotent upper triangular
/// with entries from a small integer range.
Matrix random_unipotent(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-2, 2);
    Matrix g = Matrix::identity(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g(i, j) = entry(rng);
    return g;
}

}  // namespace

TEST_CASE("square-zero classification separates equal Hilbert-Samuel profiles", "[isomorphy]") {
    // Both algebras have Hilbert-Samuel (1,2,2), socle dim 2, nilpotency 3.
    Fingerprint cross = fingerprint(monomial_local_view(crossed_axes()));
    Fingerprint hook = fingerprint(monomial_local_view(hook_axes()));
    REQUIRE(cross.hilbert_samuel == hook.hilbert_samuel);
    REQUIRE(cross.socle_dim == hook.socle_dim);
    REQUIRE(cross.nilpotency_index == hook.nilpotency_index);

    REQUIRE(cross.sq_zero.has_value());
    CHECK(cross.sq_zero->quadric_rank == 2);
    CHECK(cross.sq_zero->gcd_degree == 0);
    CHECK(cross.sq_zero->pattern == SqZeroPattern::none);

    REQUIRE(hook.sq_zero.has_value());
    CHECK(hook.sq_zero->quadric_rank == 2);
    CHECK(hook.sq_zero->gcd_degree == 1);
    CHECK(hook.sq_zero->pattern == SqZeroPattern::one_rational);

    CHECK_FALSE(fingerprint_compatible(cross, hook));
    CHECK(fingerprint_mismatch_detail(cross, hook).find("square-zero") != std::string::npos);
}

TEST_CASE("fingerprints of the section-space algebras", "[isomorphy]") {
    SECTION("one-generator algebras carry no square-zero data") {
        Fingerprint f = fingerprint(monomial_local_view(quotient_from_generators(1, {{4}})));
        CHECK(f.hilbert_samuel == std::vector<std::size_t>{1, 1, 1, 1});
        CHECK(f.socle_dim == 1);
        CHECK_FALSE(f.sq_zero.has_value());
    }
    SECTION("twisted (1,1,2): double direction") {
        Fingerprint f = fingerprint(twisted_spair(1, 1, 2).algebra);
        CHECK(f.hilbert_samuel == std::vector<std::size_t>{1, 2, 1, 1});
        CHECK(f.socle_dim == 2);
        REQUIRE(f.sq_zero.has_value());
        CHECK(f.sq_zero->quadric_rank == 1);
        CHECK(f.sq_zero->gcd_degree == 2);
        CHECK(f.sq_zero->pattern == SqZeroPattern::double_rational);
    }
    SECTION("twisted (1,1,3): one rational direction") {
        Fingerprint f = fingerprint(twisted_spair(1, 1, 3).algebra);
        CHECK(f.hilbert_samuel == std::vector<std::size_t>{1, 2, 2, 1, 1});
        CHECK(f.socle_dim == 2);
        REQUIRE(f.sq_zero.has_value());
        CHECK(f.sq_zero->quadric_rank == 2);
        CHECK(f.sq_zero->gcd_degree == 1);
        CHECK(f.sq_zero->pattern == SqZeroPattern::one_rational);
    }
    SECTION("square planes: every direction squares to zero") {
        Fingerprint f = fingerprint(monomial_local_view(quotient_from_generators(2, {{2, 0}, {1, 1}, {0, 2}})));
        CHECK(f.hilbert_samuel == std::vector<std::size_t>{1, 2});
        REQUIRE(f.sq_zero.has_value());
        CHECK(f.sq_zero->quadric_rank == 0);
        CHECK(f.sq_zero->gcd_degree == -1);
        CHECK(f.sq_zero->pattern == SqZeroPattern::all_directions);
    }
    SECTION("split directions: two rational vs conjugate pair") {
        // Tables with xy = 0 and y^2 = c x^2 give the square-zero form
        // a^2 + c b^2: c = -1 splits over Q, c = 1 only over Q(i).
        for (int c : {-1, 1}) {
            AlgebraTable t(4, {"1", "x", "y", "x2"}, 0);
            for (std::size_t k = 0; k < 4; ++k) t.set_product_entry(0, k, k, 1);
            t.set_product_entry(1, 1, 3, 1);            // x*x = x2
            t.set_product_entry(2, 2, 3, Rational(c));  // y*y = c * x2
            LocalView v = local_view(t);
            Fingerprint f = fingerprint(v);
            REQUIRE(f.sq_zero.has_value());
            CHECK(f.sq_zero->gcd_degree == 2);
            CHECK(f.sq_zero->pattern == (c == -1 ? SqZeroPattern::two_rational
                                                 : SqZeroPattern::conjugate_pair));
        }
        // The two split types are indistinguishable over extensions.
        SqZeroType a{1, 2, SqZeroPattern::two_rational};
        SqZeroType b{1, 2, SqZeroPattern::conjugate_pair};
        CHECK(sq_zero_compatible(a, b));
        SqZeroType d{1, 2, SqZeroPattern::double_rational};
        CHECK_FALSE(sq_zero_compatible(a, d));
    }
}

TEST_CASE("certificate verification", "[isomorphy]") {
    SECTION("identity certificate") {
        AlgebraTable t = to_algebra_table(crossed_axes());
        IsoCertificate c{t, t, {basis_vec(5, 1), basis_vec(5, 2)}, {basis_vec(5, 1), basis_vec(5, 2)}, std::nullopt};
        CHECK(verify_certificate(c));
    }
    SECTION("the twisted (1,1,2) algebra is the hook staircase in new coordinates") {
        AlgebraTable src = twisted_spair(1, 1, 2).algebra.table;  // basis 1, t, s, t^2, ts
        AlgebraTable dst = to_algebra_table(quotient_from_generators(2, {{4, 0}, {1, 1}, {0, 2}}, {"z", "w"}));
        // t -> z and s -> w + z^2/3 turn t^3 = 3ts, s^2 = 0, t^4 = 0 into
        // monomial relations.
        VecQ s_img = basis_vec(5, 2);
        s_img[3] = Rational(1, 3);  // w + z^2/3
        IsoCertificate good{src, dst, {basis_vec(5, 1), basis_vec(5, 2)}, {basis_vec(5, 1), s_img}, std::nullopt};
        CHECK(verify_certificate(good));

        IsoCertificate bad = good;
        bad.images[1] = basis_vec(5, 2);  // s -> w drops the correction term
        CertificateCheck chk = check_certificate(bad);
        CHECK_FALSE(chk.valid);
        CHECK(chk.reason.find("relation violated") != std::string::npos);
    }
    SECTION("relation violations are caught") {
        AlgebraTable src = twisted_spair(1, 1, 3).algebra.table;
        AlgebraTable dst = to_algebra_table(tall_hook());
        IsoCertificate c{src, dst, {basis_vec(7, 1), basis_vec(7, 2)}, {basis_vec(7, 1), basis_vec(7, 2)}, std::nullopt};
        CertificateCheck chk = check_certificate(c);
        CHECK_FALSE(chk.valid);
        CHECK(chk.reason.find("relation violated") != std::string::npos);
    }
    SECTION("rank defects are caught") {
        AlgebraTable t = to_algebra_table(quotient_from_generators(1, {{3}}));
        IsoCertificate c{t, t, {basis_vec(3, 1)}, {basis_vec(3, 2)}, std::nullopt};
        CertificateCheck chk = check_certificate(c);
        CHECK_FALSE(chk.valid);
        CHECK(chk.reason.find("rank defect") != std::string::npos);
    }
    SECTION("non-generating sets are caught") {
        AlgebraTable t = to_algebra_table(crossed_axes());
        IsoCertificate c{t, t, {basis_vec(5, 1)}, {basis_vec(5, 1)}, std::nullopt};
        CertificateCheck chk = check_certificate(c);
        CHECK_FALSE(chk.valid);
        CHECK(chk.reason.find("subalgebra") != std::string::npos);
    }
    SECTION("subspace data") {
        AlgebraTable t = to_algebra_table(crossed_axes());
        std::vector<VecQ> u = {basis_vec(5, 1), basis_vec(5, 2)};
        IsoCertificate c{t, t, u, u, std::make_pair(u, u)};
        CHECK(verify_certificate(c));
        c.subspace_data->second = {basis_vec(5, 1), basis_vec(5, 3)};
        CertificateCheck chk = check_certificate(c);
        CHECK_FALSE(chk.valid);
        CHECK(chk.reason.find("subspace") != std::string::npos);
    }
    SECTION("dimension mismatch") {
        AlgebraTable a = to_algebra_table(quotient_from_generators(1, {{3}}));
        AlgebraTable b = to_algebra_table(crossed_axes());
        IsoCertificate c{a, b, {basis_vec(3, 1)}, {basis_vec(5, 1)}, std::nullopt};
        CHECK_FALSE(verify_certificate(c));
    }
}

TEST_CASE("monomiality of the twisted (1,1,2) algebra", "[isomorphy]") {
    MonomialityVerdict v = decide_monomial_2gen(twisted_spair(1, 1, 2).algebra);
    REQUIRE(v.kind == MonomialityVerdict::Kind::monomial);
    REQUIRE(v.staircase.has_value());
    CHECK(v.staircase->ideal_generators ==
          std::vector<Exponent>{{1, 1}, {0, 2}, {4, 0}});
    REQUIRE(v.certificate.has_value());
    CHECK(verify_certificate(*v.certificate));
    CHECK(v.certificate->source.dim() == 5);
    CHECK(v.refutations.empty());
}

TEST_CASE("non-monomiality of the twisted (1,1,3) algebra", "[isomorphy]") {
    LocalView a = twisted_spair(1, 1, 3).algebra;
    CHECK(hilbert_samuel(a) == std::vector<std::size_t>{1, 2, 2, 1, 1});

    MonomialityVerdict v = decide_monomial_2gen(a);
    REQUIRE(v.kind == MonomialityVerdict::Kind::non_monomial);
    CHECK_FALSE(v.certificate.has_value());
    REQUIRE(v.refutations.size() == 2);

    // Candidate staircases with this profile, modulo the variable swap: both
    // rejected by arguments that survive any field extension.
    for (const auto& r : v.refutations) CHECK(r.extension_independent);

    CHECK(v.refutations[0].candidate.ideal_generators ==
          std::vector<Exponent>{{0, 2}, {2, 1}, {5, 0}});
    CHECK(v.refutations[0].reason.find("inconsistent") != std::string::npos);

    CHECK(v.refutations[1].candidate.ideal_generators ==
          std::vector<Exponent>{{1, 1}, {0, 3}, {5, 0}});
    CHECK(v.refutations[1].reason.find("square-zero") != std::string::npos);
}

TEST_CASE("monomial inputs certify themselves", "[isomorphy]") {
    for (const auto& q : {crossed_axes(), hook_axes(), wide_hook(),
                          quotient_from_generators(2, {{4, 0}, {1, 1}, {0, 2}})}) {
        MonomialityVerdict v = decide_monomial_2gen(monomial_local_view(q));
        REQUIRE(v.kind == MonomialityVerdict::Kind::monomial);
        REQUIRE(v.certificate.has_value());
        CHECK(verify_certificate(*v.certificate));
        CHECK(v.staircase->dim() == q.dim());
    }
}

TEST_CASE("monomiality preconditions and bounds", "[isomorphy]") {
    CHECK_THROWS_AS(decide_monomial_2gen(monomial_local_view(quotient_from_generators(1, {{4}}))),
                    NotTwoGenerated);
    CHECK_THROWS_AS(decide_monomial_2gen(monomial_local_view(
                        quotient_from_generators(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}))),
                    NotTwoGenerated);
    CHECK_THROWS_AS(decide_monomial_2gen(monomial_local_view(
                        quotient_from_generators(2, {{12, 0}, {1, 1}, {0, 2}}))),
                    BoundExceeded);
    CHECK_NOTHROW(decide_monomial_2gen(
        monomial_local_view(quotient_from_generators(2, {{12, 0}, {1, 1}, {0, 2}})), 16));
}

TEST_CASE("random change of basis: fingerprints invariant, monomiality recovered", "[isomorphy]") {
    std::mt19937_64 rng(20260814);
    const MonomialQuotient pool[] = {
        quotient_from_generators(2, {{2, 0}, {1, 1}, {0, 2}}),  // dim 3
        crossed_axes(),                                          // dim 5
        quotient_from_generators(2, {{4, 0}, {1, 1}, {0, 2}}),  // dim 5
        quotient_from_generators(2, {{3, 0}, {0, 2}}),           // dim 6 box
        wide_hook(),                                             // dim 7
    };
    auto swap_key = [](const MonomialQuotient& q) {
        return std::min(column_heights(q), column_heights(swap_variables(q)));
    };
    int decided = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const MonomialQuotient& q = pool[trial % 5];
        LocalView ref = monomial_local_view(q);
        Matrix g = random_unipotent(q.dim(), rng);
        LocalView moved = local_view(conjugate_table(to_algebra_table(q), g));

        CHECK(fingerprint(moved) == fingerprint(ref));

        MonomialityVerdict v = decide_monomial_2gen(moved);
        REQUIRE(v.kind == MonomialityVerdict::Kind::monomial);
        REQUIRE(v.certificate.has_value());
        CHECK(verify_certificate(*v.certificate));
        CHECK(swap_key(*v.staircase) == swap_key(q));
        ++decided;
    }
    CHECK(decided == 25);
}

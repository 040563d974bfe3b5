#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spair.hpp"

namespace addact {

namespace detail {

/// All exponent vectors of length nvars with total degree d, ascending lex.
inline std::vector<MultiPoly::Exp> homogeneous_exponents(int nvars, int degree) {
    std::vector<MultiPoly::Exp> out;
    MultiPoly::Exp cur(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, rest - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Homogeneous forms of a fixed degree vanishing on a parametrized orbit.
/// The coefficient space is indexed by the monomials of that degree in
/// ascending lexicographic exponent order, and the basis is the canonical
/// reduced echelon basis of the kernel in those coordinates.
struct FormSpace {
    std::size_t num_coords = 0;
    int degree = 0;
    std::vector<MultiPoly> basis;
    std::vector<MultiPoly::Exp> monomials;

    std::size_t dim() const { return basis.size(); }
};

/// Kernel of the pullback map on degree-d forms: a form F in the ambient
/// coordinates z_0..z_{n-1} lies in the kernel iff F(coords(a)) vanishes
/// identically as a polynomial in the orbit parameters.
inline FormSpace implicitize(const ParametrizedOrbit& orbit, int degree) {
    if (degree < 1) throw Error("implicitization degree must be at least 1");
    int n = static_cast<int>(orbit.coords.size());
    int m = static_cast<int>(orbit.num_params);

    FormSpace out;
    out.num_coords = static_cast<std::size_t>(n);
    out.degree = degree;
    out.monomials = detail::homogeneous_exponents(n, degree);

    // Pullback of each ambient monomial, with cached coordinate powers.
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) powers[static_cast<std::size_t>(i)] = {MultiPoly::constant(m, 1)};
    auto coord_power = [&](int i, int e) -> const MultiPoly& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * orbit.coords[static_cast<std::size_t>(i)]);
        return cache[static_cast<std::size_t>(e)];
    };

    std::vector<MultiPoly> pullbacks;
    std::map<MultiPoly::Exp, std::size_t> param_cols;
    for (const auto& e : out.monomials) {
        MultiPoly pb = MultiPoly::constant(m, 1);
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] > 0) pb = pb * coord_power(i, e[static_cast<std::size_t>(i)]);
        for (const auto& [pe, c] : pb.terms()) param_cols.try_emplace(pe, 0);
        pullbacks.push_back(std::move(pb));
    }
    std::size_t next = 0;
    for (auto& [pe, idx] : param_cols) idx = next++;

    // Rows indexed by parameter monomials, columns by ambient monomials.
    Matrix map(param_cols.size(), out.monomials.size());
    for (std::size_t f = 0; f < pullbacks.size(); ++f)
        for (const auto& [pe, c] : pullbacks[f].terms()) map(param_cols.at(pe), f) = c;

    Subspace kern = kernel_basis(map);
    for (const auto& row : kern.basis()) {
        MultiPoly form(n);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) form.add_term(out.monomials[j], row[j]);
        out.basis.push_back(std::move(form));
    }
    return out;
}

/// Rank of the Jacobian matrix of the basis forms at a point of their common
/// zero locus. Throws PointNotOnVariety when some form does not vanish there.
inline std::size_t jacobian_rank_at(const FormSpace& forms, const VecQ& point) {
    if (point.size() != forms.num_coords)
        throw DimensionMismatch("point size differs from the ambient coordinate count");
    if (vec_is_zero(point)) throw Error("the zero vector is not a point of projective space");
    for (std::size_t i = 0; i < forms.basis.size(); ++i)
        if (forms.basis[i].eval(point) != 0)
            throw PointNotOnVariety("form " + std::to_string(i) + " does not vanish at the point");

    Matrix jac(forms.basis.size(), forms.num_coords);
    for (std::size_t i = 0; i < forms.basis.size(); ++i)
        for (std::size_t j = 0; j < forms.num_coords; ++j)
            jac(i, j) = forms.basis[i].partial(static_cast<int>(j)).eval(point);
    return rank(jac);
}

/// Evidence chain for the non-normal quadric intersection: the orbit closure
/// of the S-pair (K[t,s]/(t^3, ts, s^3), span{t,s}) is cut out in degree 2 by
/// z1^2 - 2 z0 z3 and z2^2 - 2 z0 z4, is smooth along the orbit, and carries a
/// whole line of singular points in its boundary. A codimension-one singular
/// locus on a surface rules out normality.
struct NonNormalReport {
    SPair pair;
    ParametrizedOrbit orbit;
    FormSpace quadrics;
    FormSpace cubics;
    bool quadrics_match = false;        // degree-2 basis is the expected pair of quadrics
    bool cubics_contain_products = false;  // degree-3 space contains all coordinate multiples
    std::vector<std::pair<VecQ, std::size_t>> line_samples;   // (point, jacobian rank)
    std::vector<std::pair<VecQ, std::size_t>> orbit_samples;  // (point, jacobian rank)

    bool line_ranks_drop() const {
        for (const auto& [pt, r] : line_samples)
            if (r > 1) return false;
        return !line_samples.empty();
    }
    bool orbit_ranks_full() const {
        for (const auto& [pt, r] : orbit_samples)
            if (r != 2) return false;
        return !orbit_samples.empty();
    }
    bool pass() const {
        return quadrics_match && cubics_contain_products && line_ranks_drop() && orbit_ranks_full();
    }
};

inline NonNormalReport verify_nonnormal_example() {
    NonNormalReport rep;
    rep.pair = monomial_spair(quotient_from_generators(2, {{3, 0}, {1, 1}, {0, 3}}, {"t", "s"}));
    rep.orbit = parametrize_orbit(rep.pair);
    rep.quadrics = implicitize(rep.orbit, 2);

    const int n = 5;
    auto quad = [&](int sq, int mixed, const Rational& c) {
        MultiPoly f(n);
        MultiPoly::Exp e1(static_cast<std::size_t>(n), 0), e2(static_cast<std::size_t>(n), 0);
        e1[static_cast<std::size_t>(sq)] = 2;
        e2[0] = 1;
        e2[static_cast<std::size_t>(mixed)] = 1;
        f.add_term(e1, 1);
        f.add_term(e2, c);
        return f;
    };
    // Canonical order puts z2^2 - 2 z0 z4 before z1^2 - 2 z0 z3.
    rep.quadrics_match = rep.quadrics.basis.size() == 2 &&
                         rep.quadrics.basis[0] == quad(2, 4, -2) &&
                         rep.quadrics.basis[1] == quad(1, 3, -2);

    rep.cubics = implicitize(rep.orbit, 3);
    rep.cubics_contain_products = true;
    {
        std::map<MultiPoly::Exp, std::size_t> col;
        for (std::size_t j = 0; j < rep.cubics.monomials.size(); ++j) col[rep.cubics.monomials[j]] = j;
        auto coords_of = [&](const MultiPoly& f) {
            VecQ row(rep.cubics.monomials.size(), Rational(0));
            for (const auto& [e, c] : f.terms()) row[col.at(e)] = c;
            return row;
        };
        std::vector<VecQ> rows;
        for (const auto& f : rep.cubics.basis) rows.push_back(coords_of(f));
        Subspace cubic_span(rep.cubics.monomials.size(), rows);
        for (const auto& q : rep.quadrics.basis)
            for (int i = 0; i < n; ++i)
                if (!cubic_span.member(coords_of(MultiPoly::variable(n, i) * q)))
                    rep.cubics_contain_products = false;
    }

    // The singular line {z0 = z1 = z2 = 0}, sampled at fixed points.
    for (long long z4 : {0LL, 1LL, 2LL, 3LL, 5LL}) {
        VecQ pt(5, Rational(0));
        pt[3] = 1;
        pt[4] = z4;
        rep.line_samples.emplace_back(pt, jacobian_rank_at(rep.quadrics, pt));
    }

    // Smooth points: the orbit itself, sampled at fixed parameter values.
    const std::pair<long long, long long> params[] = {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {5, 3}};
    for (auto [a, b] : params) {
        VecQ pt;
        for (const auto& c : rep.orbit.coords) pt.push_back(c.eval({Rational(a), Rational(b)}));
        rep.orbit_samples.emplace_back(pt, jacobian_rank_at(rep.quadrics, pt));
    }
    return rep;
}

}  // namespace addact

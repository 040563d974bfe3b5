#pragma once

#include <string>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "multipoly.hpp"

namespace addact {

/// Polynomials in the two presentation variables u, w.
using BiPoly = MultiPoly;

inline BiPoly bipoly_monomial(int i, int j, const Rational& c = 1) {
    return MultiPoly::monomial(2, {i, j}, c);
}

inline std::string bipoly_str(const BiPoly& p) { return p.to_string({"u", "w"}); }

/// Substitutes the commuting matrices for u and w. Errors NonCommuting when
/// the matrices do not commute, since then the substitution is ill-defined.
inline Matrix evaluate(const BiPoly& p, const Matrix& d1, const Matrix& d2) {
    if (d1 * d2 != d2 * d1) throw NonCommuting(0, 1);
    std::size_t n = d1.rows();
    int du = p.degree_in(0), dw = p.degree_in(1);
    std::vector<Matrix> pu{Matrix::identity(n)}, pw{Matrix::identity(n)};
    for (int i = 0; i < du; ++i) pu.push_back(pu.back() * d1);
    for (int j = 0; j < dw; ++j) pw.push_back(pw.back() * d2);
    Matrix r(n, n);
    for (const auto& [e, c] : p.terms())
        r = r + (pu[static_cast<std::size_t>(e[0])] * pw[static_cast<std::size_t>(e[1])]).scaled(c);
    return r;
}

namespace detail {

/// Monomials u^i w^j of total degree <= d, ordered by total degree descending
/// and then u-exponent descending, so pivots land on the highest terms.
inline std::vector<std::pair<int, int>> bipoly_monomials_upto(int d) {
    std::vector<std::pair<int, int>> mons;
    for (int deg = d; deg >= 0; --deg)
        for (int i = deg; i >= 0; --i) mons.emplace_back(i, deg - i);
    return mons;
}

}  // namespace detail

/// All relations between two commuting nilpotent matrices up to a total
/// degree: the kernel of the substitution map on polynomials of degree <= d.
/// The basis is the canonical reduced echelon form against the monomial order
/// of total degree descending, then u-exponent descending.
struct KernelSlice {
    int degree = 0;
    std::vector<BiPoly> basis;

    std::size_t dim() const { return basis.size(); }
};

inline std::vector<KernelSlice> kernel_slices(const Matrix& d1, const Matrix& d2,
                                              int max_degree) {
    if (d1 * d2 != d2 * d1) throw NonCommuting(0, 1);
    std::size_t n = d1.rows();
    std::vector<KernelSlice> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto mons = detail::bipoly_monomials_upto(d);
        Matrix rows(mons.size(), n * n);
        for (std::size_t r = 0; r < mons.size(); ++r) {
            VecQ flat = evaluate(bipoly_monomial(mons[r].first, mons[r].second), d1, d2)
                            .flatten();
            for (std::size_t c = 0; c < flat.size(); ++c) rows(r, c) = flat[c];
        }
        Subspace ker = kernel_basis(rows.transposed());
        KernelSlice slice;
        slice.degree = d;
        for (const auto& v : ker.basis()) {
            BiPoly p(2);
            for (std::size_t r = 0; r < mons.size(); ++r)
                if (v[r] != 0) p = p + bipoly_monomial(mons[r].first, mons[r].second, v[r]);
            slice.basis.push_back(std::move(p));
        }
        out.push_back(std::move(slice));
    }
    return out;
}

/// Dimension of the quotient algebra K[u,w] / (relations), summed degree by
/// degree: in each degree the new monomials minus the newly appearing
/// relations. Valid once the slices reach a degree where every monomial is a
/// relation; from there on the contribution stays zero.
inline std::size_t quotient_dimension(const std::vector<KernelSlice>& slices) {
    std::size_t dim = 0, prev = 0;
    for (std::size_t d = 0; d < slices.size(); ++d) {
        std::size_t fresh = slices[d].dim() - prev;
        dim += (d + 1) - fresh;
        prev = slices[d].dim();
    }
    return dim;
}

/// Verification of the generator structure of the relation ideal of the
/// twisted operators with n = 1 and b >= 2a:
///   item1: w^{a+1} is a relation;
///   item2: every monomial u^{l1} w^{l2} with l1 + 2 l2 > a + b (up to the
///          degree cutoff) is a relation;
///   item3: for each 0 <= l <= a the family u^{a+b-l-2s} w^s, s = 0..a, spans
///          an operator space of dimension l + 1, so it carries exactly a - l
///          independent relations, and the tail s = a-l..a is independent;
///   item4: the collected generators, multiplied by all monomials up to the
///          cutoff, span every relation of degree <= a + b + 1.
struct RelationsReport {
    int a = 0, b = 0;
    bool item1 = false, item2 = false, item3 = false, item4 = false;
    std::vector<BiPoly> generators;
    std::vector<std::size_t> family_relation_counts;  // indexed by l
    std::size_t quotient_dim = 0;

    bool pass() const { return item1 && item2 && item3 && item4; }
};

inline RelationsReport verify_allrelations(int a, int b) {
    if (!(a >= 1 && b >= 2 * a))
        throw Error("relation structure is stated for b >= 2a >= 2");
    auto [d1m, d2m] = delta_matrices(1, a, b);
    const Matrix& d1 = d1m.matrix;
    const Matrix& d2 = d2m.matrix;
    int cutoff = a + b + 1;

    RelationsReport r;
    r.a = a;
    r.b = b;

    std::vector<KernelSlice> slices = kernel_slices(d1, d2, cutoff);
    r.quotient_dim = quotient_dimension(slices);

    r.item1 = evaluate(bipoly_monomial(0, a + 1), d1, d2).is_zero();
    r.generators.push_back(bipoly_monomial(0, a + 1));

    r.item2 = true;
    for (int l2 = 0; l2 <= cutoff; ++l2)
        for (int l1 = 0; l1 + l2 <= cutoff; ++l1) {
            if (l1 + 2 * l2 <= a + b) continue;
            if (!evaluate(bipoly_monomial(l1, l2), d1, d2).is_zero()) r.item2 = false;
        }
    // The boundary layer l1 + 2 l2 = a + b + 1 generates everything beyond it;
    // monomials already divisible by w^{a+1} are dropped.
    for (int l2 = a; l2 >= 0; --l2) r.generators.push_back(bipoly_monomial(a + b + 1 - 2 * l2, l2));

    // Relations inside the power families, read off from the kernel of the
    // family evaluation; RREF makes the combination canonical.
    r.item3 = true;
    for (int l = 0; l <= a; ++l) {
        std::vector<std::pair<int, int>> family;
        for (int s = 0; s <= a; ++s) family.emplace_back(a + b - l - 2 * s, s);
        Matrix rows(family.size(), d1.rows() * d1.cols());
        for (std::size_t i = 0; i < family.size(); ++i) {
            VecQ flat = evaluate(bipoly_monomial(family[i].first, family[i].second), d1, d2)
                            .flatten();
            for (std::size_t c = 0; c < flat.size(); ++c) rows(i, c) = flat[c];
        }
        Subspace ker = kernel_basis(rows.transposed());
        r.family_relation_counts.push_back(ker.dim());
        if (ker.dim() != static_cast<std::size_t>(a - l)) r.item3 = false;
        SpanDimsReport sd = span_dims(a, b, l);
        if (!sd.equals_l_plus_1 || !sd.tail_independent) r.item3 = false;
        for (const auto& v : ker.basis()) {
            BiPoly p(2);
            for (std::size_t i = 0; i < family.size(); ++i)
                if (v[i] != 0)
                    p = p + bipoly_monomial(family[i].first, family[i].second, v[i]);
            r.generators.push_back(std::move(p));
        }
    }

    // Saturation: the ideal spanned by the generators within degree <= cutoff
    // must exhaust the full kernel slice there.
    auto mons = detail::bipoly_monomials_upto(cutoff);
    std::vector<VecQ> spanned;
    for (const auto& g : r.generators)
        for (int i = 0; g.total_degree() + i <= cutoff; ++i)
            for (int j = 0; g.total_degree() + i + j <= cutoff; ++j) {
                BiPoly prod = g * bipoly_monomial(i, j);
                VecQ coords(mons.size(), Rational(0));
                for (std::size_t m = 0; m < mons.size(); ++m)
                    coords[m] = prod.coeff({mons[m].first, mons[m].second});
                spanned.push_back(std::move(coords));
            }
    Subspace ideal_span(mons.size(), spanned);
    r.item4 = ideal_span.dim() == slices.back().dim();
    for (const auto& g : r.generators)
        if (!evaluate(g, d1, d2).is_zero()) r.item4 = false;

    return r;
}

}  // namespace addact

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "multipoly.hpp"

namespace addact {

/// A local algebra with a chosen generating subspace U of the maximal ideal,
/// given by a basis. When the algebra came from a monomial quotient the
/// staircase is kept so that coordinates can be tied back to exponents.
struct SPair {
    LocalView algebra;
    std::vector<VecQ> u_basis;
    std::optional<MonomialQuotient> monomial_source;

    std::size_t dim() const { return algebra.dim(); }
    std::size_t num_generators() const { return u_basis.size(); }
};

/// Checks that the U basis lies in the maximal ideal, is linearly independent,
/// and generates the algebra as a unital algebra.
inline void validate(const SPair& p) {
    for (const auto& u : p.u_basis)
        if (!p.algebra.maximal_ideal.member(u))
            throw Error("U basis vector lies outside the maximal ideal");
    Subspace span(p.dim(), p.u_basis);
    if (span.dim() != p.u_basis.size())
        throw GenerationDefect("U basis is linearly dependent");
    Subspace closure = subalgebra_generated(p.algebra.table, p.u_basis);
    if (closure.dim() != p.dim())
        throw GenerationDefect("U generates a proper subalgebra of dimension " +
                               std::to_string(closure.dim()));
}

/// The S-pair of a monomial quotient with U spanned by the variables.
inline SPair monomial_spair(const MonomialQuotient& q) {
    SPair p;
    p.algebra = monomial_local_view(q);
    for (int var = 0; var < q.nvars; ++var) {
        Exponent e(static_cast<std::size_t>(q.nvars), 0);
        e[static_cast<std::size_t>(var)] = 1;
        VecQ u(q.dim(), Rational(0));
        u[q.index_of(e)] = 1;
        p.u_basis.push_back(std::move(u));
    }
    p.monomial_source = q;
    return p;
}

/// Multiplication operators of the U basis in the regular representation.
/// These are commuting nilpotent matrices.
inline std::vector<Matrix> ht_matrices(const SPair& p) {
    std::vector<Matrix> mats;
    mats.reserve(p.u_basis.size());
    for (const auto& u : p.u_basis) mats.push_back(p.algebra.table.mult_operator(u));
    return mats;
}

/// Product of two algebra elements whose coordinates are polynomials in some
/// shared parameter space.
inline std::vector<MultiPoly> multiply_poly_points(const AlgebraTable& t,
                                                   const std::vector<MultiPoly>& u,
                                                   const std::vector<MultiPoly>& v, int nvars) {
    std::vector<MultiPoly> r(t.dim(), MultiPoly(nvars));
    for (std::size_t i = 0; i < t.dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < t.dim(); ++j) {
            if (v[j].is_zero()) continue;
            MultiPoly prod = u[i] * v[j];
            for (const auto& [k, c] : t.product_basis(i, j)) r[k] = r[k] + prod.scaled(c);
        }
    }
    return r;
}

/// Coordinates of exp(a_1 u_1 + ... + a_m u_m) * 1 as polynomials in the
/// parameters a_i, one polynomial per algebra basis element.
struct ParametrizedOrbit {
    std::size_t num_params = 0;
    std::vector<MultiPoly> coords;
    std::vector<std::string> coord_labels;
};

inline ParametrizedOrbit parametrize_orbit(const SPair& p) {
    const AlgebraTable& t = p.algebra.table;
    int m = static_cast<int>(p.u_basis.size());
    std::size_t d = p.dim();

    // z = sum a_i u_i with polynomial coordinates.
    std::vector<MultiPoly> z(d, MultiPoly(m));
    for (int i = 0; i < m; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (p.u_basis[static_cast<std::size_t>(i)][k] != 0)
                z[k] = z[k] + MultiPoly::variable(m, i).scaled(
                                  p.u_basis[static_cast<std::size_t>(i)][k]);

    std::vector<MultiPoly> result(d, MultiPoly(m)), term(d, MultiPoly(m));
    result[t.unit_index()] = MultiPoly::constant(m, 1);
    term[t.unit_index()] = MultiPoly::constant(m, 1);
    for (std::size_t k = 1; k < p.algebra.nilpotency_index; ++k) {
        term = multiply_poly_points(t, term, z, m);
        Rational inv_k(1, k);
        for (auto& c : term) c = c.scaled(inv_k);  // term now holds z^k / k!
        for (std::size_t i = 0; i < d; ++i) result[i] = result[i] + term[i];
    }

    ParametrizedOrbit orbit;
    orbit.num_params = static_cast<std::size_t>(m);
    orbit.coords = std::move(result);
    orbit.coord_labels = t.basis_labels();
    return orbit;
}

/// For an S-pair coming from a monomial quotient with U spanned by the
/// variables, checks the torus equivariance identity
///   P_i(t_1 a_1, ..., t_n a_n) = t^{e_i} P_i(a)
/// symbolically in the 2n variables (t, a). Errors NotMonomialSPair when the
/// S-pair has no monomial provenance or U is not the variable span.
inline bool torus_equivariance_check(const SPair& p) {
    if (!p.monomial_source)
        throw NotMonomialSPair("S-pair does not carry a monomial presentation");
    const MonomialQuotient& q = *p.monomial_source;
    int n = q.nvars;
    if (p.u_basis.size() != static_cast<std::size_t>(n))
        throw NotMonomialSPair("U basis size differs from the variable count");
    for (int i = 0; i < n; ++i) {
        Exponent var(static_cast<std::size_t>(n), 0);
        var[static_cast<std::size_t>(i)] = 1;
        VecQ expect(q.dim(), Rational(0));
        expect[q.index_of(var)] = 1;
        if (p.u_basis[static_cast<std::size_t>(i)] != expect)
            throw NotMonomialSPair("U basis is not the span of the variables");
    }

    ParametrizedOrbit orbit = parametrize_orbit(p);
    // Variables 0..n-1 are t, n..2n-1 are a.
    std::vector<MultiPoly> scaled_params;
    for (int i = 0; i < n; ++i) {
        MultiPoly::Exp e(static_cast<std::size_t>(2 * n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(n + i)] = 1;
        scaled_params.push_back(MultiPoly::monomial(2 * n, e, 1));
    }
    for (std::size_t k = 0; k < orbit.coords.size(); ++k) {
        MultiPoly lhs = orbit.coords[k].substitute(scaled_params);
        MultiPoly::Exp torus_exp(static_cast<std::size_t>(2 * n), 0);
        for (int i = 0; i < n; ++i)
            torus_exp[static_cast<std::size_t>(i)] = q.staircase[k][static_cast<std::size_t>(i)];
        MultiPoly rhs = MultiPoly::monomial(2 * n, torus_exp, 1) * orbit.coords[k].embed(2 * n, n);
        if (lhs != rhs) return false;
    }
    return true;
}

/// Reconstructs an S-pair from commuting nilpotent operators: closes
/// {identity} | ops under products, reads off structure constants on the
/// closure basis, and takes U to be the span of the operators. Errors
/// NonCommuting / NotNilpotent with witnesses, GenerationDefect when the
/// operators are linearly dependent, and NotLocal via the local view.
inline SPair spair_from_operators(const std::vector<Matrix>& ops) {
    if (ops.empty()) throw GenerationDefect("no operators given");
    std::size_t n = ops[0].rows();
    for (const auto& m : ops)
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("operators must be square and of equal size");
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (ops[i] * ops[j] != ops[j] * ops[i]) throw NonCommuting(i, j);
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (!mat_pow(ops[i], static_cast<unsigned>(n)).is_zero()) throw NotNilpotent(i);

    std::vector<VecQ> flat;
    for (const auto& m : ops) flat.push_back(m.flatten());
    if (Subspace(n * n, flat).dim() != ops.size())
        throw GenerationDefect("operators are linearly dependent");

    auto mul = [n](const VecQ& a, const VecQ& b) {
        Matrix ma(n, n), mb(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ma(i, j) = a[i * n + j];
                mb(i, j) = b[i * n + j];
            }
        return (ma * mb).flatten();
    };

    SpanClosure closure = span_closure(Matrix::identity(n).flatten(), flat, mul);
    std::vector<std::string> labels(closure.dim());
    for (std::size_t k = 0; k < closure.dim(); ++k) {
        const ClosureOrigin& o = closure.origins[k];
        switch (o.kind) {
            case ClosureOrigin::unit: labels[k] = "1"; break;
            case ClosureOrigin::generator: labels[k] = "u" + std::to_string(o.a + 1); break;
            case ClosureOrigin::product: labels[k] = labels[o.a] + "*" + labels[o.b]; break;
        }
    }
    AlgebraTable table = table_from_closure(closure, mul, labels);

    SPair p;
    p.algebra = local_view(table);
    for (std::size_t g = 0; g < ops.size(); ++g) {
        VecQ e(closure.dim(), Rational(0));
        e[g + 1] = 1;  // unit occupies slot 0, generators follow in order
        p.u_basis.push_back(std::move(e));
    }
    return p;
}

}  // namespace addact

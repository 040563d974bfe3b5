#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spair.hpp"

namespace addact {

// ---------------------------------------------------------------------------
// Square-zero classification
//
// For a 2-generated local algebra the squaring map m/m^2 -> m^2/m^3 is a
// quadratic map whose coordinates are binary quadratic forms in the generator
// coefficients. Its zero locus in P^1 (the directions that square into m^3)
// is cut out by the gcd of those forms, and both the gcd degree and the
// multiplicity structure of its roots are isomorphism invariants. Rationality
// of the roots is not invariant under field extension and is tracked
// separately.
// ---------------------------------------------------------------------------

enum class SqZeroPattern {
    all_directions,   // every direction squares into m^3
    none,             // no direction does, over any field extension
    one_rational,     // a single direction, necessarily rational
    double_rational,  // one direction counted twice, necessarily rational
    two_rational,     // two distinct rational directions
    conjugate_pair    // two distinct directions, conjugate over a quadratic extension
};

inline std::string to_string(SqZeroPattern p) {
    switch (p) {
        case SqZeroPattern::all_directions: return "all_directions";
        case SqZeroPattern::none: return "none";
        case SqZeroPattern::one_rational: return "one_rational";
        case SqZeroPattern::double_rational: return "double_rational";
        case SqZeroPattern::two_rational: return "two_rational";
        case SqZeroPattern::conjugate_pair: return "conjugate_pair";
    }
    return "?";
}

struct SqZeroType {
    std::size_t quadric_rank = 0;  // dim span{x^2, xy, y^2} in m^2/m^3
    int gcd_degree = 0;            // common vanishing degree in P^1; -1 when all directions vanish
    SqZeroPattern pattern = SqZeroPattern::none;

    bool operator==(const SqZeroType&) const = default;
};

namespace detail {

// Dense univariate polynomials, coefficient of t^k at index k.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational r = 0;
    for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
    return r;
}

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (uni_deg(a) >= uni_deg(b)) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

/// Divides p by (t - r); the remainder must vanish.
inline UniPoly uni_deflate(const UniPoly& p, const Rational& r) {
    UniPoly q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = p.size(); k-- > 1;) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

inline std::vector<BigInt> divisors_of(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    if (n == 0) return out;
    // Values seen here are tiny; guard the scan anyway.
    for (BigInt d = 1; d * d <= n && d < 2000000; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

struct RootSplit {
    std::vector<Rational> roots;   // distinct rational roots
    bool residual_nonconstant = false;  // a factor without rational roots remains
};

/// Rational roots of a univariate polynomial, plus whether a nontrivial
/// irrational factor remains after deflating them away.
inline RootSplit rational_roots(UniPoly p) {
    RootSplit out;
    uni_trim(p);
    if (uni_deg(p) < 1) return out;

    while (p[0] == 0) {
        if (std::find(out.roots.begin(), out.roots.end(), Rational(0)) == out.roots.end())
            out.roots.push_back(0);
        p.erase(p.begin());
        if (uni_deg(p) < 1) return out;
    }

    BigInt scale = 1;
    for (const auto& c : p) scale = boost::multiprecision::lcm(scale, rat_den(c));
    BigInt lead = rat_num(p.back() * scale), tail = rat_num(p.front() * scale);

    std::vector<Rational> candidates;
    for (const BigInt& num : divisors_of(tail))
        for (const BigInt& den : divisors_of(lead)) {
            Rational r = make_rational(num, den);
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates)
        if (uni_eval(p, r) == 0) {
            out.roots.push_back(r);
            while (uni_deg(p) >= 1 && uni_eval(p, r) == 0) p = uni_deflate(p, r);
        }
    out.residual_nonconstant = uni_deg(p) >= 1;
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

inline bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    return sn * sn == n && sd * sd == d;
}

/// Classifies the common zero locus of binary quadratic forms
/// c2 a^2 + c1 ab + c0 b^2, given as (c2, c1, c0) triples.
inline SqZeroType classify_sq_zero(std::size_t rank, const std::vector<std::array<Rational, 3>>& forms) {
    SqZeroType out;
    out.quadric_rank = rank;

    std::vector<std::array<Rational, 3>> nonzero;
    for (const auto& f : forms)
        if (f[0] != 0 || f[1] != 0 || f[2] != 0) nonzero.push_back(f);
    if (nonzero.empty()) {
        out.gcd_degree = -1;
        out.pattern = SqZeroPattern::all_directions;
        return out;
    }

    // Affine part in t = a/b plus the multiplicity of the root at infinity.
    UniPoly g;
    int inf_mult = 2;
    for (const auto& f : nonzero) {
        UniPoly u = {f[2], f[1], f[0]};
        uni_trim(u);
        inf_mult = std::min(inf_mult, 2 - uni_deg(u));
        g = g.empty() ? u : uni_gcd(g, u);
    }
    int da = uni_deg(g);
    out.gcd_degree = da + inf_mult;

    switch (out.gcd_degree) {
        case 0: out.pattern = SqZeroPattern::none; break;
        case 1: out.pattern = SqZeroPattern::one_rational; break;
        default:
            if (inf_mult == 2) {
                out.pattern = SqZeroPattern::double_rational;
            } else if (inf_mult == 1) {
                out.pattern = SqZeroPattern::two_rational;
            } else {
                Rational disc = g[1] * g[1] - g[0] * g[2] * 4;
                if (disc == 0)
                    out.pattern = SqZeroPattern::double_rational;
                else
                    out.pattern = is_rational_square(disc) ? SqZeroPattern::two_rational
                                                           : SqZeroPattern::conjugate_pair;
            }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

/// Cheap isomorphism invariants of a local algebra. The square-zero component
/// is present exactly for 2-generated algebras.
struct Fingerprint {
    std::vector<std::size_t> hilbert_samuel;
    std::size_t socle_dim = 0;
    std::size_t nilpotency_index = 0;
    std::optional<SqZeroType> sq_zero;

    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const LocalView& v) {
    Fingerprint f;
    f.hilbert_samuel = hilbert_samuel(v);
    f.socle_dim = socle(v).dim();
    f.nilpotency_index = v.nilpotency_index;
    if (f.hilbert_samuel.size() < 2 || f.hilbert_samuel[1] != 2) return f;

    std::size_t r = f.hilbert_samuel.size() > 2 ? f.hilbert_samuel[2] : 0;
    if (r == 0) {
        f.sq_zero = detail::classify_sq_zero(0, {});
        return f;
    }

    // Coordinates on m^2/m^3: extend a basis of m^3 by rows of m^2.
    Subspace m2 = v.power_of_m(2), m3 = v.power_of_m(3);
    std::vector<VecQ> frame = m3.basis();
    std::size_t m3dim = frame.size();
    Subspace accum = m3;
    for (const auto& row : m2.basis()) {
        if (accum.member(row)) continue;
        frame.push_back(row);
        accum = accum.sum(Subspace(v.dim(), {row}));
    }
    auto cls = [&](const VecQ& w) {
        VecQ coords = *express_in(frame, w);
        return VecQ(coords.begin() + static_cast<std::ptrdiff_t>(m3dim), coords.end());
    };

    std::vector<VecQ> gens = minimal_generators(v);
    VecQ xx = cls(v.table.multiply(gens[0], gens[0]));
    VecQ xy = cls(v.table.multiply(gens[0], gens[1]));
    VecQ yy = cls(v.table.multiply(gens[1], gens[1]));

    std::vector<std::array<Rational, 3>> forms;
    for (std::size_t k = 0; k < r; ++k) forms.push_back({xx[k], xy[k] * 2, yy[k]});
    f.sq_zero = detail::classify_sq_zero(rank(Matrix::from_rows({xx, xy, yy})), forms);
    return f;
}

/// Pattern comparison that survives field extension: the split of two distinct
/// directions into rational vs conjugate is not stable, everything else is.
inline bool sq_zero_compatible(const SqZeroType& a, const SqZeroType& b) {
    auto cls = [](SqZeroPattern p) {
        return p == SqZeroPattern::conjugate_pair ? SqZeroPattern::two_rational : p;
    };
    return a.quadric_rank == b.quadric_rank && a.gcd_degree == b.gcd_degree &&
           cls(a.pattern) == cls(b.pattern);
}

/// True when the fingerprints agree in every component that is invariant over
/// arbitrary field extensions. A mismatch here refutes isomorphy over every
/// extension of the rationals.
inline bool fingerprint_compatible(const Fingerprint& a, const Fingerprint& b) {
    if (a.hilbert_samuel != b.hilbert_samuel || a.socle_dim != b.socle_dim ||
        a.nilpotency_index != b.nilpotency_index)
        return false;
    if (a.sq_zero.has_value() != b.sq_zero.has_value()) return false;
    if (a.sq_zero && !sq_zero_compatible(*a.sq_zero, *b.sq_zero)) return false;
    return true;
}

inline std::string fingerprint_mismatch_detail(const Fingerprint& a, const Fingerprint& b) {
    if (a.hilbert_samuel != b.hilbert_samuel) return "Hilbert-Samuel sequences differ";
    if (a.socle_dim != b.socle_dim) return "socle dimensions differ";
    if (a.nilpotency_index != b.nilpotency_index) return "nilpotency indices differ";
    if (a.sq_zero.has_value() != b.sq_zero.has_value()) return "generator counts differ";
    if (a.sq_zero && !sq_zero_compatible(*a.sq_zero, *b.sq_zero)) {
        if (a.sq_zero->quadric_rank != b.sq_zero->quadric_rank)
            return "square classes span different ranks mod m^3";
        return "square-zero direction types differ (" + to_string(a.sq_zero->pattern) + " vs " +
               to_string(b.sq_zero->pattern) + ")";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Isomorphism certificates
// ---------------------------------------------------------------------------

/// A claimed isomorphism, given by generators of the source and their images.
/// The morphism is reconstructed by closing the generators under products and
/// mirroring every discovery step in the target, so verification needs no
/// symbolic relations: it checks multiplicativity on a full basis and the rank
/// of the induced linear map. Optional subspace data asserts phi(U1) = U2.
struct IsoCertificate {
    AlgebraTable source;
    AlgebraTable target;
    std::vector<VecQ> generators;  // elements of the source algebra
    std::vector<VecQ> images;      // their claimed images in the target
    std::optional<std::pair<std::vector<VecQ>, std::vector<VecQ>>> subspace_data;
};

struct CertificateCheck {
    bool valid = false;
    std::string reason;
};

inline CertificateCheck check_certificate(const IsoCertificate& c) {
    std::size_t n = c.source.dim();
    if (c.target.dim() != n) return {false, "source and target dimensions differ"};
    if (c.generators.size() != c.images.size()) return {false, "generator and image counts differ"};

    auto mul_s = [&](const VecQ& a, const VecQ& b) { return c.source.multiply(a, b); };
    SpanClosure clo = span_closure(c.source.unit_vector(), c.generators, mul_s);
    if (clo.dim() != n)
        return {false, "generators span a subalgebra of dimension " + std::to_string(clo.dim()) +
                           " < " + std::to_string(n)};

    // Images of the closure basis, mirroring each discovery step.
    std::vector<VecQ> phi_flat;
    for (std::size_t k = 0; k < clo.dim(); ++k) {
        const ClosureOrigin& o = clo.origins[k];
        switch (o.kind) {
            case ClosureOrigin::unit: phi_flat.push_back(c.target.unit_vector()); break;
            case ClosureOrigin::generator: phi_flat.push_back(c.images[o.a]); break;
            case ClosureOrigin::product:
                phi_flat.push_back(c.target.multiply(phi_flat[o.a], phi_flat[o.b]));
                break;
        }
    }

    // The induced linear map on the source basis.
    std::vector<VecQ> phi_e(n);
    for (std::size_t i = 0; i < n; ++i) {
        VecQ ei(n, Rational(0));
        ei[i] = 1;
        VecQ coords = *clo.coordinates(ei);
        VecQ img(n, Rational(0));
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0) vec_axpy(img, coords[k], phi_flat[k]);
        phi_e[i] = std::move(img);
    }
    auto phi = [&](const VecQ& v) {
        VecQ img(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0) vec_axpy(img, v[i], phi_e[i]);
        return img;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            VecQ ei(n, Rational(0)), ej(n, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            if (phi(c.source.multiply(ei, ej)) != c.target.multiply(phi_e[i], phi_e[j]))
                return {false, "relation violated at " + c.source.basis_labels()[i] + " * " +
                                   c.source.basis_labels()[j]};
        }

    std::size_t r = rank(Matrix::from_rows(phi_e));
    if (r != n) return {false, "linear rank defect: image has dimension " + std::to_string(r)};

    if (c.subspace_data) {
        std::vector<VecQ> mapped;
        for (const auto& u : c.subspace_data->first) mapped.push_back(phi(u));
        if (Subspace(n, mapped) != Subspace(n, c.subspace_data->second))
            return {false, "generating subspace is not carried onto its counterpart"};
    }
    return {true, ""};
}

inline bool verify_certificate(const IsoCertificate& c) { return check_certificate(c).valid; }

// ---------------------------------------------------------------------------
// Monomiality decision for 2-generated algebras
// ---------------------------------------------------------------------------

namespace detail {

struct SearchFlags {
    bool escape = false;  // a branch left the rational field (irrational root possibilities)
    bool stuck = false;   // a consistent branch could not be certified or refuted
};

inline MultiPoly substitute_var(const MultiPoly& p, int var, const MultiPoly& expr) {
    if (p.degree_in(var) == 0) return p;
    std::vector<MultiPoly> images;
    images.reserve(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i)
        images.push_back(i == var ? expr : MultiPoly::variable(p.nvars(), i));
    return p.substitute(images);
}

inline UniPoly to_univariate(const MultiPoly& p, int var) {
    UniPoly u(static_cast<std::size_t>(p.degree_in(var)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) u[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += c;
    uni_trim(u);
    return u;
}

/// Coefficients of p viewed as a polynomial in one variable, lowest degree
/// first; the coefficients are polynomials in the remaining variables.
inline std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int var) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(p.degree_in(var)) + 1, MultiPoly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exp rest = e;
        int k = rest[static_cast<std::size_t>(var)];
        rest[static_cast<std::size_t>(var)] = 0;
        out[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return out;
}

inline MultiPoly poly_det(std::vector<std::vector<MultiPoly>> m) {
    std::size_t s = m.size();
    if (s == 0) return MultiPoly(0);
    if (s == 1) return m[0][0];
    int nv = m[0][0].nvars();
    MultiPoly det(nv);
    for (std::size_t j = 0; j < s; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 1; r < s; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < s; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * poly_det(std::move(minor));
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Sylvester resultant eliminating var. The resultant lies in the ideal
/// generated by f and g, so it vanishes on every common solution over every
/// field extension; a nonzero constant certifies the pair unsolvable.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    std::vector<MultiPoly> a = coeffs_in(f, var), b = coeffs_in(g, var);
    std::size_t m = a.size() - 1, n = b.size() - 1;
    std::size_t s = m + n;
    int nv = f.nvars();
    std::vector<std::vector<MultiPoly>> syl(s, std::vector<MultiPoly>(s, MultiPoly(nv)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) syl[r][r + k] = a[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = b[n - k];
    return poly_det(std::move(syl));
}

/// Depth-first triangular solver for small polynomial systems over Q.
/// Strategy: propagate linear equations, branch over rational roots of
/// univariate equations, and hand fully reduced (consistent) systems to an
/// acceptance callback over a small menu of values for the free variables.
/// The flags record whenever a branch was abandoned without a proof of
/// inconsistency, which is exactly when a failed search must not be read as a
/// refutation.
class TriangularSolver {
  public:
    TriangularSolver(int nvars, std::function<bool(const std::vector<Rational>&)> accept)
        : nvars_(nvars), accept_(std::move(accept)) {}

    SearchFlags flags;

    std::optional<std::vector<Rational>> run(std::vector<MultiPoly> eqs) {
        return solve(std::move(eqs), {}, std::vector<bool>(static_cast<std::size_t>(nvars_), false));
    }

  private:
    int nvars_;
    std::function<bool(const std::vector<Rational>&)> accept_;
    int resultant_budget_ = 24;  // shared across branches; keeps injection finite

    std::optional<std::vector<Rational>> solve(std::vector<MultiPoly> eqs,
                                               std::vector<std::pair<int, MultiPoly>> assigns,
                                               std::vector<bool> eliminated) {
        for (;;) {
            std::vector<MultiPoly> live;
            for (auto& e : eqs) {
                if (e.is_zero()) continue;
                if (e.is_constant()) return std::nullopt;  // contradiction
                live.push_back(std::move(e));
            }
            eqs = std::move(live);

            if (auto lin = find_solvable(eqs)) {
                auto [idx, var] = *lin;
                MultiPoly eq = eqs[idx];
                Rational c = eq.coeff(MultiPoly::unit_exp(nvars_, var));
                MultiPoly expr =
                    (eq - MultiPoly::variable(nvars_, var).scaled(c)).scaled(Rational(-1) / c);
                for (auto& e : eqs) e = substitute_var(e, var, expr);
                assigns.emplace_back(var, std::move(expr));
                eliminated[static_cast<std::size_t>(var)] = true;
                continue;
            }

            if (auto uni = find_univariate(eqs)) {
                auto [idx, var] = *uni;
                RootSplit split = rational_roots(to_univariate(eqs[idx], var));
                if (split.residual_nonconstant) flags.escape = true;
                // Zero first, then by magnitude: simplest solutions preferred.
                std::stable_sort(split.roots.begin(), split.roots.end(),
                                 [](const Rational& a, const Rational& b) {
                                     return abs(a) < abs(b);
                                 });
                for (const auto& r : split.roots) {
                    std::vector<MultiPoly> next = eqs;
                    MultiPoly val = MultiPoly::constant(nvars_, r);
                    for (auto& e : next) e = substitute_var(e, var, val);
                    auto next_assigns = assigns;
                    next_assigns.emplace_back(var, val);
                    auto next_elim = eliminated;
                    next_elim[static_cast<std::size_t>(var)] = true;
                    if (auto s = solve(std::move(next), std::move(next_assigns), std::move(next_elim)))
                        return s;
                }
                return std::nullopt;
            }

            if (eqs.empty()) return sample_family(assigns, eliminated);

            // Coupled system: inject a resultant. It lies in the ideal the
            // equations generate, so adding it changes nothing about the
            // solution set, and a nonzero constant one is a contradiction
            // valid over every field extension. Often the eliminant is
            // univariate and the root branch above takes over.
            if (resultant_budget_ > 0) {
                if (auto extra = eliminant(eqs)) {
                    --resultant_budget_;
                    if (extra->is_constant()) return std::nullopt;
                    eqs.push_back(std::move(*extra));
                    continue;
                }
            }

            flags.stuck = true;  // coupled multivariate system left; not attempted
            return std::nullopt;
        }
    }

    /// Smallest-Sylvester-first pairwise eliminant that is not already among
    /// the equations. Degrees are capped so the determinant stays tiny.
    std::optional<MultiPoly> eliminant(const std::vector<MultiPoly>& eqs) const {
        struct Cand {
            int size, var;
            std::size_t i, j;
        };
        std::vector<Cand> cands;
        for (int var = 0; var < nvars_; ++var)
            for (std::size_t i = 0; i < eqs.size(); ++i) {
                int di = eqs[i].degree_in(var);
                if (di < 1 || di > 3) continue;
                for (std::size_t j = i + 1; j < eqs.size(); ++j) {
                    int dj = eqs[j].degree_in(var);
                    if (dj < 1 || dj > 3) continue;
                    cands.push_back({di + dj, var, i, j});
                }
            }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.size < b.size; });
        for (const auto& c : cands) {
            MultiPoly r = resultant(eqs[c.i], eqs[c.j], c.var);
            if (r.is_zero()) continue;
            bool known = false;
            for (const auto& e : eqs)
                if ((e - r).is_zero()) {
                    known = true;
                    break;
                }
            if (!known) return r;
        }
        return std::nullopt;
    }

    /// A variable is solvable in an equation when it occurs only as a pure
    /// c * x_var term: then x_var = -(rest)/c is an exact substitution, no
    /// branching needed. Covers linear equations and quasi-linear ones whose
    /// remainder is nonlinear in the other variables.
    std::optional<std::pair<std::size_t, int>> find_solvable(const std::vector<MultiPoly>& eqs) const {
        for (std::size_t i = 0; i < eqs.size(); ++i)
            for (int var : eqs[i].support_vars()) {
                bool pure = true;
                Rational c = 0;
                for (const auto& [e, coef] : eqs[i].terms()) {
                    if (e[static_cast<std::size_t>(var)] == 0) continue;
                    if (e == MultiPoly::unit_exp(nvars_, var)) {
                        c = coef;
                    } else {
                        pure = false;
                        break;
                    }
                }
                if (pure && c != 0) return {{i, var}};
            }
        return std::nullopt;
    }

    std::optional<std::pair<std::size_t, int>> find_univariate(const std::vector<MultiPoly>& eqs) const {
        std::optional<std::pair<std::size_t, int>> best;
        int best_deg = 0;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            auto sup = eqs[i].support_vars();
            if (sup.size() != 1) continue;
            int d = eqs[i].total_degree();
            if (!best || d < best_deg) {
                best = {{i, sup[0]}};
                best_deg = d;
            }
        }
        return best;
    }

    /// All equations are satisfied identically; the remaining free variables
    /// parametrize a solution family. Samples a few members and asks the
    /// acceptance callback; marks the search stuck when none is accepted,
    /// since the family itself is consistent.
    std::optional<std::vector<Rational>> sample_family(
        const std::vector<std::pair<int, MultiPoly>>& assigns, const std::vector<bool>& eliminated) {
        std::vector<int> free_vars;
        for (int i = 0; i < nvars_; ++i)
            if (!eliminated[static_cast<std::size_t>(i)]) free_vars.push_back(i);

        std::vector<std::vector<Rational>> menu;
        menu.emplace_back(free_vars.size(), Rational(0));
        const Rational singles[] = {1, -1, 2, -2, Rational(1, 2)};
        for (std::size_t f = 0; f < free_vars.size(); ++f)
            for (const auto& val : singles) {
                std::vector<Rational> row(free_vars.size(), Rational(0));
                row[f] = val;
                menu.push_back(std::move(row));
            }
        if (free_vars.size() >= 2 && free_vars.size() <= 4) {
            std::vector<Rational> row(free_vars.size(), Rational(0));
            auto rec = [&](auto&& self, std::size_t pos) -> void {
                if (pos == free_vars.size()) {
                    menu.push_back(row);
                    return;
                }
                for (const Rational& val : {Rational(0), Rational(1), Rational(-1)}) {
                    row[pos] = val;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
        }

        for (const auto& choice : menu) {
            std::vector<Rational> values(static_cast<std::size_t>(nvars_), Rational(0));
            for (std::size_t f = 0; f < free_vars.size(); ++f)
                values[static_cast<std::size_t>(free_vars[f])] = choice[f];
            for (std::size_t k = assigns.size(); k-- > 0;)
                values[static_cast<std::size_t>(assigns[k].first)] = assigns[k].second.eval(values);
            if (accept_(values)) return values;
        }
        flags.stuck = true;
        return std::nullopt;
    }
};

struct ImageSearch {
    std::optional<IsoCertificate> certificate;
    bool refuted_everywhere = false;
    bool escape = false;
    bool stuck = false;
};

/// Searches for generator images p, q in the algebra v realizing the monomial
/// relations of the candidate staircase. Branches normalize the leading terms
/// of p and q against a fixed pair of minimal generators; within a branch the
/// unknowns are the remaining leading coefficient and the m^2-tails.
inline ImageSearch search_images(const LocalView& v, const MonomialQuotient& cand) {
    ImageSearch out;
    AlgebraTable btab = to_algebra_table(cand);
    std::size_t dim = v.dim();
    std::vector<VecQ> gens = minimal_generators(v);
    const std::vector<VecQ> tail_rows = v.power_of_m(2).basis();
    int t2 = static_cast<int>(tail_rows.size());
    int nvars = 2 + 2 * t2;

    VecQ zvec(btab.dim(), Rational(0)), wvec(btab.dim(), Rational(0));
    zvec[cand.index_of({1, 0})] = 1;
    wvec[cand.index_of({0, 1})] = 1;

    bool all_refuted = true;
    for (int p_leads_first = 1; p_leads_first >= 0; --p_leads_first)
        for (int q_leads_first = 1; q_leads_first >= 0; --q_leads_first) {
            if (!p_leads_first && !q_leads_first) continue;  // leading matrix singular: no iso

            auto build = [&](bool leads_first, int coeff_var, int tail_base) {
                std::vector<MultiPoly> coords(dim, MultiPoly(nvars));
                const VecQ& lead = leads_first ? gens[0] : gens[1];
                for (std::size_t k = 0; k < dim; ++k)
                    if (lead[k] != 0) coords[k] = coords[k] + MultiPoly::constant(nvars, lead[k]);
                if (leads_first)
                    for (std::size_t k = 0; k < dim; ++k)
                        if (gens[1][k] != 0)
                            coords[k] = coords[k] +
                                        MultiPoly::variable(nvars, coeff_var).scaled(gens[1][k]);
                for (int j = 0; j < t2; ++j)
                    for (std::size_t k = 0; k < dim; ++k)
                        if (tail_rows[static_cast<std::size_t>(j)][k] != 0)
                            coords[k] = coords[k] + MultiPoly::variable(nvars, tail_base + j)
                                                        .scaled(tail_rows[static_cast<std::size_t>(j)][k]);
                return coords;
            };
            std::vector<MultiPoly> p = build(p_leads_first, 0, 2);
            std::vector<MultiPoly> q = build(q_leads_first, 1, 2 + t2);

            std::vector<MultiPoly> eqs;
            for (const auto& g : cand.ideal_generators) {
                std::vector<MultiPoly> prod(dim, MultiPoly(nvars));
                prod[v.table.unit_index()] = MultiPoly::constant(nvars, 1);
                for (int i = 0; i < g[0]; ++i) prod = multiply_poly_points(v.table, prod, p, nvars);
                for (int j = 0; j < g[1]; ++j) prod = multiply_poly_points(v.table, prod, q, nvars);
                for (const auto& coord : prod)
                    if (!coord.is_zero()) eqs.push_back(coord);
            }

            std::optional<IsoCertificate> found;
            auto accept = [&](const std::vector<Rational>& values) {
                VecQ pv(dim, Rational(0)), qv(dim, Rational(0));
                for (std::size_t k = 0; k < dim; ++k) {
                    pv[k] = p[k].eval(values);
                    qv[k] = q[k].eval(values);
                }
                IsoCertificate cert{btab, v.table, {zvec, wvec}, {pv, qv}, std::nullopt};
                if (!check_certificate(cert).valid) return false;
                found = std::move(cert);
                return true;
            };

            TriangularSolver solver(nvars, accept);
            if (solver.run(eqs)) {
                out.certificate = std::move(found);
                out.refuted_everywhere = false;
                return out;
            }
            out.escape = out.escape || solver.flags.escape;
            out.stuck = out.stuck || solver.flags.stuck;
            if (solver.flags.escape || solver.flags.stuck) all_refuted = false;
        }
    out.refuted_everywhere = all_refuted;
    return out;
}

}  // namespace detail

/// One rejected candidate staircase, with the ground for rejection. Rejections
/// marked extension-independent remain valid over every field extension of Q;
/// only those may contribute to a non_monomial verdict.
struct Refutation {
    MonomialQuotient candidate;
    std::string reason;
    bool extension_independent = false;
};

struct MonomialityVerdict {
    enum class Kind { monomial, non_monomial, undecided } kind = Kind::undecided;
    std::optional<MonomialQuotient> staircase;   // matched candidate, for monomial verdicts
    std::optional<IsoCertificate> certificate;   // staircase algebra -> input algebra
    std::vector<Refutation> refutations;
    std::vector<std::string> notes;              // unresolved candidates, for undecided verdicts
};

inline std::string verdict_name(MonomialityVerdict::Kind k) {
    switch (k) {
        case MonomialityVerdict::Kind::monomial: return "monomial";
        case MonomialityVerdict::Kind::non_monomial: return "non_monomial";
        case MonomialityVerdict::Kind::undecided: return "undecided";
    }
    return "?";
}

/// Decides whether a 2-generated local algebra is isomorphic to a monomial
/// quotient K[z,w]/(monomials). Candidates are the staircases with the same
/// Hilbert-Samuel sequence, filtered by fingerprint and then attacked by an
/// exact search for generator images; the first verified certificate wins.
/// The verdict is non_monomial only when every candidate is excluded by an
/// argument valid over every field extension, and undecided otherwise.
inline MonomialityVerdict decide_monomial_2gen(const LocalView& v, std::size_t max_dim = 12) {
    std::vector<std::size_t> hs = hilbert_samuel(v);
    if (hs.size() < 2 || hs[1] != 2)
        throw NotTwoGenerated("m/m^2 has dimension " +
                              std::to_string(hs.size() < 2 ? std::size_t(0) : hs[1]) + ", need 2");

    std::vector<MonomialQuotient> candidates = dedupe_by_swap(enumerate_staircases_2v(hs, max_dim));
    Fingerprint fv = fingerprint(v);

    MonomialityVerdict out;
    bool unresolved = false;
    for (const auto& cand : candidates) {
        std::string desc;
        for (const auto& g : cand.ideal_generators) {
            if (!desc.empty()) desc += ", ";
            desc += "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + ")";
        }
        Fingerprint fc = fingerprint(monomial_local_view(cand));
        if (!fingerprint_compatible(fv, fc)) {
            out.refutations.push_back({cand, fingerprint_mismatch_detail(fv, fc), true});
            continue;
        }
        detail::ImageSearch res = detail::search_images(v, cand);
        if (res.certificate) {
            out.kind = MonomialityVerdict::Kind::monomial;
            out.staircase = cand;
            out.certificate = std::move(res.certificate);
            return out;
        }
        if (res.refuted_everywhere) {
            out.refutations.push_back(
                {cand, "generator-image equations are inconsistent in every leading-term branch",
                 true});
        } else {
            unresolved = true;
            out.notes.push_back("candidate ideal {" + desc + "} unresolved (" +
                                (res.escape ? "search left the rational field" : "search stalled") +
                                ")");
        }
    }
    out.kind = unresolved ? MonomialityVerdict::Kind::undecided
                          : MonomialityVerdict::Kind::non_monomial;
    return out;
}

}  // namespace addact

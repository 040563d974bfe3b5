#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exactlin.hpp"

namespace addact {

/// Monomial basis x^k y^m of the section space: the lattice region
///   k >= 0, 0 <= m <= a, k + n m <= b,
/// ordered by m ascending then k ascending. The region may be empty; no
/// positivity of the divisor is required here.
struct SectionBasis {
    int n = 0, a = 0, b = 0;
    std::vector<std::pair<int, int>> monomials;  // (k, m)

    static SectionBasis create(int n, int a, int b) {
        if (n < 0) throw Error("surface index must be nonnegative");
        SectionBasis s;
        s.n = n;
        s.a = a;
        s.b = b;
        for (int m = 0; m <= a; ++m)
            for (int k = 0; k + n * m <= b; ++k) s.monomials.emplace_back(k, m);
        return s;
    }

    std::size_t dim() const { return monomials.size(); }

    /// Index of x^k y^m, or npos when outside the region.
    std::size_t index_of(int k, int m) const {
        if (m < 0 || m > a || k < 0 || k + n * m > b) return npos;
        // Blocks of fixed m have length b - n*m + 1.
        std::size_t idx = 0;
        for (int mm = 0; mm < m; ++mm) idx += static_cast<std::size_t>(b - n * mm + 1);
        return idx + static_cast<std::size_t>(k);
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

enum class OperatorLabel { delta1, delta2, dx, x_n_dy };

inline std::string operator_label_name(OperatorLabel l) {
    switch (l) {
        case OperatorLabel::delta1: return "delta1";
        case OperatorLabel::delta2: return "delta2";
        case OperatorLabel::dx: return "dx";
        case OperatorLabel::x_n_dy: return "x_n_dy";
    }
    return "";
}

/// A derivation restricted to the section space, as a matrix in the monomial
/// basis (column = source monomial, row = target monomial).
struct OperatorMatrix {
    SectionBasis basis;
    Matrix matrix;
    OperatorLabel label;
};

namespace detail {

inline void add_image(Matrix& m, const SectionBasis& s, int k, int mm, std::size_t col,
                      const Rational& c) {
    std::size_t row = s.index_of(k, mm);
    if (row == SectionBasis::npos)
        throw Error("derivation image leaves the section space");
    m(row, col) += c;
}

}  // namespace detail

/// Matrix of d/dx on the section basis: x^k y^m -> k x^{k-1} y^m.
inline OperatorMatrix dx_matrix(const SectionBasis& s) {
    Matrix m(s.dim(), s.dim());
    for (std::size_t col = 0; col < s.dim(); ++col) {
        auto [k, mm] = s.monomials[col];
        if (k >= 1) detail::add_image(m, s, k - 1, mm, col, k);
    }
    return {s, std::move(m), OperatorLabel::dx};
}

/// Matrix of x^n d/dy on the section basis: x^k y^m -> m x^{k+n} y^{m-1}.
inline OperatorMatrix x_n_dy_matrix(const SectionBasis& s) {
    Matrix m(s.dim(), s.dim());
    for (std::size_t col = 0; col < s.dim(); ++col) {
        auto [k, mm] = s.monomials[col];
        if (mm >= 1) detail::add_image(m, s, k + s.n, mm - 1, col, mm);
    }
    return {s, std::move(m), OperatorLabel::x_n_dy};
}

/// Matrices of the locally nilpotent derivations
///   delta1 = d/dx + x^n d/dy,  delta2 = d/dy
/// restricted to the section space. Errors NotAmple for non-ample data.
inline std::pair<OperatorMatrix, OperatorMatrix> delta_matrices(int n, int a, int b) {
    if (!(a >= 1 && b > n * a))
        throw NotAmple("divisor (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") on surface " + std::to_string(n) + " is not ample");
    SectionBasis s = SectionBasis::create(n, a, b);
    OperatorMatrix d1 = dx_matrix(s);
    d1.matrix = d1.matrix + x_n_dy_matrix(s).matrix;
    d1.label = OperatorLabel::delta1;

    Matrix m2(s.dim(), s.dim());
    for (std::size_t col = 0; col < s.dim(); ++col) {
        auto [k, mm] = s.monomials[col];
        if (mm >= 1) detail::add_image(m2, s, k, mm - 1, col, mm);
    }
    return {std::move(d1), OperatorMatrix{s, std::move(m2), OperatorLabel::delta2}};
}

/// Checks the closed form for powers of delta1 = A + B on the surface with
/// n = 1, where A = x d/dy, B = d/dx and C = [A, B] = -d/dy is central:
///   (A+B)^N = sum over k = N mod 2 of (d/dy / 2)^{(N-k)/2}
///             * N! / (k! ((N-k)/2)!) * sum_r C(k, r) A^r B^{k-r}.
inline bool bch_power_check(int n, int a, int b, unsigned N) {
    if (n != 1) throw Error("power expansion check requires n = 1");
    SectionBasis s = SectionBasis::create(n, a, b);
    Matrix A = x_n_dy_matrix(s).matrix;
    Matrix B = dx_matrix(s).matrix;
    auto [d1, d2] = delta_matrices(n, a, b);

    Matrix lhs = mat_pow(d1.matrix, N);
    Matrix rhs(s.dim(), s.dim());
    for (unsigned k = N % 2; k <= N; k += 2) {
        unsigned j = (N - k) / 2;
        Matrix inner(s.dim(), s.dim());
        for (unsigned r = 0; r <= k; ++r)
            inner = inner + (mat_pow(A, r) * mat_pow(B, k - r)).scaled(Rational(binomial(k, r)));
        Rational coeff(factorial(N), factorial(k) * factorial(j));
        coeff /= Rational(BigInt(1) << j);  // the (1/2)^j from (d/dy / 2)^j
        rhs = rhs + (mat_pow(d2.matrix, j) * inner).scaled(coeff);
    }
    return lhs == rhs;
}

/// Vanishing pattern of the twisted derivations for n = 1:
///   delta2^{a+1} = 0 and delta1^{l1} delta2^{l2} = 0 when l1 + 2 l2 > a + b.
/// The boundary layer l1 + 2 l2 = a + b + 1 (with l2 <= a) is checked
/// exhaustively; products on the layer l1 + 2 l2 = a + b are recorded as
/// observed data. When b >= 2a the non-vanishing of delta1^{a+b} is verified.
struct VanishingReport {
    int a = 0, b = 0;
    bool delta2_power_vanishes = false;
    std::vector<std::tuple<int, int, bool>> boundary;  // (l1, l2, vanishes)
    bool all_boundary_vanish = false;
    bool delta1_top_nonzero = false;   // delta1^{a+b} != 0, meaningful when b >= 2a
    std::vector<std::pair<int, int>> nonvanishing_below;  // observed on l1+2l2 = a+b

    bool pass() const {
        return delta2_power_vanishes && all_boundary_vanish && delta1_top_nonzero;
    }
};

inline VanishingReport vanishing_check(int a, int b) {
    auto [d1, d2] = delta_matrices(1, a, b);
    VanishingReport r;
    r.a = a;
    r.b = b;
    r.delta2_power_vanishes = mat_pow(d2.matrix, static_cast<unsigned>(a + 1)).is_zero();

    std::vector<Matrix> p1{Matrix::identity(d1.basis.dim())};
    std::vector<Matrix> p2{Matrix::identity(d1.basis.dim())};
    for (int i = 0; i <= a + b + 1; ++i) p1.push_back(p1.back() * d1.matrix);
    for (int i = 0; i <= a + 1; ++i) p2.push_back(p2.back() * d2.matrix);

    r.all_boundary_vanish = true;
    for (int l2 = 0; l2 <= a; ++l2) {
        int l1 = a + b + 1 - 2 * l2;
        if (l1 < 0) continue;
        bool zero = (p1[static_cast<std::size_t>(l1)] * p2[static_cast<std::size_t>(l2)]).is_zero();
        r.boundary.emplace_back(l1, l2, zero);
        if (!zero) r.all_boundary_vanish = false;
    }
    for (int l2 = 0; l2 <= a; ++l2) {
        int l1 = a + b - 2 * l2;
        if (l1 < 0) continue;
        if (!(p1[static_cast<std::size_t>(l1)] * p2[static_cast<std::size_t>(l2)]).is_zero())
            r.nonvanishing_below.emplace_back(l1, l2);
    }
    if (b >= 2 * a)
        r.delta1_top_nonzero = !p1[static_cast<std::size_t>(a + b)].is_zero();
    return r;
}

/// Dimension of the span of the family delta1^{a+b-l-2s} delta2^s, s = 0..a,
/// for n = 1 and b >= 2a; the expected dimension is l + 1 and the subfamily
/// s = a-l..a is already independent.
struct SpanDimsReport {
    int l = 0;
    std::size_t dim = 0;
    bool equals_l_plus_1 = false;
    bool tail_independent = false;
};

inline SpanDimsReport span_dims(int a, int b, int l) {
    if (!(b >= 2 * a)) throw Error("span dimension count requires b >= 2a");
    if (l < 0 || l > a) throw Error("l must lie in 0..a");
    auto [d1, d2] = delta_matrices(1, a, b);
    std::vector<VecQ> rows, tail;
    for (int s = 0; s <= a; ++s) {
        Matrix prod = mat_pow(d1.matrix, static_cast<unsigned>(a + b - l - 2 * s)) *
                      mat_pow(d2.matrix, static_cast<unsigned>(s));
        rows.push_back(prod.flatten());
        if (s >= a - l) tail.push_back(prod.flatten());
    }
    SpanDimsReport r;
    r.l = l;
    r.dim = Subspace(rows[0].size(), rows).dim();
    r.equals_l_plus_1 = r.dim == static_cast<std::size_t>(l) + 1;
    r.tail_independent = Subspace(rows[0].size(), tail).dim() == tail.size();
    return r;
}

}  // namespace addact

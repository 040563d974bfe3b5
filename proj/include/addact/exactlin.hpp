#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace addact {

using VecQ = std::vector<Rational>;

inline bool vec_is_zero(const VecQ& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline VecQ vec_add(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecQ vec_scale(const VecQ& a, const Rational& c) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline void vec_axpy(VecQ& acc, const Rational& c, const VecQ& v) {
    if (acc.size() != v.size()) throw DimensionMismatch("vector sizes differ");
    if (c == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc[i] += c * v[i];
}

/// Dense matrix over the rationals, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
            for (const auto& x : r) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<VecQ>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    VecQ row(std::size_t i) const {
        return VecQ(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    /// Row-major concatenation of all entries.
    const VecQ& flatten() const { return data_; }

    bool is_zero() const { return vec_is_zero(data_); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rational& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix scaled(const Rational& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
        return r;
    }

    VecQ apply(const VecQ& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
        VecQ r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_, cols_;
    VecQ data_;
};

inline Matrix mat_pow(const Matrix& m, unsigned e) {
    if (m.rows() != m.cols()) throw DimensionMismatch("power of non-square matrix");
    Matrix r = Matrix::identity(m.rows());
    for (unsigned k = 0; k < e; ++k) r = r * m;
    return r;
}

struct RrefResult {
    Matrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan with first-nonzero pivoting; output is the canonical RREF.
inline RrefResult rref(Matrix m) {
    RrefResult res;
    std::size_t pr = 0;  // current pivot row
    for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, pc) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
        Rational inv = Rational(1) / m(pr, pc);
        for (std::size_t j = pc; j < m.cols(); ++j) m(pr, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m(i, pc) == 0) continue;
            Rational f = m(i, pc);
            for (std::size_t j = pc; j < m.cols(); ++j) m(i, j) -= f * m(pr, j);
        }
        res.pivot_cols.push_back(pc);
        ++pr;
    }
    res.rank = pr;
    res.mat = std::move(m);
    return res;
}

/// A linear subspace of Q^n held in canonical reduced row echelon form, so that
/// equal subspaces compare equal member-wise.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    Subspace(std::size_t ambient, const std::vector<VecQ>& spanning) : ambient_(ambient) {
        for (const auto& v : spanning)
            if (v.size() != ambient_) throw DimensionMismatch("spanning vector size differs from ambient");
        if (!spanning.empty()) {
            RrefResult r = rref(Matrix::from_rows(spanning));
            for (std::size_t i = 0; i < r.rank; ++i) basis_.push_back(r.mat.row(i));
        }
    }

    static Subspace full(std::size_t ambient) {
        std::vector<VecQ> rows;
        for (std::size_t i = 0; i < ambient; ++i) {
            VecQ e(ambient, Rational(0));
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        return Subspace(ambient, rows);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<VecQ>& basis() const { return basis_; }

    /// Reduces v against the echelon basis; empty residue means membership.
    VecQ reduce(VecQ v) const {
        if (v.size() != ambient_) throw DimensionMismatch("member query size differs from ambient");
        for (const auto& row : basis_) {
            std::size_t lead = leading(row);
            if (v[lead] != 0) vec_axpy(v, -v[lead], row);
        }
        return v;
    }

    bool member(const VecQ& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
        for (const auto& row : other.basis_)
            if (!member(row)) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
        std::vector<VecQ> rows = basis_;
        rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
        return Subspace(ambient_, rows);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    static std::size_t leading(const VecQ& row) {
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) return j;
        return row.size();
    }

    std::size_t ambient_;
    std::vector<VecQ> basis_;
};

/// Kernel of m as a canonical subspace of Q^cols.
inline Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t pc : r.pivot_cols) is_pivot[pc] = true;
    std::vector<VecQ> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        VecQ v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[r.pivot_cols[pr]] = -r.mat(pr, f);
        gens.push_back(std::move(v));
    }
    return Subspace(m.cols(), gens);
}

/// Rank of the row span.
inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Solves A x = b exactly; returns nullopt when inconsistent. For underdetermined
/// systems the free coordinates are set to zero.
inline std::optional<VecQ> solve_linear(const Matrix& a, const VecQ& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("rhs size differs from row count");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t pc : r.pivot_cols)
        if (pc == a.cols()) return std::nullopt;
    VecQ x(a.cols(), Rational(0));
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
        x[r.pivot_cols[pr]] = r.mat(pr, a.cols());
    return x;
}

/// Coordinates of v in the given (independent) spanning vectors, if v lies in their span.
inline std::optional<VecQ> express_in(const std::vector<VecQ>& vectors, const VecQ& v) {
    if (vectors.empty()) return vec_is_zero(v) ? std::optional<VecQ>(VecQ{}) : std::nullopt;
    Matrix a(v.size(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != v.size()) throw DimensionMismatch("vector sizes differ");
        for (std::size_t i = 0; i < v.size(); ++i) a(i, j) = vectors[j][i];
    }
    return solve_linear(a, v);
}

}  // namespace addact

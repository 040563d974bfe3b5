#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactlin.hpp"

namespace addact {

/// Finite dimensional commutative unital algebra over Q, given by structure
/// constants on a fixed basis. Products are stored sparsely per basis pair.
class AlgebraTable {
  public:
    using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

    AlgebraTable() = default;
    AlgebraTable(std::size_t dim, std::vector<std::string> labels, std::size_t unit_index)
        : dim_(dim),
          basis_labels_(std::move(labels)),
          unit_index_(unit_index),
          products_(dim * dim) {
        if (basis_labels_.size() != dim_) throw TableInvalid("label count differs from dim");
        if (unit_index_ >= dim_) throw TableInvalid("unit index out of range");
    }

    std::size_t dim() const { return dim_; }
    std::size_t unit_index() const { return unit_index_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }

    void set_product(std::size_t i, std::size_t j, const VecQ& value) {
        SparseVec sv;
        for (std::size_t k = 0; k < value.size(); ++k)
            if (value[k] != 0) sv.emplace_back(k, value[k]);
        products_[i * dim_ + j] = sv;
        products_[j * dim_ + i] = std::move(sv);
    }

    void set_product_entry(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw TableInvalid("structure index out of range");
        add_entry(products_[i * dim_ + j], k, c);
        if (i != j) add_entry(products_[j * dim_ + i], k, c);
    }

    const SparseVec& product_basis(std::size_t i, std::size_t j) const {
        return products_[i * dim_ + j];
    }

    VecQ unit_vector() const {
        VecQ e(dim_, Rational(0));
        e[unit_index_] = 1;
        return e;
    }

    VecQ multiply(const VecQ& u, const VecQ& v) const {
        if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("element size differs from dim");
        VecQ r(dim_, Rational(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (v[j] == 0) continue;
                Rational c = u[i] * v[j];
                for (const auto& [k, s] : product_basis(i, j)) r[k] += c * s;
            }
        }
        return r;
    }

    /// Multiplication operator of x acting on the algebra, as a matrix on coordinates.
    Matrix mult_operator(const VecQ& x) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            VecQ ej(dim_, Rational(0));
            ej[j] = 1;
            VecQ col = multiply(x, ej);
            for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
        }
        return m;
    }

    VecQ power(const VecQ& x, unsigned e) const {
        VecQ r = unit_vector();
        for (unsigned k = 0; k < e; ++k) r = multiply(r, x);
        return r;
    }

    /// Checks unit, commutativity and associativity on all basis triples.
    /// Returns the list of violated identities, empty when the table is valid.
    std::vector<std::string> verify() const {
        std::vector<std::string> bad;
        VecQ one = unit_vector();
        for (std::size_t i = 0; i < dim_; ++i) {
            VecQ ei(dim_, Rational(0));
            ei[i] = 1;
            if (multiply(one, ei) != ei)
                bad.push_back("1*" + basis_labels_[i] + " != " + basis_labels_[i]);
        }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (product_basis(i, j) != product_basis(j, i))
                    bad.push_back(basis_labels_[i] + "*" + basis_labels_[j] + " not symmetric");
        for (std::size_t i = 0; i < dim_; ++i) {
            VecQ ei(dim_, Rational(0));
            ei[i] = 1;
            for (std::size_t j = 0; j < dim_; ++j) {
                VecQ ej(dim_, Rational(0));
                ej[j] = 1;
                VecQ ij = multiply(ei, ej);
                for (std::size_t k = 0; k < dim_; ++k) {
                    VecQ ek(dim_, Rational(0));
                    ek[k] = 1;
                    if (multiply(ij, ek) != multiply(ei, multiply(ej, ek))) {
                        bad.push_back("(" + basis_labels_[i] + "*" + basis_labels_[j] + ")*" +
                                      basis_labels_[k] + " != " + basis_labels_[i] + "*(" +
                                      basis_labels_[j] + "*" + basis_labels_[k] + ")");
                    }
                }
            }
        }
        return bad;
    }

  private:
    static void add_entry(SparseVec& sv, std::size_t k, const Rational& c) {
        for (auto& [idx, val] : sv)
            if (idx == k) {
                val += c;
                return;
            }
        if (c != 0) {
            sv.emplace_back(k, c);
            std::sort(sv.begin(), sv.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }

    std::size_t dim_ = 0;
    std::vector<std::string> basis_labels_;
    std::size_t unit_index_ = 0;
    std::vector<SparseVec> products_;
};

/// A local algebra together with its maximal ideal and m-adic filtration.
/// filtration[k] = m^k, starting at the full algebra and ending at the last
/// nonzero power; nilpotency_index is the smallest k with m^k = 0.
struct LocalView {
    AlgebraTable table;
    Subspace maximal_ideal{0};
    std::size_t nilpotency_index = 0;
    std::vector<Subspace> filtration;

    std::size_t dim() const { return table.dim(); }

    Subspace power_of_m(std::size_t k) const {
        return k < filtration.size() ? filtration[k] : Subspace(table.dim());
    }
};

namespace detail {

inline std::vector<VecQ> products_of(const AlgebraTable& t, const std::vector<VecQ>& a,
                                     const std::vector<VecQ>& b) {
    std::vector<VecQ> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(t.multiply(x, y));
    return out;
}

}  // namespace detail

/// Locality test and filtration. The radical is computed as the kernel of the
/// trace form (i, j) -> trace(L_i L_j); the algebra is local exactly when the
/// radical is a codimension-one ideal, which is then the maximal ideal.
inline LocalView local_view(const AlgebraTable& t) {
    std::size_t d = t.dim();
    std::vector<Matrix> mult_ops;
    mult_ops.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        VecQ ei(d, Rational(0));
        ei[i] = 1;
        mult_ops.push_back(t.mult_operator(ei));
    }
    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Rational s = 0;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    const Rational& x = mult_ops[i](r, c);
                    if (x != 0) s += x * mult_ops[j](c, r);
                }
            gram(i, j) = s;
            gram(j, i) = s;
        }
    Subspace radical = kernel_basis(gram);
    if (radical.dim() + 1 != d) throw NotLocal(radical.dim(), d);

    LocalView v;
    v.table = t;
    v.maximal_ideal = radical;
    v.filtration.push_back(Subspace::full(d));
    Subspace cur = radical;
    while (cur.dim() > 0) {
        v.filtration.push_back(cur);
        cur = Subspace(d, detail::products_of(t, cur.basis(), radical.basis()));
    }
    v.nilpotency_index = v.filtration.size();
    return v;
}

/// Dimensions of the filtration quotients m^i / m^{i+1}, ending at the last
/// nonzero power of the maximal ideal.
inline std::vector<std::size_t> hilbert_samuel(const LocalView& v) {
    std::vector<std::size_t> hs;
    for (std::size_t i = 0; i < v.nilpotency_index; ++i) {
        std::size_t next = i + 1 < v.filtration.size() ? v.filtration[i + 1].dim() : 0;
        hs.push_back(v.filtration[i].dim() - next);
    }
    return hs;
}

/// Lifts of a basis of m / m^2, chosen greedily from the echelon basis of m.
inline std::vector<VecQ> minimal_generators(const LocalView& v) {
    std::vector<VecQ> gens;
    if (v.nilpotency_index < 2) return gens;
    Subspace accum = v.filtration.size() > 2 ? v.filtration[2] : Subspace(v.dim());
    for (const auto& row : v.filtration[1].basis()) {
        if (!accum.member(row)) {
            gens.push_back(row);
            accum = accum.sum(Subspace(v.dim(), {row}));
        }
    }
    return gens;
}

/// Annihilator of the maximal ideal.
inline Subspace socle(const LocalView& v) {
    std::vector<VecQ> gens = minimal_generators(v);
    if (gens.empty()) return Subspace::full(v.dim());
    std::size_t d = v.dim();
    Matrix stacked(gens.size() * d, d);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Matrix op = v.table.mult_operator(gens[g]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) stacked(g * d + i, j) = op(i, j);
    }
    return kernel_basis(stacked);
}

inline bool is_gorenstein(const LocalView& v) { return socle(v).dim() == 1; }

/// exp(x) = sum x^k / k! for x in the maximal ideal; the sum is finite because
/// x is nilpotent.
inline VecQ exp_element(const LocalView& v, const VecQ& x) {
    if (!v.maximal_ideal.member(x))
        throw Error("exp requires an element of the maximal ideal");
    VecQ result = v.table.unit_vector();
    VecQ term = v.table.unit_vector();
    for (std::size_t k = 1; k < v.nilpotency_index; ++k) {
        term = v.table.multiply(term, x);
        VecQ scaled = vec_scale(term, Rational(1, factorial(static_cast<unsigned>(k))));
        result = vec_add(result, scaled);
    }
    return result;
}

/// How a span-closure basis element arose: the unit, an input generator, or a
/// product of two earlier basis elements.
struct ClosureOrigin {
    enum Kind { unit, generator, product } kind;
    std::size_t a = 0, b = 0;  // generator index, or factor positions
};

/// Result of closing a set of generators under products. Basis elements are
/// kept in first-seen order: the unit, then the generators, then products
/// adjoined in sweep order.
struct SpanClosure {
    std::vector<VecQ> basis_flat;
    std::vector<ClosureOrigin> origins;
    Subspace space{0};

    std::size_t dim() const { return basis_flat.size(); }

    /// Coordinates of an element in the discovery basis, if it lies in the span.
    std::optional<VecQ> coordinates(const VecQ& flat) const {
        return express_in(basis_flat, flat);
    }
};

/// Closes {one} | gens under the given product. Elements are represented by
/// flat coordinate vectors; mul must be bilinear and associative on the span.
inline SpanClosure span_closure(const VecQ& one, const std::vector<VecQ>& gens,
                                const std::function<VecQ(const VecQ&, const VecQ&)>& mul) {
    struct Row {
        VecQ reduced;
        std::size_t lead;
    };
    std::vector<Row> rows;
    SpanClosure out;

    auto try_add = [&](const VecQ& v, ClosureOrigin origin) -> bool {
        VecQ r = v;
        for (const auto& row : rows)
            if (r[row.lead] != 0) vec_axpy(r, -r[row.lead], row.reduced);
        std::size_t lead = r.size();
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) {
                lead = j;
                break;
            }
        if (lead == r.size()) return false;
        Rational inv = Rational(1) / r[lead];
        rows.push_back({vec_scale(r, inv), lead});
        out.basis_flat.push_back(v);
        out.origins.push_back(origin);
        return true;
    };

    try_add(one, {ClosureOrigin::unit});
    for (std::size_t g = 0; g < gens.size(); ++g)
        try_add(gens[g], {ClosureOrigin::generator, g});

    // Sweep pairwise products in generation order until no new elements appear.
    for (std::size_t i = 0; i < out.basis_flat.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            try_add(mul(out.basis_flat[i], out.basis_flat[j]), {ClosureOrigin::product, i, j});

    out.space = Subspace(one.size(), out.basis_flat);
    return out;
}

/// Span of the unital subalgebra generated by the given elements.
inline Subspace subalgebra_generated(const AlgebraTable& t, const std::vector<VecQ>& gens) {
    auto mul = [&t](const VecQ& a, const VecQ& b) { return t.multiply(a, b); };
    return span_closure(t.unit_vector(), gens, mul).space;
}

/// Builds a structure-constant table on the closure basis of a commutative
/// matrix family; labels name the unit and the generators.
inline AlgebraTable table_from_closure(const SpanClosure& closure,
                                       const std::function<VecQ(const VecQ&, const VecQ&)>& mul,
                                       const std::vector<std::string>& labels) {
    std::size_t d = closure.dim();
    AlgebraTable t(d, labels, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            VecQ prod = mul(closure.basis_flat[i], closure.basis_flat[j]);
            auto coords = closure.coordinates(prod);
            if (!coords)
                throw GenerationDefect("closure is not multiplicatively closed");
            t.set_product(i, j, *coords);
        }
    return t;
}

}  // namespace addact

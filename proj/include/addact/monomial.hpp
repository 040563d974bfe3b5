#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace addact {

using Exponent = std::vector<int>;

inline int exponent_degree(const Exponent& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

inline bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace detail {

/// Canonical basis order for staircase monomials: total degree ascending, then
/// exponent vectors lexicographically descending (so x comes before y).
inline bool staircase_less(const Exponent& a, const Exponent& b) {
    int da = exponent_degree(a), db = exponent_degree(b);
    if (da != db) return da < db;
    return a > b;
}

inline std::string monomial_label(const std::vector<std::string>& names, const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace detail

/// Zero dimensional monomial quotient K[x_1..x_n] / I, stored as the staircase
/// of standard monomials plus the minimal generators of I.
struct MonomialQuotient {
    int nvars = 0;
    std::vector<std::string> var_names;
    std::vector<Exponent> staircase;         // canonical order
    std::vector<Exponent> ideal_generators;  // minimal, canonical order

    std::size_t dim() const { return staircase.size(); }

    bool in_staircase(const Exponent& e) const {
        return std::binary_search(staircase.begin(), staircase.end(), e,
                                  detail::staircase_less);
    }

    std::size_t index_of(const Exponent& e) const {
        auto it = std::lower_bound(staircase.begin(), staircase.end(), e,
                                   detail::staircase_less);
        return static_cast<std::size_t>(it - staircase.begin());
    }

    bool operator==(const MonomialQuotient& o) const {
        return nvars == o.nvars && staircase == o.staircase;
    }
};

inline std::vector<std::string> default_var_names(int nvars) {
    static const char* common[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i)
        names.push_back(i < 4 ? common[i] : "x" + std::to_string(i));
    return names;
}

/// Recovers the minimal ideal generators from a downward-closed staircase:
/// e is a minimal generator iff e is outside the staircase and every
/// e - unit_i with positive entry lies inside.
inline std::vector<Exponent> minimal_generators_of_complement(
    int nvars, const std::set<Exponent>& staircase) {
    std::vector<int> bound(static_cast<std::size_t>(nvars), 0);
    for (const auto& e : staircase)
        for (int i = 0; i < nvars; ++i)
            bound[static_cast<std::size_t>(i)] =
                std::max(bound[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    std::vector<Exponent> gens;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    // Scan the box one step beyond the staircase bounds.
    std::function<void(int)> scan = [&](int var) {
        if (var == nvars) {
            if (staircase.count(e)) return;
            for (int i = 0; i < nvars; ++i) {
                if (e[static_cast<std::size_t>(i)] == 0) continue;
                Exponent f(e);
                --f[static_cast<std::size_t>(i)];
                if (!staircase.count(f)) return;
            }
            gens.push_back(e);
            return;
        }
        for (int k = 0; k <= bound[static_cast<std::size_t>(var)] + 1; ++k) {
            e[static_cast<std::size_t>(var)] = k;
            scan(var + 1);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    scan(0);
    std::sort(gens.begin(), gens.end(), detail::staircase_less);
    return gens;
}

inline MonomialQuotient quotient_from_staircase(int nvars, const std::set<Exponent>& staircase,
                                                std::vector<std::string> names = {}) {
    MonomialQuotient q;
    q.nvars = nvars;
    q.var_names = names.empty() ? default_var_names(nvars) : std::move(names);
    q.staircase.assign(staircase.begin(), staircase.end());
    std::sort(q.staircase.begin(), q.staircase.end(), detail::staircase_less);
    q.ideal_generators = minimal_generators_of_complement(nvars, staircase);
    return q;
}

/// Builds the quotient by the monomial ideal generated by gens. Errors with
/// InfiniteQuotient when some variable has no pure power in the ideal.
inline MonomialQuotient quotient_from_generators(int nvars, const std::vector<Exponent>& gens,
                                                 std::vector<std::string> names = {}) {
    for (const auto& g : gens)
        if (g.size() != static_cast<std::size_t>(nvars))
            throw DimensionMismatch("generator arity differs from variable count");
    std::vector<int> pure(static_cast<std::size_t>(nvars), -1);
    for (const auto& g : gens) {
        int support = -1;
        bool pure_power = true;
        for (int i = 0; i < nvars; ++i) {
            if (g[static_cast<std::size_t>(i)] > 0) {
                if (support >= 0) { pure_power = false; break; }
                support = i;
            }
        }
        if (pure_power && support >= 0) {
            int e = g[static_cast<std::size_t>(support)];
            auto& p = pure[static_cast<std::size_t>(support)];
            if (p < 0 || e < p) p = e;
        }
        if (pure_power && support < 0)
            throw TableInvalid("monomial ideal contains 1");
    }
    for (int i = 0; i < nvars; ++i)
        if (pure[static_cast<std::size_t>(i)] < 0) throw InfiniteQuotient(i);

    std::set<Exponent> staircase;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    std::function<void(int)> scan = [&](int var) {
        if (var == nvars) {
            for (const auto& g : gens)
                if (divides(g, e)) return;
            staircase.insert(e);
            return;
        }
        for (int k = 0; k < pure[static_cast<std::size_t>(var)]; ++k) {
            e[static_cast<std::size_t>(var)] = k;
            scan(var + 1);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    scan(0);
    return quotient_from_staircase(nvars, staircase, std::move(names));
}

/// Structure-constant table on the staircase basis: products of standard
/// monomials are standard monomials or zero.
inline AlgebraTable to_algebra_table(const MonomialQuotient& q) {
    std::vector<std::string> labels;
    for (const auto& e : q.staircase) labels.push_back(detail::monomial_label(q.var_names, e));
    AlgebraTable t(q.dim(), labels, 0);
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Exponent s(q.staircase[i]);
            for (std::size_t v = 0; v < s.size(); ++v) s[v] += q.staircase[j][v];
            if (q.in_staircase(s)) t.set_product_entry(i, j, q.index_of(s), 1);
        }
    return t;
}

/// Local view of a monomial quotient through the degree filtration, which
/// coincides with the m-adic filtration for staircase algebras.
inline LocalView monomial_local_view(const MonomialQuotient& q) {
    LocalView v;
    v.table = to_algebra_table(q);
    std::size_t d = q.dim();
    int top = 0;
    for (const auto& e : q.staircase) top = std::max(top, exponent_degree(e));
    for (int level = 0; level <= top; ++level) {
        std::vector<VecQ> rows;
        for (std::size_t i = 0; i < d; ++i)
            if (exponent_degree(q.staircase[i]) >= level) {
                VecQ e(d, Rational(0));
                e[i] = 1;
                rows.push_back(std::move(e));
            }
        v.filtration.emplace_back(d, rows);
    }
    v.maximal_ideal = v.filtration.size() > 1 ? v.filtration[1] : Subspace(d);
    v.nilpotency_index = v.filtration.size();
    return v;
}

/// Box test: returns the side lengths when the staircase is a full box
/// prod (k_i + 1), i.e. the quotient by pure powers only.
struct BoxCheck {
    bool is_box = false;
    std::vector<int> sides;  // maximal exponents per variable
};

inline BoxCheck is_box(const MonomialQuotient& q) {
    BoxCheck r;
    r.sides.assign(static_cast<std::size_t>(q.nvars), 0);
    for (const auto& e : q.staircase)
        for (int i = 0; i < q.nvars; ++i)
            r.sides[static_cast<std::size_t>(i)] =
                std::max(r.sides[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    std::size_t box_size = 1;
    for (int s : r.sides) box_size *= static_cast<std::size_t>(s) + 1;
    r.is_box = box_size == q.dim();
    return r;
}

/// All labelled two-variable staircases with the given graded dimension counts
/// hs[d] = #{monomials of total degree d}. Column heights form a partition, so
/// the enumeration walks partitions of sum(hs). Errors BoundExceeded when
/// sum(hs) > max_dim.
inline std::vector<MonomialQuotient> enumerate_staircases_2v(const std::vector<std::size_t>& hs,
                                                             std::size_t max_dim = 12) {
    std::size_t total = 0;
    for (std::size_t h : hs) total += h;
    if (total > max_dim)
        throw BoundExceeded("staircase enumeration bound exceeded: dim " + std::to_string(total) +
                            " > " + std::to_string(max_dim));
    std::vector<MonomialQuotient> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            std::vector<std::size_t> diag(hs.size() + total, 0);
            std::set<Exponent> stairs;
            for (std::size_t col = 0; col < parts.size(); ++col)
                for (int row = 0; row < parts[col]; ++row) {
                    stairs.insert({static_cast<int>(col), row});
                    ++diag[col + static_cast<std::size_t>(row)];
                }
            bool match = true;
            for (std::size_t d = 0; d < diag.size(); ++d) {
                std::size_t want = d < hs.size() ? hs[d] : 0;
                if (diag[d] != want) { match = false; break; }
            }
            if (match) out.push_back(quotient_from_staircase(2, stairs));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(static_cast<int>(total), static_cast<int>(total));
    return out;
}

/// Swaps the two variables of a staircase.
inline MonomialQuotient swap_variables(const MonomialQuotient& q) {
    std::set<Exponent> flipped;
    for (const auto& e : q.staircase) flipped.insert({e[1], e[0]});
    return quotient_from_staircase(q.nvars, flipped, q.var_names);
}

/// Column-height partition of a two-variable staircase.
inline std::vector<int> column_heights(const MonomialQuotient& q) {
    std::vector<int> heights;
    for (const auto& e : q.staircase) {
        std::size_t col = static_cast<std::size_t>(e[0]);
        if (heights.size() <= col) heights.resize(col + 1, 0);
        heights[col] = std::max(heights[col], e[1] + 1);
    }
    return heights;
}

/// Deduplicates staircases that differ only by the variable swap, keeping the
/// representative whose column-height partition is lexicographically smaller.
inline std::vector<MonomialQuotient> dedupe_by_swap(const std::vector<MonomialQuotient>& list) {
    std::vector<MonomialQuotient> out;
    std::set<std::vector<int>> seen;
    for (const auto& q : list) {
        MonomialQuotient swapped = swap_variables(q);
        std::vector<int> h = column_heights(q), hs = column_heights(swapped);
        const MonomialQuotient& rep = h <= hs ? q : swapped;
        std::vector<int> key = std::min(h, hs);
        if (seen.insert(key).second) out.push_back(rep);
    }
    return out;
}

}  // namespace addact

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "exactlin.hpp"

namespace addact {

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms map exponent vectors to nonzero coefficients.
class MultiPoly {
  public:
    using Exp = std::vector<int>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Exp(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        return monomial(nvars, unit_exp(nvars, i), 1);
    }

    static MultiPoly monomial(int nvars, Exp e, const Rational& c = 1) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
        return d;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;
    }

    /// Variables that actually occur.
    std::vector<int> support_vars() const {
        std::vector<bool> seen(static_cast<std::size_t>(nvars_), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) seen[i] = true;
        std::vector<int> out;
        for (int i = 0; i < nvars_; ++i)
            if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }

    Rational coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exp& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exp e(e1);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(nvars_, 1);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    /// Substitutes images[i] for variable i; images live in a common variable space.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != static_cast<std::size_t>(nvars_))
            throw DimensionMismatch("substitution image count differs from variable count");
        int target_vars = images.empty() ? 0 : images[0].nvars();
        MultiPoly r(target_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(target_vars, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * images[i].pow(static_cast<unsigned>(e[i]));
            r = r + t;
        }
        return r;
    }

    /// Reinterprets the polynomial in new_nvars variables, shifting indices by shift.
    MultiPoly embed(int new_nvars, int shift = 0) const {
        MultiPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exp ne(static_cast<std::size_t>(new_nvars), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                ne[i + static_cast<std::size_t>(shift)] = e[i];
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    MultiPoly partial(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exp ne(e);
            --ne[static_cast<std::size_t>(var)];
            r.add_term(ne, c * k);
        }
        return r;
    }

    Rational eval(const VecQ& point) const {
        if (point.size() != static_cast<std::size_t>(nvars_))
            throw DimensionMismatch("evaluation point size differs from variable count");
        Rational r = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            r += t;
        }
        return r;
    }

    /// Partial evaluation: assignments maps variable index to a value.
    MultiPoly eval_partial(const std::map<int, Rational>& assignments) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            Exp ne(e);
            for (const auto& [var, val] : assignments) {
                int k = ne[static_cast<std::size_t>(var)];
                for (int i = 0; i < k; ++i) t *= val;
                ne[static_cast<std::size_t>(var)] = 0;
            }
            r.add_term(ne, t);
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        // Highest total degree first, then reverse-lex on exponents, so leading
        // terms print first.
        std::vector<std::pair<Exp, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int da = degree_of(a.first), db = degree_of(b.first);
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ts) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += rational_str(a);
            else if (a == 1) out += mono;
            else out += rational_str(a) + "*" + mono;
        }
        return out;
    }

    static int degree_of(const Exp& e) {
        int d = 0;
        for (int k : e) d += k;
        return d;
    }

    static Exp unit_exp(int nvars, int i) {
        Exp e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return e;
    }

  private:

    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw DimensionMismatch("variable counts differ");
    }

    int nvars_;
    std::map<Exp, Rational> terms_;
};

}  // namespace addact

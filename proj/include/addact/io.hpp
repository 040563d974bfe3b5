#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "spair.hpp"

namespace addact {

/// Insertion order is preserved so documents keep their documented field
/// order; combined with sorted mult entries this makes output byte-stable.
using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + " document is missing \"" + key + "\"");
    return *it;
}

inline std::size_t json_index(const Json& v, std::size_t bound, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        static_cast<std::size_t>(v.get<long long>()) >= bound)
        throw ParseError(std::string(what) + " must be an index below " + std::to_string(bound) +
                         ", got " + v.dump());
    return v.get<std::size_t>();
}

inline Rational json_rational(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("expected a rational \"p/q\" string, got " + v.dump());
}

}  // namespace detail

/// {"dim": N, "basis": [labels], "unit": index, "mult": [[i, j, k, "p/q"], ...]}
/// with each symmetric pair listed once (i <= j) and entries sorted.
inline Json algebra_to_json(const AlgebraTable& t) {
    Json doc;
    doc["dim"] = t.dim();
    doc["basis"] = t.basis_labels();
    doc["unit"] = t.unit_index();
    Json mult = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = i; j < t.dim(); ++j) {
            auto entries = t.product_basis(i, j);
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [k, c] : entries)
                mult.push_back(Json::array({i, j, k, rational_str(c)}));
        }
    doc["mult"] = std::move(mult);
    return doc;
}

inline AlgebraTable algebra_from_json(const Json& j) {
    const Json& jd = detail::require_field(j, "dim", "algebra");
    if (!jd.is_number_integer() || jd.get<long long>() < 1)
        throw ParseError("\"dim\" must be a positive integer, got " + jd.dump());
    std::size_t dim = jd.get<std::size_t>();

    const Json& jb = detail::require_field(j, "basis", "algebra");
    if (!jb.is_array() || jb.size() != dim)
        throw ParseError("\"basis\" must list exactly " + std::to_string(dim) + " labels");
    std::vector<std::string> labels;
    for (const auto& l : jb) {
        if (!l.is_string()) throw ParseError("basis labels must be strings, got " + l.dump());
        labels.push_back(l.get<std::string>());
    }

    std::size_t unit = detail::json_index(detail::require_field(j, "unit", "algebra"), dim, "\"unit\"");
    AlgebraTable t(dim, std::move(labels), unit);

    const Json& jm = detail::require_field(j, "mult", "algebra");
    if (!jm.is_array()) throw ParseError("\"mult\" must be an array of [i, j, k, c] entries");
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> seen;
    for (const auto& entry : jm) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError("mult entry must be [i, j, k, c], got " + entry.dump());
        std::size_t i = detail::json_index(entry[0], dim, "mult index i");
        std::size_t jj = detail::json_index(entry[1], dim, "mult index j");
        std::size_t k = detail::json_index(entry[2], dim, "mult index k");
        Rational c = detail::json_rational(entry[3]);
        if (i > jj) std::swap(i, jj);
        auto [it, fresh] = seen.emplace(std::make_tuple(i, jj, k), c);
        if (!fresh) {
            // A file may spell out both orders of a symmetric pair, but the
            // values must then agree.
            if (it->second != c)
                throw ParseError("conflicting structure constants at [" + std::to_string(i) +
                                 ", " + std::to_string(jj) + ", " + std::to_string(k) + "]");
            continue;
        }
        if (c != 0) t.set_product_entry(i, jj, k, c);
    }
    return t;
}

/// {"vars": ["x", "y"], "ideal": [[4, 0], [1, 1], [0, 2]]}
inline Json monomial_to_json(const MonomialQuotient& q) {
    Json doc;
    doc["vars"] = q.var_names;
    Json ideal = Json::array();
    for (const auto& g : q.ideal_generators) ideal.push_back(g);
    doc["ideal"] = std::move(ideal);
    return doc;
}

inline MonomialQuotient monomial_from_json(const Json& j) {
    const Json& jv = detail::require_field(j, "vars", "monomial quotient");
    if (!jv.is_array() || jv.empty())
        throw ParseError("\"vars\" must be a nonempty array of variable names");
    std::vector<std::string> names;
    for (const auto& v : jv) {
        if (!v.is_string()) throw ParseError("variable names must be strings, got " + v.dump());
        names.push_back(v.get<std::string>());
    }
    int nvars = static_cast<int>(names.size());

    const Json& ji = detail::require_field(j, "ideal", "monomial quotient");
    if (!ji.is_array()) throw ParseError("\"ideal\" must be an array of exponent tuples");
    std::vector<Exponent> gens;
    for (const auto& g : ji) {
        if (!g.is_array() || g.size() != names.size())
            throw ParseError("ideal generator must list one exponent per variable, got " +
                             g.dump());
        Exponent e;
        for (const auto& x : g) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw ParseError("exponents must be nonnegative integers, got " + x.dump());
            e.push_back(x.get<int>());
        }
        gens.push_back(std::move(e));
    }
    return quotient_from_generators(nvars, gens, std::move(names));
}

/// An S-pair document is an algebra or monomial document plus "U": a list of
/// basis vectors of the generating subspace in algebra coordinates.
inline Json spair_to_json(const SPair& p) {
    Json doc = p.monomial_source ? monomial_to_json(*p.monomial_source)
                                 : algebra_to_json(p.algebra.table);
    Json u = Json::array();
    for (const auto& vec : p.u_basis) {
        Json row = Json::array();
        for (const auto& c : vec) row.push_back(rational_str(c));
        u.push_back(std::move(row));
    }
    doc["U"] = std::move(u);
    return doc;
}

/// Loads the algebra part of any document: monomial quotients are recognized
/// by their "ideal" field, everything else must carry structure constants.
inline AlgebraTable table_from_json(const Json& j) {
    if (j.contains("ideal")) return to_algebra_table(monomial_from_json(j));
    return algebra_from_json(j);
}

inline SPair spair_from_json(const Json& j) {
    SPair p;
    if (j.contains("ideal")) {
        MonomialQuotient q = monomial_from_json(j);
        p.algebra = monomial_local_view(q);
        p.monomial_source = std::move(q);
    } else {
        p.algebra = local_view(algebra_from_json(j));
    }
    const Json& ju = detail::require_field(j, "U", "S-pair");
    if (!ju.is_array() || ju.empty())
        throw ParseError("\"U\" must be a nonempty array of coordinate vectors");
    for (const auto& row : ju) {
        if (!row.is_array() || row.size() != p.algebra.dim())
            throw ParseError("each U vector must have " + std::to_string(p.algebra.dim()) +
                             " coordinates, got " + row.dump());
        VecQ vec;
        for (const auto& c : row) vec.push_back(detail::json_rational(c));
        p.u_basis.push_back(std::move(vec));
    }
    return p;
}

/// Parse with a position diagnostic of the form path:line:column.
inline Json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(where + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << dump_json(j);
}

}  // namespace addact

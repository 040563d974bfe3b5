#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <addact/algebra.hpp>
#include <addact/errors.hpp>
#include <addact/geometry.hpp>
#include <addact/hirzebruch.hpp>
#include <addact/io.hpp>
#include <addact/isomorphy.hpp>
#include <addact/monomial.hpp>
#include <addact/presentation.hpp>
#include <addact/spair.hpp>
#include <addact/verify.hpp>

namespace {

using namespace addact;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  verification failure\n"
    "  2  usage error\n"
    "  3  input/output or parse error\n"
    "  4  divisor is not ample\n"
    "  5  twisted action undefined for n = 0\n"
    "  6  algebra is not local\n"
    "  7  other domain error";

void emit(const Json& doc) { std::cout << dump_json(doc); }

std::string lincomb_str(const std::vector<std::string>& labels, const VecQ& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string coeff = rational_str(v[i] < 0 ? -v[i] : v[i]);
        if (s.empty())
            s += v[i] < 0 ? "-" : "";
        else
            s += v[i] < 0 ? " - " : " + ";
        if (coeff != "1") s += coeff + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

std::vector<std::string> coordinate_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

int monomiality_bound() {
    const char* env = std::getenv("ADDACT_MAX_DIM");
    if (!env) return 12;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 1) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw ParseError("ADDACT_MAX_DIM must be a positive integer, got '" + std::string(env) +
                         "'");
    }
}

int cmd_sections(int n, long long a, long long b, bool json) {
    SectionBasis s = sections({n, a, b});
    if (json) {
        Json doc;
        doc["n"] = n;
        doc["a"] = a;
        doc["b"] = b;
        Json rows = Json::array();
        for (auto [k, m] : s.monomials) rows.push_back(Json::array({k, m}));
        doc["sections"] = std::move(rows);
        doc["dim"] = s.monomials.size();
        emit(doc);
        return 0;
    }
    for (auto [k, m] : s.monomials) std::cout << "(" << k << ", " << m << ")\n";
    std::cout << "count: " << s.monomials.size() << "\n";
    return 0;
}

int cmd_spair(int n, int a, int b, const std::string& variant, const std::string& output) {
    SPair p = variant == "normalized" ? normalized_spair(n, a, b) : twisted_spair(n, a, b);
    Json doc = spair_to_json(p);
    if (output.empty()) {
        emit(doc);
    } else {
        write_json_file(output, doc);
        std::cout << "wrote " << output << " (dim " << p.dim() << ")\n";
    }
    return 0;
}

int cmd_algebra(const std::string& what, const std::string& file, bool json) {
    LocalView v = local_view(table_from_json(read_json_file(file)));
    if (what == "hs") {
        std::vector<std::size_t> hs = hilbert_samuel(v);
        if (json) {
            Json doc;
            doc["hs"] = hs;
            emit(doc);
        } else {
            std::cout << "hilbert-samuel: (";
            for (std::size_t i = 0; i < hs.size(); ++i) std::cout << (i ? ", " : "") << hs[i];
            std::cout << ")\n";
        }
        return 0;
    }
    if (what == "socle") {
        std::size_t d = socle(v).dim();
        if (json) {
            Json doc;
            doc["socle_dim"] = d;
            emit(doc);
        } else {
            std::cout << "socle dimension: " << d << "\n";
        }
        return 0;
    }
    bool gor = is_gorenstein(v);
    if (json) {
        Json doc;
        doc["gorenstein"] = gor;
        emit(doc);
    } else {
        std::cout << "gorenstein: " << (gor ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_relations(int a, int b, bool json) {
    RelationsReport r = verify_allrelations(a, b);
    if (json) {
        Json doc;
        doc["a"] = r.a;
        doc["b"] = r.b;
        Json gens = Json::array();
        for (const auto& g : r.generators) gens.push_back(Json{{"poly", bipoly_str(g)}});
        doc["generators"] = std::move(gens);
        doc["checks"] = Json{{"item1", r.item1}, {"item2", r.item2}, {"item3", r.item3},
                             {"item4", r.item4}};
        doc["quotient_dim"] = r.quotient_dim;
        emit(doc);
    } else {
        std::cout << "relation generators for (a, b) = (" << r.a << ", " << r.b << "):\n";
        for (const auto& g : r.generators) std::cout << "  " << bipoly_str(g) << "\n";
        std::cout << "item1 " << (r.item1 ? "pass" : "fail") << ", item2 "
                  << (r.item2 ? "pass" : "fail") << ", item3 " << (r.item3 ? "pass" : "fail")
                  << ", item4 " << (r.item4 ? "pass" : "fail") << "\n";
        std::cout << "quotient dimension: " << r.quotient_dim << "\n";
    }
    return r.pass() ? 0 : 1;
}

int cmd_implicitize(const std::string& file, int degree, bool json) {
    SPair p = spair_from_json(read_json_file(file));
    validate(p);
    FormSpace fs = implicitize(parametrize_orbit(p), degree);
    std::vector<std::string> names = coordinate_names(fs.num_coords);
    if (json) {
        Json doc;
        doc["degree"] = fs.degree;
        doc["num_coords"] = fs.num_coords;
        doc["dim"] = fs.dim();
        Json forms = Json::array();
        for (const auto& f : fs.basis) forms.push_back(f.to_string(names));
        doc["forms"] = std::move(forms);
        emit(doc);
    } else {
        for (const auto& f : fs.basis) std::cout << f.to_string(names) << " = 0\n";
        std::cout << "degree " << fs.degree << " forms: " << fs.dim() << "\n";
    }
    return 0;
}

int cmd_monomiality(const std::string& file, bool json) {
    LocalView v = local_view(table_from_json(read_json_file(file)));
    MonomialityVerdict verdict = decide_monomial_2gen(v, monomiality_bound());
    if (json) {
        Json doc;
        doc["verdict"] = verdict_name(verdict.kind);
        if (verdict.certificate) {
            Json cert;
            cert["staircase"] = monomial_to_json(*verdict.staircase);
            Json images = Json::array();
            for (const auto& img : verdict.certificate->images) {
                Json row = Json::array();
                for (const auto& c : img) row.push_back(rational_str(c));
                images.push_back(std::move(row));
            }
            cert["images"] = std::move(images);
            doc["certificate"] = std::move(cert);
        }
        Json refs = Json::array();
        for (const auto& r : verdict.refutations) {
            Json ref;
            ref["candidate"] = monomial_to_json(r.candidate);
            ref["reason"] = r.reason;
            ref["extension_independent"] = r.extension_independent;
            refs.push_back(std::move(ref));
        }
        doc["refutations"] = std::move(refs);
        doc["notes"] = verdict.notes;
        emit(doc);
        return 0;
    }
    std::cout << "verdict: " << verdict_name(verdict.kind) << "\n";
    if (verdict.staircase && verdict.certificate) {
        std::cout << "staircase ideal:";
        for (const auto& g : verdict.staircase->ideal_generators)
            std::cout << " " << detail::monomial_label(verdict.staircase->var_names, g);
        std::cout << "\n";
        const auto& labels = verdict.certificate->target.basis_labels();
        const auto& names = verdict.staircase->var_names;
        for (std::size_t i = 0; i < verdict.certificate->images.size(); ++i)
            std::cout << "  " << names[i] << " -> "
                      << lincomb_str(labels, verdict.certificate->images[i]) << "\n";
    }
    for (const auto& r : verdict.refutations) {
        std::cout << "refuted:";
        for (const auto& g : r.candidate.ideal_generators)
            std::cout << " " << detail::monomial_label(r.candidate.var_names, g);
        std::cout << " (" << r.reason << (r.extension_independent ? "; extension independent" : "")
                  << ")\n";
    }
    for (const auto& n : verdict.notes) std::cout << "note: " << n << "\n";
    return 0;
}

int cmd_verify_paper(const std::string& filter, bool json) {
    std::vector<CriterionResult> results = run_all_criteria(filter);
    if (results.empty()) {
        std::cerr << "error: no criterion matches filter '" << filter << "'\n";
        return 2;
    }
    bool all = true;
    if (json) {
        Json doc = Json::array();
        for (const auto& r : results) {
            Json row;
            row["index"] = r.index;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            doc.push_back(std::move(row));
            all = all && r.pass;
        }
        emit(doc);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.index << " " << r.name << ": "
                      << r.detail << "\n";
            all = all && r.pass;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for additive group actions on projective varieties"};
    app.require_subcommand(1);
    app.footer(kExitCodes);

    std::function<int()> action;

    auto* sec = app.add_subcommand("sections",
                                   "section monomials of a divisor a*E_inf + b*F_0 on Sigma_n");
    int sec_n = 0;
    long long sec_a = 0, sec_b = 0;
    bool sec_json = false;
    sec->add_option("--n", sec_n, "surface invariant n >= 0")->required();
    sec->add_option("--a", sec_a, "coefficient of E_inf")->required();
    sec->add_option("--b", sec_b, "coefficient of F_0")->required();
    sec->add_flag("--json", sec_json, "machine-readable output");
    sec->callback([&] { action = [&] { return cmd_sections(sec_n, sec_a, sec_b, sec_json); }; });

    auto* sp = app.add_subcommand("spair", "emit the S-pair document of an additive action");
    int sp_n = 0, sp_a = 0, sp_b = 0;
    std::string sp_variant, sp_output;
    sp->add_option("--n", sp_n, "surface invariant n >= 0")->required();
    sp->add_option("--a", sp_a, "coefficient of E_inf")->required();
    sp->add_option("--b", sp_b, "coefficient of F_0")->required();
    sp->add_option("--variant", sp_variant, "normalized or twisted action")
        ->required()
        ->check(CLI::IsMember({"normalized", "twisted"}));
    sp->add_option("--output", sp_output, "write the document to a file instead of stdout");
    sp->callback([&] { action = [&] { return cmd_spair(sp_n, sp_a, sp_b, sp_variant, sp_output); }; });

    auto* alg = app.add_subcommand("algebra", "invariants of an algebra document");
    alg->require_subcommand(1);
    std::string alg_file;
    bool alg_json = false;
    for (const char* what : {"hs", "socle", "gorenstein"}) {
        const char* help = what[0] == 'h'   ? "Hilbert-Samuel sequence"
                           : what[0] == 's' ? "socle dimension"
                                            : "Gorenstein test";
        auto* sub = alg->add_subcommand(what, help);
        sub->add_option("file", alg_file, "algebra or monomial quotient document")->required();
        sub->add_flag("--json", alg_json, "machine-readable output");
        std::string w = what;
        sub->callback([&, w] { action = [&, w] { return cmd_algebra(w, alg_file, alg_json); }; });
    }

    auto* rel = app.add_subcommand("relations",
                                   "relation-ideal structure of the twisted operators (n = 1)");
    int rel_a = 0, rel_b = 0;
    bool rel_json = false;
    rel->add_option("--a", rel_a, "coefficient of E_inf")->required();
    rel->add_option("--b", rel_b, "coefficient of F_0, needs b >= 2a")->required();
    rel->add_flag("--json", rel_json, "machine-readable output");
    rel->callback([&] { action = [&] { return cmd_relations(rel_a, rel_b, rel_json); }; });

    auto* imp = app.add_subcommand("implicitize",
                                   "forms of a fixed degree vanishing on the orbit closure");
    std::string imp_file;
    int imp_degree = 0;
    bool imp_json = false;
    imp->add_option("file", imp_file, "S-pair document")->required();
    imp->add_option("--degree", imp_degree, "form degree >= 1")->required();
    imp->add_flag("--json", imp_json, "machine-readable output");
    imp->callback([&] { action = [&] { return cmd_implicitize(imp_file, imp_degree, imp_json); }; });

    auto* mon = app.add_subcommand("monomiality",
                                   "decide whether a local algebra is monomial (two generators)");
    std::string mon_file;
    bool mon_json = false;
    mon->add_option("file", mon_file, "algebra or monomial quotient document")->required();
    mon->add_flag("--json", mon_json, "machine-readable output");
    mon->callback([&] { action = [&] { return cmd_monomiality(mon_file, mon_json); }; });

    auto* ver = app.add_subcommand("verify-paper", "run the full reproduction suite");
    std::string ver_filter;
    bool ver_json = false;
    ver->add_option("--filter", ver_filter, "run only criteria whose name contains this text");
    ver->add_flag("--json", ver_json, "machine-readable output");
    ver->callback([&] { action = [&] { return cmd_verify_paper(ver_filter, ver_json); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const addact::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const addact::NotAmple& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const addact::NZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const addact::NotLocal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    }
}

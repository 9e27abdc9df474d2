#pragma once

#include <quatgi/json_io.hpp>
#include <quatgi/quatgi.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace quatgi::cli {

enum exit_code : int { ok = 0, usage = 1, inconsistent = 2, size_cap = 3 };

class usage_error : public error {
public:
    using error::error;
};

inline qmatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && text[first] == '[') return matrix_from_json(nlohmann::json::parse(text));
        return parse_matrix(text);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what(), e.line(), e.column());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what(), 0, 0);
    }
}

template <class E>
E lookup_route(const std::map<std::string, E>& table, const std::string& name, const char* verb) {
    auto it = table.find(name);
    if (it != table.end()) return it->second;
    std::string known;
    for (const auto& [key, value] : table) known += (known.empty() ? "" : ", ") + key;
    throw usage_error(std::string("unknown route '") + name + "' for " + verb + " (expected one of: " + known + ")");
}

struct settings {
    std::string route = "auto";
    bool json = false;
    bool no_verify = false;
    bool decimal = false;
    std::size_t max_n = 8;
};

/// Collects everything a command reports, then renders it as text or JSON.
struct result_doc {
    std::string command;
    std::string route;
    std::optional<qmatrix> value;
    std::vector<std::string> denominators;
    std::vector<axiom_report<quaternion>> axioms;
    std::optional<bool> consistent;
    std::optional<qmatrix> residual;
    std::optional<std::string> scalar;
    std::vector<std::pair<std::string, std::string>> notes;

    void render(std::ostream& out, const settings& s) const {
        const format_options fmt{s.decimal};
        if (s.json) {
            nlohmann::json doc;
            doc["command"] = command;
            if (!route.empty()) doc["route"] = route;
            if (value) doc["matrix"] = to_json(*value);
            if (scalar) doc["value"] = *scalar;
            if (!denominators.empty()) doc["denominators"] = denominators;
            if (consistent) doc["consistent"] = *consistent;
            if (residual) doc["residual"] = to_json(*residual);
            nlohmann::json ax = nlohmann::json::array();
            for (const auto& a : axioms)
                ax.push_back({{"axiom", std::string(to_string(a.id))},
                              {"statement", std::string(describe(a.id))},
                              {"holds", a.holds}});
            if (!axioms.empty()) doc["axioms"] = ax;
            for (const auto& [key, text] : notes) doc[key] = text;
            out << doc.dump(2) << '\n';
            return;
        }
        if (scalar) out << *scalar << '\n';
        if (value) write_matrix(out, *value, fmt);
        if (!route.empty()) out << "# route: " << route << '\n';
        for (const auto& d : denominators) out << "# denominator: " << d << '\n';
        for (const auto& [key, text] : notes) out << "# " << key << ": " << text << '\n';
        for (const auto& a : axioms)
            out << "# " << to_string(a.id) << " " << describe(a.id) << ": " << (a.holds ? "holds" : "FAILS") << '\n';
        if (consistent) out << "# consistent: " << (*consistent ? "yes" : "no") << '\n';
        if (residual && !residual->is_zero()) {
            out << "# residual:\n";
            std::ostringstream tmp;
            write_matrix(tmp, *residual, fmt);
            std::istringstream lines(tmp.str());
            for (std::string line; std::getline(lines, line);) out << "#   " << line << '\n';
        }
    }
};

inline std::vector<std::string> real_strings(const std::vector<rational>& v) {
    std::vector<std::string> out;
    for (const auto& d : v) out.push_back(to_string(d));
    return out;
}

inline void fill_solve(result_doc& doc, const solve_report<quaternion>& rep) {
    doc.route = rep.route;
    doc.value = rep.x;
    doc.axioms = rep.verification;
    doc.consistent = rep.consistent;
    doc.residual = rep.residual;
    doc.notes.emplace_back("restrictions", rep.restrictions_hold ? "hold" : "violated");
}

/// Runs the command line `args` (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generalized inverses and restricted equation solvers over quaternion matrices", "quatgi"};
    app.require_subcommand(1);
    app.fallthrough();
    settings s;
    app.add_option("--route", s.route, "Route name (default auto)");
    app.add_flag("--json", s.json, "Emit a JSON document");
    app.add_flag("--no-verify", s.no_verify, "Skip the axiom checks");
    app.add_flag("--decimal", s.decimal, "Render terminating decimals");
    app.add_option("--max-n", s.max_n, "Largest determinant order (default 8)");

    std::vector<std::string> files;
    auto add_verb = [&](const char* name, const char* help, std::size_t count, const char* names) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("files", files, names)->required()->expected(static_cast<int>(count));
        return sub;
    };
    auto* c_inverse = add_verb("inverse", "Inverse of a square matrix", 1, "A");
    auto* c_mp = add_verb("mp", "Moore-Penrose inverse (routes: left, right)", 1, "A");
    auto* c_drazin = add_verb("drazin", "Drazin inverse (routes: auto, cdet, rdet, hermitian-cdet, hermitian-rdet, composition)", 1, "A");
    auto* c_wdrazin = add_verb("wdrazin",
                               "W-weighted Drazin inverse (routes: auto, u-route, v-route, weighted-rdet, weighted-cdet, "
                               "hermitian-aw, hermitian-wa, cline, mp-oracle)",
                               2, "A W");
    auto* c_left = add_verb("solve-left", "Solve WAWX = D (routes: auto, i, ii, iii, composition)", 3, "A W D");
    auto* c_right = add_verb("solve-right", "Solve XWAW = D (routes: auto, i, ii, iii, composition)", 3, "D A W");
    auto* c_two = add_verb("solve-two-sided", "Solve W1AW1XW2BW2 = D (routes: auto, i, ii-dB, ii-dA, composition)", 5,
                           "A W1 D B W2");
    auto* c_det = app.add_subcommand("det", "Determinant of a Hermitian matrix, or rdet/cdet with --row/--col");
    std::size_t det_row = 0;
    std::size_t det_col = 0;
    c_det->add_option("file", files, "M")->required()->expected(1);
    c_det->add_option("--row", det_row, "1-based row for rdet");
    c_det->add_option("--col", det_col, "1-based column for cdet");
    auto* c_verify = app.add_subcommand("verify", "Check axioms: verify mp A X | verify drazin A X | verify wdrazin A W X");
    std::string kind;
    c_verify->add_option("kind", kind, "mp, drazin or wdrazin")->required()->check(CLI::IsMember({"mp", "drazin", "wdrazin"}));
    c_verify->add_option("files", files, "matrices")->required()->expected(2, 3);

    std::vector<std::string> argv_store{"quatgi"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    scoped_determinant_cap cap(s.max_n);
    const bool verify = !s.no_verify;
    result_doc doc;
    try {
        std::vector<qmatrix> m;
        for (const auto& f : files) m.push_back(load_matrix(f));

        if (c_inverse->parsed()) {
            doc.command = "inverse";
            doc.value = inverse(m[0]);
            doc.denominators = {to_string(ddet(m[0]))};
            if (verify) doc.axioms = verify_penrose(m[0], *doc.value);
        } else if (c_mp->parsed()) {
            doc.command = "mp";
            const auto route = lookup_route<mp_route>({{"auto", mp_route::left}, {"left", mp_route::left}, {"right", mp_route::right}},
                                                      s.route, "mp");
            auto res = mp_inverse(m[0], route);
            doc.route = std::string(to_string(res.route));
            doc.value = res.value;
            doc.denominators = {to_string(res.denominator)};
            if (verify) doc.axioms = verify_penrose(m[0], res.value);
        } else if (c_drazin->parsed()) {
            doc.command = "drazin";
            const auto route = lookup_route<drazin_route>({{"auto", drazin_route::automatic},
                                                           {"cdet", drazin_route::cdet},
                                                           {"rdet", drazin_route::rdet},
                                                           {"hermitian-cdet", drazin_route::hermitian_cdet},
                                                           {"hermitian-rdet", drazin_route::hermitian_rdet},
                                                           {"composition", drazin_route::composition}},
                                                          s.route, "drazin");
            auto res = drazin(m[0], route);
            doc.route = std::string(to_string(res.route));
            doc.value = res.value;
            doc.denominators = {to_string(res.denominator)};
            doc.notes.emplace_back("index", std::to_string(res.index));
            if (verify) doc.axioms = verify_drazin(m[0], res.value);
        } else if (c_wdrazin->parsed()) {
            doc.command = "wdrazin";
            const auto route = lookup_route<wdrazin_route>({{"auto", wdrazin_route::automatic},
                                                            {"u-route", wdrazin_route::u_route},
                                                            {"v-route", wdrazin_route::v_route},
                                                            {"weighted-rdet", wdrazin_route::weighted_rdet},
                                                            {"weighted-cdet", wdrazin_route::weighted_cdet},
                                                            {"hermitian-aw", wdrazin_route::hermitian_aw},
                                                            {"hermitian-wa", wdrazin_route::hermitian_wa},
                                                            {"cline", wdrazin_route::cline},
                                                            {"mp-oracle", wdrazin_route::mp_oracle}},
                                                           s.route, "wdrazin");
            auto res = wdrazin(m[0], m[1], route);
            doc.route = std::string(to_string(res.route));
            doc.value = res.value;
            doc.denominators = real_strings(res.denominators);
            doc.notes.emplace_back("k", std::to_string(res.k));
            if (verify) doc.axioms = verify_wdrazin(m[0], m[1], res.value);
        } else if (c_left->parsed() || c_right->parsed()) {
            const bool left = c_left->parsed();
            doc.command = left ? "solve-left" : "solve-right";
            const auto route = lookup_route<solve_route>({{"auto", solve_route::automatic},
                                                          {"i", solve_route::weighted},
                                                          {"ii", solve_route::drazin},
                                                          {"iii", solve_route::hermitian},
                                                          {"composition", solve_route::composition}},
                                                         s.route, doc.command.c_str());
            solve_options opt;
            opt.verify = verify;
            opt.throw_on_inconsistent = false;
            auto rep = left ? solve_left(m[0], m[1], m[2], route, opt) : solve_right(m[0], m[1], m[2], route, opt);
            fill_solve(doc, rep);
        } else if (c_two->parsed()) {
            doc.command = "solve-two-sided";
            const auto route = lookup_route<two_sided_route>({{"auto", two_sided_route::automatic},
                                                              {"i", two_sided_route::drazin},
                                                              {"ii-dB", two_sided_route::hermitian_db},
                                                              {"ii-dA", two_sided_route::hermitian_da},
                                                              {"composition", two_sided_route::composition}},
                                                             s.route, "solve-two-sided");
            solve_options opt;
            opt.verify = verify;
            opt.throw_on_inconsistent = false;
            fill_solve(doc, solve_two_sided(m[0], m[1], m[2], m[3], m[4], route, opt));
        } else if (c_det->parsed()) {
            doc.command = "det";
            const qmatrix& a = m[0];
            if (det_row > 0 && det_col > 0) throw usage_error("pass at most one of --row and --col");
            if (det_row > 0) {
                doc.route = "rdet";
                doc.scalar = to_string(rdet(det_row - 1, a), {s.decimal});
            } else if (det_col > 0) {
                doc.route = "cdet";
                doc.scalar = to_string(cdet(det_col - 1, a), {s.decimal});
            } else {
                if (!is_hermitian(a)) throw usage_error("matrix is not Hermitian; pass --row or --col");
                doc.route = "hermitian";
                doc.scalar = to_string(quaternion(det_hermitian(a)), {s.decimal});
            }
        } else if (c_verify->parsed()) {
            doc.command = "verify " + kind;
            const std::size_t need = kind == "wdrazin" ? 3 : 2;
            if (m.size() != need) throw usage_error("verify " + kind + " takes " + std::to_string(need) + " matrices");
            if (kind == "mp")
                doc.axioms = verify_penrose(m[0], m[1]);
            else if (kind == "drazin")
                doc.axioms = verify_drazin(m[0], m[1]);
            else
                doc.axioms = verify_wdrazin(m[0], m[1], m[2]);
        }
    } catch (const size_cap_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::size_cap;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    doc.render(out, s);
    if (doc.consistent && !*doc.consistent) {
        err << "error: equation is inconsistent (nonzero residual)\n";
        return exit_code::inconsistent;
    }
    if (!all_hold(doc.axioms)) {
        err << "error: axiom check failed\n";
        return exit_code::inconsistent;
    }
    return exit_code::ok;
}

}  // namespace quatgi::cli

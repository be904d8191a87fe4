#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eqlines/bounds.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/forbidden.hpp"
#include "eqlines/graph6.hpp"
#include "eqlines/lambda_expr.hpp"
#include "eqlines/order.hpp"
#include "eqlines/qmatrix.hpp"
#include "eqlines/spectral.hpp"

using namespace eqlines;
using nlohmann::ordered_json;

namespace {

struct Output {
    std::string path;  // empty: stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream f(path);
            f << text << "\n";
        }
    }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::vector<std::string> read_graph_lines(const std::string& in_path,
                                           const std::vector<std::string>& positional) {
    if (!positional.empty()) return positional;
    std::vector<std::string> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) throw std::runtime_error("cannot open " + in_path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

ordered_json lambda_json(const AlgebraicReal& lam) {
    ordered_json l;
    std::vector<std::string> coeffs;
    for (const auto& c : lam.minpoly().coeffs()) coeffs.push_back(c.get_str());
    l["minpoly"] = coeffs;
    l["interval"] = {lam.lo().get_str(), lam.hi().get_str()};
    l["value"] = lam.to_double();
    return l;
}

int cmd_spectral(const std::string& in_path, const std::vector<std::string>& graphs,
                 bool want_charpoly, const std::string& compare_expr, double tol,
                 const Output& out, uint64_t seed) {
    ordered_json j;
    j["schema_version"] = 1;
    j["seed"] = seed;
    std::optional<AlgebraicReal> lam;
    if (!compare_expr.empty()) lam = parse_lambda_expr(compare_expr);
    ordered_json results = ordered_json::array();
    Rational rtol(1, 1000000000);
    if (tol > 0 && tol < 1) {
        long long d = llround(1.0 / tol);
        if (d > 1) rtol = Rational(1) / Rational(BigInt(static_cast<long>(d)));
    }
    for (const std::string& line : read_graph_lines(in_path, graphs)) {
        Graph g = parse_graph6(line);
        ordered_json row;
        row["graph6"] = line;
        row["n"] = g.order();
        SpectralBracket b = spectral_radius(g, rtol);
        row["lambda1"] = b.value();
        row["bracket"] = {b.lo.get_str(), b.hi.get_str()};
        if (want_charpoly) {
            IntPoly cp = char_poly(g);
            std::vector<std::string> coeffs;
            for (const auto& c : cp.coeffs()) coeffs.push_back(c.get_str());
            row["charpoly"] = coeffs;
        }
        if (lam) row["compare"] = to_string(compare_radius(g, *lam));
        results.push_back(row);
    }
    j["results"] = results;
    out.write(j.dump(2));
    return 0;
}

int cmd_forbidden(const std::string& lambda_expr, int budget_vertices,
                  uint64_t max_extensions, int check_up_to, bool minimize,
                  const Output& out, uint64_t seed) {
    AlgebraicReal lam = parse_lambda_expr(lambda_expr);
    BuildBudget budget;
    budget.max_vertices = budget_vertices;
    budget.max_extensions = max_extensions;
    ordered_json j;
    j["schema_version"] = 1;
    j["seed"] = seed;
    try {
        ForbiddenFamily fam = build_family(lam, budget);
        if (minimize) fam = minimize_family(fam);
        ordered_json famj = ordered_json::parse(family_to_json(fam));
        j["family"] = famj;
        bool ok = true;
        if (check_up_to > 0) {
            OracleReport rep = oracle_check(fam, check_up_to);
            ordered_json r;
            r["checked"] = rep.checked;
            r["pass"] = rep.pass();
            std::vector<std::string> missing, spurious;
            for (const Graph& g : rep.missing) missing.push_back(write_graph6(g));
            for (const Graph& g : rep.spurious) spurious.push_back(write_graph6(g));
            r["missing"] = missing;
            r["spurious"] = spurious;
            j["oracle"] = r;
            ok = rep.pass();
        }
        out.write(j.dump(2));
        return ok ? 0 : 1;
    } catch (const UnsupportedLambda& e) {
        j["error"] = "UNSUPPORTED_LAMBDA";
        j["detail"] = e.what();
        out.write(j.dump(2));
        return 2;
    } catch (const SearchBudgetExceeded& e) {
        j["error"] = "BUDGET_EXCEEDED";
        j["detail"] = e.what();
        j["partial_count"] = e.partial_count;
        out.write(j.dump(2));
        return 3;
    }
}

int cmd_order(const std::string& lambda_expr, int max_order, const Output& out,
              uint64_t seed) {
    AlgebraicReal lam = parse_lambda_expr(lambda_expr);
    OrderResult r = spectral_order(lam, max_order);
    ordered_json j = ordered_json::parse(order_to_json(lam, r));
    j["seed"] = seed;
    out.write(j.dump(2));
    return 0;
}

int cmd_lines_construct(const std::string& alpha_expr, int n, const Output& out) {
    AlgebraicReal alpha = parse_lambda_expr(alpha_expr);
    AlgebraicReal lam = lam_of_alpha(alpha);
    OrderResult k = spectral_order(lam, 8);
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = lambda_json(alpha);
    j["lambda"] = lambda_json(lam);
    LowerBoundWitness w = lower_bound_count_materialized(alpha, n, k);
    j["count"] = w.count;
    j["materialized"] = w.materialized;
    j["audit_pass"] = w.audit_pass;
    j["detail"] = w.detail;
    SphericalCode code;
    if (k.finite() && k.witness) {
        SphericalCode code0 = code_from_graph(*k.witness, lam);
        code = kronecker_lift(code0, alpha, n);
        j["k"] = k.k;
        j["witness"] = write_graph6(*k.witness);
    } else {
        code = simplex_like_code(alpha, n);
        j["k"] = "infinite";
    }
    CodeAudit audit = audit_code(code);
    j["audit"] = {{"diagonal_ok", audit.diagonal_ok},
                  {"L_ok", audit.L_ok},
                  {"psd_ok", audit.psd_ok},
                  {"rank", audit.rank},
                  {"rank_ok", audit.rank_ok}};
    j["code"] = ordered_json::parse(code_to_json(code));
    out.write(j.dump(2));
    return (w.audit_pass && audit.pass()) ? 0 : 1;
}

int cmd_lines_project(const std::string& alpha_expr, int t, const std::string& in_path,
                      const Output& out) {
    AlgebraicReal alpha = parse_lambda_expr(alpha_expr);
    SphericalCode code = code_from_json(slurp(in_path));
    ProjectResult res = project_code(code, alpha, t);
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = lambda_json(alpha);
    j["t"] = t;
    j["input_size"] = code.size();
    j["output_size"] = res.code.size();
    j["independent_size"] = res.independent_size;
    j["switched"] = res.switched;
    j["discarded"] = res.discarded;
    if (!res.L_values_q.empty()) {
        std::vector<std::string> l;
        for (const Rational& v : res.L_values_q) l.push_back(v.get_str());
        j["L"] = l;
    } else {
        std::vector<double> l;
        for (long double v : res.L_values_f) l.push_back(static_cast<double>(v));
        j["L"] = l;
    }
    CodeAudit audit = audit_code(res.code);
    j["audit_pass"] = audit.pass();
    j["code"] = ordered_json::parse(code_to_json(res.code));
    out.write(j.dump(2));
    return audit.pass() ? 0 : 1;
}

int cmd_lines_bounds(const std::string& alpha_expr, int n, int max_order,
                     const Output& out) {
    AlgebraicReal alpha = parse_lambda_expr(alpha_expr);
    auto rows = size_upper_bounds(alpha, n, max_order);
    ordered_json j = ordered_json::parse(bounds_to_json(alpha, n, rows));
    AlgebraicReal lam = lam_of_alpha(alpha);
    OrderResult k = spectral_order(lam, max_order);
    j["lower_bound"] = lower_bound_count(n, k);
    out.write(j.dump(2));
    return 0;
}

int cmd_lines_audit(const std::string& in_path, const std::string& alpha_expr, int t,
                    int n, const Output& out) {
    SphericalCode code = code_from_json(slurp(in_path));
    CodeAudit audit = audit_code(code);
    ordered_json j;
    j["schema_version"] = 1;
    j["size"] = code.size();
    j["audit"] = {{"diagonal_ok", audit.diagonal_ok},
                  {"L_ok", audit.L_ok},
                  {"psd_ok", audit.psd_ok},
                  {"rank", audit.rank},
                  {"rank_ok", audit.rank_ok},
                  {"min_eigenvalue", audit.min_eigenvalue}};
    bool ok = audit.pass();
    if (!alpha_expr.empty() && t > 0) {
        AlgebraicReal alpha = parse_lambda_expr(alpha_expr);
        RankBoundReport rep = rank_bound_check(code, alpha, t, n > 0 ? n : code.dim);
        j["rank_bound"] = {{"identity_ok", rep.identity_ok},
                           {"rank_ia", rep.rank_ia},
                           {"rank_m", rep.rank_m},
                           {"n", rep.n},
                           {"pass", rep.pass}};
        ok = ok && rep.pass;
    }
    out.write(j.dump(2));
    return ok ? 0 : 1;
}

int cmd_constants(int m_max, const Output& out) {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json rows = ordered_json::array();
    for (int m = 1; m <= m_max; ++m) {
        ordered_json row;
        row["m"] = m;
        AlgebraicReal b = beta_constant(m);
        AlgebraicReal a = alpha_constant(m);
        row["beta"] = b.to_double();
        row["beta_minpoly"] = b.minpoly().to_string();
        row["alpha"] = a.to_double();
        row["alpha_minpoly"] = a.minpoly().to_string();
        if (m >= 2) {
            AlphaAuditReport rep = alpha_conjugate_audit(m);
            row["audit"] = rep.pass() ? "not totally real" : "AUDIT FAILED";
            if (!rep.pass()) {
                out.write(j.dump(2));
                return 1;
            }
        }
        rows.push_back(row);
    }
    j["constants"] = rows;
    AlgebraicReal ls = lambda_star();
    j["lambda_star"] = {{"value", ls.to_double()},
                        {"minpoly", ls.minpoly().to_string()}};
    out.write(j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified spectral-radius arithmetic, forbidden-subgraph "
                 "characterizations, spectral order, and equiangular-line machinery"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    Output out;
    uint64_t seed = 0;
    int precision = 9;
    app.add_option("--out", out.path, "Write JSON to this file instead of stdout");
    app.add_option("--seed", seed, "Seed echoed into outputs (randomized suites)");
    app.add_option("--precision", precision,
                   "Decimal digits for certified brackets (default 9)");

    // spectral
    auto* sp = app.add_subcommand("spectral", "Spectral radius / charpoly / comparison");
    std::string sp_in, sp_compare;
    std::vector<std::string> sp_graphs;
    bool sp_charpoly = false;
    double sp_tol = 0;  // 0: derive from --precision
    sp->add_option("graphs", sp_graphs, "graph6 records (default: stdin)");
    sp->add_option("--in", sp_in, "graph6 file (default: stdin)");
    sp->add_flag("--charpoly", sp_charpoly, "Include exact characteristic polynomials");
    sp->add_option("--compare", sp_compare, "Algebraic lambda to compare against");
    sp->add_option("--tol", sp_tol, "Bracket tolerance (default 1e-9)");

    // forbidden
    auto* fb = app.add_subcommand("forbidden", "Forbidden-subgraph family for F(lambda)");
    std::string fb_lambda;
    int fb_budget = 10, fb_check = 0;
    uint64_t fb_ext = 10'000'000;
    bool fb_min = false;
    fb->add_option("--lambda", fb_lambda, "Threshold lambda")->required();
    fb->add_option("--budget", fb_budget, "Enumeration vertex cutoff (default 10)");
    fb->add_option("--max-extensions", fb_ext, "Extension budget (default 1e7)");
    fb->add_option("--check-up-to", fb_check, "Oracle-check all graphs up to this order");
    fb->add_flag("--minimize", fb_min, "Minimize to an antichain");

    // order
    auto* od = app.add_subcommand("order", "Spectral radius order k(lambda)");
    std::string od_lambda;
    int od_max = 10;
    od->add_option("--lambda", od_lambda, "Algebraic lambda")->required();
    od->add_option("--max-order", od_max, "Scan bound (default 10)");

    // lines
    auto* ln = app.add_subcommand("lines", "Equiangular-line constructions and bounds");
    ln->require_subcommand(1);
    auto* lc = ln->add_subcommand("construct", "Kronecker lower-bound construction");
    std::string lc_alpha;
    int lc_n = 0;
    lc->add_option("--alpha", lc_alpha, "Common inner product alpha")->required();
    lc->add_option("--n", lc_n, "Ambient dimension")->required();
    auto* lp = ln->add_subcommand("project", "Switching-and-projection reduction");
    std::string lp_alpha, lp_in;
    int lp_t = 0;
    lp->add_option("--alpha", lp_alpha)->required();
    lp->add_option("--t", lp_t, "Independent-set size")->required();
    lp->add_option("--in", lp_in, "Input code JSON")->required();
    auto* lb = ln->add_subcommand("bounds", "Upper/lower bound table for N_alpha(n)");
    std::string lb_alpha;
    int lb_n = 0, lb_max_order = 8;
    lb->add_option("--alpha", lb_alpha)->required();
    lb->add_option("--n", lb_n)->required();
    lb->add_option("--max-order", lb_max_order);
    auto* la = ln->add_subcommand("audit", "Invariant + rank-bound audit of a code");
    std::string la_in, la_alpha;
    int la_t = 0, la_n = 0;
    la->add_option("--in", la_in)->required();
    la->add_option("--alpha", la_alpha);
    la->add_option("--t", la_t);
    la->add_option("--n", la_n);

    // constants
    auto* ct = app.add_subcommand("constants", "beta_m, alpha_m, lambda*, audits");
    int ct_m = 10;
    ct->add_option("--m-max", ct_m, "Largest m (default 10)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) {
            double tol = sp_tol > 0 ? sp_tol : std::pow(10.0, -precision);
            return cmd_spectral(sp_in, sp_graphs, sp_charpoly, sp_compare, tol, out, seed);
        }
        if (fb->parsed())
            return cmd_forbidden(fb_lambda, fb_budget, fb_ext, fb_check, fb_min, out, seed);
        if (od->parsed()) return cmd_order(od_lambda, od_max, out, seed);
        if (ln->parsed()) {
            if (lc->parsed()) return cmd_lines_construct(lc_alpha, lc_n, out);
            if (lp->parsed()) return cmd_lines_project(lp_alpha, lp_t, lp_in, out);
            if (lb->parsed()) return cmd_lines_bounds(lb_alpha, lb_n, lb_max_order, out);
            if (la->parsed()) return cmd_lines_audit(la_in, la_alpha, la_t, la_n, out);
        }
        if (ct->parsed()) return cmd_constants(ct_m, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    }
    return 1;
}

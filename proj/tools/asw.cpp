#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "asw/cli.hpp"

using namespace asw;
using cli::json;

namespace {

struct datum_opts {
    int p = 0;
    int n = 0;
    int f = 1;
    std::vector<int> nu;
    std::string file;

    void add(CLI::App* app) {
        app->add_option("--p", p, "characteristic");
        app->add_option("--n", n, "length of the Witt vector");
        app->add_option("--f", f, "residue field degree");
        app->add_option("--nu", nu, "pole orders (u_i = s^-nu_i)")->delimiter(',');
        app->add_option("--datum", file, "JSON datum file");
    }

    tower::cover_datum get() const {
        if (!file.empty()) return cli::parse_datum_file(file);
        json doc = {{"p", p}, {"f", f}, {"nu", nu}};
        if (n) doc["n"] = n;
        return cli::parse_datum(doc);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin-Schreier-Witt towers: conductors, ramification, local symbols"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string out_file;
    std::uint64_t seed = 1;
    int budget = -1;
    app.add_flag("--json", as_json, "structured output");
    app.add_option("--out", out_file, "also write the structured report to this file");
    app.add_option("--seed", seed, "seed for randomized trials");
    app.add_option("--budget", budget, "precision budget (default: ASW_BUDGET or automatic)");

    datum_opts cond_d, lat_d, tower_d, sym_d;
    auto* cond = app.add_subcommand("conductor", "closed formula and lattice oracle");
    cond_d.add(cond);
    auto* lat = app.add_subcommand("lattice", "section-degree lattice points");
    lat_d.add(lat);

    auto* lp = app.add_subcommand("lp", "integer programs (LP1)/(LP2)");
    int lp_p = 2;
    std::vector<long long> lp_w;
    std::string lp_which = "lp1";
    bool lp_integral = false;
    lp->add_option("--p", lp_p)->required();
    lp->add_option("--w", lp_w, "valuations w_i = v_n(y_i)")->delimiter(',')->required();
    lp->add_option("--problem", lp_which)->check(CLI::IsMember({"lp1", "lp2"}));
    lp->add_flag("--integral", lp_integral, "restrict (LP2) to alpha_i = b_i mod p");

    auto* tw = app.add_subcommand("tower", "build the tower and compute its ramification");
    tower_d.add(tw);

    auto* sym = app.add_subcommand("local-symbol", "vanishing of {u, alpha} above the conductor");
    sym_d.add(sym);
    int trials = 50;
    std::string alpha;
    sym->add_option("--trials", trials);
    sym->add_option("--alpha", alpha, "JSON series literal for one alpha");

    auto* witt = app.add_subcommand("witt", "Witt polynomial tables and arithmetic");
    witt->require_subcommand(1);
    int wp = 2, wn = 2, wf = 1;
    std::string wop;
    std::vector<long long> wa, wb;
    auto* wt = witt->add_subcommand("table", "print S, c, I");
    wt->add_option("--p", wp)->required();
    wt->add_option("--n", wn)->required();
    auto* we = witt->add_subcommand("eval", "evaluate an operation on W_n(F_q)");
    we->add_option("--p", wp)->required();
    we->add_option("--f", wf);
    we->add_option("--op", wop)->required()->check(
        CLI::IsMember({"add", "sub", "mul", "neg", "frobenius", "verschiebung", "asw"}));
    we->add_option("--a", wa)->delimiter(',')->required();
    we->add_option("--b", wb)->delimiter(',');

    auto* wbar = app.add_subcommand("wbar", "sections, actions, Chow classes, divisor ledger");
    std::string what;
    int bp = 2, bn = 1;
    long long bm = 1;
    std::vector<long long> ba;
    wbar->add_option("what", what)->required()->check(CLI::IsMember({"sections", "psi", "act", "chow", "ledger"}));
    wbar->add_option("--p", bp)->required();
    wbar->add_option("--n", bn)->required();
    wbar->add_option("--m", bm, "twist for sections");
    wbar->add_option("--a", ba, "Witt vector for act")->delimiter(',');

    auto* grid = app.add_subcommand("grid", "batch cross-validation of the conductor formula");
    std::vector<int> gp{2, 3}, gn{1, 2};
    int nu_max = 7;
    long long max_M = 0;
    bool rerun = false;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    grid->add_option("--p", gp)->delimiter(',');
    grid->add_option("--n", gn)->delimiter(',');
    grid->add_option("--nu-max", nu_max);
    grid->add_option("--max-M", max_M, "skip cases with max p^(n-1-i) nu_i above this");
    grid->add_flag("--rerun-double", rerun, "rerun each case at twice the budget and compare");
    grid->add_option("--jobs", jobs);

    CLI11_PARSE(app, argc, argv);

    try {
        const int B = budget >= 0 ? budget : cli::budget_from_env();
        cli::outcome o;
        if (*cond) {
            auto d = cond_d.get();
            o = cli::run_conductor(d.p, d.nu);
        } else if (*lat) {
            auto d = lat_d.get();
            o = cli::run_lattice(d.p, d.nu);
        } else if (*lp) {
            o = cli::run_lp(lp_p, lp_w, lp_which, lp_integral);
        } else if (*tw) {
            o = cli::run_tower(tower_d.get(), B);
        } else if (*sym) {
            const auto d = sym_d.get();
            json a;
            if (!alpha.empty()) a = json::parse(alpha);
            o = cli::run_local_symbol(d, trials, seed, alpha.empty() ? nullptr : &a);
        } else if (*wt) {
            o = cli::run_witt_table(wp, wn);
        } else if (*we) {
            o = cli::run_witt_eval(wp, wf, wop, wa, wb);
        } else if (*wbar) {
            o = cli::run_wbar(what, bp, bn, bm, ba);
        } else if (*grid) {
            o = cli::run_grid(gp, gn, nu_max, max_M, B, rerun, jobs);
        }
        if (as_json) std::cout << o.report.dump(2) << "\n";
        else std::cout << o.human;
        if (!out_file.empty()) std::ofstream(out_file) << o.report.dump(2) << "\n";
        return o.ok ? 0 : 1;
    } catch (const error& e) {
        const json err = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        if (as_json) std::cout << err.dump(2) << "\n";
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#ifndef ASW_CLI_HPP
#define ASW_CLI_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "asw/tower.hpp"

namespace asw::cli {

using json = nlohmann::json;

/* Datum documents (JSON):
 *   {"p": 2, "n": 2, "nu": [3, 1]}                       u_i = s^(-nu_i)
 *   {"p": 2, "n": 1, "u": [[[-3, 1], [-1, 1]]]}          literal (exponent, coefficient) pairs
 *   {"p": 2, "f": 2, "u": [{"terms": [[-3, [0, 1]]], "prec": 20}]}
 * Coefficients are integers (reduced mod p, or the element encoding when "f" > 1) or coordinate lists.
 */
tower::cover_datum parse_datum(const json& doc);
tower::cover_datum parse_datum_file(const std::string& path);
fq_series parse_series(const coeff::field_context& ctx, const json& j);

// ASW_BUDGET, or 0 (automatic) when unset.
int budget_from_env();

struct outcome {
    json report;
    std::string human;
    bool ok = true;
};

outcome run_conductor(int p, const std::vector<int>& nu);
outcome run_lattice(int p, const std::vector<int>& nu);
// which = "lp1" or "lp2"; w_i = v_n(y_i)
outcome run_lp(int p, const std::vector<long long>& w, const std::string& which, bool integral);
outcome run_tower(const tower::cover_datum& d, int budget);
outcome run_local_symbol(const tower::cover_datum& d, int trials, std::uint64_t seed, const json* alpha);
outcome run_witt_table(int p, int n);
outcome run_witt_eval(int p, int f, const std::string& op, const std::vector<long long>& a,
                      const std::vector<long long>& b);
// what = "sections", "psi", "act", "chow", "ledger"
outcome run_wbar(const std::string& what, int p, int n, long long m, const std::vector<long long>& a);

struct grid_case {
    int p = 0;
    std::vector<int> nu;
    long long theorem = 0, oracle = 0, brute = 0;
    long long different = 0;
    bool unique_max = false;
    bool hasse_arf = false, invariants = false, standard_form = false, claim = false;
    bool stable = true;  // only meaningful with a rerun
    bool rerun = false;
    double seconds = 0;        // first analysis
    double rerun_seconds = 0;
    std::string error;
    bool ok() const;
    json to_json() const;
};

// Cases with nu_i in 1..nu_max prime to p and theorem M <= max_M (0: no cap).
std::vector<std::vector<int>> grid_nus(int p, int n, int nu_max, long long max_M);
grid_case evaluate_case(int p, const std::vector<int>& nu, int budget, bool rerun_double);
outcome run_grid(const std::vector<int>& ps, const std::vector<int>& ns, int nu_max, long long max_M, int budget,
                 bool rerun_double, int jobs);

std::string to_string(const mpq_class& q);

}  // namespace asw::cli

#endif  // ASW_CLI_HPP

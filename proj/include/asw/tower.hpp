#ifndef ASW_TOWER_HPP
#define ASW_TOWER_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "asw/series.hpp"
#include "asw/witt.hpp"

namespace asw::tower {

// F(Y) - Y = u over k((s)), u_i with pole of order nu_i prime to p.
struct cover_datum {
    int p = 0;
    int n = 0;
    const coeff::field_context* field = nullptr;
    std::vector<fq_series> u;
    std::vector<int> nu;
};

// Shorthand u_i = s^(-nu_i).
cover_datum monomial_datum(int p, const std::vector<int>& nu, int f = 1);
// Fills nu from u and enforces the hypotheses (poles prime to p).
void validate(cover_datum& d);

struct reduction {
    fq_series z_tilde;  // z = z_tilde + h^p - h
    fq_series h;        // exact Laurent polynomial
    int steps = 0;
};

// Removes leading terms a t^(-pm) via h-terms a^(1/p) t^(-m) until the pole order is prime to p.
reduction standard_form_reduce(const fq_series& z);

struct tower_stage {
    int level = 0;
    fq_series s;                     // s as a series in t_level
    std::vector<fq_series> t;        // t_0 (= s), ..., t_{level-1} in t_level
    std::vector<fq_series> y;        // y_0, ..., y_{level-1}
    std::vector<fq_series> y_tilde;  // adjusted solutions, y_j = y_tilde_j + h_j(t_j)

    // The step C_level / C_{level-1}, as series in t_{level-1} (level >= 1).
    fq_series z;        // u_{level-1} + c_{level-1}(y; u)
    fq_series carry;    // c_{level-1}(y; u); equals -c(y^p, -y)
    fq_series z_tilde;
    fq_series h;
    int e_step = 0;     // -v(z_tilde): break of the degree-p step
    int a = 0, b = 0;   // t_level = unit * y_tilde^a * t_{level-1}^b, -a e + b p = 1
    coeff::fq unit;
    int budget = 0;     // relative precision cap used for the step

    // Invariants of C_level / D, filled by tower_invariants.
    long long m = 0, e = 0, mu = 0;
};

struct tower {
    cover_datum datum;
    int budget = 0;
    int retries = 0;
    std::vector<tower_stage> stages;  // 0..n
    const tower_stage& top() const { return stages.back(); }
};

// max(4 (e_n + p^n), mu_n + p^n + 16), with e_n and mu_n from the closed formula.
int default_budget(const cover_datum& d);

tower_stage extend_stage(const std::vector<tower_stage>& built, const cover_datum& d, int budget);
tower build_tower(const cover_datum& d, int budget);

struct conjugates {
    int p = 0, n = 0;
    std::vector<fq_series> sigma_t;  // sigma_g(t_n) for g = 0..p^n-1
    std::vector<int> v;              // v(sigma_g(t_n) - t_n); v[0] unused
    int direct_checks = 0;           // powers of p computed directly and compared
};

// sigma_g(t_n) via the Witt sum y + [g], truncated to `rel` relative precision.
fq_series galois_conjugate_direct(const tower& tw, long long g, int rel);
conjugates galois_conjugates(const tower& tw);

struct filtration_segment {
    int lo = 0, hi = 0;  // indices i in [lo, hi]
    long long order = 1;
};

struct ramification_filtration {
    int p = 0, n = 0;
    long long order = 1;
    std::vector<int> v;  // v(sigma_g t - t) per g
    std::vector<filtration_segment> segments;
    std::vector<int> lower_breaks;
    long long different = 0;
    bool subgroups_cyclic = false;
    long long group_order(int i) const;
    std::string to_string() const;
};

ramification_filtration ramification_filtration_of(const conjugates& c);

// Piecewise-linear phi given by its values at 0 and at the lower breaks; slope 1/|G_0| afterwards.
struct herbrand_function {
    std::vector<std::pair<mpq_class, mpq_class>> knots;
    std::vector<mpq_class> slopes;  // slope on [knot_k, knot_{k+1}], last entry beyond
    mpq_class operator()(const mpq_class& u) const;
};

herbrand_function herbrand_phi(const ramification_filtration& f);

struct conductor_result {
    std::vector<mpq_class> upper_breaks;
    mpq_class m;
    long long conductor = 0;
};

// m = phi(e) for the last lower break e; throws hasse_arf_violation on a non-integral upper break.
conductor_result conductor(const ramification_filtration& f);

struct check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct invariants_report {
    std::vector<long long> m, e, mu;  // index 0..n, entry 0 is the base
    std::vector<long long> mu_tele;   // Cor. tele closed forms
    std::vector<long long> mu_g;      // mu(g_i) from v(dt_i/dt_n)
    std::vector<check> checks;
    bool ok() const;
};

// Fills stage invariants and checks Prop. condor / Cor. tele / different identities.
invariants_report tower_invariants(tower& tw, const ramification_filtration& f, const conductor_result& c);

struct adjust_result {
    fq_series root;  // x = root^p + rest (after `depth` extra p-th root extractions)
    fq_series rest;
    int mu = 0;      // v(rest) - p^level * v_s(x)
    int depth = 0;
};

adjust_result adjust_decompose(const tower_stage& st, const fq_series& x, int vs);

struct analysis {
    tower tw;
    conjugates conj;
    ramification_filtration filtration;
    herbrand_function phi;
    conductor_result cond;
    invariants_report inv;
    std::vector<check> step_checks;  // standard form and relation checks per step
};

// Build, conjugate, filter; on insufficient precision doubles the budget up to max_retries times.
analysis analyze(const cover_datum& d, int budget = 0, int max_retries = 3);

}  // namespace asw::tower

#endif  // ASW_TOWER_HPP

#ifndef ASW_CONDUCTOR_HPP
#define ASW_CONDUCTOR_HPP

#include <string>
#include <vector>

#include "asw/tower.hpp"

namespace asw::conductor {

using point = std::vector<long long>;

struct theorem_result {
    long long M = 0;
    int argmax = -1;      // first index attaining the max
    bool unique = false;  // ties cannot happen for nu prime to p, but are reported
    long long conductor = 0;
};

// M = max_i p^(n-1-i) nu_i with n = nu.size().
theorem_result theorem_conductor(int p, const std::vector<int>& nu);

struct section_degree_result {
    long long M = 0;
    std::vector<point> feasible;     // (i_0, ..., i_{n-1}) with sum p^h i_h = p^(n-1)
    std::vector<point> maximizers;
};

section_degree_result section_degree_oracle(int p, const std::vector<int>& nu);

enum class sense { minimize, maximize };

// Optimize offset + objective . x over lower <= x <= upper, constraint . x = rhs, x integral.
struct lattice_problem {
    std::vector<long long> objective;
    long long offset = 0;
    std::vector<long long> constraint;
    long long rhs = 0;
    std::vector<long long> lower, upper;
    sense dir = sense::minimize;
    std::vector<std::string> names;
    bool collect_feasible = false;
    // x[i] = x[j] mod m for each (i, j, m)
    struct congruence {
        int i, j;
        long long m;
    };
    std::vector<congruence> congruences;
};

struct lp_result {
    long long value = 0;
    std::vector<point> optimizers;
    std::vector<point> feasible;  // only with collect_feasible
    long long feasible_count = 0;
};

// Exhaustive enumeration with reachability pruning; throws infeasible.
lp_result lp_minimize(const lattice_problem& prob);

// (LP1): variables a_0..a_{n-1}, b_0..b_{n-1}, w_i = v_n(y_i).
lattice_problem lp1(int p, const std::vector<long long>& w);
// (LP2): variables alpha_0..alpha_{n-1}, b_0..b_{n-1}. With `integral` the points must come from
// (LP1), i.e. alpha_i = b_i mod p; without it the problem is the relaxation written in the text.
lattice_problem lp2(int p, const std::vector<long long>& w, bool integral = false);
// (LP2) for the monomials gamma_i^(p alpha_i - 1) eta_i prod gamma_h^(p alpha_h): offset v_n(eta_i).
lattice_problem lp2_eta(int p, const std::vector<long long>& w, long long v_eta, bool integral = false);

struct report {
    std::vector<tower::check> checks;
    bool ok() const;
};

// Lemma sort on the series of a built tower: v_{t_i}(c_i) >= -(p^(i+1)-p+1) m_i and
// v_{t_(i+1)}(y_i) >= -p^i m_(i+1), equality iff nu_i = m_(i+1).
report sort_bound_check(const tower::tower& tw, const tower::invariants_report& inv);

// -v(z~_i) = p^i M_i - mu_i with M_i the theorem value for (nu_0..nu_i), and, when the carry
// dominates, the reduced carry alone has pole order p^(i+1) m_i - mu_i.
report claim_check(const tower::tower& tw, const tower::invariants_report& inv);

}  // namespace asw::conductor

#endif  // ASW_CONDUCTOR_HPP

#include "asw/conductor.hpp"

#include <algorithm>

namespace asw::conductor {

namespace {

long long ipow(int p, int e) { return coeff::ipow(p, e); }

std::string str(long long x) { return std::to_string(x); }

void check_nu(int p, const std::vector<int>& nu) {
    if (nu.empty()) fail(error_code::hypothesis_violation, "need n >= 1");
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] <= 0 || nu[i] % p == 0)
            fail(error_code::hypothesis_violation, "nu_" + str(i) + " = " + str(nu[i]) + " must be positive and prime to p");
}

struct search {
    const lattice_problem& prob;
    lp_result res;
    bool found = false;
    point x;
    // reachable range of constraint . x[k..]
    std::vector<long long> lo_tail, hi_tail;

    explicit search(const lattice_problem& pr) : prob(pr) {
        const std::size_t d = prob.objective.size();
        lo_tail.assign(d + 1, 0);
        hi_tail.assign(d + 1, 0);
        for (std::size_t k = d; k-- > 0;) {
            const long long a = prob.constraint[k] * prob.lower[k], b = prob.constraint[k] * prob.upper[k];
            lo_tail[k] = lo_tail[k + 1] + std::min(a, b);
            hi_tail[k] = hi_tail[k + 1] + std::max(a, b);
        }
        x.assign(d, 0);
    }

    void run(std::size_t k, long long lhs, long long val) {
        const std::size_t d = x.size();
        if (k == d) {
            if (lhs != prob.rhs) return;
            for (const auto& c : prob.congruences)
                if ((x[c.i] - x[c.j]) % c.m != 0) return;
            ++res.feasible_count;
            if (prob.collect_feasible) res.feasible.push_back(x);
            const bool better = !found || (prob.dir == sense::minimize ? val < res.value : val > res.value);
            if (better) {
                res.value = val;
                res.optimizers.clear();
                found = true;
            }
            if (val == res.value) res.optimizers.push_back(x);
            return;
        }
        const long long need = prob.rhs - lhs;
        if (need < lo_tail[k] || need > hi_tail[k]) return;
        for (long long v = prob.lower[k]; v <= prob.upper[k]; ++v) {
            x[k] = v;
            run(k + 1, lhs + prob.constraint[k] * v, val + prob.objective[k] * v);
        }
        x[k] = 0;
    }
};

}  // namespace

theorem_result theorem_conductor(int p, const std::vector<int>& nu) {
    check_nu(p, nu);
    const int n = static_cast<int>(nu.size());
    theorem_result r;
    for (int i = 0; i < n; ++i) {
        const long long v = ipow(p, n - 1 - i) * nu[i];
        if (r.argmax < 0 || v > r.M) {
            r.M = v;
            r.argmax = i;
            r.unique = true;
        } else if (v == r.M) {
            r.unique = false;
        }
    }
    r.conductor = r.M + 1;
    return r;
}

lp_result lp_minimize(const lattice_problem& prob) {
    const std::size_t d = prob.objective.size();
    if (prob.constraint.size() != d || prob.lower.size() != d || prob.upper.size() != d)
        fail(error_code::infeasible, "lattice problem dimensions disagree");
    search s(prob);
    s.run(0, 0, prob.offset);
    if (!s.found) fail(error_code::infeasible, "no lattice point satisfies the constraint");
    return s.res;
}

section_degree_result section_degree_oracle(int p, const std::vector<int>& nu) {
    check_nu(p, nu);
    const int n = static_cast<int>(nu.size());
    lattice_problem pr;
    pr.dir = sense::maximize;
    pr.rhs = ipow(p, n - 1);
    pr.collect_feasible = true;
    for (int h = 0; h < n; ++h) {
        pr.objective.push_back(nu[h]);
        pr.constraint.push_back(ipow(p, h));
        pr.lower.push_back(0);
        pr.upper.push_back(ipow(p, n - 1 - h));
        pr.names.push_back("i_" + str(h));
    }
    auto lp = lp_minimize(pr);
    return {lp.value, lp.feasible, lp.optimizers};
}

lattice_problem lp1(int p, const std::vector<long long>& w) {
    const int n = static_cast<int>(w.size());
    lattice_problem pr;
    pr.rhs = ipow(p, n);
    for (int i = 0; i < n; ++i) {
        pr.objective.push_back(p * w[i]);
        pr.constraint.push_back(ipow(p, i));
        pr.lower.push_back(0);
        pr.upper.push_back(ipow(p, n - i) - 1);
        pr.names.push_back("a_" + str(i));
    }
    for (int i = 0; i < n; ++i) {
        pr.objective.push_back(w[i]);
        pr.constraint.push_back(ipow(p, i));
        pr.lower.push_back(0);
        pr.upper.push_back(ipow(p, n - i));
        pr.names.push_back("b_" + str(i));
    }
    return pr;
}

lattice_problem lp2(int p, const std::vector<long long>& w, bool integral) {
    const int n = static_cast<int>(w.size());
    lattice_problem pr;
    pr.rhs = ipow(p, n + 1);
    for (int i = 0; i < n; ++i) {
        pr.objective.push_back(w[i]);
        pr.constraint.push_back(ipow(p, i));
        pr.lower.push_back(0);
        pr.upper.push_back(ipow(p, n - i + 1) - p + 1);
        pr.names.push_back("alpha_" + str(i));
    }
    for (int i = 0; i < n; ++i) {
        pr.objective.push_back(0);
        pr.constraint.push_back(ipow(p, i + 1) - ipow(p, i));
        pr.lower.push_back(0);
        pr.upper.push_back(ipow(p, n - i));
        pr.names.push_back("b_" + str(i));
        if (integral) pr.congruences.push_back({i, n + i, p});
    }
    return pr;
}

lattice_problem lp2_eta(int p, const std::vector<long long>& w, long long v_eta, bool integral) {
    lattice_problem pr = lp2(p, w, integral);
    pr.offset = v_eta;
    return pr;
}

bool report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const tower::check& c) { return c.ok; });
}

report sort_bound_check(const tower::tower& tw, const tower::invariants_report& inv) {
    const int p = tw.datum.p, n = tw.datum.n;
    report r;
    for (int i = 0; i < n; ++i) {
        const auto& st = tw.stages[i + 1];
        if (i >= 1) {
            const long long bound = -(ipow(p, i + 1) - p + 1) * inv.m[i];
            if (st.carry.is_exact_zero()) {
                r.checks.push_back({"Lemma sort (1) at i = " + str(i), true, "carry vanishes"});
            } else {
                const long long v = st.carry.valuation();
                r.checks.push_back({"Lemma sort (1) at i = " + str(i), v >= bound,
                                    "v(c_i) = " + str(v) + " >= " + str(bound)});
            }
        }
        const long long vy = st.y[i].valuation();
        const long long bound = -ipow(p, i) * inv.m[i + 1];
        const bool eq_expected = tw.datum.nu[i] == inv.m[i + 1];
        r.checks.push_back({"Lemma sort (2) at i = " + str(i), vy >= bound && ((vy == bound) == eq_expected),
                            "v(y_i) = " + str(vy) + ", bound " + str(bound) +
                                (eq_expected ? ", equality expected" : ", strict expected")});
    }
    return r;
}

report claim_check(const tower::tower& tw, const tower::invariants_report& inv) {
    const int p = tw.datum.p, n = tw.datum.n;
    report r;
    for (int i = 0; i < n; ++i) {
        const auto& st = tw.stages[i + 1];
        const std::vector<int> prefix(tw.datum.nu.begin(), tw.datum.nu.begin() + i + 1);
        const auto th = theorem_conductor(p, prefix);
        const long long pole = -static_cast<long long>(st.z_tilde.valuation());
        const long long expected = ipow(p, i) * th.M - inv.mu[i];
        r.checks.push_back({"Claim: pole of z~_" + str(i) + " = p^" + str(i) + " M - mu_" + str(i),
                            th.unique && pole == expected, str(pole) + " vs " + str(expected)});
        if (i >= 1 && p * inv.m[i] > tw.datum.nu[i]) {
            const auto red = tower::standard_form_reduce(st.carry);
            const long long cp = -static_cast<long long>(red.z_tilde.valuation());
            const long long ce = ipow(p, i + 1) * inv.m[i] - inv.mu[i];
            r.checks.push_back({"Claim: reduced carry c_" + str(i) + " has pole p^" + str(i + 1) + " m_" + str(i) +
                                    " - mu_" + str(i),
                                cp == ce, str(cp) + " vs " + str(ce)});
        }
    }
    return r;
}

}  // namespace asw::conductor

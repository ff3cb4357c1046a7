#include "asw/tower.hpp"

#include <sstream>

namespace asw::tower {

using coeff::fq;

namespace {

long long ipow(int p, int e) { return coeff::ipow(p, e); }

std::string str(long long x) { return std::to_string(x); }

fq_series truncate_relative(const fq_series& x, int rel) {
    if (!x.has_certified_valuation()) return x;
    return x.truncated(x.valuation() + rel);
}

}  // namespace

cover_datum monomial_datum(int p, const std::vector<int>& nu, int f) {
    cover_datum d;
    d.p = p;
    d.n = static_cast<int>(nu.size());
    d.field = &coeff::field_context::get(p, f);
    for (int v : nu) {
        if (v <= 0) fail(error_code::hypothesis_violation, "pole orders must be positive");
        d.u.push_back(fq_series::monomial(fq::one(*d.field), -v));
    }
    validate(d);
    return d;
}

void validate(cover_datum& d) {
    if (!d.field) fail(error_code::hypothesis_violation, "datum has no coefficient field");
    if (d.n < 1 || static_cast<int>(d.u.size()) != d.n) fail(error_code::hypothesis_violation, "need n >= 1 components");
    d.nu.clear();
    for (int i = 0; i < d.n; ++i) {
        if (d.u[i].ctx_ptr() != d.field) fail(error_code::field_mismatch, "u_" + str(i) + " over a different field");
        const int v = d.u[i].valuation();
        if (v >= 0)
            fail(error_code::hypothesis_violation, "u_" + str(i) + " has no pole (valuation " + str(v) + ")");
        if ((-v) % d.p == 0)
            fail(error_code::hypothesis_violation,
                 "nu_" + str(i) + " = " + str(-v) + " is divisible by p = " + str(d.p));
        d.nu.push_back(-v);
    }
}

reduction standard_form_reduce(const fq_series& z) {
    const auto& ctx = z.ctx();
    const int p = ctx.p();
    reduction r;
    r.z_tilde = z;
    std::vector<std::pair<int, fq>> hterms;
    for (;;) {
        if (r.z_tilde.is_exact_zero()) fail(error_code::non_totally_ramified, "z is in the image of F - 1");
        const int v = r.z_tilde.valuation();
        if (v >= 0)
            fail(error_code::non_totally_ramified,
                 "reduced Artin-Schreier datum is regular (valuation " + str(v) + ")");
        if ((-v) % p != 0) break;
        const fq root = r.z_tilde.leading_coefficient().pth_root();
        const fq_series mono = fq_series::monomial(root, v / p);
        r.z_tilde = r.z_tilde - mono.frobenius() + mono;
        hterms.emplace_back(v / p, root);
        ++r.steps;
    }
    r.h = fq_series::from_terms(ctx, hterms);
    return r;
}

int default_budget(const cover_datum& d) {
    const int p = d.p;
    std::vector<long long> m(d.n + 1, 0);
    for (int i = 1; i <= d.n; ++i)
        for (int k = 0; k < i; ++k) m[i] = std::max(m[i], ipow(p, i - 1 - k) * d.nu[k]);
    long long e = 0;
    for (int i = 1; i <= d.n; ++i) e += ipow(p, i - 1) * (m[i] - m[i - 1]);
    // v(ds/dt_n) = mu_n + p^n - 1 with mu_n = p^n m_n - e_n must be visible too
    const long long pn = ipow(p, d.n);
    return static_cast<int>(std::max(4 * (e + pn), pn * m[d.n] - e + pn + 16));
}

tower_stage extend_stage(const std::vector<tower_stage>& built, const cover_datum& d, int budget) {
    const tower_stage& st = built.back();
    const int i = st.level;
    const int p = d.p;
    const auto& ctx = *d.field;
    const auto& tb = witt::table::get(p, i + 1);

    std::vector<fq_series> U;
    for (int j = 0; j <= i; ++j) U.push_back(compose(d.u[j], st.s));
    fq_series carry = fq_series::zero(ctx);
    if (i >= 1) {
        const auto ci = poly::reduce_mod_p(tb.carry(i), ctx);
        std::vector<fq_series> vals;
        for (int j = 0; j <= i; ++j) {
            vals.push_back(j < i ? st.y[j] : fq_series::zero(ctx));
            vals.push_back(j < i ? U[j] : fq_series::zero(ctx));
        }
        carry = poly::evaluate(ci, vals, U[0]);
    }
    const fq_series z = U[i] + carry;
    reduction red = standard_form_reduce(z);
    const fq_series& zt = red.z_tilde;
    const int e = -zt.valuation();

    int a = 1;
    while ((static_cast<long long>(a) * e) % p != p - 1) ++a;
    const int b = static_cast<int>((1 + static_cast<long long>(a) * e) / p);
    const fq lead = zt.leading_coefficient();
    const fq y0 = lead.pth_root();
    const fq unit = y0.inv().pow(a);

    /* t_i = tau^p V^a, y~_i = y0 tau^-e V^-b with V(0) = 1. Multiplying the
     * Artin-Schreier relation by tau^(pe):
     *   H(V) = lead V^(-pb) - y0 tau^((p-1)e) V^(-b) - tau^(pe) z~(tau^p V^a) = 0,
     * and H'(V) is a unit, so Newton doubles the precision of V each round.
     */
    const int rel_max = zt.is_exact() ? budget : std::min(budget, p * (zt.precision() + e));
    if (rel_max <= 1) throw insufficient_precision("no precision left for the uniformizer at level " + str(i + 1));
    const fq_series zd = derivative(zt).shifted(1);
    fq_series V = fq_series::one(ctx);
    for (int cur = 1; cur < rel_max;) {
        cur = std::min(2 * cur, rel_max);
        const fq_series Vt = V.as_exact();
        const fq_series Vinv = Vt.inverse(cur);
        const fq_series Vmb = Vinv.pow(b, cur);
        const fq_series g = Vt.pow(a, cur).shifted(p);
        const fq_series term1 = Vmb.frobenius().scale(lead).truncated(cur);
        const fq_series term2 = Vmb.shifted((p - 1) * e).scale(y0).truncated(cur);
        const fq_series W = compose(zt, g, cur - p * e).shifted(p * e);
        const fq_series H = (term1 - term2 - W).truncated(cur);
        const fq_series Wd = compose(zd, g, cur - p * e).shifted(p * e);
        const fq_series Hd = (fq_series::mul(Vmb, Vinv, cur).shifted((p - 1) * e).scale(y0 * fq::from_int(ctx, b)) -
                              fq_series::mul(Vinv, Wd, cur).scale(fq::from_int(ctx, a)))
                                 .truncated(cur);
        V = (Vt - fq_series::mul(H, Hd.inverse(cur), cur)).truncated(cur);
    }

    const fq_series t_prev = V.pow(a).shifted(p);
    const fq_series y_new = V.inverse().pow(b).shifted(-e).scale(y0);
    const fq_series relation = y_new.frobenius() - y_new - compose(zt, t_prev);
    if (!relation.is_zero_in_window())
        fail(error_code::consistency_failure,
             "Artin-Schreier relation fails at level " + str(i + 1) + ": " + relation.to_string(4));

    tower_stage ns;
    ns.level = i + 1;
    for (int j = 0; j < i; ++j) ns.t.push_back(compose(st.t[j], t_prev));
    ns.t.push_back(t_prev);
    ns.s = ns.t[0];
    for (int j = 0; j < i; ++j) ns.y.push_back(compose(st.y[j], t_prev));
    for (int j = 0; j < i; ++j) ns.y_tilde.push_back(ns.y[j] - compose(built[j + 1].h, ns.t[j]));
    ns.y_tilde.push_back(y_new);
    ns.y.push_back(y_new + compose(red.h, t_prev));

    ns.z = z;
    ns.carry = carry;
    ns.z_tilde = zt;
    ns.h = red.h;
    ns.e_step = e;
    ns.a = a;
    ns.b = b;
    ns.unit = unit;
    ns.budget = budget;
    return ns;
}

tower build_tower(const cover_datum& d, int budget) {
    tower tw;
    tw.datum = d;
    tw.budget = budget;
    tower_stage base;
    base.level = 0;
    base.s = fq_series::variable(*d.field);
    tw.stages.push_back(base);
    for (int i = 0; i < d.n; ++i) tw.stages.push_back(extend_stage(tw.stages, d, budget));
    return tw;
}

fq_series galois_conjugate_direct(const tower& tw, long long g, int rel_out) {
    const auto& d = tw.datum;
    const auto& ctx = *d.field;
    const int n = d.n;
    const auto& top = tw.top();
    const auto& tb = witt::table::get(d.p, n);
    const auto A = witt::from_integer(tb, ctx, g, n);
    const fq one = fq::one(ctx);

    // subtracting h_j(sigma t_j) cancels up to the pole order of y_j
    int rel = rel_out;
    for (const auto& y : top.y) rel = std::max(rel, rel_out - y.valuation_bound());
    fq_series rho = fq_series::one(ctx);
    for (int j = 0; j < n; ++j) {
        // S_j(X; A) with the constant vector substituted
        std::vector<poly::fq_poly> images;
        for (int k = 0; k <= j; ++k) {
            images.push_back(poly::fq_poly::variable(witt::xv(k), one));
            images.push_back(poly::fq_poly::constant(A[k]));
        }
        const auto sj = poly::reduce_mod_p(tb.sum(j), ctx).substitute(images, one);
        std::vector<fq_series> vals;
        for (int k = 0; k <= j; ++k) {
            vals.push_back(top.y[k]);
            vals.push_back(fq_series::zero(ctx));
        }
        const fq_series sigma_y = poly::evaluate(sj, vals, top.y[0]);
        const fq_series sigma_t = fq_series::mul(top.t[j], rho);
        const fq_series sigma_yt = truncate_relative(sigma_y - compose(tw.stages[j + 1].h, sigma_t), rel);
        const fq_series ratio = sigma_yt.divided_by(top.y_tilde[j]).truncated(rel);
        const auto& st = tw.stages[j + 1];
        rho = fq_series::mul(ratio.pow(st.a, rel), rho.pow(st.b, rel), rel);
    }
    return rho.truncated(rel_out).shifted(1);
}

conjugates galois_conjugates(const tower& tw) {
    const auto& d = tw.datum;
    const auto& ctx = *d.field;
    conjugates c;
    c.p = d.p;
    c.n = d.n;
    const long long order = ipow(d.p, d.n);
    // v(sigma t - t) <= e_n + 1 for every nontrivial sigma; keep a little more
    const int abs_prec = tw.top().e_step + 4;
    const fq_series t = fq_series::variable(ctx);
    c.sigma_t.push_back(t);
    c.sigma_t.push_back(galois_conjugate_direct(tw, 1, abs_prec + 2).truncated(abs_prec));
    for (long long g = 2; g < order; ++g)
        c.sigma_t.push_back(compose(c.sigma_t[g - 1], c.sigma_t[1]).truncated(abs_prec));
    for (int k = 1; k < d.n; ++k) {
        const long long g = ipow(d.p, k);
        const fq_series direct = galois_conjugate_direct(tw, g, abs_prec + 2).truncated(abs_prec);
        if (!direct.equals_in_window(c.sigma_t[g]))
            fail(error_code::consistency_failure,
                 "sigma_" + str(g) + " from the Witt sum disagrees with sigma_1 iterated");
        ++c.direct_checks;
    }
    c.v.assign(order, 0);
    for (long long g = 1; g < order; ++g) c.v[g] = (c.sigma_t[g] - t).valuation();
    return c;
}

long long ramification_filtration::group_order(int i) const {
    long long k = 1;
    for (std::size_t g = 1; g < v.size(); ++g)
        if (v[g] >= i + 1) ++k;
    return k;
}

std::string ramification_filtration::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (k) os << ", ";
        os << "|G_i| = " << segments[k].order << " for " << segments[k].lo << " <= i <= " << segments[k].hi;
    }
    os << "; trivial beyond";
    return os.str();
}

ramification_filtration ramification_filtration_of(const conjugates& c) {
    ramification_filtration f;
    f.p = c.p;
    f.n = c.n;
    f.order = ipow(c.p, c.n);
    f.v = c.v;
    int vmax = 0;
    for (long long g = 1; g < f.order; ++g) {
        vmax = std::max(vmax, f.v[g]);
        f.different += f.v[g];
    }
    long long prev = -1;
    for (int i = 0; i < vmax; ++i) {
        const long long o = f.group_order(i);
        if (o != prev) f.segments.push_back({i, i, o});
        else f.segments.back().hi = i;
        prev = o;
    }
    for (const auto& s : f.segments) f.lower_breaks.push_back(s.hi);
    // each G_i must be one of the subgroups p^k Z / p^n Z
    f.subgroups_cyclic = f.group_order(0) == f.order;
    for (const auto& s : f.segments) {
        const long long index = f.order / s.order;
        if (index * s.order != f.order) f.subgroups_cyclic = false;
        for (long long g = 1; g < f.order; ++g) {
            const bool in = f.v[g] >= s.lo + 1;
            if (in != (g % index == 0)) f.subgroups_cyclic = false;
        }
    }
    return f;
}

mpq_class herbrand_function::operator()(const mpq_class& u) const {
    if (u <= 0) return u;
    for (std::size_t k = 0; k + 1 < knots.size(); ++k)
        if (u <= knots[k + 1].first) return knots[k].second + slopes[k] * (u - knots[k].first);
    return knots.back().second + slopes.back() * (u - knots.back().first);
}

herbrand_function herbrand_phi(const ramification_filtration& f) {
    herbrand_function h;
    h.knots.emplace_back(0, 0);
    int last = 0;
    for (int l : f.lower_breaks) {
        mpq_class slope(static_cast<long>(f.group_order(l)), static_cast<long>(f.order));
        slope.canonicalize();
        h.slopes.push_back(slope);
        h.knots.emplace_back(l, h.knots.back().second + slope * (l - last));
        last = l;
    }
    mpq_class tail(1L, static_cast<long>(f.order));
    tail.canonicalize();
    h.slopes.push_back(tail);
    return h;
}

conductor_result conductor(const ramification_filtration& f) {
    const herbrand_function phi = herbrand_phi(f);
    conductor_result c;
    for (int l : f.lower_breaks) {
        mpq_class u = phi(l);
        if (u.get_den() != 1)
            fail(error_code::hasse_arf_violation,
                 "upper break phi(" + str(l) + ") = " + u.get_str() + " is not an integer");
        c.upper_breaks.push_back(u);
    }
    if (c.upper_breaks.empty()) fail(error_code::non_totally_ramified, "no ramification breaks");
    c.m = c.upper_breaks.back();
    c.conductor = c.m.get_num().get_si() + 1;
    return c;
}

bool invariants_report::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

invariants_report tower_invariants(tower& tw, const ramification_filtration& f, const conductor_result& c) {
    const int p = tw.datum.p, n = tw.datum.n;
    invariants_report r;
    auto add = [&](const std::string& name, long long lhs, long long rhs) {
        r.checks.push_back({name, lhs == rhs, str(lhs) + " vs " + str(rhs)});
    };
    r.checks.push_back({"number of breaks = n", static_cast<int>(c.upper_breaks.size()) == n,
                        str(c.upper_breaks.size()) + " breaks"});
    r.m.assign(n + 1, 0);
    r.e.assign(n + 1, 0);
    r.mu.assign(n + 1, 0);
    r.mu_tele.assign(n + 1, 0);
    r.mu_g.assign(n + 1, 0);
    for (int i = 1; i <= n && i <= static_cast<int>(c.upper_breaks.size()); ++i)
        r.m[i] = c.upper_breaks[i - 1].get_num().get_si();
    for (int i = 1; i <= n; ++i) {
        r.e[i] = tw.stages[i].e_step;
        r.mu[i] = derivative(tw.stages[i].s).valuation() - ipow(p, i) + 1;
    }
    for (int i = 1; i <= n; ++i) {
        long long e_tele = 0, mu_tele = 0;
        for (int k = 1; k <= i; ++k) {
            e_tele += ipow(p, k - 1) * (r.m[k] - r.m[k - 1]);
            mu_tele += (ipow(p, k) - ipow(p, k - 1)) * r.m[k];
        }
        r.mu_tele[i] = mu_tele;
        add("Prop. condor: mu_" + str(i) + " = p^" + str(i) + " m_" + str(i) + " - e_" + str(i), r.mu[i],
            ipow(p, i) * r.m[i] - r.e[i]);
        add("Prop. condor: e_" + str(i) + " = p^" + str(i - 1) + " m_" + str(i) + " - mu_" + str(i - 1), r.e[i],
            ipow(p, i - 1) * r.m[i] - r.mu[i - 1]);
        add("Cor. tele: e_" + str(i) + " = sum p^(k-1)(m_k - m_(k-1))", r.e[i], e_tele);
        add("Cor. tele: mu_" + str(i) + " = sum (p^k - p^(k-1)) m_k", r.mu[i], mu_tele);
    }
    const auto& top = tw.top();
    for (int i = 0; i < n; ++i) {
        r.mu_g[i] = derivative(top.t[i]).valuation() - ipow(p, n - i) + 1;
        add("Cor. tele: mu(g_" + str(i) + ") = mu_n - p^" + str(n - i) + " mu_" + str(i), r.mu_g[i],
            r.mu[n] - ipow(p, n - i) * r.mu[i]);
    }
    add("different = mu_n + p^n - 1", f.different, r.mu[n] + ipow(p, n) - 1);
    add("last lower break = e_n", f.lower_breaks.empty() ? -1 : f.lower_breaks.back(), r.e[n]);
    for (int i = 0; i <= n; ++i) {
        tw.stages[i].m = r.m[i];
        tw.stages[i].e = r.e[i];
        tw.stages[i].mu = r.mu[i];
    }
    return r;
}

adjust_result adjust_decompose(const tower_stage& st, const fq_series& x, int vs) {
    adjust_result r;
    auto sp = pth_power_decompose(x);
    const int p = x.ctx().p();
    while (sp.rest.is_zero_in_window() && sp.root.has_certified_valuation() && vs % p == 0) {
        ++r.depth;
        vs /= p;
        sp = pth_power_decompose(sp.root);
    }
    r.root = sp.root;
    r.rest = sp.rest;
    r.mu = sp.rest.valuation() - static_cast<int>(ipow(p, st.level)) * vs;
    return r;
}

analysis analyze(const cover_datum& d, int budget, int max_retries) {
    int B = budget > 0 ? budget : default_budget(d);
    for (int attempt = 0;; ++attempt) {
        try {
            analysis a;
            a.tw = build_tower(d, B);
            a.tw.retries = attempt;
            a.conj = galois_conjugates(a.tw);
            a.filtration = ramification_filtration_of(a.conj);
            a.phi = herbrand_phi(a.filtration);
            a.cond = conductor(a.filtration);
            a.inv = tower_invariants(a.tw, a.filtration, a.cond);
            for (int i = 1; i <= d.n; ++i) {
                const auto& st = a.tw.stages[i];
                const bool wp = (st.z - st.z_tilde).equals_in_window(st.h.frobenius() - st.h);
                a.step_checks.push_back({"z - z~ = h^p - h at step " + str(i), wp, st.h.to_string(6)});
                const int v = st.z_tilde.valuation();
                a.step_checks.push_back({"v(z~) < 0 and prime to p at step " + str(i), v < 0 && (-v) % d.p != 0,
                                         "v = " + str(v)});
            }
            a.step_checks.push_back({"filtration groups are the subgroups p^k Z/p^n", a.filtration.subgroups_cyclic,
                                     a.filtration.to_string()});
            return a;
        } catch (const insufficient_precision&) {
            if (attempt >= max_retries) throw;
            B *= 2;
        }
    }
}

}  // namespace asw::tower

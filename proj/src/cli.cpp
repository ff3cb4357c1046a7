#include "asw/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "asw/conductor.hpp"
#include "asw/localsym.hpp"
#include "asw/wbar.hpp"
#include "asw/witt.hpp"

namespace asw::cli {

namespace {

using coeff::fq;

std::string str(long long x) { return std::to_string(x); }

template <class V>
std::string join(const V& v, const std::string& sep = ", ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : v) {
        if (!first) os << sep;
        first = false;
        os << x;
    }
    return os.str();
}

[[noreturn]] void parse_fail(const std::string& what) { fail(error_code::parse_error, what); }

fq parse_coeff(const coeff::field_context& ctx, const json& c) {
    if (c.is_array()) {
        std::vector<int> coords;
        for (const auto& x : c) coords.push_back(x.get<int>());
        if (static_cast<int>(coords.size()) > ctx.degree()) parse_fail("too many coordinates for F_q");
        coords.resize(ctx.degree(), 0);
        return fq::from_coords(ctx, coords);
    }
    if (!c.is_number_integer()) parse_fail("coefficient must be an integer or a coordinate list");
    const long long v = c.get<long long>();
    if (ctx.degree() == 1) return fq::from_int(ctx, v);
    if (v < 0 || v >= static_cast<long long>(ctx.order())) parse_fail("element encoding out of range: " + str(v));
    return fq(ctx, static_cast<std::uint32_t>(v));
}

json checks_json(const std::vector<tower::check>& cs, bool& ok) {
    json a = json::array();
    for (const auto& c : cs) {
        a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        ok = ok && c.ok;
    }
    return a;
}

json checks_json(const std::vector<wbar::check>& cs, bool& ok) {
    json a = json::array();
    for (const auto& c : cs) {
        a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        ok = ok && c.ok;
    }
    return a;
}

void human_checks(std::ostringstream& os, const json& checks) {
    for (const auto& c : checks)
        os << "  [" << (c["ok"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>() << "\n";
}

std::vector<std::string> upper_strings(const tower::conductor_result& c) {
    std::vector<std::string> u;
    for (const auto& b : c.upper_breaks) u.push_back(to_string(b));
    return u;
}

}  // namespace

std::string to_string(const mpq_class& q) { return q.get_str(); }

fq_series parse_series(const coeff::field_context& ctx, const json& j) {
    const json* terms = &j;
    int prec = fq_series::kExact;
    if (j.is_object()) {
        if (!j.contains("terms")) parse_fail("series object needs \"terms\"");
        terms = &j["terms"];
        if (j.contains("prec")) prec = j["prec"].get<int>();
    }
    if (!terms->is_array()) parse_fail("series must be a list of [exponent, coefficient] pairs");
    std::vector<std::pair<int, fq>> t;
    for (const auto& pair : *terms) {
        if (!pair.is_array() || pair.size() != 2) parse_fail("series term must be [exponent, coefficient]");
        t.emplace_back(pair[0].get<int>(), parse_coeff(ctx, pair[1]));
    }
    return fq_series::from_terms(ctx, t, prec);
}

tower::cover_datum parse_datum(const json& doc) {
    if (!doc.is_object()) parse_fail("datum must be an object");
    if (!doc.contains("p")) parse_fail("datum needs \"p\"");
    const int p = doc["p"].get<int>();
    const int f = doc.value("f", 1);
    if (p < 2) parse_fail("p must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) parse_fail("p must be prime");
    tower::cover_datum d;
    if (doc.contains("nu")) {
        const auto nu = doc["nu"].get<std::vector<int>>();
        d = tower::monomial_datum(p, nu, f);
    } else if (doc.contains("u")) {
        const auto& ctx = coeff::field_context::get(p, f);
        d.p = p;
        d.field = &ctx;
        for (const auto& s : doc["u"]) d.u.push_back(parse_series(ctx, s));
        d.n = static_cast<int>(d.u.size());
        tower::validate(d);
    } else {
        parse_fail("datum needs \"nu\" or \"u\"");
    }
    if (d.n < 1) parse_fail("n must be at least 1");
    if (doc.contains("n") && doc["n"].get<int>() != d.n)
        parse_fail("n = " + str(doc["n"].get<int>()) + " does not match " + str(d.n) + " components");
    return d;
}

tower::cover_datum parse_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot read " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        parse_fail(path + ": " + e.what());
    }
    return parse_datum(doc);
}

int budget_from_env() {
    const char* s = std::getenv("ASW_BUDGET");
    if (!s || !*s) return 0;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end || v < 0) parse_fail("ASW_BUDGET must be a non-negative integer");
    return static_cast<int>(v);
}

outcome run_conductor(int p, const std::vector<int>& nu) {
    outcome o;
    const auto th = conductor::theorem_conductor(p, nu);
    const auto sd = conductor::section_degree_oracle(p, nu);
    o.ok = th.M == sd.M;
    o.report = {{"p", p},
                {"nu", nu},
                {"M", th.M},
                {"conductor", th.conductor},
                {"argmax", th.argmax},
                {"unique", th.unique},
                {"section_degree_M", sd.M},
                {"maximizers", sd.maximizers},
                {"agree", o.ok}};
    std::ostringstream os;
    os << "p = " << p << ", nu = (" << join(nu) << ")\n"
       << "  max p^(n-1-i) nu_i  = " << th.M << " (index " << th.argmax << ")\n"
       << "  section degree      = " << sd.M << "\n"
       << "  conductor           = " << th.conductor << "\n"
       << "  [" << (o.ok ? "ok" : "FAIL") << "] closed formula = lattice oracle\n";
    o.human = os.str();
    return o;
}

outcome run_lattice(int p, const std::vector<int>& nu) {
    outcome o;
    const auto sd = conductor::section_degree_oracle(p, nu);
    const auto th = conductor::theorem_conductor(p, nu);
    o.ok = th.M == sd.M;
    json pts = json::array();
    std::ostringstream os;
    os << "feasible (i_0, ..., i_{n-1}) with sum p^h i_h = p^(n-1):\n";
    for (const auto& x : sd.feasible) {
        long long deg = 0;
        for (std::size_t h = 0; h < x.size(); ++h) deg += x[h] * nu[h];
        pts.push_back({{"point", x}, {"degree", deg}});
        os << "  (" << join(x) << ")  degree " << deg << "\n";
    }
    os << "max = " << sd.M << ", theorem = " << th.M << (o.ok ? "" : "  MISMATCH") << "\n";
    o.report = {{"p", p}, {"nu", nu}, {"feasible", pts}, {"M", sd.M}, {"maximizers", sd.maximizers},
                {"theorem_M", th.M}, {"agree", o.ok}};
    o.human = os.str();
    return o;
}

outcome run_lp(int p, const std::vector<long long>& w, const std::string& which, bool integral) {
    outcome o;
    conductor::lattice_problem prob;
    if (which == "lp1") prob = conductor::lp1(p, w);
    else if (which == "lp2") prob = conductor::lp2(p, w, integral);
    else parse_fail("unknown problem " + which);
    const auto r = conductor::lp_minimize(prob);
    o.report = {{"problem", which}, {"p", p}, {"w", w}, {"integral", integral}, {"names", prob.names},
                {"value", r.value}, {"optimizers", r.optimizers}, {"feasible_count", r.feasible_count}};
    std::ostringstream os;
    os << which << (integral ? " (integral)" : "") << " for p = " << p << ", w = (" << join(w) << ")\n"
       << "  variables: " << join(prob.names) << "\n"
       << "  minimum " << r.value << " over " << r.feasible_count << " feasible points\n";
    for (const auto& x : r.optimizers) os << "  at (" << join(x) << ")\n";
    o.human = os.str();
    return o;
}

outcome run_tower(const tower::cover_datum& d, int budget) {
    outcome o;
    const auto a = tower::analyze(d, budget);
    const auto th = conductor::theorem_conductor(d.p, d.nu);
    const auto claim = conductor::claim_check(a.tw, a.inv);
    const auto sort = conductor::sort_bound_check(a.tw, a.inv);
    bool ok = true;
    json checks = checks_json(a.inv.checks, ok);
    for (const auto& c : checks_json(a.step_checks, ok)) checks.push_back(c);
    for (const auto& c : checks_json(claim.checks, ok)) checks.push_back(c);
    for (const auto& c : checks_json(sort.checks, ok)) checks.push_back(c);
    const bool thm = a.cond.conductor == th.conductor;
    checks.push_back({{"name", "conductor = max p^(n-1-i) nu_i + 1"}, {"ok", thm},
                      {"detail", str(a.cond.conductor) + " vs " + str(th.conductor)}});
    o.ok = ok && thm;

    json stages = json::array();
    for (int i = 1; i <= d.n; ++i) {
        const auto& st = a.tw.stages[i];
        stages.push_back({{"level", i}, {"e_step", st.e_step}, {"a", st.a}, {"b", st.b},
                          {"v_z_tilde", st.z_tilde.valuation()}, {"h", st.h.to_string(8)},
                          {"m", st.m}, {"e", st.e}, {"mu", st.mu}});
    }
    std::vector<std::string> segs;
    json filt = json::array();
    for (const auto& s : a.filtration.segments) filt.push_back({{"lo", s.lo}, {"hi", s.hi}, {"order", s.order}});
    json knots = json::array();
    for (const auto& [u, v] : a.phi.knots) knots.push_back({to_string(u), to_string(v)});
    o.report = {{"p", d.p},
                {"n", d.n},
                {"nu", d.nu},
                {"budget", a.tw.budget},
                {"retries", a.tw.retries},
                {"m", a.inv.m},
                {"e", a.inv.e},
                {"mu", a.inv.mu},
                {"lower_breaks", a.filtration.lower_breaks},
                {"upper_breaks", upper_strings(a.cond)},
                {"filtration", filt},
                {"herbrand_knots", knots},
                {"different", a.filtration.different},
                {"conductor", a.cond.conductor},
                {"theorem_conductor", th.conductor},
                {"v_sigma", a.conj.v},
                {"stages", stages},
                {"checks", checks},
                {"ok", o.ok}};
    std::ostringstream os;
    os << "tower p = " << d.p << ", n = " << d.n << ", nu = (" << join(d.nu) << "), budget " << a.tw.budget
       << (a.tw.retries ? " after " + str(a.tw.retries) + " retries" : "") << "\n";
    os << "  level   m     e     mu    e_step\n";
    for (int i = 1; i <= d.n; ++i) {
        const auto& st = a.tw.stages[i];
        os << "  " << std::setw(5) << i << std::setw(6) << st.m << std::setw(6) << st.e << std::setw(6) << st.mu
           << std::setw(8) << st.e_step << "\n";
    }
    os << "  filtration: " << a.filtration.to_string() << "\n"
       << "  lower breaks {" << join(a.filtration.lower_breaks) << "}, upper breaks {" << join(upper_strings(a.cond))
       << "}\n"
       << "  different " << a.filtration.different << ", conductor " << a.cond.conductor << " (theorem "
       << th.conductor << ")\n";
    human_checks(os, checks);
    os << (o.ok ? "all checks pass\n" : "CHECK FAILURES\n");
    o.human = os.str();
    return o;
}

outcome run_local_symbol(const tower::cover_datum& d, int trials, std::uint64_t seed, const json* alpha) {
    outcome o;
    std::mt19937_64 rng(seed);
    long long M;
    bool monomial = true;
    for (const auto& u : d.u) monomial = monomial && (u.is_zero_in_window() || u.raw_coeffs().size() == 1);
    if (monomial) M = conductor::theorem_conductor(d.p, d.nu).M;
    else M = tower::analyze(d).cond.conductor - 1;
    o.report = {{"p", d.p}, {"n", d.n}, {"nu", d.nu}, {"M", M}, {"seed", seed}};
    std::ostringstream os;
    os << "local symbol, p = " << d.p << ", nu = (" << join(d.nu) << "), modulus M + 1 = " << M + 1 << "\n";
    if (alpha) {
        const auto al = parse_series(*d.field, *alpha);
        const auto s = localsym::residue_vector({d.u, al, 0});
        std::vector<std::string> w;
        for (const auto& x : s.w) w.push_back(x.to_string());
        o.report["alpha"] = al.to_string(12);
        o.report["symbol"] = w;
        os << "  {u, " << al.to_string(8) << "} = (" << join(w) << ")\n";
    }
    try {
        const auto rep = localsym::modulus_vanishing_test(d.u, M, trials, rng);
        std::vector<std::string> ws;
        for (const auto& x : rep.witness_symbol) ws.push_back(x.to_string());
        o.report["trials"] = rep.trials;
        o.report["zero_symbols"] = rep.zero_symbols;
        o.report["witness_found"] = rep.witness_found;
        o.report["witness_candidates"] = rep.witness_candidates;
        if (rep.witness_found) {
            o.report["witness"] = rep.witness.to_string(12);
            o.report["witness_symbol"] = ws;
        }
        os << "  [ok] " << rep.zero_symbols << "/" << rep.trials << " symbols vanish for 1 - alpha of order > M\n";
        if (rep.witness_found)
            os << "  witness at order M: alpha = " << rep.witness.to_string(8) << ", symbol (" << join(ws) << ")\n";
        else
            os << "  no witness at order M among " << rep.witness_candidates << " candidates\n";
    } catch (const error& e) {
        if (e.code() != error_code::vanishing_failure) throw;
        o.ok = false;
        o.report["vanishing_failure"] = e.what();
        os << "  [FAIL] " << e.what() << "\n";
    }
    o.report["ok"] = o.ok;
    o.human = os.str();
    return o;
}

outcome run_witt_table(int p, int n) {
    outcome o;
    const auto& tb = witt::table::get(p, n);
    const auto nm = tb.names();
    const auto single = witt::single_names(n, "X");
    json S = json::array(), c = json::array(), I = json::array();
    std::ostringstream os;
    os << "Witt polynomials, p = " << p << ", n = " << n << "\n";
    for (int j = 0; j < n; ++j) {
        S.push_back(tb.sum(j).to_string(nm));
        c.push_back(tb.carry(j).to_string(nm));
        I.push_back(tb.neg(j).to_string(single));
        os << "S_" << j << " = " << S.back().get<std::string>() << "\n"
           << "c_" << j << " = " << c.back().get<std::string>() << "\n"
           << "I_" << j << " = " << I.back().get<std::string>() << "\n";
    }
    o.report = {{"p", p}, {"n", n}, {"S", S}, {"c", c}, {"I", I}};
    o.human = os.str();
    return o;
}

outcome run_witt_eval(int p, int f, const std::string& op, const std::vector<long long>& a,
                      const std::vector<long long>& b) {
    const auto& ctx = coeff::field_context::get(p, f);
    const int n = static_cast<int>(a.size());
    if (n == 0) parse_fail("empty Witt vector");
    const auto& tb = witt::table::get(p, n);
    auto vec = [&](const std::vector<long long>& v) {
        std::vector<fq> r;
        for (long long x : v) r.push_back(parse_coeff(ctx, json(x)));
        return r;
    };
    const auto va = vec(a);
    std::vector<fq> r;
    if (op == "neg") r = witt::neg(tb, va);
    else if (op == "frobenius") r = witt::frobenius(va);
    else if (op == "verschiebung") r = witt::verschiebung(va);
    else if (op == "asw") r = witt::asw_map(tb, va);
    else {
        if (b.size() != a.size()) parse_fail("operands of different lengths");
        const auto vb = vec(b);
        if (op == "add") r = witt::add(tb, va, vb);
        else if (op == "sub") r = witt::sub(tb, va, vb);
        else if (op == "mul") r = witt::mul(tb, va, vb);
        else parse_fail("unknown Witt operation " + op);
    }
    outcome o;
    std::vector<std::string> rs;
    for (const auto& x : r) rs.push_back(x.to_string());
    o.report = {{"p", p}, {"f", f}, {"op", op}, {"a", a}, {"b", b}, {"result", rs}};
    o.human = op + " = (" + join(rs) + ")\n";
    return o;
}

outcome run_wbar(const std::string& what, int p, int n, long long m, const std::vector<long long>& a) {
    outcome o;
    std::ostringstream os;
    const auto& ctx = coeff::field_context::get(p, 1);
    o.report = {{"what", what}, {"p", p}, {"n", n}};
    if (what == "sections") {
        const long long d = m * coeff::ipow(p, n - 1);
        const auto dim = wbar::section_dim(p, n, m);
        const auto mons = wbar::monomials_of_weight(p, n, d);
        const auto names = wbar::names(n);
        json basis = json::array();
        os << "H^0(O(" << m << ")) on Wbar_" << n << ": degree " << d << ", dimension " << dim.get_str() << "\n";
        for (const auto& e : mons) {
            std::string s;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) s += (s.empty() ? "" : "*") + names[i] + (e[i] > 1 ? "^" + str(e[i]) : "");
            if (s.empty()) s = "1";
            basis.push_back(s);
            os << "  " << s << "\n";
        }
        bool ok = static_cast<long>(mons.size()) == dim;
        std::vector<wbar::check> cs{{"basis size = dimension", ok, ""}};
        if (n >= 2) cs.push_back(wbar::pushforward_recursion_check(p, n - 1));
        o.report["m"] = m;
        o.report["dimension"] = dim.get_str();
        o.report["basis"] = basis;
        o.report["checks"] = checks_json(cs, o.ok);
    } else if (what == "psi" || what == "act") {
        const auto r = wbar::psi_check(ctx, n - 1);
        o.report["psi"] = r.psi.to_string();
        o.report["matches_expanded_formula"] = r.matches_expanded_formula;
        o.report["checks"] = checks_json(r.checks(), o.ok);
        os << "Psi(Y_" << n - 1 << ") = " << r.psi.to_string() << "\n";
        if (!r.matches_expanded_formula)
            os << "  expanded formula with componentwise -Y gives " << wbar::psi_expanded_formula(ctx, n - 1).to_string()
               << "\n";
        if (what == "act") {
            std::vector<fq> av;
            for (long long x : a) av.push_back(fq::from_int(ctx, x));
            av.resize(n, fq::zero(ctx));
            json images = json::array();
            for (int k = 0; k < n; ++k) {
                wbar::graded_poly y{p, n, coeff::ipow(p, k), wbar::fq_poly::variable(wbar::yv(k), fq::one(ctx))};
                const auto img = wbar::group_action_on_sections(av, y);
                images.push_back(img.to_string());
                os << "  a.Y_" << k << " = " << img.to_string() << "\n";
            }
            const auto moved = wbar::group_action_on_sections(av, r.psi);
            o.report["a"] = a;
            o.report["images"] = images;
            o.report["psi_moved"] = moved.to_string();
            os << "  a.Psi = " << moved.to_string() << "\n";
        }
    } else if (what == "chow") {
        json pulls = json::array();
        bool ok = true;
        os << "A*(Wbar_" << n << ") = Z[x_1..x_" << n << "]/(x_1^2, x_i^2 - " << p << " x_i x_(i-1))\n";
        for (unsigned msk = 0; msk < (1u << n); ++msk) {
            wbar::chow_class b{p, n, {{msk, 1}}};
            const auto pb = wbar::psi_pullback(b);
            const bool good = pb == b.scale(static_cast<long>(coeff::ipow(p, __builtin_popcount(msk))));
            ok = ok && good;
            pulls.push_back({{"class", b.to_string()}, {"pullback", pb.to_string()}});
            os << "  Psi*(" << b.to_string() << ") = " << pb.to_string() << "\n";
        }
        json squares = json::array();
        for (int i = 1; i <= n; ++i) {
            const auto x = wbar::chow_class::x(p, n, i);
            const auto sq = wbar::chow_mul(x, x);
            squares.push_back(sq.to_string());
            os << "  x" << i << "^2 = " << sq.to_string() << "\n";
        }
        o.report["pullbacks"] = pulls;
        o.report["squares"] = squares;
        o.report["checks"] = checks_json(std::vector<wbar::check>{{"Psi* = p^c on basis monomials", ok, ""}}, o.ok);
    } else if (what == "ledger") {
        const auto led = wbar::make_divisor_ledger(p, n);
        json comps = json::array();
        os << "divisor ledger on Wbar_" << n << "\n  Z = " << led.Z.to_string() << "\n  Sigma = "
           << led.Sigma.to_string() << "\n";
        for (int i = 1; i <= n; ++i) {
            comps.push_back({{"i", i}, {"class", led.B_components[i - 1].to_string()},
                             {"inertia_order", led.inertia_order[i - 1]}});
            os << "  B_{" << n << "," << i << "} = " << led.B_components[i - 1].to_string() << ", inertia order "
               << led.inertia_order[i - 1] << "\n";
        }
        os << "  B = " << led.B.to_string() << "\n";
        o.report["Z"] = led.Z.to_string();
        o.report["Sigma"] = led.Sigma.to_string();
        o.report["B"] = led.B.to_string();
        o.report["components"] = comps;
        o.report["checks"] = checks_json(led.checks, o.ok);
    } else {
        parse_fail("unknown wbar view " + what);
    }
    if (o.report.contains("checks")) human_checks(os, o.report["checks"]);
    o.report["ok"] = o.ok;
    o.human = os.str();
    return o;
}

bool grid_case::ok() const {
    return error.empty() && theorem == oracle && theorem + 1 == brute && hasse_arf && invariants && standard_form &&
           claim && stable;
}

json grid_case::to_json() const {
    return {{"p", p},         {"nu", nu},          {"theorem_M", theorem},       {"oracle_M", oracle},
            {"conductor", brute}, {"different", different}, {"unique_max", unique_max}, {"hasse_arf", hasse_arf},
            {"invariants", invariants}, {"standard_form", standard_form}, {"claim", claim},
            {"rerun", rerun}, {"stable", stable}, {"seconds", seconds}, {"rerun_seconds", rerun_seconds}, {"error", error}, {"ok", ok()}};
}

std::vector<std::vector<int>> grid_nus(int p, int n, int nu_max, long long max_M) {
    std::vector<std::vector<int>> out;
    std::vector<int> nu(n, 1);
    for (;;) {
        bool prime = true;
        for (int v : nu) prime = prime && v % p != 0;
        if (prime && (max_M <= 0 || conductor::theorem_conductor(p, nu).M <= max_M)) out.push_back(nu);
        int i = n - 1;
        while (i >= 0 && nu[i] == nu_max) nu[i--] = 1;
        if (i < 0) break;
        ++nu[i];
    }
    return out;
}

grid_case evaluate_case(int p, const std::vector<int>& nu, int budget, bool rerun_double) {
    grid_case g;
    g.p = p;
    g.nu = nu;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto th = conductor::theorem_conductor(p, nu);
        g.theorem = th.M;
        g.unique_max = th.unique;
        g.oracle = conductor::section_degree_oracle(p, nu).M;
        const auto d = tower::monomial_datum(p, nu);
        const auto a = tower::analyze(d, budget);
        g.brute = a.cond.conductor;
        g.different = a.filtration.different;
        g.hasse_arf = true;
        for (const auto& u : a.cond.upper_breaks) g.hasse_arf = g.hasse_arf && u.get_den() == 1;
        g.invariants = a.inv.ok();
        g.standard_form = true;
        for (const auto& c : a.step_checks) g.standard_form = g.standard_form && c.ok;
        g.claim = conductor::claim_check(a.tw, a.inv).ok();
        g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (rerun_double) {
            g.rerun = true;
            const auto b = tower::analyze(d, 2 * a.tw.budget);
            g.stable = b.cond.conductor == a.cond.conductor && b.filtration.v == a.filtration.v &&
                       b.filtration.lower_breaks == a.filtration.lower_breaks &&
                       b.cond.upper_breaks == a.cond.upper_breaks && b.inv.m == a.inv.m && b.inv.e == a.inv.e &&
                       b.inv.mu == a.inv.mu && b.filtration.different == a.filtration.different;
        }
    } catch (const std::exception& e) {
        g.error = e.what();
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (g.rerun) g.rerun_seconds = total - g.seconds;
    else g.seconds = total;
    return g;
}

outcome run_grid(const std::vector<int>& ps, const std::vector<int>& ns, int nu_max, long long max_M, int budget,
                 bool rerun_double, int jobs) {
    std::vector<std::pair<int, std::vector<int>>> cases;
    for (int p : ps)
        for (int n : ns)
            for (auto& nu : grid_nus(p, n, nu_max, max_M)) cases.emplace_back(p, nu);
    std::vector<grid_case> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();)
            results[i] = evaluate_case(cases[i].first, cases[i].second, budget, rerun_double);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    outcome o;
    json rows = json::array();
    std::ostringstream os;
    os << std::left << std::setw(4) << "p" << std::setw(14) << "nu" << std::setw(8) << "M+1" << std::setw(8)
       << "brute" << std::setw(8) << "oracle" << std::setw(8) << "diff" << std::setw(8) << "secs"
       << "status\n";
    long long failures = 0;
    double worst = 0;
    for (const auto& g : results) {
        rows.push_back(g.to_json());
        if (!g.ok()) ++failures;
        worst = std::max(worst, g.seconds);
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << g.seconds;
        os << std::setw(4) << g.p << std::setw(14) << "(" + join(g.nu, ",") + ")" << std::setw(8) << g.theorem + 1
           << std::setw(8) << g.brute << std::setw(8) << g.oracle + 1 << std::setw(8) << g.different << std::setw(8)
           << secs.str() << (g.ok() ? "ok" : "FAIL " + g.error) << "\n";
    }
    o.ok = failures == 0;
    const std::string summary = o.ok ? "all " + str(results.size()) + " cases: formula = brute force"
                                     : str(failures) + " of " + str(results.size()) + " cases FAILED";
    os << summary << "\n";
    o.report = {{"cases", rows}, {"count", results.size()}, {"failures", failures}, {"max_seconds", worst},
                {"summary", summary}, {"ok", o.ok}};
    o.human = os.str();
    return o;
}

}  // namespace asw::cli

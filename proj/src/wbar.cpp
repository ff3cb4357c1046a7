#include "asw/wbar.hpp"

#include <sstream>

#include "asw/witt.hpp"

namespace asw::wbar {

namespace {

long long ipow(int p, int e) { return coeff::ipow(p, e); }

std::string str(long long x) { return std::to_string(x); }

fq_poly var(int i, const fq& one) { return fq_poly::variable(i, one); }

// Multiply each term by the power of T that brings it to weight w.
fq_poly homogenize(const fq_poly& f, const std::vector<long long>& wts, long long w) {
    std::vector<fq_poly::term> out;
    for (const auto& [e, c] : f.terms()) {
        const long long d = w - fq_poly::weight(e, wts);
        if (d < 0 || e[tv()] != 0)
            fail(error_code::homogeneity_failure, "term of weight above " + str(w) + " cannot be homogenized");
        auto e2 = e;
        e2[tv()] = static_cast<std::uint16_t>(d);
        out.emplace_back(e2, c);
    }
    return fq_poly::from_terms(std::move(out));
}

// single-input Witt polynomial (X_i = var 2i) rewritten in Y_i = var i + 1
fq_poly to_y_vars(const fq_poly& f, int k, const fq& one) {
    std::vector<fq_poly> images(2 * k, fq_poly());
    for (int i = 0; i < k; ++i) images[witt::xv(i)] = var(yv(i), one);
    return f.substitute(images, one);
}

fq_poly dehomogenize(const fq_poly& f, int k, const fq& one) {
    std::vector<fq_poly> images{fq_poly::constant(one)};
    for (int i = 0; i < k; ++i) images.push_back(var(yv(i), one));
    return f.substitute(images, one);
}

}  // namespace

std::vector<long long> weights(int p, int k) {
    std::vector<long long> w{1};
    for (int i = 0; i < k; ++i) w.push_back(ipow(p, i));
    return w;
}

std::vector<std::string> names(int k) {
    std::vector<std::string> n{"T"};
    for (int i = 0; i < k; ++i) n.push_back("Y" + str(i));
    return n;
}

bool graded_poly::homogeneous() const { return f.is_isobaric(weights(p, k), weight); }

std::string graded_poly::to_string() const { return f.to_string(names(k)); }

mpz_class section_dim(int p, int n, long long m) {
    const long long d = m * ipow(p, n - 1);
    std::vector<mpz_class> ways(d + 1, 0);
    ways[0] = 1;
    // parts T (1) and Y_i (p^i)
    std::vector<long long> parts{1};
    for (int i = 0; i < n; ++i) parts.push_back(ipow(p, i));
    for (long long part : parts)
        for (long long w = part; w <= d; ++w) ways[w] += ways[w - part];
    return ways[d];
}

std::vector<std::vector<long long>> monomials_of_weight(int p, int k, long long d) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> e(k + 1, 0);
    const auto wts = weights(p, k);
    auto rec = [&](auto&& self, int idx, long long left) -> void {
        if (idx == 0) {
            e[0] = left;
            out.push_back(e);
            return;
        }
        for (long long x = left / wts[idx]; x >= 0; --x) {
            e[idx] = x;
            self(self, idx - 1, left - x * wts[idx]);
        }
    };
    rec(rec, k, d);
    return out;
}

check pushforward_recursion_check(int p, int n) {
    const mpz_class lhs = section_dim(p, n + 1, 1);
    const mpz_class a = section_dim(p, n, 0), b = section_dim(p, n, p);
    return {"r_* O(1) = O + O(p) for p = " + str(p) + ", n = " + str(n), lhs == a + b,
            lhs.get_str() + " = " + a.get_str() + " + " + b.get_str()};
}

graded_poly group_action_on_sections(const std::vector<fq>& a, const graded_poly& f) {
    if (a.empty()) return f;
    const int k = static_cast<int>(a.size());
    if (k < f.k) fail(error_code::field_mismatch, "action vector shorter than the number of variables");
    const auto& ctx = a[0].ctx();
    const fq one = fq::one(ctx);
    const auto& tb = witt::table::get(ctx.p(), k);
    std::vector<fq_poly> sum_images;
    for (int i = 0; i < k; ++i) {
        sum_images.push_back(var(yv(i), one));
        sum_images.push_back(fq_poly::constant(a[i]) * var(tv(), one).pow(static_cast<unsigned>(ipow(ctx.p(), i)), one));
    }
    std::vector<fq_poly> images{var(tv(), one)};
    for (int j = 0; j < k; ++j) images.push_back(poly::reduce_mod_p(tb.sum(j), ctx).substitute(sum_images, one));
    graded_poly r = f;
    r.k = std::max(f.k, k);
    r.f = f.f.substitute(images, one);
    if (!r.homogeneous()) fail(error_code::homogeneity_failure, "group action broke homogeneity");
    return r;
}

graded_poly psi_on_sections(const coeff::field_context& ctx, int n) {
    const int p = ctx.p();
    const fq one = fq::one(ctx);
    const auto& tb = witt::table::get(p, n + 1);
    const fq_poly comp = to_y_vars(poly::reduce_mod_p(witt::asw_component(tb, n), ctx), n + 1, one);
    graded_poly g{p, n + 1, ipow(p, n + 1), homogenize(comp, weights(p, n + 1), ipow(p, n + 1))};
    if (!g.homogeneous()) fail(error_code::homogeneity_failure, "Psi image is not homogeneous");
    return g;
}

graded_poly psi_expanded_formula(const coeff::field_context& ctx, int n) {
    const int p = ctx.p();
    const fq one = fq::one(ctx);
    const auto& tb = witt::table::get(p, n + 1);
    const auto wts = weights(p, n + 1);
    const long long W = ipow(p, n + 1);
    fq_poly lead = var(yv(n), one).pow(p, one) -
                   var(yv(n), one) * var(tv(), one).pow(static_cast<unsigned>(ipow(p, n) * (p - 1)), one);
    fq_poly carry;
    if (n >= 1) {
        std::vector<fq_poly> images;
        for (int i = 0; i <= n; ++i) {
            images.push_back(var(yv(i), one).pow(p, one));
            images.push_back(fq_poly::constant(-one) * var(yv(i), one));
        }
        carry = homogenize(poly::reduce_mod_p(tb.carry(n), ctx).substitute(images, one), wts, W);
    }
    return {p, n + 1, W, lead + carry};
}

std::vector<check> psi_report::checks() const {
    const std::string at = " (p = " + str(psi.p) + ", n = " + str(psi.k - 1) + ")";
    return {{"Psi image homogeneous of weight p^(n+1)" + at, homogeneous, psi.to_string()},
            {"Psi image at T = 1 is component_n(F(Y) - Y)" + at, dehomogenizes_to_asw, ""},
            {"Psi image invariant under V^n(1)" + at, equivariant, ""}};
}

psi_report psi_check(const coeff::field_context& ctx, int n) {
    const fq one = fq::one(ctx);
    psi_report r;
    r.psi = psi_on_sections(ctx, n);
    r.homogeneous = r.psi.homogeneous();
    const auto& tb = witt::table::get(ctx.p(), n + 1);
    const fq_poly comp = to_y_vars(poly::reduce_mod_p(witt::asw_component(tb, n), ctx), n + 1, one);
    r.dehomogenizes_to_asw = (dehomogenize(r.psi.f, n + 1, one) - comp).is_zero();
    r.matches_expanded_formula = (psi_expanded_formula(ctx, n).f - r.psi.f).is_zero();
    std::vector<fq> vn1(n + 1, fq::zero(ctx));
    vn1[n] = one;
    r.equivariant = (group_action_on_sections(vn1, r.psi).f - r.psi.f).is_zero();
    return r;
}

chow_class chow_class::zero(int p, int n) { return chow_class{p, n, {}}; }

chow_class chow_class::one(int p, int n) {
    chow_class c{p, n, {}};
    c.coeffs[0] = 1;
    return c;
}

chow_class chow_class::x(int p, int n, int i) {
    chow_class c{p, n, {}};
    if (i >= 1) c.coeffs[1u << (i - 1)] = 1;
    return c;
}

chow_class chow_class::operator+(const chow_class& o) const {
    chow_class r = *this;
    for (const auto& [m, c] : o.coeffs) {
        r.coeffs[m] += c;
        if (r.coeffs[m] == 0) r.coeffs.erase(m);
    }
    return r;
}

chow_class chow_class::operator-(const chow_class& o) const { return *this + o.scale(-1); }

chow_class chow_class::scale(const mpz_class& s) const {
    chow_class r{p, n, {}};
    if (s == 0) return r;
    for (const auto& [m, c] : coeffs) r.coeffs[m] = c * s;
    return r;
}

bool chow_class::operator==(const chow_class& o) const { return n == o.n && p == o.p && coeffs == o.coeffs; }

std::string chow_class::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const mpz_class a = abs(c);
        std::string mono;
        for (int i = n; i >= 1; --i)
            if (m & (1u << (i - 1))) mono += (mono.empty() ? "" : "*") + std::string("x") + str(i);
        if (mono.empty()) os << a.get_str();
        else if (a == 1) os << mono;
        else os << a.get_str() << "*" << mono;
    }
    return os.str();
}

chow_class chow_mul(const chow_class& a, const chow_class& b) {
    if (a.n != b.n || a.p != b.p) fail(error_code::field_mismatch, "Chow classes of different W_n");
    const int n = a.n;
    chow_class r = chow_class::zero(a.p, n);
    for (const auto& [ma, ca] : a.coeffs)
        for (const auto& [mb, cb] : b.coeffs) {
            std::vector<int> e(n + 1, 0);
            for (int i = 1; i <= n; ++i) e[i] = ((ma >> (i - 1)) & 1) + ((mb >> (i - 1)) & 1);
            mpz_class c = ca * cb;
            bool vanishes = false;
            // x_i^2 = p x_i x_{i-1}, x_1^2 = 0, pushing excess exponent downwards
            for (int i = n; i >= 1 && !vanishes; --i)
                while (e[i] >= 2) {
                    if (i == 1) {
                        vanishes = true;
                        break;
                    }
                    --e[i];
                    ++e[i - 1];
                    c *= a.p;
                }
            if (vanishes) continue;
            unsigned m = 0;
            for (int i = 1; i <= n; ++i)
                if (e[i]) m |= 1u << (i - 1);
            r = r + chow_class{a.p, n, {{m, c}}};
        }
    return r;
}

chow_class psi_pullback(const chow_class& a) {
    chow_class r{a.p, a.n, {}};
    for (const auto& [m, c] : a.coeffs) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), a.p, __builtin_popcount(m));
        r.coeffs[m] = c * f;
    }
    return r;
}

bool divisor_ledger::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

divisor_ledger make_divisor_ledger(int p, int n) {
    divisor_ledger L;
    L.p = p;
    L.n = n;
    auto x = [&](int i) { return chow_class::x(p, n, i); };
    L.Z = x(n);
    L.Sigma = x(n) - x(n - 1).scale(p);
    L.B = chow_class::zero(p, n);
    for (int i = 1; i <= n; ++i) {
        L.B_components.push_back(x(i) - x(i - 1).scale(p));
        L.inertia_order.push_back(ipow(p, n - i));
        L.B = L.B + L.B_components.back().scale(static_cast<long>(ipow(p, n - i)));
    }
    L.checks.push_back({"B_n = sum p^(n-i) B_{n,i} = x_n", L.B == x(n), L.B.to_string()});
    L.checks.push_back({"B_n = Sigma_n + p B_{n-1}", L.B == L.Sigma + x(n - 1).scale(p), L.Sigma.to_string()});
    L.checks.push_back({"B_n ~ Z_n", L.B == L.Z, L.Z.to_string()});
    const chow_class pulled = psi_pullback(x(n));
    L.checks.push_back({"Psi* xi = p xi (beta = 0)", pulled == x(n).scale(p), pulled.to_string()});
    return L;
}

check inertia_crosscheck(const divisor_ledger& led, const tower::ramification_filtration& f) {
    bool ok = f.p == led.p && f.n == led.n;
    std::string detail;
    for (long long o : led.inertia_order) {
        bool found = false;
        for (const auto& s : f.segments) found = found || s.order == o;
        // the trivial group is G_i beyond the last break
        found = found || o == 1;
        ok = ok && found;
        detail += str(o) + (found ? " found; " : " missing; ");
    }
    return {"inertia orders p^(n-i) occur in the ramification filtration", ok, detail};
}

}  // namespace asw::wbar

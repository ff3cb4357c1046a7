#include "asw/witt.hpp"

#include <map>
#include <sstream>

namespace asw::witt {

namespace {

mpz_class mpz_pow(int p, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

// Phi_j in the variables var(0), ..., var(j).
template <class Var>
int_poly ghost_poly(int p, int j, Var var) {
    int_poly g;
    for (int k = 0; k <= j; ++k)
        g += poly::int_pow(poly::int_var(var(k)), static_cast<unsigned>(coeff::ipow(p, j - k))).scale(mpz_pow(p, k));
    return g;
}

// (target - sum_{k<j} p^k Q_k^{p^{j-k}}) / p^j
int_poly ghost_solve(int p, int j, const int_poly& target, const std::vector<int_poly>& prev) {
    int_poly num = target;
    for (int k = 0; k < j; ++k) {
        int_poly q = prev[k];
        for (int r = 0; r < j - k; ++r) q = poly::int_pow(q, static_cast<unsigned>(p));
        num -= q.scale(mpz_pow(p, k));
    }
    return poly::divide_exact(num, mpz_pow(p, j));
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::unique_ptr<table>> cache;

}  // namespace

const table& table::get(int p, int n) {
    if (!coeff::is_prime(p)) fail(error_code::hypothesis_violation, "p must be prime");
    if (n < 1 || 2 * n > poly::kMaxVars) fail(error_code::hypothesis_violation, "unsupported Witt length");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, n});
    if (it != cache.end()) return *it->second;
    const table* prefix = nullptr;
    for (int k = n - 1; k >= 1 && !prefix; --k) {
        auto jt = cache.find({p, k});
        if (jt != cache.end()) prefix = jt->second.get();
    }
    auto t = std::make_unique<table>(p, n, prefix);
    const table& ref = *t;
    cache.emplace(std::make_pair(p, n), std::move(t));
    return ref;
}

table::table(int p, int n, const table* prefix) : p_(p), n_(n) {
    int start = 0;
    if (prefix) {
        start = prefix->n_;
        ghost_ = prefix->ghost_;
        sum_ = prefix->sum_;
        carry_ = prefix->carry_;
        neg_ = prefix->neg_;
    }
    for (int j = start; j < n; ++j) {
        int_poly gx = ghost_poly(p, j, xv), gy = ghost_poly(p, j, yv);
        ghost_.push_back(gx);
        sum_.push_back(ghost_solve(p, j, gx + gy, sum_));
        carry_.push_back(sum_[j] - poly::int_var(xv(j)) - poly::int_var(yv(j)));
        neg_.push_back(ghost_solve(p, j, -gx, neg_));
    }
    product_.resize(n);
    certify();
}

void table::certify() const {
    const auto w = weights();
    for (int j = 0; j < n_; ++j) {
        const long long pj = coeff::ipow(p_, j);
        if (!ghost_[j].is_isobaric(w, pj) || !sum_[j].is_isobaric(w, pj) || !carry_[j].is_isobaric(w, pj) ||
            !neg_[j].is_isobaric(w, pj))
            fail(error_code::integrality_failure, "Witt table not isobaric at index " + std::to_string(j));
        if (carry_[j].involves(xv(j)) || carry_[j].involves(yv(j)))
            fail(error_code::integrality_failure, "c_j involves X_j or Y_j at index " + std::to_string(j));
    }
}

const int_poly& table::product(int j) const {
    std::lock_guard<std::mutex> lock(product_mutex_);
    if (j < 0 || j >= n_) fail(error_code::hypothesis_violation, "product index out of range");
    std::vector<int_poly> prev;
    for (int k = 0; k <= j; ++k) {
        if (!product_[k]) {
            int_poly target = ghost_[k] * ghost_poly(p_, k, yv);
            auto pk = std::make_unique<int_poly>(ghost_solve(p_, k, target, prev));
            const auto w = weights();
            if (!pk->is_isobaric(w, 2 * coeff::ipow(p_, k)))
                fail(error_code::integrality_failure, "product polynomial not isobaric");
            product_[k] = std::move(pk);
        }
        prev.push_back(*product_[k]);
    }
    return *product_[j];
}

std::vector<long long> table::weights() const {
    std::vector<long long> w;
    for (int i = 0; i < n_; ++i) {
        w.push_back(coeff::ipow(p_, i));
        w.push_back(coeff::ipow(p_, i));
    }
    return w;
}

std::vector<std::string> table::names() const {
    std::vector<std::string> v;
    for (int i = 0; i < n_; ++i) {
        v.push_back("X" + std::to_string(i));
        v.push_back("Y" + std::to_string(i));
    }
    return v;
}

std::vector<std::string> single_names(int n, const std::string& letter) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) {
        v.push_back(letter + std::to_string(i));
        v.push_back("?" + std::to_string(i));
    }
    return v;
}

int_poly asw_component(const table& tb, int n) {
    std::vector<int_poly> images;
    for (int i = 0; i <= n; ++i) {
        images.push_back(poly::int_pow(poly::int_var(xv(i)), static_cast<unsigned>(tb.p())));
        images.push_back(tb.neg(i));
    }
    return tb.sum(n).substitute(images, mpz_class(1));
}

identity_report nth_component_identity_check(const table& tb, int n) {
    const auto& fp = coeff::field_context::get(tb.p());
    identity_report r;
    r.p = tb.p();
    r.n = n;
    r.lhs = poly::reduce_mod_p(asw_component(tb, n), fp);
    std::vector<int_poly> images;
    for (int i = 0; i <= n; ++i) {
        images.push_back(poly::int_pow(poly::int_var(xv(i)), static_cast<unsigned>(tb.p())));
        images.push_back(-poly::int_var(xv(i)));
    }
    int_poly xn = poly::int_var(xv(n));
    int_poly rhs = poly::int_pow(xn, static_cast<unsigned>(tb.p())) - xn + tb.carry(n).substitute(images, mpz_class(1));
    r.rhs = poly::reduce_mod_p(rhs, fp);
    r.discrepancy = r.lhs - r.rhs;
    r.holds = r.discrepancy.is_zero();
    return r;
}

std::string identity_report::to_string() const {
    auto names = single_names(n + 1);
    std::ostringstream os;
    os << "p=" << p << " n=" << n << " identity " << (holds ? "holds" : "FAILS") << "\n"
       << "  component_n(F(Y)-Y)          = " << lhs.to_string(names) << "\n"
       << "  Y_n^p - Y_n + c_n(Y^p, -Y)   = " << rhs.to_string(names);
    if (!holds) os << "\n  difference                   = " << discrepancy.to_string(names);
    return os.str();
}

leading_term_report cn_leading_term_check(const table& tb, int n, int i) {
    if (i < 0 || i >= n || n >= tb.length()) fail(error_code::hypothesis_violation, "need 0 <= i < n < length");
    leading_term_report r;
    r.p = tb.p();
    r.n = n;
    r.i = i;
    const int d = static_cast<int>(coeff::ipow(tb.p(), n - i)) - 1;
    const int_poly& cn = tb.carry(n);
    r.coefficient = cn.coefficient_of(xv(i), d);
    int_poly yc = poly::int_var(yv(i)) + tb.carry(i);
    r.expected = -yc;
    int_poly rem = cn + poly::int_pow(poly::int_var(xv(i)), static_cast<unsigned>(d)) * yc;
    r.remainder_degree = rem.degree_in(xv(i));
    r.coefficient_ok = r.coefficient == r.expected;
    r.remainder_ok = r.remainder_degree < d && rem.is_isobaric(tb.weights(), coeff::ipow(tb.p(), n));
    return r;
}

vec<coeff::fq> from_integer(const table& tb, const coeff::field_context& ctx, long long g, int n) {
    const long long pn = coeff::ipow(tb.p(), n);
    g %= pn;
    if (g < 0) g += pn;
    vec<coeff::fq> zero(n, coeff::fq::zero(ctx)), one = zero, acc = zero;
    one[0] = coeff::fq::one(ctx);
    // double-and-add
    vec<coeff::fq> base = one;
    while (g) {
        if (g & 1) acc = add(tb, acc, base);
        g >>= 1;
        if (g) base = add(tb, base, base);
    }
    return acc;
}

}  // namespace asw::witt

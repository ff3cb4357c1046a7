#include "asw/coeff.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

#include "asw/errors.hpp"

namespace asw::coeff {

namespace {

// Conway polynomials, low degree first.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
    };
    return table;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// field_context

int field_context::max_degree(int p) {
    int best = 0;
    for (const auto& [key, poly] : conway_table())
        if (key.first == p) best = std::max(best, key.second);
    return best;
}

const field_context& field_context::get(int p, int f) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<field_context>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({p, f});
    if (it != cache.end()) return *it->second;
    if (!is_prime(p))
        fail(error_code::unsupported_field, "characteristic " + std::to_string(p) + " is not prime");
    auto poly = conway_table().find({p, f});
    if (poly == conway_table().end())
        fail(error_code::unsupported_field,
             "no defining polynomial shipped for F_" + std::to_string(p) + "^" + std::to_string(f));
    auto* ctx = new field_context(p, f, poly->second);
    cache.emplace(std::make_pair(p, f), std::unique_ptr<field_context>(ctx));
    return *ctx;
}

field_context::field_context(int p, int f, std::vector<int> modulus)
    : p_(p), f_(f), q_(static_cast<std::uint32_t>(ipow(p, f))), modulus_(std::move(modulus)) {
    // Multiplication by x on coordinate vectors, reducing by the monic modulus.
    auto times_x = [&](std::vector<int> c) {
        int top = c[f_ - 1];
        for (int i = f_ - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        for (int i = 0; i < f_; ++i) c[i] = static_cast<int>(mod(c[i] - std::int64_t(top) * modulus_[i], p_));
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        std::uint32_t v = 0;
        for (int i = f_ - 1; i >= 0; --i) v = v * p_ + c[i];
        return v;
    };
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<int> cur(f_, 0);
    cur[0] = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        std::uint32_t v = encode(cur);
        if (v == 0 || (e > 0 && v == 1))
            fail(error_code::unsupported_field, "defining polynomial is not primitive");
        exp_[e] = v;
        log_[v] = e;
        cur = times_x(cur);
    }
    if (encode(cur) != 1) fail(error_code::unsupported_field, "defining polynomial is not primitive");
    if (f_ > 1) {
        add_.assign(std::size_t(q_) * q_, 0);
        neg_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            auto ca = coords(a);
            std::vector<int> n(f_);
            for (int i = 0; i < f_; ++i) n[i] = (p_ - ca[i]) % p_;
            neg_[a] = static_cast<std::uint16_t>(from_coords(n));
            for (std::uint32_t b = 0; b < q_; ++b) {
                auto cb = coords(b);
                std::vector<int> s(f_);
                for (int i = 0; i < f_; ++i) s[i] = (ca[i] + cb[i]) % p_;
                add_[a * q_ + b] = static_cast<std::uint16_t>(from_coords(s));
            }
        }
    }
}

std::uint32_t field_context::inv(std::uint32_t a) const {
    if (a == 0) fail(error_code::division_by_zero, "inverse of zero in F_q");
    if (f_ == 1) return pow(a, q_ - 2);
    std::uint32_t e = log_[a] == 0 ? 0 : (q_ - 1) - log_[a];
    return exp_[e];
}

std::uint32_t field_context::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) fail(error_code::division_by_zero, "negative power of zero in F_q");
        return e == 0 ? 1 : 0;
    }
    std::int64_t order = q_ - 1;
    e = mod(e, order);
    if (f_ > 1) return exp_[static_cast<std::size_t>((std::int64_t(log_[a]) * e) % order)];
    std::uint64_t r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = (r * b) % q_;
        b = (b * b) % q_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t field_context::from_int(std::int64_t n) const {
    return static_cast<std::uint32_t>(mod(n, p_));
}

std::uint32_t field_context::from_coords(const std::vector<int>& c) const {
    std::uint32_t v = 0;
    for (int i = f_ - 1; i >= 0; --i) {
        int ci = i < static_cast<int>(c.size()) ? static_cast<int>(mod(c[i], p_)) : 0;
        v = v * p_ + ci;
    }
    return v;
}

std::vector<int> field_context::coords(std::uint32_t a) const {
    std::vector<int> c(f_);
    for (int i = 0; i < f_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

// ---------------------------------------------------------------------------
// fq

fq fq::inv() const { return fq(*ctx_, ctx_->inv(v_)); }

fq fq::pow(std::int64_t e) const { return fq(*ctx_, ctx_->pow(v_, e)); }

// x^(q/p) is the inverse of Frobenius since x^q = x.
fq fq::pth_root() const { return pow(ctx_->order() / ctx_->p()); }

std::string fq::to_string() const {
    if (ctx_ == nullptr) return "?";
    if (ctx_->degree() == 1) return std::to_string(v_);
    auto c = coords();
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<fq> elements(const field_context& ctx) {
    std::vector<fq> out;
    out.reserve(ctx.order());
    for (std::uint32_t v = 0; v < ctx.order(); ++v) out.emplace_back(ctx, v);
    return out;
}

bool try_root(const fq& a, std::int64_t r, fq& out) {
    for (const auto& x : elements(a.ctx())) {
        if (x.pow(r) == a) {
            out = x;
            return true;
        }
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const fq& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// galois_ring_context / gr

const galois_ring_context& galois_ring_context::get(int p, int f, int m) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<galois_ring_context>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(p, f, m);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto* ctx = new galois_ring_context(p, f, m);
    cache.emplace(key, std::unique_ptr<galois_ring_context>(ctx));
    return *ctx;
}

galois_ring_context::galois_ring_context(int p, int f, int m)
    : p_(p), f_(f), m_(m), pm_(ipow(p, m)), field_(&field_context::get(p, f)) {
    if (m < 1) fail(error_code::unsupported_field, "lift precision must be positive");
    if (f > kMaxDegree) fail(error_code::unsupported_field, "extension degree too large for Galois ring");
    if (pm_ >= (std::int64_t(1) << 31))
        fail(error_code::unsupported_field, "p^m too large for the Galois ring representation");
    for (int c : field_->modulus()) lifted_.push_back(c);
}

gr gr::from_int(const galois_ring_context& ctx, std::int64_t n) {
    gr r(ctx);
    r.c_[0] = mod(n, ctx.pm_);
    return r;
}

gr gr::from_coords(const galois_ring_context& ctx, const std::vector<std::int64_t>& c) {
    gr r(ctx);
    for (int i = 0; i < ctx.f_ && i < static_cast<int>(c.size()); ++i) r.c_[i] = mod(c[i], ctx.pm_);
    return r;
}

std::vector<std::int64_t> gr::coords() const {
    return std::vector<std::int64_t>(c_.begin(), c_.begin() + ctx_->f_);
}

bool gr::is_zero() const {
    for (int i = 0; i < ctx_->f_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool gr::is_unit() const {
    for (int i = 0; i < ctx_->f_; ++i)
        if (c_[i] % ctx_->p_ != 0) return true;
    return false;
}

int gr::p_adic_valuation() const {
    int v = ctx_->m_;
    for (int i = 0; i < ctx_->f_; ++i) {
        std::int64_t x = c_[i];
        if (x == 0) continue;
        int k = 0;
        while (x % ctx_->p_ == 0) {
            x /= ctx_->p_;
            ++k;
        }
        v = std::min(v, k);
    }
    return v;
}

gr gr::operator+(const gr& o) const {
    gr r(*ctx_);
    for (int i = 0; i < ctx_->f_; ++i) {
        r.c_[i] = c_[i] + o.c_[i];
        if (r.c_[i] >= ctx_->pm_) r.c_[i] -= ctx_->pm_;
    }
    return r;
}

gr gr::operator-(const gr& o) const {
    gr r(*ctx_);
    for (int i = 0; i < ctx_->f_; ++i) {
        r.c_[i] = c_[i] - o.c_[i];
        if (r.c_[i] < 0) r.c_[i] += ctx_->pm_;
    }
    return r;
}

gr gr::operator-() const { return gr(*ctx_) - *this; }

gr gr::operator*(const gr& o) const {
    const int f = ctx_->f_;
    const std::int64_t pm = ctx_->pm_;
    std::array<__int128, 2 * galois_ring_context::kMaxDegree> prod{};
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) prod[i + j] += static_cast<__int128>(c_[i]) * o.c_[j];
    for (int k = 2 * f - 2; k >= f; --k) {
        __int128 top = prod[k] % pm;
        prod[k] = 0;
        if (top == 0) continue;
        for (int i = 0; i < f; ++i) prod[k - f + i] -= top * ctx_->lifted_[i];
    }
    gr r(*ctx_);
    for (int i = 0; i < f; ++i) {
        __int128 v = prod[i] % pm;
        if (v < 0) v += pm;
        r.c_[i] = static_cast<std::int64_t>(v);
    }
    return r;
}

gr gr::scale(std::int64_t n) const { return *this * from_int(*ctx_, n); }

gr gr::inv() const {
    if (!is_unit()) fail(error_code::division_by_zero, "inverse of a non-unit in the Galois ring");
    gr x = lift(reduce(*this).inv(), ctx_->m_);
    const gr two = from_int(*ctx_, 2);
    // Newton: each step doubles the number of correct p-adic digits.
    for (int correct = 1; correct < ctx_->m_; correct *= 2) x = x * (two - *this * x);
    return x;
}

gr gr::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    gr r = one(*ctx_), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

gr gr::divide_p_power(int j) const {
    std::int64_t d = ipow(ctx_->p_, j);
    gr r(*ctx_);
    for (int i = 0; i < ctx_->f_; ++i) {
        if (c_[i] % d != 0)
            fail(error_code::ghost_inversion_failure,
                 "coordinate " + std::to_string(c_[i]) + " not divisible by p^" + std::to_string(j));
        r.c_[i] = c_[i] / d;
    }
    return r;
}

bool gr::operator==(const gr& o) const {
    for (int i = 0; i < ctx_->f_; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string gr::to_string() const {
    std::ostringstream os;
    if (ctx_->f_ == 1) {
        os << c_[0];
    } else {
        os << "(";
        for (int i = 0; i < ctx_->f_; ++i) os << (i ? "," : "") << c_[i];
        os << ")";
    }
    return os.str();
}

gr lift(const fq& a, int m) {
    const auto& ctx = galois_ring_context::get(a.ctx().p(), a.ctx().degree(), m);
    auto c = a.coords();
    return gr::from_coords(ctx, std::vector<std::int64_t>(c.begin(), c.end()));
}

fq reduce(const gr& a) {
    const auto& field = a.ctx().residue_field();
    std::vector<int> c(a.ctx().degree());
    for (int i = 0; i < a.ctx().degree(); ++i) c[i] = static_cast<int>(a.coord(i) % field.p());
    return fq::from_coords(field, c);
}

std::ostream& operator<<(std::ostream& os, const gr& a) { return os << a.to_string(); }

}  // namespace asw::coeff

#ifndef ASW_SERIES_HPP
#define ASW_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "asw/coeff.hpp"
#include "asw/errors.hpp"

namespace asw {

namespace detail {
// Exact integer convolution of residues mod p via an NTT, reduced mod p; first len terms.
std::vector<std::uint32_t> ntt_multiply_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                            int len, std::uint32_t p);
}  // namespace detail

/* Truncated Laurent series sum_{v <= k < N} a_k t^k + O(t^N) over a
 * coefficient ring R (coeff::fq or coeff::gr).
 *
 * Three states:
 *   - certified: coefficient at the valuation v is nonzero, N > v;
 *   - zero within the window: no nonzero coefficient is known, the series
 *     is O(t^N) and has no certified valuation;
 *   - exact: N = kExact, all coefficients past the stored range are zero.
 *
 * Finite-precision results never report coefficients at exponents >= the
 * propagated precision. Anything that needs a valuation throws
 * insufficient_precision instead of guessing.
 */
template <class R>
class laurent_series {
  public:
    using coeff_type = R;
    using context = typename R::context;
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    laurent_series() = default;
    explicit laurent_series(const context& ctx) : ctx_(&ctx), val_(kExact), prec_(kExact) {}

    static laurent_series zero(const context& ctx) { return laurent_series(ctx); }
    static laurent_series big_o(const context& ctx, int n) {
        laurent_series r(ctx);
        r.val_ = r.prec_ = std::min(n, kExact);
        return r;
    }
    static laurent_series monomial(const R& c, int e, int prec = kExact) {
        laurent_series r(c.ctx());
        r.prec_ = prec;
        r.val_ = e;
        if (e < prec) r.coeffs_.push_back(c);
        r.normalize();
        return r;
    }
    static laurent_series one(const context& ctx) { return monomial(R::one(ctx), 0); }
    static laurent_series variable(const context& ctx) { return monomial(R::one(ctx), 1); }
    static laurent_series constant(const R& c) { return monomial(c, 0); }

    // Dense coefficients for exponents v, v+1, ...; prec defaults to exact.
    static laurent_series from_coeffs(const context& ctx, int v, std::vector<R> coeffs, int prec = kExact) {
        laurent_series r(ctx);
        r.val_ = v;
        r.prec_ = prec;
        r.coeffs_ = std::move(coeffs);
        if (prec < kExact) r.coeffs_.resize(std::max(0, prec - v), R::zero(ctx));
        r.normalize();
        return r;
    }
    static laurent_series from_terms(const context& ctx, const std::vector<std::pair<int, R>>& terms,
                                     int prec = kExact) {
        if (terms.empty()) return prec >= kExact ? zero(ctx) : big_o(ctx, prec);
        int lo = terms.front().first, hi = terms.front().first;
        for (const auto& [e, c] : terms) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        if (prec < kExact) hi = std::max(hi, prec - 1);
        std::vector<R> coeffs(hi - lo + 1, R::zero(ctx));
        for (const auto& [e, c] : terms)
            if (e < prec) coeffs[e - lo] += c;
        return from_coeffs(ctx, lo, std::move(coeffs), prec);
    }

    const context& ctx() const { return *ctx_; }
    const context* ctx_ptr() const { return ctx_; }
    bool is_exact() const { return prec_ >= kExact; }
    bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }
    bool is_zero_in_window() const { return coeffs_.empty(); }
    bool has_certified_valuation() const { return !coeffs_.empty(); }
    int precision() const { return prec_; }
    // Lower bound on the valuation; equals the valuation when certified.
    int valuation_bound() const { return coeffs_.empty() ? prec_ : val_; }
    int valuation() const {
        if (coeffs_.empty()) {
            if (is_exact()) return kExact;
            throw insufficient_precision("valuation not certified: series is O(t^" + std::to_string(prec_) + ")");
        }
        return val_;
    }
    int relative_precision() const { return prec_ >= kExact ? kExact : prec_ - valuation(); }
    // One past the highest stored exponent.
    int stored_end() const { return coeffs_.empty() ? valuation_bound() : val_ + static_cast<int>(coeffs_.size()); }

    R coeff(int e) const {
        if (e >= prec_)
            throw insufficient_precision("coefficient of t^" + std::to_string(e) + " outside window (precision " +
                                         std::to_string(prec_) + ")");
        if (coeffs_.empty() || e < val_ || e >= stored_end()) return R::zero(*ctx_);
        return coeffs_[e - val_];
    }
    R leading_coefficient() const {
        valuation();
        return coeffs_.front();
    }
    const std::vector<R>& raw_coeffs() const { return coeffs_; }

    laurent_series truncated(int n) const {
        if (n >= prec_) return *this;
        laurent_series r(*ctx_);
        r.prec_ = n;
        r.val_ = val_;
        if (!coeffs_.empty() && n > val_) {
            r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + std::min<int>(coeffs_.size(), n - val_));
            r.coeffs_.resize(n - val_, R::zero(*ctx_));
        }
        r.normalize();
        return r;
    }

    // Multiplication by t^k.
    laurent_series shifted(int k) const {
        laurent_series r = *this;
        if (!coeffs_.empty() || !is_exact()) r.val_ += k;
        if (!is_exact()) r.prec_ += k;
        return r;
    }

    laurent_series operator-() const {
        laurent_series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    laurent_series operator+(const laurent_series& o) const { return add(o, false); }
    laurent_series operator-(const laurent_series& o) const { return add(o, true); }
    laurent_series operator*(const laurent_series& o) const { return mul(*this, o); }
    laurent_series& operator+=(const laurent_series& o) { return *this = *this + o; }
    laurent_series& operator-=(const laurent_series& o) { return *this = *this - o; }
    laurent_series& operator*=(const laurent_series& o) { return *this = *this * o; }

    laurent_series scale(const R& c) const {
        laurent_series r = *this;
        for (auto& x : r.coeffs_) x *= c;
        r.normalize();
        return r;
    }
    laurent_series scale(std::int64_t n) const { return scale(R::from_int(*ctx_, n)); }

    /* Product with precision min(N_a + v_b, N_b + v_a), optionally capped at
     * absolute precision `cap`.
     */
    static laurent_series mul(const laurent_series& a, const laurent_series& b, int cap = kExact) {
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(*a.ctx_);
        const int va = a.valuation_bound(), vb = b.valuation_bound();
        int prec = std::min({sat_add(a.prec_, vb), sat_add(b.prec_, va), cap});
        if (a.coeffs_.empty() || b.coeffs_.empty()) return big_o(*a.ctx_, prec);
        const int v = va + vb;
        int len;
        if (prec >= kExact)
            len = static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 1;
        else
            len = std::max(0, prec - v);
        laurent_series r(*a.ctx_);
        r.val_ = v;
        r.prec_ = prec;
        r.coeffs_ = convolve(a.coeffs_, b.coeffs_, len, *a.ctx_);
        r.normalize();
        return r;
    }

    /* Inverse of a series with a unit leading coefficient. An exact series
     * with more than one term has an infinite inverse, so `rel_cap` bounds its
     * relative precision; otherwise the relative precision is preserved.
     */
    laurent_series inverse(int rel_cap = kExact) const {
        if (is_exact_zero()) fail(error_code::division_by_zero, "inverse of exact zero series");
        const int v = valuation();
        const R lead = coeffs_.front();
        if (!lead.is_unit()) fail(error_code::division_by_zero, "leading coefficient is not a unit");
        int rel = relative_precision();
        if (is_exact()) {
            if (coeffs_.size() == 1) return monomial(lead.inv(), -v);
            if (rel_cap >= kExact)
                throw insufficient_precision("inverse of an exact multi-term series needs a precision cap");
            rel = rel_cap;
        } else {
            rel = std::min(rel, rel_cap);
        }
        if constexpr (std::is_same_v<R, coeff::fq>) {
            // Newton iteration g <- g (2 - x g) once products go through the NTT
            if (ctx_->degree() == 1 && rel > 256) {
                const laurent_series x = shifted(-v).as_exact();
                laurent_series g = x.inverse(64).as_exact();
                const laurent_series two = constant(R::from_int(*ctx_, 2));
                for (int cur = 64; cur < rel;) {
                    cur = std::min(2 * cur, rel);
                    g = mul(g, two - mul(x, g, cur), cur).as_exact();
                }
                return g.truncated(rel).shifted(-v);
            }
        }
        const R li = lead.inv();
        std::vector<R> out(rel, R::zero(*ctx_));
        if (rel > 0) out[0] = li;
        // b_k = -lead^{-1} sum_{j=1}^{k} a_j b_{k-j}
        for (int k = 1; k < rel; ++k) {
            R s = R::zero(*ctx_);
            const int jmax = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
            for (int j = 1; j <= jmax; ++j) s += coeffs_[j] * out[k - j];
            out[k] = -(s * li);
        }
        return from_coeffs(*ctx_, -v, std::move(out), -v + rel);
    }

    laurent_series divided_by(const laurent_series& d, int rel_cap = kExact) const {
        if (is_exact_zero()) return *this;
        laurent_series inv = d.inverse(rel_cap);
        if (!is_exact() || !d.is_exact() || d.raw_coeffs().size() == 1) return mul(*this, inv);
        // exact / exact: give the quotient rel_cap relative precision.
        return mul(*this, inv, sat_add(valuation_bound() - d.valuation(), rel_cap));
    }

    laurent_series pow(std::int64_t e, int rel_cap = kExact) const {
        if (e < 0) return inverse(rel_cap).pow(-e, rel_cap);
        if (e == 0) return one(*ctx_);
        if (is_exact_zero()) return *this;
        if (coeffs_.empty()) return big_o(*ctx_, static_cast<int>(std::min<std::int64_t>(e * prec_, kExact)));
        const int rel = std::min(rel_cap, relative_precision());
        auto clip = [&](const laurent_series& x) {
            return rel >= kExact ? x : x.truncated(sat_add(x.valuation_bound(), rel));
        };
        laurent_series result = one(*ctx_);
        laurent_series base = clip(*this);
        bool first = true;
        if constexpr (std::is_same_v<R, coeff::fq>) {
            // x^(sum d_k p^k) = prod (x^d_k)^(p^k), and p-th powers are Frobenius twists.
            const int p = ctx_->p();
            while (e > 0) {
                const int d = static_cast<int>(e % p);
                e /= p;
                if (d > 0) {
                    laurent_series term = base.small_pow(d, rel);
                    result = first ? term : capped_mul(result, term, rel);
                    first = false;
                }
                if (e > 0) base = clip(base.frobenius());
            }
        } else {
            while (e > 0) {
                if (e & 1) {
                    result = first ? base : capped_mul(result, base, rel);
                    first = false;
                }
                e >>= 1;
                if (e > 0) base = capped_mul(base, base, rel);
            }
        }
        return clip(result);
    }

    // The stored coefficients as an exact series (drops the O-term).
    laurent_series as_exact() const {
        laurent_series r = *this;
        r.prec_ = kExact;
        if (r.coeffs_.empty()) r.val_ = kExact;
        r.normalize();
        return r;
    }

    // Coefficient-wise p-th power with exponents multiplied by p; equals x^p in characteristic p.
    laurent_series frobenius() const {
        static_assert(std::is_same_v<R, coeff::fq>, "frobenius needs characteristic-p coefficients");
        const int p = ctx_->p();
        laurent_series r(*ctx_);
        r.prec_ = is_exact() ? kExact : prec_ * p;
        if (coeffs_.empty()) {
            r.val_ = r.prec_;
            if (is_exact()) r.val_ = kExact;
            return r;
        }
        r.val_ = val_ * p;
        const int end = is_exact() ? (static_cast<int>(coeffs_.size()) - 1) * p + 1 : r.prec_ - r.val_;
        r.coeffs_.assign(end, R::zero(*ctx_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const int k = static_cast<int>(i) * p;
            if (k < end) r.coeffs_[k] = coeffs_[i].frobenius();
        }
        r.normalize();
        return r;
    }

    bool equals_in_window(const laurent_series& o) const { return (*this - o).is_zero_in_window(); }

    std::string to_string(int max_terms = 12) const {
        std::ostringstream os;
        int shown = 0;
        for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (shown++) os << " + ";
            os << coeffs_[i].to_string() << "*t^" << (val_ + static_cast<int>(i));
        }
        if (shown == 0 && is_exact()) os << "0";
        if (!is_exact()) os << (shown ? " + " : "") << "O(t^" << prec_ << ")";
        else if (shown == max_terms) os << " + ...";
        return os.str();
    }

  private:
    static int sat_add(int a, int b) {
        if (a >= kExact || b >= kExact) return kExact;
        return std::min(a + b, kExact);
    }

    static laurent_series capped_mul(const laurent_series& a, const laurent_series& b, int rel_cap) {
        if (rel_cap >= kExact) return mul(a, b);
        return mul(a, b, sat_add(a.valuation_bound() + b.valuation_bound(), rel_cap));
    }

    laurent_series small_pow(int d, int rel_cap) const {
        laurent_series r = *this;
        for (int i = 1; i < d; ++i) r = capped_mul(r, *this, rel_cap);
        return r;
    }

    laurent_series add(const laurent_series& o, bool subtract) const {
        if (o.is_exact_zero()) return *this;
        if (is_exact_zero()) return subtract ? -o : o;
        const int prec = std::min(prec_, o.prec_);
        const int lo = std::min(valuation_bound(), o.valuation_bound());
        int hi = prec >= kExact ? std::max(stored_end(), o.stored_end()) : prec;
        laurent_series r(*ctx_);
        r.prec_ = prec;
        r.val_ = lo;
        if (hi <= lo) {
            r.val_ = prec;
            return r;
        }
        r.coeffs_.assign(hi - lo, R::zero(*ctx_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            int k = val_ + static_cast<int>(i) - lo;
            if (k < hi - lo) r.coeffs_[k] = coeffs_[i];
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            int k = o.val_ + static_cast<int>(i) - lo;
            if (k >= hi - lo) continue;
            if (subtract) r.coeffs_[k] -= o.coeffs_[i];
            else r.coeffs_[k] += o.coeffs_[i];
        }
        r.normalize();
        return r;
    }

    static std::vector<R> convolve(const std::vector<R>& a, const std::vector<R>& b, int len, const context& ctx) {
        std::vector<R> out;
        if (len <= 0) return out;
        const int la = std::min<int>(a.size(), len), lb = std::min<int>(b.size(), len);
        if constexpr (std::is_same_v<R, coeff::fq>) {
            if (ctx.degree() == 1) {
                const std::uint64_t p = ctx.p();
                std::vector<std::uint32_t> ra(la), rb(lb);
                for (int i = 0; i < la; ++i) ra[i] = a[i].raw();
                for (int j = 0; j < lb; ++j) rb[j] = b[j].raw();
                // exact when every coefficient of the integer product stays below the NTT modulus
                if (std::min(la, lb) >= 64 && (p - 1) * (p - 1) * static_cast<std::uint64_t>(std::min(la, lb)) < 998244353u) {
                    auto prod = detail::ntt_multiply_mod(ra, rb, len, static_cast<std::uint32_t>(p));
                    out.reserve(len);
                    for (int k = 0; k < len; ++k) out.emplace_back(ctx, prod[k]);
                    return out;
                }
                std::vector<std::uint64_t> acc(len, 0);
                for (int i = 0; i < la; ++i) {
                    const std::uint64_t ai = ra[i];
                    if (ai == 0) continue;
                    const int jmax = std::min(lb, len - i);
                    std::uint64_t* dst = acc.data() + i;
                    const std::uint32_t* src = rb.data();
                    for (int j = 0; j < jmax; ++j) dst[j] += ai * src[j];
                    // keep the accumulators far from overflow
                    if ((i & 0xffff) == 0xffff)
                        for (auto& x : acc) x %= p;
                }
                out.reserve(len);
                for (int k = 0; k < len; ++k) out.emplace_back(ctx, static_cast<std::uint32_t>(acc[k] % p));
                return out;
            }
        }
        out.assign(len, R::zero(ctx));
        for (int i = 0; i < la; ++i) {
            if (a[i].is_zero()) continue;
            const int jmax = std::min(lb, len - i);
            for (int j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    void normalize() {
        std::size_t first = 0;
        while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
        if (first == coeffs_.size()) {
            coeffs_.clear();
            val_ = prec_;
            return;
        }
        if (first > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + first);
            val_ += static_cast<int>(first);
        }
        if (is_exact()) {
            while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        } else {
            coeffs_.resize(prec_ - val_, R::zero(*ctx_));
        }
    }

    const context* ctx_ = nullptr;
    int val_ = kExact;
    int prec_ = kExact;
    std::vector<R> coeffs_;
};

using fq_series = laurent_series<coeff::fq>;
using gr_series = laurent_series<coeff::gr>;

namespace detail {
inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }
}  // namespace detail

/* f(g) for g of certified valuation d >= 1 (d = 0 is allowed when f is an
 * exact power series, i.e. a polynomial). `cap` bounds the absolute precision
 * of the result.
 */
template <class R>
laurent_series<R> compose(const laurent_series<R>& f, const laurent_series<R>& g,
                          int cap = laurent_series<R>::kExact) {
    using S = laurent_series<R>;
    const auto& ctx = f.ctx();
    if (f.is_exact_zero()) return S::zero(ctx);
    const int d = g.valuation();
    if (d < 0 || (d == 0 && !(f.is_exact() && f.valuation_bound() >= 0)))
        fail(error_code::invalid_composition, "composition needs v(g) >= 1 (got " + std::to_string(d) + ")");
    const int vf = f.valuation_bound();
    const int tail = f.is_exact() ? S::kExact : static_cast<int>(std::min<long long>(
                                                     (long long)d * f.precision(), S::kExact));
    cap = std::min(cap, tail);
    if (f.is_zero_in_window()) return S::big_o(ctx, cap);

    const int offset = d * vf;  // valuation of g^vf
    const int inner_cap = cap >= S::kExact ? S::kExact : cap - offset;
    const int rel_inner = inner_cap >= S::kExact ? S::kExact : std::max(inner_cap, 0);

    const auto& coeffs = f.raw_coeffs();
    int terms = static_cast<int>(coeffs.size());
    // terms with d*k >= inner_cap cannot contribute
    if (inner_cap < S::kExact && d > 0) terms = std::min(terms, std::max(1, detail::ceil_div(inner_cap, d)));

    // Paterson-Stockmeyer: baby steps g^0..g^(m-1), giant step G = g^m.
    int m = 1;
    while (m * m < terms) ++m;
    const S gt = g.truncated(inner_cap);
    std::vector<S> baby{S::one(ctx)};
    for (int i = 1; i < m; ++i) baby.push_back(S::mul(baby.back(), gt, inner_cap));
    const S giant = m == 1 ? gt : S::mul(baby.back(), gt, inner_cap);
    const int blocks = (terms + m - 1) / m;
    S inner = S::zero(ctx);
    for (int j = blocks - 1; j >= 0; --j) {
        S block = S::zero(ctx);
        for (int i = 0; i < m && j * m + i < terms; ++i) {
            const R& c = coeffs[j * m + i];
            if (!c.is_zero()) block += baby[i].scale(c);
        }
        inner = j == blocks - 1 ? block : S::mul(inner, giant, inner_cap) + block;
    }
    inner = inner.truncated(inner_cap);
    S lead;
    if (vf == 0) {
        lead = S::one(ctx);
    } else if (vf > 0) {
        lead = g.pow(vf, rel_inner);
    } else {
        lead = g.inverse(rel_inner).pow(-vf, rel_inner);
    }
    return S::mul(lead, inner, cap);
}

template <class R>
laurent_series<R> derivative(const laurent_series<R>& f) {
    using S = laurent_series<R>;
    const auto& ctx = f.ctx();
    if (f.is_exact_zero()) return f;
    const int prec = f.is_exact() ? S::kExact : f.precision() - 1;
    if (f.is_zero_in_window()) return S::big_o(ctx, prec);
    const int v = f.valuation();
    std::vector<std::pair<int, R>> terms;
    const auto& c = f.raw_coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int e = v + static_cast<int>(i);
        if (!c[i].is_zero() && e != 0) terms.emplace_back(e - 1, c[i].scale(e));
    }
    return S::from_terms(ctx, terms, prec);
}

template <class R>
R residue(const laurent_series<R>& f) {
    return f.coeff(-1);
}

/* r-th root with gcd(r, p) = 1, r | v(f), computed by Newton iteration from a
 * root of the leading coefficient.
 */
inline fq_series nth_root(const fq_series& f, int r) {
    const auto& ctx = f.ctx();
    if (r <= 0 || std::gcd(r, ctx.p()) != 1)
        fail(error_code::no_root, "nth_root requires gcd(r, p) = 1");
    const int v = f.valuation();
    if (detail::floor_div(v, r) * r != v) fail(error_code::no_root, "r does not divide the valuation");
    coeff::fq c0;
    if (!coeff::try_root(f.leading_coefficient(), r, c0))
        fail(error_code::no_root, "leading coefficient has no r-th root in F_q");
    int rel = f.is_exact() ? fq_series::kExact : f.relative_precision();
    if (f.is_exact() && f.raw_coeffs().size() == 1) return fq_series::monomial(c0, v / r);
    if (rel >= fq_series::kExact)
        throw insufficient_precision("nth_root of an exact multi-term series needs finite precision");
    // unit part u = f / (lead t^v), solve x^r = u with x(0) = 1
    const fq_series u = f.shifted(-v).scale(f.leading_coefficient().inv());
    fq_series x = fq_series::one(ctx);
    const coeff::fq rinv = coeff::fq::from_int(ctx, r).inv();
    for (int cur = 1; cur < rel;) {
        cur = std::min(2 * cur, rel);
        fq_series xt = x.as_exact();
        fq_series num = fq_series::mul(xt.pow(r, cur), fq_series::one(ctx), cur) - u.truncated(cur);
        fq_series den = xt.pow(r - 1, cur);
        x = (xt - fq_series::mul(num, den.inverse(cur), cur).scale(rinv)).truncated(cur);
    }
    return x.truncated(rel).scale(c0).shifted(v / r);
}

template <class R>
struct pth_power_split {
    laurent_series<R> root;  // g with f = g^p + h
    laurent_series<R> rest;  // h, every exponent prime to p
};

// f = g^p + h: g collects p-th roots of the terms whose exponent is divisible by p.
inline pth_power_split<coeff::fq> pth_power_decompose(const fq_series& f) {
    const auto& ctx = f.ctx();
    const int p = ctx.p();
    const int prec = f.precision();
    std::vector<std::pair<int, coeff::fq>> g_terms, h_terms;
    if (f.has_certified_valuation()) {
        const auto& c = f.raw_coeffs();
        const int v = f.valuation();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            const int e = v + static_cast<int>(i);
            if (detail::floor_div(e, p) * p == e) g_terms.emplace_back(e / p, c[i].pth_root());
            else h_terms.emplace_back(e, c[i]);
        }
    }
    const int gprec = f.is_exact() ? fq_series::kExact : detail::ceil_div(prec, p);
    return {fq_series::from_terms(ctx, g_terms, gprec), fq_series::from_terms(ctx, h_terms, prec)};
}

}  // namespace asw

#endif  // ASW_SERIES_HPP

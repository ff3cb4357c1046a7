#ifndef ASW_POLY_HPP
#define ASW_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asw/coeff.hpp"
#include "asw/errors.hpp"
#include "asw/series.hpp"

namespace asw::poly {

constexpr int kMaxVars = 16;
using exponents = std::array<std::uint16_t, kMaxVars>;

struct exponents_hash {
    std::size_t operator()(const exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

inline bool coeff_is_zero(const mpz_class& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const coeff::fq& c) { return c.is_zero(); }
inline std::string coeff_to_string(const mpz_class& c) { return c.get_str(); }
inline std::string coeff_to_string(const coeff::fq& c) { return c.to_string(); }

/* Sparse multivariate polynomial with terms kept sorted by exponent vector
 * (lexicographic, variable 0 most significant) and no zero coefficients, so
 * equality is term-wise comparison.
 */
template <class C>
class sparse_poly {
  public:
    using term = std::pair<exponents, C>;

    sparse_poly() = default;

    static sparse_poly constant(const C& c) {
        sparse_poly r;
        if (!coeff_is_zero(c)) r.terms_.emplace_back(exponents{}, c);
        return r;
    }
    static sparse_poly monomial(const exponents& e, const C& c) {
        sparse_poly r;
        if (!coeff_is_zero(c)) r.terms_.emplace_back(e, c);
        return r;
    }
    static sparse_poly variable(int i, const C& one) {
        exponents e{};
        e[i] = 1;
        return monomial(e, one);
    }
    static sparse_poly from_terms(std::vector<term> t) {
        sparse_poly r;
        r.terms_ = std::move(t);
        r.canonicalize();
        return r;
    }

    const std::vector<term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const sparse_poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const sparse_poly& o) const { return !(*this == o); }

    sparse_poly operator-() const {
        sparse_poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    sparse_poly operator+(const sparse_poly& o) const { return merge(o, false); }
    sparse_poly operator-(const sparse_poly& o) const { return merge(o, true); }
    sparse_poly& operator+=(const sparse_poly& o) { return *this = *this + o; }
    sparse_poly& operator-=(const sparse_poly& o) { return *this = *this - o; }

    sparse_poly operator*(const sparse_poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::unordered_map<exponents, C, exponents_hash> acc;
        acc.reserve(terms_.size() * o.terms_.size() / 2 + 1);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                exponents e;
                for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
                auto it = acc.find(e);
                if (it == acc.end()) acc.emplace(e, C(ca * cb));
                else it->second += ca * cb;
            }
        }
        sparse_poly r;
        r.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!coeff_is_zero(kv.second)) r.terms_.emplace_back(kv.first, std::move(kv.second));
        std::sort(r.terms_.begin(), r.terms_.end(), [](const term& a, const term& b) { return a.first < b.first; });
        return r;
    }
    sparse_poly& operator*=(const sparse_poly& o) { return *this = *this * o; }

    sparse_poly scale(const C& c) const {
        sparse_poly r;
        for (const auto& [e, x] : terms_) {
            C y = x * c;
            if (!coeff_is_zero(y)) r.terms_.emplace_back(e, std::move(y));
        }
        return r;
    }

    sparse_poly pow(unsigned k, const C& one) const {
        sparse_poly result = constant(one), base = *this;
        while (k) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    // Substitute images[i] for variable i (variables without an image must not occur).
    sparse_poly substitute(const std::vector<sparse_poly>& images, const C& one) const {
        std::map<std::pair<int, int>, sparse_poly> cache;
        auto power = [&](int v, int e) -> const sparse_poly& {
            auto key = std::make_pair(v, e);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, images.at(v).pow(e, one)).first;
            return it->second;
        };
        sparse_poly r;
        for (const auto& [e, c] : terms_) {
            sparse_poly m = constant(c);
            for (int v = 0; v < kMaxVars; ++v)
                if (e[v]) m = m * power(v, e[v]);
            r += m;
        }
        return r;
    }

    int degree_in(int v) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max<int>(d, t.first[v]);
        return d;
    }
    // Coefficient of var^k, as a polynomial free of var.
    sparse_poly coefficient_of(int v, int k) const {
        std::vector<term> out;
        for (const auto& [e, c] : terms_) {
            if (e[v] != k) continue;
            exponents f = e;
            f[v] = 0;
            out.emplace_back(f, c);
        }
        return from_terms(std::move(out));
    }
    bool involves(int v) const { return degree_in(v) > 0; }

    // Every monomial has sum_i weights[i]*e_i == w.
    bool is_isobaric(const std::vector<long long>& weights, long long w) const {
        for (const auto& t : terms_)
            if (weight(t.first, weights) != w) return false;
        return true;
    }
    static long long weight(const exponents& e, const std::vector<long long>& weights) {
        long long s = 0;
        for (std::size_t i = 0; i < weights.size() && i < kMaxVars; ++i) s += weights[i] * e[i];
        return s;
    }

    template <class F>
    auto map_coeffs(F f) const -> sparse_poly<decltype(f(std::declval<C>()))> {
        using D = decltype(f(std::declval<C>()));
        std::vector<typename sparse_poly<D>::term> out;
        for (const auto& [e, c] : terms_) out.emplace_back(e, f(c));
        return sparse_poly<D>::from_terms(std::move(out));
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        // highest exponents first reads more naturally
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = coeff_to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (it != terms_.rbegin()) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            if (neg) cs = cs.substr(1);
            bool unit = cs == "1";
            bool any = false;
            if (!unit) os << cs;
            for (int v = 0; v < kMaxVars; ++v) {
                if (!e[v]) continue;
                if (any || !unit) os << "*";
                os << (v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v));
                if (e[v] > 1) os << "^" << e[v];
                any = true;
            }
            if (!any && unit) os << "1";
        }
        return os.str();
    }

  private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const term& a, const term& b) { return a.first < b.first; });
        std::vector<term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
            else out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const term& t) { return coeff_is_zero(t.second); }),
                  out.end());
        terms_ = std::move(out);
    }

    sparse_poly merge(const sparse_poly& o, bool subtract) const {
        sparse_poly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
                r.terms_.emplace_back(o.terms_[j].first, subtract ? C(-o.terms_[j].second) : o.terms_[j].second);
                ++j;
            } else {
                C c = subtract ? C(terms_[i].second - o.terms_[j].second) : C(terms_[i].second + o.terms_[j].second);
                if (!coeff_is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<term> terms_;
};

using int_poly = sparse_poly<mpz_class>;
using fq_poly = sparse_poly<coeff::fq>;

inline int_poly int_var(int i) { return int_poly::variable(i, mpz_class(1)); }
inline int_poly int_const(long v) { return int_poly::constant(mpz_class(v)); }
inline int_poly int_pow(const int_poly& f, unsigned k) { return f.pow(k, mpz_class(1)); }

// Exact division of every coefficient; throws integrality_failure otherwise.
int_poly divide_exact(const int_poly& f, const mpz_class& d);

fq_poly reduce_mod_p(const int_poly& f, const coeff::field_context& ctx);

/* Values a polynomial can be evaluated at: the scalar is the image of an
 * integer (or F_q) coefficient. Overloads for fq, gr and Laurent series.
 */
inline coeff::fq scalar_of(const coeff::fq& like, const mpz_class& c) {
    const unsigned long p = like.ctx().p();
    return coeff::fq::from_int(like.ctx(), static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), p)));
}
inline coeff::fq scalar_of(const coeff::fq&, const coeff::fq& c) { return c; }
inline coeff::gr scalar_of(const coeff::gr& like, const mpz_class& c) {
    const unsigned long m = static_cast<unsigned long>(like.ctx().modulus_int());
    return coeff::gr::from_int(like.ctx(), static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), m)));
}
inline coeff::fq scalar_of(const fq_series& like, const mpz_class& c) {
    return coeff::fq::from_int(like.ctx(), static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), like.ctx().p())));
}
inline coeff::fq scalar_of(const fq_series&, const coeff::fq& c) { return c; }
inline coeff::gr scalar_of(const gr_series& like, const mpz_class& c) {
    const unsigned long m = static_cast<unsigned long>(like.ctx().modulus_int());
    return coeff::gr::from_int(like.ctx(), static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), m)));
}

inline coeff::fq zero_like(const coeff::fq& x) { return coeff::fq::zero(x.ctx()); }
inline coeff::gr zero_like(const coeff::gr& x) { return coeff::gr::zero(x.ctx()); }
template <class R>
laurent_series<R> zero_like(const laurent_series<R>& x) { return laurent_series<R>::zero(x.ctx()); }
inline coeff::fq one_like(const coeff::fq& x) { return coeff::fq::one(x.ctx()); }
inline coeff::gr one_like(const coeff::gr& x) { return coeff::gr::one(x.ctx()); }
template <class R>
laurent_series<R> one_like(const laurent_series<R>& x) { return laurent_series<R>::one(x.ctx()); }

inline coeff::fq times_scalar(const coeff::fq& x, const coeff::fq& c) { return x * c; }
inline coeff::gr times_scalar(const coeff::gr& x, const coeff::gr& c) { return x * c; }
template <class R>
laurent_series<R> times_scalar(const laurent_series<R>& x, const R& c) { return x.scale(c); }

template <class T>
T power_of(const T& x, int e) { return x.pow(e); }

/* f(values): values[i] is substituted for variable i. Powers are cached per
 * variable; `like` supplies the ring when values may be empty.
 */
template <class C, class T>
T evaluate(const sparse_poly<C>& f, const std::vector<T>& values, const T& like) {
    std::map<std::pair<int, int>, T> cache;
    auto power = [&](int v, int e) -> const T& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, power_of(values.at(v), e)).first;
        return it->second;
    };
    T acc = zero_like(like);
    for (const auto& [e, c] : f.terms()) {
        auto s = scalar_of(like, c);
        if (s.is_zero()) continue;
        bool first = true;
        T m = one_like(like);
        for (int v = 0; v < kMaxVars; ++v) {
            if (!e[v]) continue;
            m = first ? power(v, e[v]) : T(m * power(v, e[v]));
            first = false;
        }
        acc += times_scalar(m, s);
    }
    return acc;
}

}  // namespace asw::poly

#endif  // ASW_POLY_HPP

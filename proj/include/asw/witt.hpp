#ifndef ASW_WITT_HPP
#define ASW_WITT_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "asw/poly.hpp"

namespace asw::witt {

using poly::fq_poly;
using poly::int_poly;

// Variable numbering shared by all tables: X_i is variable 2i, Y_i is 2i+1.
// Single-input polynomials (ghost, negation) are written in the X variables.
inline int xv(int i) { return 2 * i; }
inline int yv(int i) { return 2 * i + 1; }

/* Integer Witt polynomials for p-typical vectors of length n (indices
 * 0..n-1), built by the ghost recursion with exact division by p^j. Tables
 * are interned per (p, n) and immutable apart from the lazily built product
 * polynomials.
 */
class table {
  public:
    static const table& get(int p, int n);

    int p() const { return p_; }
    int length() const { return n_; }

    const int_poly& ghost(int j) const { return ghost_.at(j); }
    const int_poly& sum(int j) const { return sum_.at(j); }
    const int_poly& carry(int j) const { return carry_.at(j); }
    const int_poly& neg(int j) const { return neg_.at(j); }
    const int_poly& product(int j) const;

    // wt(X_i) = wt(Y_i) = p^i
    std::vector<long long> weights() const;
    // "X0","Y0","X1",...
    std::vector<std::string> names() const;

    table(int p, int n, const table* prefix);

  private:
    void certify() const;

    int p_;
    int n_;
    std::vector<int_poly> ghost_, sum_, carry_, neg_;
    mutable std::mutex product_mutex_;
    mutable std::vector<std::unique_ptr<int_poly>> product_;
};

/* component_n(F(X) + I(X)) as an integer polynomial in the X variables:
 * the n-th component of the Artin-Schreier-Witt map F - 1 on the generic vector.
 */
int_poly asw_component(const table& tb, int n);

struct identity_report {
    int p = 0, n = 0;
    bool holds = false;
    fq_poly lhs;          // component_n(F(Y) - Y) mod p
    fq_poly rhs;          // Y_n^p - Y_n + c_n(F(Y), -Y) mod p, -Y componentwise
    fq_poly discrepancy;  // lhs - rhs
    std::string to_string() const;
};

// Compares component_n(F(Y)-Y) with Y_n^p - Y_n + c_n(Y^p, -Y) over F_p.
identity_report nth_component_identity_check(const table& tb, int n);

struct leading_term_report {
    int p = 0, n = 0, i = 0;
    bool coefficient_ok = false;  // coeff of X_i^(p^(n-i)-1) in c_n == -(Y_i + c_i)
    bool remainder_ok = false;    // R_{i,n} has X_i-degree < p^(n-i)-1 and is isobaric
    int_poly coefficient;
    int_poly expected;
    int remainder_degree = 0;
    bool ok() const { return coefficient_ok && remainder_ok; }
};

leading_term_report cn_leading_term_check(const table& tb, int n, int i);

// Per-variable names for printing single-input polynomials in Y: var 2i -> "Y_i".
std::vector<std::string> single_names(int n, const std::string& letter = "Y");

// --- Witt vectors over a coefficient ring (fq, gr, laurent series) ---

template <class T>
using vec = std::vector<T>;

namespace detail {
template <class T>
std::vector<T> interleave(const vec<T>& a, const vec<T>& b, int n) {
    std::vector<T> v;
    v.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        v.push_back(a.at(i));
        v.push_back(b.at(i));
    }
    return v;
}
template <class T>
std::vector<T> spread(const vec<T>& a, int n) {
    std::vector<T> v;
    v.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        v.push_back(a.at(i));
        v.push_back(a.at(i));
    }
    return v;
}
template <class T>
void check_lengths(const table& tb, const vec<T>& a, const vec<T>& b) {
    if (a.size() != b.size() || static_cast<int>(a.size()) > tb.length())
        fail(error_code::field_mismatch, "Witt vector lengths differ or exceed the table");
}
}  // namespace detail

template <class T>
vec<T> add(const table& tb, const vec<T>& a, const vec<T>& b) {
    detail::check_lengths(tb, a, b);
    const int n = static_cast<int>(a.size());
    auto vals = detail::interleave(a, b, n);
    vec<T> r;
    for (int j = 0; j < n; ++j) r.push_back(poly::evaluate(tb.sum(j), vals, a[0]));
    return r;
}

template <class T>
vec<T> neg(const table& tb, const vec<T>& a) {
    const int n = static_cast<int>(a.size());
    auto vals = detail::spread(a, n);
    vec<T> r;
    for (int j = 0; j < n; ++j) r.push_back(poly::evaluate(tb.neg(j), vals, a[0]));
    return r;
}

template <class T>
vec<T> sub(const table& tb, const vec<T>& a, const vec<T>& b) { return add(tb, a, neg(tb, b)); }

template <class T>
vec<T> mul(const table& tb, const vec<T>& a, const vec<T>& b) {
    detail::check_lengths(tb, a, b);
    const int n = static_cast<int>(a.size());
    auto vals = detail::interleave(a, b, n);
    vec<T> r;
    for (int j = 0; j < n; ++j) r.push_back(poly::evaluate(tb.product(j), vals, a[0]));
    return r;
}

// Ghost component Phi_j(a).
template <class T>
T ghost(const table& tb, const vec<T>& a, int j) {
    return poly::evaluate(tb.ghost(j), detail::spread(a, static_cast<int>(a.size())), a[0]);
}

// Entry-wise p-th power; entries must live in an F_p-algebra.
template <class T>
vec<T> frobenius(const vec<T>& a) {
    vec<T> r;
    for (const auto& x : a) r.push_back(x.frobenius());
    return r;
}

// (a_0, ..., a_{n-1}) -> (0, a_0, ..., a_{n-1}), one longer.
template <class T>
vec<T> verschiebung(const vec<T>& a) {
    vec<T> r{poly::zero_like(a.at(0))};
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

template <class T>
vec<T> truncate(const vec<T>& a, int n) { return vec<T>(a.begin(), a.begin() + n); }

// F(a) - a
template <class T>
vec<T> asw_map(const table& tb, const vec<T>& a) { return add(tb, frobenius(a), neg(tb, a)); }

// The class of g in W_n(F_p) = Z/p^n: g-fold sum of (1, 0, ..., 0).
vec<coeff::fq> from_integer(const table& tb, const coeff::field_context& ctx, long long g, int n);

}  // namespace asw::witt

#endif  // ASW_WITT_HPP

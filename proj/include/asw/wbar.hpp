#ifndef ASW_WBAR_HPP
#define ASW_WBAR_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "asw/poly.hpp"
#include "asw/tower.hpp"

namespace asw::wbar {

using coeff::fq;
using poly::fq_poly;

// Variables of H = F_q[T, Y_0, Y_1, ...]: T is variable 0, Y_i is variable i + 1.
inline int tv() { return 0; }
inline int yv(int i) { return i + 1; }

// deg T = 1, deg Y_i = p^i, for Y_0..Y_{k-1}.
std::vector<long long> weights(int p, int k);
std::vector<std::string> names(int k);

struct graded_poly {
    int p = 0;
    int k = 0;  // number of Y variables
    long long weight = 0;
    fq_poly f;
    bool homogeneous() const;
    std::string to_string() const;
};

// dim H_{m p^(n-1)} in T, Y_0..Y_{n-1}
mpz_class section_dim(int p, int n, long long m);
// All monomials of weighted degree d in T, Y_0..Y_{k-1}, as exponent vectors (T first).
std::vector<std::vector<long long>> monomials_of_weight(int p, int k, long long d);

struct check {
    std::string name;
    bool ok = false;
    std::string detail;
};

// section_dim(p, n+1, 1) = section_dim(p, n, 0) + section_dim(p, n, p): r_* O(1) = O + O(p).
check pushforward_recursion_check(int p, int n);

// f(a.Y) with a.Y_k = S_k(Y; a_0 T, a_1 T^p, ...) (eq. (act) with denominators cleared).
graded_poly group_action_on_sections(const std::vector<fq>& a, const graded_poly& f);

// Image of the top variable under Psi_n: T^(p^(n+1)) component_n(F(Y/T) - Y/T), homogeneous of weight p^(n+1).
graded_poly psi_on_sections(const coeff::field_context& ctx, int n);
// Expanded form Y_n^p - Y_n T^(p^n (p-1)) + T^(p^(n+1)) c_n(Y^p/T^p, ...; -Y/T, ...).
graded_poly psi_expanded_formula(const coeff::field_context& ctx, int n);

struct psi_report {
    graded_poly psi;
    bool homogeneous = false;
    bool dehomogenizes_to_asw = false;   // T = 1 gives component_n(F(Y) - Y)
    bool matches_expanded_formula = false;  // fails for p = 2 (Witt negation is not componentwise)
    bool equivariant = false;            // invariant under a = V^n(1)
    std::vector<check> checks() const;
};

psi_report psi_check(const coeff::field_context& ctx, int n);

// Chow ring Z[x_1..x_n]/(x_1^2, x_i^2 - p x_i x_{i-1}) with square-free basis monomials as bitmasks
// (bit i-1 for x_i).
struct chow_class {
    int p = 0;
    int n = 0;
    std::map<unsigned, mpz_class> coeffs;
    static chow_class zero(int p, int n);
    static chow_class one(int p, int n);
    static chow_class x(int p, int n, int i);  // 1 <= i <= n; x(.., 0) is zero
    chow_class operator+(const chow_class& o) const;
    chow_class operator-(const chow_class& o) const;
    chow_class scale(const mpz_class& c) const;
    bool operator==(const chow_class& o) const;
    std::string to_string() const;
};

chow_class chow_mul(const chow_class& a, const chow_class& b);
// Ring map x_i -> p x_i
chow_class psi_pullback(const chow_class& a);

struct divisor_ledger {
    int p = 0, n = 0;
    chow_class Z, Sigma, B;
    std::vector<chow_class> B_components;  // B_{n,i}, i = 1..n (index i-1)
    std::vector<long long> inertia_order;  // p^(n-i)
    std::vector<check> checks;
    bool ok() const;
};

divisor_ledger make_divisor_ledger(int p, int n);

// Each inertia order p^(n-i) must be the order of a ramification group of a tower with the same p, n.
check inertia_crosscheck(const divisor_ledger& led, const tower::ramification_filtration& f);

}  // namespace asw::wbar

#endif  // ASW_WBAR_HPP

#ifndef ASW_COEFF_HPP
#define ASW_COEFF_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace asw::coeff {

bool is_prime(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);

/* Finite field F_q, q = p^f, given by a fixed Conway polynomial.
 *
 * Elements are encoded as integers 0 <= v < q whose base-p digits are the
 * coordinates on the basis 1, x, ..., x^(f-1). Contexts are interned: get()
 * returns a reference that stays valid for the lifetime of the program, so
 * elements can carry a plain pointer to their field.
 */
class field_context {
  public:
    static const field_context& get(int p, int f = 1);
    // Largest extension degree shipped in the polynomial table for p (0 if p unsupported).
    static int max_degree(int p);

    int p() const { return p_; }
    int degree() const { return f_; }
    std::uint32_t order() const { return q_; }
    // Monic defining polynomial, low degree first (size f+1).
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (f_ == 1) {
            std::uint32_t s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        return add_[a * q_ + b];
    }
    std::uint32_t neg(std::uint32_t a) const { return f_ == 1 ? (a ? q_ - a : 0) : neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (f_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % q_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    std::uint32_t from_int(std::int64_t n) const;
    std::uint32_t from_coords(const std::vector<int>& c) const;
    std::vector<int> coords(std::uint32_t a) const;
    // Class of x (a primitive element, the polynomial is Conway).
    std::uint32_t generator() const { return exp_.empty() ? 0 : exp_[1 % (q_ - 1)]; }

  private:
    field_context(int p, int f, std::vector<int> modulus);

    int p_;
    int f_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> neg_;
};

class fq {
  public:
    using context = field_context;

    fq() = default;
    fq(const field_context& ctx, std::uint32_t raw) : ctx_(&ctx), v_(raw) {}

    static fq zero(const field_context& ctx) { return fq(ctx, 0); }
    static fq one(const field_context& ctx) { return fq(ctx, 1); }
    static fq from_int(const field_context& ctx, std::int64_t n) { return fq(ctx, ctx.from_int(n)); }
    static fq from_coords(const field_context& ctx, const std::vector<int>& c) {
        return fq(ctx, ctx.from_coords(c));
    }
    static fq generator(const field_context& ctx) { return fq(ctx, ctx.generator()); }
    static std::int64_t characteristic_modulus(const field_context& ctx) { return ctx.p(); }

    const field_context& ctx() const { return *ctx_; }
    const field_context* ctx_ptr() const { return ctx_; }
    std::uint32_t raw() const { return v_; }
    std::vector<int> coords() const { return ctx_->coords(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return v_ != 0; }

    fq operator+(const fq& o) const { return fq(*ctx_, ctx_->add(v_, o.v_)); }
    fq operator-(const fq& o) const { return fq(*ctx_, ctx_->sub(v_, o.v_)); }
    fq operator-() const { return fq(*ctx_, ctx_->neg(v_)); }
    fq operator*(const fq& o) const { return fq(*ctx_, ctx_->mul(v_, o.v_)); }
    fq operator/(const fq& o) const { return *this * o.inv(); }
    fq& operator+=(const fq& o) { v_ = ctx_->add(v_, o.v_); return *this; }
    fq& operator-=(const fq& o) { v_ = ctx_->sub(v_, o.v_); return *this; }
    fq& operator*=(const fq& o) { v_ = ctx_->mul(v_, o.v_); return *this; }
    fq scale(std::int64_t n) const { return *this * from_int(*ctx_, n); }

    fq inv() const;
    fq pow(std::int64_t e) const;
    fq frobenius() const { return pow(ctx_->p()); }
    fq pth_root() const;

    bool operator==(const fq& o) const { return v_ == o.v_; }
    bool operator!=(const fq& o) const { return v_ != o.v_; }

    std::string to_string() const;

  private:
    const field_context* ctx_ = nullptr;
    std::uint32_t v_ = 0;
};

// All elements of F_q, in encoding order.
std::vector<fq> elements(const field_context& ctx);

// Some r-th root of a, if one exists in F_q.
bool try_root(const fq& a, std::int64_t r, fq& out);

/* Galois ring GR(p^m, f) = (Z/p^m)[x]/(g~), g~ the field's Conway polynomial
 * lifted coefficient-wise. m = 1 gives back F_q.
 */
class galois_ring_context {
  public:
    static constexpr int kMaxDegree = 8;

    static const galois_ring_context& get(int p, int f, int m);

    int p() const { return p_; }
    int degree() const { return f_; }
    int precision() const { return m_; }
    std::int64_t modulus_int() const { return pm_; }
    const field_context& residue_field() const { return *field_; }

  private:
    galois_ring_context(int p, int f, int m);

    int p_;
    int f_;
    int m_;
    std::int64_t pm_;
    const field_context* field_;
    std::vector<std::int64_t> lifted_;  // monic lift, low degree first

    friend class gr;
};

class gr {
  public:
    using context = galois_ring_context;
    using coord_array = std::array<std::int64_t, galois_ring_context::kMaxDegree>;

    gr() = default;
    explicit gr(const galois_ring_context& ctx) : ctx_(&ctx) { c_.fill(0); }

    static gr zero(const galois_ring_context& ctx) { return gr(ctx); }
    static gr one(const galois_ring_context& ctx) { return from_int(ctx, 1); }
    static gr from_int(const galois_ring_context& ctx, std::int64_t n);
    static gr from_coords(const galois_ring_context& ctx, const std::vector<std::int64_t>& c);
    static std::int64_t characteristic_modulus(const galois_ring_context& ctx) { return ctx.modulus_int(); }

    const galois_ring_context& ctx() const { return *ctx_; }
    const galois_ring_context* ctx_ptr() const { return ctx_; }
    std::vector<std::int64_t> coords() const;
    std::int64_t coord(int i) const { return c_[i]; }

    bool is_zero() const;
    bool is_unit() const;
    // Largest j <= m with all coordinates divisible by p^j.
    int p_adic_valuation() const;

    gr operator+(const gr& o) const;
    gr operator-(const gr& o) const;
    gr operator-() const;
    gr operator*(const gr& o) const;
    gr& operator+=(const gr& o) { return *this = *this + o; }
    gr& operator-=(const gr& o) { return *this = *this - o; }
    gr& operator*=(const gr& o) { return *this = *this * o; }
    gr scale(std::int64_t n) const;

    gr inv() const;  // units only
    gr pow(std::int64_t e) const;
    // Exact division by p^j; requires p^j | every coordinate. The result is
    // meaningful modulo p^(m-j).
    gr divide_p_power(int j) const;

    bool operator==(const gr& o) const;
    bool operator!=(const gr& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    const galois_ring_context* ctx_ = nullptr;
    coord_array c_{};
};

// Coordinate-wise representative in [0, p); a fixed additive section of reduce.
gr lift(const fq& a, int m);
fq reduce(const gr& a);

std::ostream& operator<<(std::ostream& os, const fq& a);
std::ostream& operator<<(std::ostream& os, const gr& a);

}  // namespace asw::coeff

#endif  // ASW_COEFF_HPP

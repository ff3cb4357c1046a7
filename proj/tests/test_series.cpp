#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asw/series.hpp"

using namespace asw;
using coeff::fq;
using coeff::gr;

namespace {

fq_series poly(const coeff::field_context& ctx, std::vector<std::pair<int, int>> terms, int prec = fq_series::kExact) {
    std::vector<std::pair<int, fq>> t;
    for (auto [e, c] : terms) t.emplace_back(e, fq::from_int(ctx, c));
    return fq_series::from_terms(ctx, t, prec);
}

fq_series random_series(const coeff::field_context& ctx, std::mt19937& rng, int v, int len) {
    auto all = coeff::elements(ctx);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::vector<fq> c(len);
    for (auto& x : c) x = all[pick(rng)];
    while (c[0].is_zero()) c[0] = all[pick(rng)];
    return fq_series::from_coeffs(ctx, v, c, v + len);
}

// Oracle: naive dense product, all coefficients below `prec`.
std::vector<fq> naive_product(const fq_series& a, const fq_series& b, int lo, int prec) {
    std::vector<fq> out(prec - lo, fq::zero(a.ctx()));
    for (int i = a.valuation(); i < a.precision(); ++i)
        for (int j = b.valuation(); j < b.precision(); ++j)
            if (i + j < prec) out[i + j - lo] += a.coeff(i) * b.coeff(j);
    return out;
}

}  // namespace

TEST_CASE("arithmetic examples") {
    const auto& f2 = coeff::field_context::get(2);
    const auto& f3 = coeff::field_context::get(3);
    fq_series a = poly(f3, {{-1, 1}, {0, 1}});
    CHECK((a * fq_series::variable(f3)).equals_in_window(poly(f3, {{0, 1}, {1, 1}})));

    fq_series b = poly(f2, {{0, 1}, {1, 1}});
    CHECK((b * b).equals_in_window(poly(f2, {{0, 1}, {2, 1}})));

    fq_series c = poly(f2, {{-3, 1}}, 5);
    fq_series d = c + c;
    CHECK(d.is_zero_in_window());
    CHECK(!d.has_certified_valuation());
    CHECK(d.precision() == 5);
    CHECK_THROWS_AS(d.valuation(), insufficient_precision);

    fq_series e = poly(f2, {{-3, 1}, {0, 1}}, 2) + poly(f2, {{-3, 1}}, 10);
    CHECK(e.valuation() == 0);
    CHECK(e.precision() == 2);
}

TEST_CASE("multiplication precision and oracle") {
    std::mt19937 rng(11);
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const auto& ctx = coeff::field_context::get(p, f);
        for (int trial = 0; trial < 50; ++trial) {
            int va = static_cast<int>(rng() % 11) - 5, vb = static_cast<int>(rng() % 11) - 5;
            int la = 1 + rng() % 20, lb = 1 + rng() % 20;
            fq_series x = random_series(ctx, rng, va, la), y = random_series(ctx, rng, vb, lb);
            fq_series z = x * y;
            CHECK(z.precision() == std::min(x.precision() + vb, y.precision() + va));
            CHECK(z.valuation() == va + vb);
            auto oracle = naive_product(x, y, va + vb, z.precision());
            for (int k = va + vb; k < z.precision(); ++k) CHECK(z.coeff(k) == oracle[k - va - vb]);
            CHECK_THROWS_AS(z.coeff(z.precision()), insufficient_precision);

            fq_series q = z.divided_by(y);
            CHECK(q.valuation() == va);
            for (int k = va; k < q.precision(); ++k) CHECK(q.coeff(k) == x.coeff(k));
        }
    }
}

TEST_CASE("long products (transform path) match the naive oracle") {
    std::mt19937 rng(17);
    for (int p : {2, 3, 5, 7}) {
        const auto& ctx = coeff::field_context::get(p);
        for (int trial = 0; trial < 4; ++trial) {
            fq_series x = random_series(ctx, rng, -40, 300 + trial * 37), y = random_series(ctx, rng, 3, 250);
            fq_series z = x * y;
            auto oracle = naive_product(x, y, x.valuation() + y.valuation(), z.precision());
            bool same = true;
            for (int k = z.valuation(); k < z.precision(); ++k)
                same = same && z.coeff(k) == oracle[k - x.valuation() - y.valuation()];
            CHECK(same);
        }
    }
}

TEST_CASE("precision soundness under extension") {
    std::mt19937 rng(5);
    const auto& ctx = coeff::field_context::get(3, 2);
    for (int trial = 0; trial < 30; ++trial) {
        fq_series x = random_series(ctx, rng, -2, 40), y = random_series(ctx, rng, 1, 40);
        fq_series xs = x.truncated(20), ys = y.truncated(20);
        fq_series big = compose(x, y).divided_by(x) + x.pow(5);
        fq_series small = compose(xs, ys).divided_by(xs) + xs.pow(5);
        CHECK(small.precision() <= big.precision());
        for (int k = small.valuation_bound(); k < small.precision(); ++k) CHECK(small.coeff(k) == big.coeff(k));
    }
}

TEST_CASE("compose") {
    const auto& f2 = coeff::field_context::get(2);
    fq_series f = poly(f2, {{-2, 1}});
    fq_series g = poly(f2, {{3, 1}, {4, 1}}, 30);
    fq_series h = compose(f, g);
    CHECK(h.valuation() == -6);
    // oracle: t^-6 (1+t)^-2 via division
    fq_series oracle = fq_series::one(f2).divided_by(g.pow(2));
    CHECK(h.precision() == oracle.precision());
    CHECK(h.equals_in_window(oracle));
    CHECK(h.coeff(-6).is_one());
    CHECK(h.coeff(-5).is_zero());
    CHECK(h.coeff(-4).is_one());

    CHECK(compose(fq_series::variable(f2), g).equals_in_window(g));
    fq_series one_plus_s = poly(f2, {{0, 1}, {1, 1}});
    CHECK(compose(one_plus_s, fq_series::variable(f2)).equals_in_window(one_plus_s));
    CHECK_THROWS_AS(compose(f, poly(f2, {{0, 1}})), error);

    // oracle: Horner evaluation
    std::mt19937 rng(3);
    const auto& f5 = coeff::field_context::get(5);
    for (int trial = 0; trial < 20; ++trial) {
        fq_series a = random_series(f5, rng, -3, 25), b = random_series(f5, rng, 1 + trial % 3, 25);
        fq_series c = compose(a, b);
        CHECK(c.valuation() == -3 * b.valuation());
        fq_series horner = fq_series::zero(f5);
        for (int k = a.precision() - 1; k >= a.valuation(); --k)
            horner = horner * b + fq_series::constant(a.coeff(k));
        horner = horner.divided_by(b.pow(3)) + fq_series::big_o(f5, c.precision());
        CHECK(c.equals_in_window(horner));
    }
}

TEST_CASE("derivative and residue") {
    const auto& f3 = coeff::field_context::get(3);
    fq_series x = poly(f3, {{-1, 2}, {0, 1}});
    CHECK(residue(x) == fq::from_int(f3, 2));
    CHECK(derivative(poly(f3, {{3, 1}})).is_exact_zero());
    CHECK_THROWS_AS(residue(poly(f3, {{-4, 1}}, -2)), insufficient_precision);

    // over Z/9: t^-2 * d(1-t^2)/(1-t^2)
    const auto& z9 = coeff::galois_ring_context::get(3, 1, 2);
    auto g = [&](int e, int c) { return gr_series::monomial(gr::from_int(z9, c), e); };
    gr_series alpha = g(0, 1) + g(2, -1);
    gr_series integrand = g(-2, 1) * derivative(alpha).divided_by(alpha, 10);
    CHECK(residue(integrand) == gr::from_int(z9, 7));

    std::mt19937 rng(9);
    const auto& f7 = coeff::field_context::get(7);
    for (int trial = 0; trial < 30; ++trial) {
        fq_series y = random_series(f7, rng, -5, 12);
        CHECK(residue(derivative(y)).is_zero());
    }
}

TEST_CASE("nth_root") {
    const auto& f5 = coeff::field_context::get(5);
    CHECK(nth_root(poly(f5, {{2, 1}}), 2).equals_in_window(fq_series::variable(f5)));
    const auto& f7 = coeff::field_context::get(7);
    fq_series r7 = nth_root(poly(f7, {{2, 4}}), 2);
    const bool two_or_minus_two = r7.equals_in_window(poly(f7, {{1, 2}})) || r7.equals_in_window(poly(f7, {{1, 5}}));
    CHECK(two_or_minus_two);

    const auto& f2 = coeff::field_context::get(2);
    fq_series f = poly(f2, {{3, 1}, {4, 1}}, 40);
    fq_series r = nth_root(f, 3);
    CHECK(r.valuation() == 1);
    CHECK(r.pow(3).equals_in_window(f));
    CHECK_THROWS_AS(nth_root(f, 2), error);

    std::mt19937 rng(21);
    const auto& f9 = coeff::field_context::get(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        fq_series x = random_series(f9, rng, trial % 4 - 2, 30);
        fq_series y = x.pow(4);
        CHECK(nth_root(y, 4).pow(4).equals_in_window(y));
    }
}

TEST_CASE("pth_power_decompose") {
    const auto& f2 = coeff::field_context::get(2);
    auto s1 = pth_power_decompose(poly(f2, {{0, 1}, {3, 1}}));
    CHECK(s1.root.equals_in_window(poly(f2, {{0, 1}})));
    CHECK(s1.rest.equals_in_window(poly(f2, {{3, 1}})));
    auto s2 = pth_power_decompose(poly(f2, {{2, 1}}));
    CHECK(s2.root.equals_in_window(fq_series::variable(f2)));
    CHECK(s2.rest.is_exact_zero());
    auto s3 = pth_power_decompose(poly(f2, {{-4, 1}, {-1, 1}}));
    CHECK(s3.root.equals_in_window(poly(f2, {{-2, 1}})));
    CHECK(s3.rest.equals_in_window(poly(f2, {{-1, 1}})));

    std::mt19937 rng(1);
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {5, 1}}) {
        const auto& ctx = coeff::field_context::get(p, f);
        for (int trial = 0; trial < 20; ++trial) {
            fq_series x = random_series(ctx, rng, -7, 30);
            auto sp = pth_power_decompose(x);
            CHECK((sp.root.frobenius() + sp.rest).equals_in_window(x));
            for (int k = sp.rest.valuation_bound(); k < sp.rest.precision(); ++k)
                if (!sp.rest.coeff(k).is_zero()) CHECK(k % p != 0);
        }
    }
}

#include "asw/localsym.hpp"

namespace asw::localsym {

namespace {

gr random_gr(const coeff::galois_ring_context& ring, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(ring.degree());
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ring.modulus_int()));
    return gr::from_coords(ring, c);
}

fq random_fq(const coeff::field_context& ctx, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        fq x(ctx, static_cast<std::uint32_t>(rng() % ctx.order()));
        if (!nonzero || !x.is_zero()) return x;
    }
}

// Pole order bound of Phi_j(u~): p^(j-k) * pole(u_k) maximized over k.
int ghost_pole(const std::vector<fq_series>& u, int p, int j) {
    long long pole = 0;
    long long pk = 1;
    for (int k = j; k >= 0; --k, pk *= p)
        if (!u[k].is_zero_in_window()) pole = std::max(pole, -pk * u[k].valuation());
    return static_cast<int>(pole);
}

}  // namespace

bool symbol_result::is_zero() const {
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

gr_series lift_series(const fq_series& x, const coeff::galois_ring_context& ring, std::uint64_t lift_seed,
                      bool is_unit_series) {
    const int m = ring.precision();
    std::mt19937_64 rng(lift_seed);
    std::vector<std::pair<int, gr>> terms;
    const int v = x.valuation_bound();
    const auto& raw = x.raw_coeffs();
    const gr p_elem = gr::from_int(ring, ring.p());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        gr c = coeff::lift(raw[k], m);
        if (lift_seed) c = c + p_elem * random_gr(ring, rng);
        terms.emplace_back(v + static_cast<int>(k), c);
    }
    if (lift_seed) {
        // p-divisible tail terms; for a unit series keep them in positive degree
        const int lo = is_unit_series ? 1 : v;
        const int hi = lo + static_cast<int>(raw.size()) + 2;
        for (int e = lo; e < hi; ++e)
            if (!x.is_exact() && e >= x.precision()) break;
            else terms.emplace_back(e, p_elem * random_gr(ring, rng));
    }
    const int prec = x.is_exact() ? gr_series::kExact : x.precision();
    return gr_series::from_terms(ring, terms, prec);
}

symbol_result residue_vector(const symbol_input& inp, std::uint64_t lift_seed) {
    const int n = static_cast<int>(inp.u.size());
    if (n == 0) fail(error_code::hypothesis_violation, "empty Witt vector");
    const auto& fctx = inp.alpha.ctx();
    const int p = fctx.p();
    if (inp.alpha.valuation() != 0) fail(error_code::hypothesis_violation, "alpha must be a unit power series");
    for (const auto& x : inp.u)
        if (x.ctx_ptr() != &fctx) fail(error_code::field_mismatch, "u and alpha over different fields");

    symbol_result r;
    r.m = inp.m > 0 ? inp.m : 2 * n + 2;
    if (r.m < n) fail(error_code::ghost_inversion_failure, "lift precision below the vector length");
    const auto& ring = coeff::galois_ring_context::get(p, fctx.degree(), r.m);

    std::vector<gr_series> ul;
    for (int i = 0; i < n; ++i) ul.push_back(lift_series(inp.u[i], ring, lift_seed ? lift_seed + 17 * i + 1 : 0));
    const gr_series al = lift_series(inp.alpha, ring, lift_seed ? lift_seed + 7919 : 0, true);
    const gr_series dal = derivative(al);

    const gr_series zero = gr_series::zero(ring);
    for (int j = 0; j < n; ++j) {
        const int pole = ghost_pole(inp.u, p, j);
        // Phi_j(u~) = sum_k p^k u~_k^(p^(j-k))
        gr_series phi = zero;
        long long pk = 1;
        for (int k = 0; k <= j; ++k, pk *= p)
            phi = phi + ul[k].pow(coeff::ipow(p, j - k)).scale(pk);
        if (phi.is_exact_zero() || dal.is_exact_zero()) {
            r.residues.push_back(gr::zero(ring));
            continue;
        }
        const gr_series dlog = gr_series::mul(dal, al.inverse(pole + 2), pole + 2);
        r.residues.push_back(residue(gr_series::mul(phi, dlog)));
    }

    // ghost inversion: p^j w_j = r_j - sum_{k<j} p^k w_k^(p^(j-k))
    for (int j = 0; j < n; ++j) {
        gr acc = r.residues[j];
        long long pk = 1;
        for (int k = 0; k < j; ++k, pk *= p) acc = acc - r.w_lift[k].pow(coeff::ipow(p, j - k)).scale(pk);
        if (acc.p_adic_valuation() < j)
            fail(error_code::ghost_inversion_failure,
                 "ghost component " + std::to_string(j) + " not divisible by p^" + std::to_string(j));
        r.w_lift.push_back(acc.divide_p_power(j));
        r.w.push_back(coeff::reduce(r.w_lift.back()));
    }
    return r;
}

fq_series random_one_unit(const coeff::field_context& ctx, int order, int degree, std::mt19937_64& rng) {
    std::vector<std::pair<int, fq>> terms{{0, fq::one(ctx)}};
    for (int k = 0; k <= degree; ++k) terms.emplace_back(order + k, random_fq(ctx, rng, k == 0));
    return fq_series::from_terms(ctx, terms);
}

vanishing_report modulus_vanishing_test(const std::vector<fq_series>& u, long long M, int trials, std::mt19937_64& rng,
                                        int witness_cap) {
    if (u.empty()) fail(error_code::hypothesis_violation, "empty Witt vector");
    const auto& ctx = u[0].ctx();
    vanishing_report rep;
    rep.M = M;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const int order = static_cast<int>(M + 1 + rng() % 3);
        const fq_series alpha = random_one_unit(ctx, order, static_cast<int>(rng() % 6), rng);
        const auto s = residue_vector({u, alpha, 0});
        if (!s.is_zero())
            fail(error_code::vanishing_failure,
                 "nonzero symbol for alpha = " + alpha.to_string(6) + " with 1 - alpha of order " + std::to_string(order));
        ++rep.zero_symbols;
    }
    // witness: 1 + c s^M, then 1 + c s^M + d s^(M+k) for small k
    const auto elems = coeff::elements(ctx);
    auto try_alpha = [&](const fq_series& alpha) {
        ++rep.witness_candidates;
        const auto s = residue_vector({u, alpha, 0});
        if (s.is_zero()) return false;
        rep.witness_found = true;
        rep.witness = alpha;
        rep.witness_symbol = s.w;
        return true;
    };
    const int m = static_cast<int>(M);
    if (m < 1) return rep;
    for (const auto& c : elems) {
        if (c.is_zero()) continue;
        if (rep.witness_candidates >= witness_cap) return rep;
        if (try_alpha(fq_series::from_terms(ctx, {{0, fq::one(ctx)}, {m, c}}))) return rep;
    }
    for (int k = 1; k <= 4; ++k)
        for (const auto& c : elems)
            for (const auto& d : elems) {
                if (c.is_zero() || d.is_zero()) continue;
                if (rep.witness_candidates >= witness_cap) return rep;
                if (try_alpha(fq_series::from_terms(ctx, {{0, fq::one(ctx)}, {m, c}, {m + k, d}}))) return rep;
            }
    return rep;
}

}  // namespace asw::localsym

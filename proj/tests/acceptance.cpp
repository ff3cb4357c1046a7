// One PASS/FAIL line per acceptance criterion. All comparisons are exact; the only tolerances are the
// wall-clock limits of criterion 1 (10 s per case, 600 s for the grid).

#include <atomic>
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "asw/cli.hpp"
#include "asw/conductor.hpp"
#include "asw/localsym.hpp"
#include "asw/wbar.hpp"
#include "asw/witt.hpp"

using namespace asw;
using coeff::fq;
using coeff::gr;

namespace {

constexpr double kCaseSeconds = 10.0;
constexpr double kGridSeconds = 600.0;

struct verdict {
    bool pass = true;
    std::string detail;
};

void print(int k, const verdict& v) {
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
}

using case_list = std::vector<std::pair<int, std::vector<int>>>;

// Full grids for (p, n) in {2}x{1,2,3}, {3}x{1,2}, {5}x{1,2}; every k-th p = 3, n = 3 case; p = 5, n = 3
// restricted to M <= 50 and sampled. `full` takes every case with nu_i <= 9 except p = 5, n = 3 beyond M = 50.
case_list acceptance_grid(bool full) {
    case_list out;
    auto add = [&](int p, int n, int stride, long long max_M) {
        const auto all = cli::grid_nus(p, n, 9, max_M);
        for (std::size_t i = 0; i < all.size(); i += stride) out.emplace_back(p, all[i]);
    };
    add(2, 1, 1, 0);
    add(2, 2, 1, 0);
    add(2, 3, 1, 0);
    add(3, 1, 1, 0);
    add(3, 2, 1, 0);
    add(5, 1, 1, 0);
    add(5, 2, 1, 0);
    add(3, 3, full ? 1 : 9, 0);
    add(5, 3, full ? 1 : 16, 50);
    return out;
}

std::vector<cli::grid_case> run_grid(const case_list& cases, int jobs, double& wall) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<cli::grid_case> res(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();)
            res[i] = cli::evaluate_case(cases[i].first, cases[i].second, 0, true);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::string case_name(const cli::grid_case& g) {
    std::ostringstream os;
    os << "p=" << g.p << " nu=(";
    for (std::size_t i = 0; i < g.nu.size(); ++i) os << (i ? "," : "") << g.nu[i];
    os << ")";
    return os.str();
}

template <class Pred>
verdict over_grid(const std::vector<cli::grid_case>& grid, Pred ok, const std::string& what) {
    verdict v;
    int bad = 0;
    std::string first;
    for (const auto& g : grid)
        if (!g.error.empty() || !ok(g)) {
            if (!bad) first = case_name(g) + (g.error.empty() ? "" : " (" + g.error + ")");
            ++bad;
        }
    v.pass = bad == 0;
    v.detail = v.pass ? what + " on all " + std::to_string(grid.size()) + " cases"
                      : std::to_string(bad) + " failing cases, first " + first;
    return v;
}

verdict criterion1(const std::vector<cli::grid_case>& grid, double wall_single) {
    int nu_dom = 0, carry_dom = 0;
    double worst = 0;
    std::string worst_case;
    for (const auto& g : grid) {
        const auto th = conductor::theorem_conductor(g.p, g.nu);
        if (th.argmax == static_cast<int>(g.nu.size()) - 1) ++nu_dom;
        else ++carry_dom;
        if (g.seconds > worst) {
            worst = g.seconds;
            worst_case = case_name(g);
        }
    }
    auto v = over_grid(grid, [](const auto& g) { return g.brute == g.theorem + 1; }, "conductor = max p^(n-1-i) nu_i + 1");
    std::ostringstream os;
    os << v.detail << " (" << nu_dom << " nu_n-dominant, " << carry_dom << " p m_n-dominant); slowest " << worst
       << " s at " << worst_case << ", grid " << wall_single << " s";
    v.detail = os.str();
    v.pass = v.pass && grid.size() >= 60 && nu_dom > 0 && carry_dom > 0 && worst < kCaseSeconds &&
             wall_single < kGridSeconds;
    return v;
}

gr ghost_of(const witt::table& tb, const std::vector<gr>& a, int j) { return witt::ghost(tb, a, j); }

std::vector<gr> random_gr_vector(const coeff::galois_ring_context& ctx, int n, std::mt19937_64& rng) {
    std::vector<gr> v;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> c(ctx.degree());
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.modulus_int()));
        v.push_back(gr::from_coords(ctx, c));
    }
    return v;
}

std::vector<fq> random_fq_vector(const coeff::field_context& ctx, int n, std::mt19937_64& rng) {
    std::vector<fq> v;
    for (int i = 0; i < n; ++i) v.push_back(fq(ctx, static_cast<std::uint32_t>(rng() % ctx.order())));
    return v;
}

verdict criterion5(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int failures = 0, tested = 0;
    std::string first;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok && !failures++) first = what;
    };
    // ghost homomorphism, 1000 random pairs per (p, n)
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 4; ++n) {
            const auto& tb = witt::table::get(p, n);
            int m = n + 2;
            while (coeff::ipow(p, m + 1) < (1ll << 30) && m < 8) ++m;
            const auto& ring = coeff::galois_ring_context::get(p, 1, m);
            const bool with_product = n <= 3 || p <= 3;
            bool ok = true;
            for (int t = 0; t < 1000; ++t, ++tested) {
                const auto a = random_gr_vector(ring, n, rng), b = random_gr_vector(ring, n, rng);
                const auto s = witt::add(tb, a, b), ng = witt::neg(tb, a);
                std::vector<gr> pr;
                if (with_product) pr = witt::mul(tb, a, b);
                for (int j = 0; j < n; ++j) {
                    const gr ga = ghost_of(tb, a, j), gb = ghost_of(tb, b, j);
                    ok = ok && ghost_of(tb, s, j) == ga + gb && ghost_of(tb, ng, j) == -ga;
                    if (with_product) ok = ok && ghost_of(tb, pr, j) == ga * gb;
                }
            }
            note(ok, "ghost p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
    // ring axioms over F_q
    for (auto [p, f, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {3, 1, 3}, {3, 2, 2}, {5, 1, 2}, {7, 1, 2}}) {
        const auto& ctx = coeff::field_context::get(p, f);
        const auto& tb = witt::table::get(p, n);
        const std::vector<fq> zero(n, fq::zero(ctx));
        std::vector<fq> one = zero;
        one[0] = fq::one(ctx);
        bool ok = true;
        for (int t = 0; t < 40; ++t) {
            const auto a = random_fq_vector(ctx, n, rng), b = random_fq_vector(ctx, n, rng),
                       c = random_fq_vector(ctx, n, rng);
            ok = ok && witt::add(tb, witt::add(tb, a, b), c) == witt::add(tb, a, witt::add(tb, b, c));
            ok = ok && witt::add(tb, a, b) == witt::add(tb, b, a) && witt::add(tb, a, zero) == a;
            ok = ok && witt::add(tb, a, witt::neg(tb, a)) == zero;
            ok = ok && witt::mul(tb, witt::mul(tb, a, b), c) == witt::mul(tb, a, witt::mul(tb, b, c));
            ok = ok && witt::mul(tb, a, b) == witt::mul(tb, b, a) && witt::mul(tb, a, one) == a;
            ok = ok && witt::mul(tb, a, witt::add(tb, b, c)) == witt::add(tb, witt::mul(tb, a, b), witt::mul(tb, a, c));
        }
        note(ok, "ring axioms p=" + std::to_string(p) + " f=" + std::to_string(f));
    }
    // isobaric certification
    for (int p : {2, 3, 5, 7})
        for (int n = 1; n <= 4; ++n) {
            if (p >= 5 && n == 4) continue;
            const auto& tb = witt::table::get(p, n);
            const auto w = tb.weights();
            bool ok = true;
            for (int j = 0; j < n; ++j) {
                const long long pj = coeff::ipow(p, j);
                ok = ok && tb.sum(j).is_isobaric(w, pj) && tb.carry(j).is_isobaric(w, pj) && tb.neg(j).is_isobaric(w, pj);
            }
            note(ok, "isobaric p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
    // Lemma c_n leading term
    int lemma = 0;
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i < n; ++i, ++lemma)
                note(witt::cn_leading_term_check(witt::table::get(p, n + 1), n, i).ok(),
                     "c_n leading term p=" + std::to_string(p) + " n=" + std::to_string(n) + " i=" + std::to_string(i));
    verdict v;
    v.pass = failures == 0;
    v.detail = v.pass ? "ghost homomorphism on " + std::to_string(tested) + " random pairs (p in {2,3,5}, n <= 4), " +
                            "ring axioms, isobaric tables, " + std::to_string(lemma) + " c_n leading-term cases"
                      : std::to_string(failures) + " failures, first " + first;
    return v;
}

fq_series random_u(const coeff::field_context& ctx, int pole, std::mt19937_64& rng) {
    std::vector<std::pair<int, fq>> terms;
    for (int e = -pole; e <= 2; ++e) {
        fq c(ctx, static_cast<std::uint32_t>(rng() % ctx.order()));
        if (e == -pole && c.is_zero()) c = fq::one(ctx);
        terms.emplace_back(e, c);
    }
    return fq_series::from_terms(ctx, terms);
}

verdict criterion7(const std::vector<cli::grid_case>& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // 20 data spread over the grid with modest conductor
    std::vector<const cli::grid_case*> pool;
    for (const auto& g : grid)
        if (g.theorem <= 40 && g.nu.size() <= 3) pool.push_back(&g);
    std::vector<const cli::grid_case*> data;
    const std::size_t want = 24;
    for (std::size_t k = 0; k < want && !pool.empty(); ++k) data.push_back(pool[k * pool.size() / want]);

    int zero = 0, trials = 0, witnesses = 0, failures = 0;
    std::string first;
    for (const auto* g : data) {
        const auto& ctx = coeff::field_context::get(g->p, 1);
        std::vector<fq_series> u;
        for (int v : g->nu) u.push_back(fq_series::monomial(fq::one(ctx), -v));
        try {
            const auto r = localsym::modulus_vanishing_test(u, g->theorem, 50, rng, 64);
            zero += r.zero_symbols;
            trials += r.trials;
            witnesses += r.witness_found;
        } catch (const std::exception& e) {
            if (!failures++) first = case_name(*g) + ": " + e.what();
        }
    }

    int triples = 0, bad = 0;
    const std::vector<std::tuple<int, int, int>> shapes{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 1}, {5, 1, 2}, {2, 1, 3}};
    while (triples < 240) {
        for (auto [p, f, n] : shapes) {
            const auto& ctx = coeff::field_context::get(p, f);
            const auto& tb = witt::table::get(p, n);
            std::vector<fq_series> u, u2;
            for (int i = 0; i < n; ++i) {
                u.push_back(random_u(ctx, static_cast<int>(rng() % 5), rng));
                u2.push_back(random_u(ctx, static_cast<int>(rng() % 5), rng));
            }
            const auto alpha = localsym::random_one_unit(ctx, 1, static_cast<int>(rng() % 4), rng);
            const auto beta = localsym::random_one_unit(ctx, 1, static_cast<int>(rng() % 4), rng);
            const auto sa = localsym::residue_vector({u, alpha, 0});
            const auto sb = localsym::residue_vector({u, beta, 0});
            bool ok = localsym::residue_vector({u, fq_series::mul(alpha, beta), 0}).w == witt::add(tb, sa.w, sb.w);
            ok = ok && localsym::residue_vector({witt::add(tb, u, u2), alpha, 0}).w ==
                           witt::add(tb, sa.w, localsym::residue_vector({u2, alpha, 0}).w);
            ok = ok && localsym::residue_vector({u, alpha, 0}, 1 + rng()).w == sa.w;
            ok = ok && localsym::residue_vector({u, alpha, 3 * n + 1}, 1 + rng()).w == sa.w;
            ++triples;
            if (!ok) ++bad;
        }
    }
    verdict v;
    v.pass = failures == 0 && zero == trials && data.size() >= 20 && bad == 0;
    std::ostringstream os;
    os << data.size() << " data: " << zero << "/" << trials << " symbols vanish above M; witnesses at order M found for "
       << witnesses << "/" << data.size() << "; bilinearity and lift independence on " << triples - bad << "/"
       << triples << " triples";
    if (failures) os << "; " << failures << " vanishing failures, first " << first;
    v.detail = os.str();
    return v;
}

verdict criterion8(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    std::string first;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok && !failures++) first = what;
    };
    for (int p : {2, 3})
        for (int n = 1; n <= 4; ++n) {
            note(wbar::pushforward_recursion_check(p, n).ok, "section recursion p=" + std::to_string(p));
            for (long long m = 0; m <= 3; ++m)
                note(wbar::section_dim(p, n, m) ==
                         static_cast<long>(wbar::monomials_of_weight(p, n, m * coeff::ipow(p, n - 1)).size()),
                     "section count");
        }
    int monomials = 0;
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 5; ++n)
            for (unsigned msk = 0; msk < (1u << n); ++msk, ++monomials) {
                wbar::chow_class b{p, n, {{msk, 1}}};
                note(wbar::psi_pullback(b) == b.scale(static_cast<long>(coeff::ipow(p, __builtin_popcount(msk)))),
                     "pullback " + b.to_string());
            }
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 5; ++n) note(wbar::make_divisor_ledger(p, n).ok(), "ledger n=" + std::to_string(n));
    for (int p : {2, 3})
        for (int n = 0; n <= 2; ++n) {
            const auto r = wbar::psi_check(coeff::field_context::get(p, 1), n);
            note(r.homogeneous && r.dehomogenizes_to_asw && r.equivariant, "psi p=" + std::to_string(p));
        }
    int pairs = 0;
    for (auto [p, f, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {2, 1, 3}}) {
        const auto& ctx = coeff::field_context::get(p, f);
        const auto& tb = witt::table::get(p, n);
        const auto mons = wbar::monomials_of_weight(p, n, coeff::ipow(p, n - 1) * 2);
        for (int t = 0; t < 15; ++t, ++pairs) {
            std::vector<poly::fq_poly::term> terms;
            for (const auto& e : mons) {
                const fq c(ctx, static_cast<std::uint32_t>(rng() % ctx.order()));
                poly::exponents ex{};
                for (std::size_t i = 0; i < e.size(); ++i) ex[i] = static_cast<std::uint16_t>(e[i]);
                if (!c.is_zero()) terms.emplace_back(ex, c);
            }
            const wbar::graded_poly g{p, n, coeff::ipow(p, n - 1) * 2, poly::fq_poly::from_terms(terms)};
            const auto a = random_fq_vector(ctx, n, rng), b = random_fq_vector(ctx, n, rng);
            note(wbar::group_action_on_sections(witt::add(tb, a, b), g).f ==
                     wbar::group_action_on_sections(a, wbar::group_action_on_sections(b, g)).f,
                 "action composition p=" + std::to_string(p));
        }
    }
    verdict v;
    v.pass = failures == 0;
    v.detail = v.pass ? "section recursion (p in {2,3}, n <= 4), Psi* = p^c on " + std::to_string(monomials) +
                            " basis monomials (n <= 5), ledger telescoping (n <= 5), Psi homogeneity and T = 1 identity, " +
                            "action composition on " + std::to_string(pairs) + " random pairs"
                      : std::to_string(failures) + " failures, first " + first;
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    std::uint64_t seed = 20261017;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--full")) full = true;
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
        else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::stoi(argv[++i]);
    }

    const auto cases = acceptance_grid(full);
    double wall = 0;
    const auto grid = run_grid(cases, jobs, wall);
    double single = 0;
    for (const auto& g : grid) single += g.seconds;

    std::vector<verdict> v(10);
    v[1] = criterion1(grid, single);
    v[2] = over_grid(grid, [](const auto& g) { return g.oracle == g.theorem; }, "section-degree oracle = closed formula");
    v[3] = over_grid(grid, [](const auto& g) { return g.hasse_arf; }, "upper breaks integral");
    v[4] = over_grid(grid, [](const auto& g) { return g.invariants; },
                     "Prop. condor, Cor. tele, different = mu_n + p^n - 1");
    v[5] = criterion5(seed);
    v[6] = over_grid(grid, [](const auto& g) { return g.standard_form && (!g.unique_max || g.claim); },
                     "z - z~ = h^p - h and -v(z~_n) = p^n M - mu_n");
    v[7] = criterion7(grid, seed + 1);
    v[8] = criterion8(seed + 2);
    v[9] = over_grid(grid, [](const auto& g) { return g.rerun && g.stable; }, "invariants unchanged at double budget");

    bool all = true;
    for (int k = 1; k <= 9; ++k) {
        print(k, v[k]);
        all = all && v[k].pass;
    }
    std::cout << (all ? "all criteria pass" : "SOME CRITERIA FAIL") << " (" << grid.size() << " grid cases, seed "
              << seed << ", " << wall << " s wall)" << std::endl;
    return all ? 0 : 1;
}

#include "asw/poly.hpp"

namespace asw::poly {

int_poly divide_exact(const int_poly& f, const mpz_class& d) {
    std::vector<int_poly::term> out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            fail(error_code::integrality_failure,
                 "coefficient " + c.get_str() + " not divisible by " + d.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.emplace_back(e, std::move(q));
    }
    return int_poly::from_terms(std::move(out));
}

fq_poly reduce_mod_p(const int_poly& f, const coeff::field_context& ctx) {
    std::vector<fq_poly::term> out;
    for (const auto& [e, c] : f.terms()) {
        auto r = mpz_fdiv_ui(c.get_mpz_t(), ctx.p());
        if (r) out.emplace_back(e, coeff::fq::from_int(ctx, static_cast<std::int64_t>(r)));
    }
    return fq_poly::from_terms(std::move(out));
}

}  // namespace asw::poly

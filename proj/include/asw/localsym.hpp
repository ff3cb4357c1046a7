#ifndef ASW_LOCALSYM_HPP
#define ASW_LOCALSYM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "asw/series.hpp"

namespace asw::localsym {

using coeff::fq;
using coeff::gr;

struct symbol_input {
    std::vector<fq_series> u;  // Witt vector of Laurent series
    fq_series alpha;           // unit power series
    int m = 0;                 // lift precision; 0 means 2n + 2
};

struct symbol_result {
    int m = 0;
    std::vector<gr> residues;  // r_j = Res(Phi_j(u~) d alpha~ / alpha~)
    std::vector<gr> w_lift;    // ghost inverse over GR(p^m, f); w_j is meaningful mod p^(m-j)
    std::vector<fq> w;         // the symbol in W_n(F_q)
    bool is_zero() const;
};

// Coefficient-wise lift; lift_seed != 0 perturbs every lifted coefficient by p * (random) and adds
// p-divisible terms that do not change the pole order.
gr_series lift_series(const fq_series& x, const coeff::galois_ring_context& ring, std::uint64_t lift_seed = 0,
                      bool is_unit_series = false);

symbol_result residue_vector(const symbol_input& inp, std::uint64_t lift_seed = 0);

// alpha = 1 + s^order (c_0 + c_1 s + ... + c_degree s^degree), c_0 != 0.
fq_series random_one_unit(const coeff::field_context& ctx, int order, int degree, std::mt19937_64& rng);

struct vanishing_report {
    long long M = 0;
    int trials = 0;
    int zero_symbols = 0;
    bool witness_found = false;
    int witness_candidates = 0;  // alphas tried at order exactly M
    fq_series witness;
    std::vector<fq> witness_symbol;
};

// Symbols of `trials` random alpha with 1 - alpha of order >= M + 1 must vanish (vanishing_failure otherwise);
// then searches alpha = 1 + c s^M + d s^(M+1) + ... for a nonzero symbol within `witness_cap` candidates.
vanishing_report modulus_vanishing_test(const std::vector<fq_series>& u, long long M, int trials, std::mt19937_64& rng,
                                        int witness_cap = 256);

}  // namespace asw::localsym

#endif  // ASW_LOCALSYM_HPP

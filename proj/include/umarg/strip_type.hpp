#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umarg/kronecker.hpp"
#include "umarg/partition.hpp"

namespace umarg {

// The two strictly decreasing chains lam(1) > ... > lam(r) > empty and
// mu(1) > ... > mu(r) > empty together with nu_i = |lam(i) cap mu(i)|.
// Chains include the trailing empty partition.
struct StripDerivation {
    std::vector<Partition> lam_chain;
    std::vector<Partition> mu_chain;
    Partition nu;
};

// Deterministic strip-type derivation for rectangular lam, mu of equal
// size: repeatedly split off the intersection. All intermediate shapes stay
// rectangular and the resulting nu is the unique strip-type partition for
// the pair, which is also the lex-maximal element of Phi(lam,mu).
StripDerivation rect_strip_type(const Partition& lam, const Partition& mu);

// Check the defining LR-positivity of a derivation:
// c^{lam(i)}_{lam(i) cap mu(i), lam(i+1)} > 0 and likewise on the mu side.
bool strip_chain_lr_valid(const StripDerivation& d);

struct MaxLexResult {
    RationalSpectrum spectrum;   // nu / k
    Partition nu;
    std::int64_t k;              // lcm(n, m)
    std::size_t rank;            // length(nu)
};

// Lex-maximal spectrum over all states with margins I_n/n and I_m/m.
MaxLexResult max_lex_spectrum(int n, int m);

// Comparison of the max-lex state's rank against a lower-rank admissible
// witness; refutes the minimal-rank conjecture when the witness checks out.
// witness_g is empty when the oracle budget did not allow verification.
struct CounterexampleReport {
    std::string family;          // "2xm" or "adjacent"
    int n;
    int m;
    Partition maxlex_nu;
    std::size_t maxlex_rank;
    Partition witness_gamma;
    std::optional<std::uint64_t> witness_g;
    std::size_t min_rank_bound;
    bool refutes_conjecture;
};

// Margins I_2/2 and I_m/m for odd m = 2k+1 >= 3: max-lex nu = (4^k,1,1) of
// rank k+2 versus witness gamma = (4^{k-1},3,3) of rank k+1 (the minimum).
CounterexampleReport counterexample_two_by_m(int m, int budget = kDefaultKronBudget);

// Margins I_n/n and I_{n+1}/(n+1) for n >= 2: max-lex nu = (n^2,1^n) of
// rank n+1 versus the two-row witness gamma of rank 2 (the minimum).
CounterexampleReport counterexample_n_nplus1(int n, int budget = kDefaultKronBudget);

// Whether a p x n nonnegative integer matrix exists whose rows each sum to
// n*a and whose nonzero entries are exactly the parts of nu.
bool corollary_weight_condition(int p, int n, int a, const Partition& nu);

} // namespace umarg

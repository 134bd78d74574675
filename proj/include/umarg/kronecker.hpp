#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "umarg/partition.hpp"

namespace umarg {

// Default size budgets for the brute-force character oracle. p(n) growth
// makes unbounded inputs a foot-gun; larger sizes raise BudgetExceeded.
inline constexpr int kDefaultKronBudget = 20;
inline constexpr int kDefaultPhiBudget = 12;
// Above this size the exact __int128 class-sum accumulator could overflow;
// requests beyond it are rejected outright regardless of budget.
inline constexpr int kOracleHardCap = 23;

struct ConjugacyClass {
    Partition cycle_type;
    // z_rho = prod i^{m_i} * m_i!; 128-bit because the identity class of
    // S_21 already overflows 64 bits and the oracle is exact up to size 23.
    __int128 centralizer_order;
};

// Conjugacy-class data of S_n plus a process-wide memo of character values.
// Tables are built once per n and shared; character lookups are safe for
// concurrent use and idempotent.
class CharacterTable {
public:
    static std::shared_ptr<const CharacterTable> for_size(int n);

    int n() const noexcept { return n_; }
    const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

private:
    explicit CharacterTable(int n);
    int n_;
    std::vector<ConjugacyClass> classes_;
};

// chi^lam(rho) by the Murnaghan-Nakayama border-strip recursion, memoized
// on (shape, remaining cycle type). Requires |lam| == |rho|.
std::int64_t character_value(const Partition& lam, const Partition& rho);

// g(lam,mu;nu) = sum over classes of chi^lam * chi^mu * chi^nu / z_rho,
// accumulated exactly; the class sum must divide n! or the oracle is
// defective (checked).
std::uint64_t kronecker_coefficient(const Partition& lam, const Partition& mu,
                                    const Partition& nu,
                                    int budget = kDefaultKronBudget);

// g(lam, mu^t; nu^t); equals kronecker_coefficient(lam,mu,nu) by the
// transposition symmetry of Kronecker coefficients.
std::uint64_t transposed_kronecker(const Partition& lam, const Partition& mu,
                                   const Partition& nu,
                                   int budget = kDefaultKronBudget);

struct PhiMember {
    Partition nu;
    std::uint64_t g;
};

// All nu with g(lam,mu;nu) != 0, sorted decreasing-lexicographically, so
// members.front() is the lex-maximal admissible partition.
struct PhiSet {
    Partition lam;
    Partition mu;
    std::vector<PhiMember> members;
};

PhiSet phi_set(const Partition& lam, const Partition& mu,
               int budget = kDefaultPhiBudget);

// Rational joint-state spectra admissible for uniform margins I_n/n, I_m/m
// at stretching factor ell: the normalizations nu/(ell*k) over
// Phi(ell*lam, ell*mu) with k = lcm(n,m), lam = ((k/n)^n), mu = ((k/m)^m).
std::vector<RationalSpectrum> rational_spectra_slice(int n, int m, int ell,
                                                     int budget = kDefaultPhiBudget);

// Optional on-disk memo of character values. Text format, one triple per
// line: "<lam> <rho> <value>" with partitions in bracket form, e.g.
// "[2,1] [1,1,1] 2". Returns the number of entries read/written.
std::size_t load_character_cache(const std::string& path);
std::size_t save_character_cache(const std::string& path);

} // namespace umarg

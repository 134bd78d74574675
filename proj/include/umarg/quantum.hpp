#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "umarg/linalg.hpp"

namespace umarg {

inline constexpr double kMarginTol = 1e-9;
inline constexpr double kSpectrumTol = 1e-9;
inline constexpr double kRankTolDefault = 1e-9;
inline constexpr double kNullspaceTol = 1e-8;
inline constexpr double kSchurEqTol = 1e-10;
inline constexpr double kGapReliabilityTol = 1e-7;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

// Bipartite state on C^n (x) C^m with the A-major index (a,b) -> a*m + b.
struct DensityOperator {
    int dim_a = 0;   // n
    int dim_b = 0;   // m
    ComplexMatrix matrix;
};

// Hermitian within kHermTol, trace 1 within kTraceTol, eigenvalues down to
// -kPsdTol. Throws NotHermitian or DomainError.
void validate_density(const DensityOperator& rho);

// Nonnegative mixing weights. Shape m x n for the full construction
// (rows sum 1/m), p x n with p = m/n for the divisible one (rows sum 1/p).
struct WeightMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> w;   // row-major

    double& at(std::size_t r, std::size_t c) { return w[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return w[r * cols + c]; }
    std::size_t nonzero_count() const;
    std::vector<double> sorted_entries() const;   // decreasing, zeros included
};

enum class WeightMode { Full, Divisible };

// Shape and row-sum invariants for the given mode; throws
// WeightConstraintViolation.
void validate_weight(int n, int m, const WeightMatrix& w, WeightMode mode);

struct RankBounds {
    std::size_t lower;   // ceil(k_b / k_a)
    std::size_t upper;   // k_a * k_b
};

// m x m cyclic shift X|i> = |i+1 mod m>.
ComplexMatrix weyl_x(int m);
// m x m diagonal Z_n|i> = w^i|i>, w = exp(2 pi i / n); requires n <= m.
ComplexMatrix weyl_z(int n, int m);

// |psi_ij> = (I_n (x) X^i Z_n^j)|psi_00>, psi_00 = n^{-1/2} sum_s |s>|s>.
// 0 <= i < m, 0 <= j < n. Length-nm unit vector.
std::vector<Complex> psi_state(int n, int m, int i, int j);

// rho = sum_{i<m, j<n} W[i,j] |psi_ij><psi_ij|. Margins are I_n/n and
// I_m/m; the rank is the number of nonzero weights and the spectrum is the
// sorted weight list.
DensityOperator construct_full(int n, int m, const WeightMatrix& w);

// Divisible variant (n | m, p = m/n): rho = sum_{i<p, j<n} W[i,j]
// |psi_{in,j}><psi_{in,j}|, reaching ranks down to m/n.
DensityOperator construct_divisible(int n, int m, const WeightMatrix& w);

// Canonical weight matrix with exactly k nonzero entries: row r takes
// q_r = min(n, k_left - rows_after) leading entries, all rowsum/q_r.
WeightMatrix weight_for_rank(int n, int m, std::int64_t k, WeightMode mode);

ComplexMatrix partial_trace_a(const DensityOperator& rho);   // m x m, traces out A
ComplexMatrix partial_trace_b(const DensityOperator& rho);   // n x n, traces out B

// Eigenvalues sorted decreasing.
std::vector<double> spectrum(const ComplexMatrix& h);

// Count of eigenvalues above tol * max(1, lambda_max).
std::size_t numerical_rank(const ComplexMatrix& h, double tol = kRankTolDefault);

// Bounds ceil(k_b/k_a) <= rank <= k_a*k_b for any joint state whose
// margins have ranks k_a <= k_b.
RankBounds rank_bounds(std::int64_t k_a, std::int64_t k_b);

struct SchurResult {
    bool majorized;   // sorted diagonal majorized by spectrum
    bool equal;       // diagonal == spectrum as multisets, i.e. H diagonal
};

SchurResult schur_check(const ComplexMatrix& h);

struct ExtremalityResult {
    bool is_extreme;
    std::size_t nullity;
    std::size_t rank;
    double eigen_gap;   // gap at the rank cutoff; infinity when full rank
    bool reliable;      // eigen_gap >= kGapReliabilityTol
};

// Extreme-point test in the set of states with the margins of rho: rho is
// extreme iff no nonzero Hermitian H on range(rho) has tr_B(VHV+) = 0 and
// tr_A(VHV+) = 0, V an isometry onto the range. Reports the nullity of
// that real-linear map (singular values below kNullspaceTol).
ExtremalityResult extremality_check(const DensityOperator& rho, double rank_tol = kRankTolDefault);

} // namespace umarg

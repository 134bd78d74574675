#include "umarg/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "umarg/errors.hpp"

namespace umarg {

std::size_t WeightMatrix::nonzero_count() const {
    std::size_t k = 0;
    for (double x : w)
        if (x != 0.0) ++k;
    return k;
}

std::vector<double> WeightMatrix::sorted_entries() const {
    std::vector<double> out(w);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

void validate_weight(int n, int m, const WeightMatrix& w, WeightMode mode) {
    if (n < 1 || m < 1) throw WeightConstraintViolation("dimensions must be positive");
    std::size_t want_rows;
    double row_target;
    if (mode == WeightMode::Full) {
        want_rows = static_cast<std::size_t>(m);
        row_target = 1.0 / m;
    } else {
        if (m % n != 0)
            throw DivisibilityError("n = " + std::to_string(n) + " does not divide m = " +
                                    std::to_string(m));
        want_rows = static_cast<std::size_t>(m / n);
        row_target = static_cast<double>(n) / m;
    }
    if (w.rows != want_rows || w.cols != static_cast<std::size_t>(n))
        throw WeightConstraintViolation(
            "weight matrix must be " + std::to_string(want_rows) + "x" + std::to_string(n) +
            ", got " + std::to_string(w.rows) + "x" + std::to_string(w.cols));
    if (w.w.size() != w.rows * w.cols)
        throw WeightConstraintViolation("entry count does not match shape");

    double total = 0.0;
    for (std::size_t r = 0; r < w.rows; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < w.cols; ++c) {
            const double x = w.at(r, c);
            if (!std::isfinite(x) || x < 0.0)
                throw WeightConstraintViolation("entries must be finite and nonnegative");
            row += x;
        }
        if (std::abs(row - row_target) > kTraceTol)
            throw WeightConstraintViolation("row " + std::to_string(r) + " sums to " +
                                            std::to_string(row) + ", expected " +
                                            std::to_string(row_target));
        total += row;
    }
    if (std::abs(total - 1.0) > kTraceTol)
        throw WeightConstraintViolation("total weight is not 1");
}

ComplexMatrix weyl_x(int m) {
    if (m < 1) throw DomainError("m must be positive");
    ComplexMatrix x(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) x(static_cast<std::size_t>((i + 1) % m), static_cast<std::size_t>(i)) = 1.0;
    return x;
}

ComplexMatrix weyl_z(int n, int m) {
    if (n < 1) throw DomainError("n must be positive");
    if (n > m) throw DomainError("requires n <= m");
    ComplexMatrix z(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n;
        z(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = std::polar(1.0, theta);
    }
    return z;
}

std::vector<Complex> psi_state(int n, int m, int i, int j) {
    if (n < 1 || m < n) throw DomainError("requires 1 <= n <= m");
    if (i < 0 || i >= m || j < 0 || j >= n)
        throw IndexOutOfRange("psi index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside [0," + std::to_string(m - 1) + "]x[0," +
                              std::to_string(n - 1) + "]");
    std::vector<Complex> v(static_cast<std::size_t>(n) * m);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int s = 0; s < n; ++s) {
        const double theta = 2.0 * std::numbers::pi * j * s / n;
        v[static_cast<std::size_t>(s) * m + (s + i) % m] = std::polar(amp, theta);
    }
    return v;
}

namespace {

// rho += weight * |psi><psi| over the n-element support of psi.
void add_projector(ComplexMatrix& rho, const std::vector<Complex>& psi, double weight) {
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < psi.size(); ++x)
        if (psi[x] != Complex{}) support.push_back(x);
    for (std::size_t x : support)
        for (std::size_t y : support) rho(x, y) += weight * psi[x] * std::conj(psi[y]);
}

} // namespace

DensityOperator construct_full(int n, int m, const WeightMatrix& w) {
    validate_weight(n, m, w, WeightMode::Full);
    const std::size_t d = static_cast<std::size_t>(n) * m;
    DensityOperator rho{n, m, ComplexMatrix(d, d)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const double weight = w.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (weight == 0.0) continue;
            add_projector(rho.matrix, psi_state(n, m, i, j), weight);
        }
    return rho;
}

DensityOperator construct_divisible(int n, int m, const WeightMatrix& w) {
    if (m % n != 0)
        throw DivisibilityError("n = " + std::to_string(n) + " does not divide m = " +
                                std::to_string(m));
    validate_weight(n, m, w, WeightMode::Divisible);
    const int p = m / n;
    const std::size_t d = static_cast<std::size_t>(n) * m;
    DensityOperator rho{n, m, ComplexMatrix(d, d)};
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            const double weight = w.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (weight == 0.0) continue;
            add_projector(rho.matrix, psi_state(n, m, i * n, j), weight);
        }
    return rho;
}

WeightMatrix weight_for_rank(int n, int m, std::int64_t k, WeightMode mode) {
    if (n < 1 || m < 1) throw DomainError("dimensions must be positive");
    std::int64_t rows;
    if (mode == WeightMode::Full) {
        rows = m;
    } else {
        if (m % n != 0)
            throw DivisibilityError("n = " + std::to_string(n) + " does not divide m = " +
                                    std::to_string(m));
        rows = m / n;
    }
    if (k < rows || k > rows * n)
        throw RankOutOfRange("k = " + std::to_string(k) + " outside [" + std::to_string(rows) +
                             "," + std::to_string(rows * n) + "]");

    WeightMatrix w;
    w.rows = static_cast<std::size_t>(rows);
    w.cols = static_cast<std::size_t>(n);
    w.w.assign(w.rows * w.cols, 0.0);
    const double row_sum = 1.0 / static_cast<double>(rows);
    std::int64_t remaining = k;
    for (std::int64_t r = 0; r < rows; ++r) {
        const std::int64_t after = rows - 1 - r;
        const std::int64_t q = std::min<std::int64_t>(n, remaining - after);
        for (std::int64_t c = 0; c < q; ++c)
            w.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                row_sum / static_cast<double>(q);
        remaining -= q;
    }
    return w;
}

ComplexMatrix partial_trace_a(const DensityOperator& rho) {
    const std::size_t n = static_cast<std::size_t>(rho.dim_a);
    const std::size_t m = static_cast<std::size_t>(rho.dim_b);
    ComplexMatrix out(m, m);
    for (std::size_t b1 = 0; b1 < m; ++b1)
        for (std::size_t b2 = 0; b2 < m; ++b2)
            for (std::size_t a = 0; a < n; ++a) out(b1, b2) += rho.matrix(a * m + b1, a * m + b2);
    return out;
}

ComplexMatrix partial_trace_b(const DensityOperator& rho) {
    const std::size_t n = static_cast<std::size_t>(rho.dim_a);
    const std::size_t m = static_cast<std::size_t>(rho.dim_b);
    ComplexMatrix out(n, n);
    for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t b = 0; b < m; ++b) out(a1, a2) += rho.matrix(a1 * m + b, a2 * m + b);
    return out;
}

std::vector<double> spectrum(const ComplexMatrix& h) { return eigensystem(h).values; }

std::size_t numerical_rank(const ComplexMatrix& h, double tol) {
    const std::vector<double> ev = spectrum(h);
    if (ev.empty()) return 0;
    const double cutoff = tol * std::max(1.0, ev.front());
    std::size_t r = 0;
    for (double v : ev)
        if (v > cutoff) ++r;
    return r;
}

RankBounds rank_bounds(std::int64_t k_a, std::int64_t k_b) {
    if (k_a < 1 || k_a > k_b) throw DomainError("requires 1 <= k_a <= k_b");
    return RankBounds{static_cast<std::size_t>((k_b + k_a - 1) / k_a),
                      static_cast<std::size_t>(k_a * k_b)};
}

SchurResult schur_check(const ComplexMatrix& h) {
    const EigenSystem es = eigensystem(h);
    std::vector<double> diag(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) diag[i] = h(i, i).real();
    std::sort(diag.begin(), diag.end(), std::greater<>());

    bool majorized = true;
    double pd = 0.0, pe = 0.0;
    for (std::size_t t = 0; t < diag.size(); ++t) {
        pd += diag[t];
        pe += es.values[t];
        if (pd > pe + kSpectrumTol) majorized = false;
    }
    return SchurResult{majorized, h.offdiag_norm() < kSchurEqTol};
}

void validate_density(const DensityOperator& rho) {
    if (rho.dim_a < 1 || rho.dim_b < 1) throw DomainError("local dimensions must be positive");
    const std::size_t d = static_cast<std::size_t>(rho.dim_a) * rho.dim_b;
    if (rho.matrix.rows() != d || rho.matrix.cols() != d)
        throw DomainError("matrix shape does not match dim_a * dim_b");
    if (!rho.matrix.all_finite()) throw NotHermitian("matrix has non-finite entries");
    if (rho.matrix.hermiticity_defect() > kHermTol)
        throw NotHermitian("hermiticity defect exceeds 1e-12");
    if (std::abs(rho.matrix.trace() - Complex{1.0, 0.0}) > kTraceTol)
        throw DomainError("trace differs from 1 by more than 1e-12");
    const std::vector<double> ev = spectrum(rho.matrix);
    if (!ev.empty() && ev.back() < -kPsdTol)
        throw DomainError("negative eigenvalue below -1e-10");
}

namespace {

// Coordinates of a d x d (near-)Hermitian matrix in the orthonormal basis
// {E_pp} u {(E_pq + E_qp)/sqrt2} u {i(E_pq - E_qp)/sqrt2}, p < q.
void hermitian_coords(const ComplexMatrix& h, ComplexMatrix& target, std::size_t col,
                      std::size_t row0) {
    const std::size_t d = h.rows();
    const double rt2 = std::numbers::sqrt2;
    std::size_t r = row0;
    for (std::size_t p = 0; p < d; ++p) target(r++, col) = h(p, p).real();
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
            target(r++, col) = rt2 * h(p, q).real();
            target(r++, col) = rt2 * h(p, q).imag();
        }
}

} // namespace

ExtremalityResult extremality_check(const DensityOperator& rho, double rank_tol) {
    validate_density(rho);
    const std::size_t n = static_cast<std::size_t>(rho.dim_a);
    const std::size_t m = static_cast<std::size_t>(rho.dim_b);
    const std::size_t d = n * m;

    const EigenSystem es = eigensystem(rho.matrix);
    const double cutoff = rank_tol * std::max(1.0, es.values.front());
    std::size_t r = 0;
    for (double v : es.values)
        if (v > cutoff) ++r;

    double gap = std::numeric_limits<double>::infinity();
    if (r < d) gap = es.values[r == 0 ? 0 : r - 1] - es.values[r];

    // Isometry onto the range.
    ComplexMatrix v(d, r);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < d; ++i) v(i, c) = es.vectors(i, c);
    const ComplexMatrix vdag = v.conj_transpose();

    // Real matrix of H -> (tr_B(VHV+), tr_A(VHV+)) on r^2 Hermitian
    // coordinates; both sides use orthonormal coordinate systems so the
    // singular values are basis-independent.
    const std::size_t cols = r * r;
    const std::size_t out_rows = n * n + m * m;
    ComplexMatrix map(out_rows, cols);

    std::size_t col = 0;
    const double rt2inv = 1.0 / std::numbers::sqrt2;
    auto emit = [&](const ComplexMatrix& basis) {
        const ComplexMatrix lifted = v * basis * vdag;
        DensityOperator tmp{rho.dim_a, rho.dim_b, lifted};
        hermitian_coords(partial_trace_b(tmp), map, col, 0);
        hermitian_coords(partial_trace_a(tmp), map, col, n * n);
        ++col;
    };
    for (std::size_t p = 0; p < r; ++p) {
        ComplexMatrix b(r, r);
        b(p, p) = 1.0;
        emit(b);
    }
    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = p + 1; q < r; ++q) {
            ComplexMatrix b(r, r);
            b(p, q) = rt2inv;
            b(q, p) = rt2inv;
            emit(b);
            ComplexMatrix c(r, r);
            c(p, q) = Complex{0.0, rt2inv};
            c(q, p) = Complex{0.0, -rt2inv};
            emit(c);
        }

    const std::vector<double> sv = singular_values(map);
    std::size_t large = 0;
    for (double s : sv)
        if (s >= kNullspaceTol) ++large;
    const std::size_t nullity = cols - large;

    ExtremalityResult out;
    out.is_extreme = nullity == 0;
    out.nullity = nullity;
    out.rank = r;
    out.eigen_gap = gap;
    out.reliable = gap >= kGapReliabilityTol;
    return out;
}

} // namespace umarg

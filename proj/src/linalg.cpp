#include "umarg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "umarg/errors.hpp"

namespace umarg {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::conj_transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

double ComplexMatrix::offdiag_norm() const {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c) s += std::norm((*this)(r, c));
    return std::sqrt(s);
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
    for (Complex& z : data_) z *= s;
    return *this;
}

namespace {

// One complex Jacobi rotation zeroing a(p,q). The 2x2 block is reduced to a
// real symmetric one by the phase of a(p,q), then rotated classically:
//   U(p,p) = c e^{i phi},  U(p,q) = s e^{i phi},  U(q,p) = -s,  U(q,q) = c.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;   // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t d = a.rows();
    // A <- U^dagger A U, applied as column then row updates.
    for (std::size_t i = 0; i < d; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = aip * (c * phase) - aiq * s;
        a(i, q) = aip * (s * phase) + aiq * c;
    }
    for (std::size_t j = 0; j < d; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = apj * (c * std::conj(phase)) - aqj * s;
        a(q, j) = apj * (s * std::conj(phase)) + aqj * c;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex{a(p, p).real(), 0.0};
    a(q, q) = Complex{a(q, q).real(), 0.0};

    for (std::size_t i = 0; i < d; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = vip * (c * phase) - viq * s;
        v(i, q) = vip * (s * phase) + viq * c;
    }
}

} // namespace

EigenSystem eigensystem(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw NotHermitian("matrix is not square");
    if (!h.all_finite()) throw NotHermitian("matrix has non-finite entries");
    if (h.hermiticity_defect() > kHermTol)
        throw NotHermitian("hermiticity defect exceeds 1e-12");

    const std::size_t d = h.rows();
    ComplexMatrix a = h;
    // Symmetrize away the sub-tolerance defect so rotations see an exactly
    // Hermitian matrix.
    for (std::size_t r = 0; r < d; ++r) {
        a(r, r) = Complex{a(r, r).real(), 0.0};
        for (std::size_t c = r + 1; c < d; ++c) {
            const Complex z = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = z;
            a(c, r) = std::conj(z);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(d);

    bool converged = a.offdiag_norm() < kJacobiOffTol;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) rotate(a, v, p, q);
        converged = a.offdiag_norm() < kJacobiOffTol;
    }
    if (!converged)
        throw ConvergenceFailure("Jacobi sweeps exhausted without reaching 1e-12 off-diagonal norm");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    EigenSystem out;
    out.values.resize(d);
    out.vectors = ComplexMatrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < d; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    ComplexMatrix emb(r + c, r + c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            emb(i, r + j) = m(i, j);
            emb(r + j, i) = std::conj(m(i, j));
        }
    EigenSystem es = eigensystem(emb);

    // Spectrum of the embedding is {+sigma_i, -sigma_i} plus |r - c| zeros;
    // the top min(r, c) eigenvalues are the singular values.
    std::vector<double> sv(es.values.begin(), es.values.begin() + std::min(r, c));
    for (double& s : sv) s = std::max(s, 0.0);
    return sv;
}

} // namespace umarg

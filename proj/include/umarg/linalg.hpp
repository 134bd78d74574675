#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace umarg {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Sized for the nm <= 64 regime this
// project works in; no sparsity, no views.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix conj_transpose() const;
    bool all_finite() const;
    double frobenius_norm() const;
    // Largest entrywise |A - A^dagger|.
    double hermiticity_defect() const;
    // Frobenius norm of the strictly off-diagonal part.
    double offdiag_norm() const;
    Complex trace() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    ComplexMatrix& operator*=(double s);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline constexpr double kHermTol = 1e-12;
inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct EigenSystem {
    std::vector<double> values;   // sorted decreasing
    ComplexMatrix vectors;        // column i pairs with values[i]
};

// Cyclic Jacobi for Hermitian matrices: sweeps until the off-diagonal
// Frobenius norm drops below kJacobiOffTol, capped at kJacobiMaxSweeps.
// Throws NotHermitian on bad input and ConvergenceFailure at the cap.
EigenSystem eigensystem(const ComplexMatrix& h);

// Singular values of a general matrix, sorted decreasing, via the Jacobi
// solver on the Hermitian embedding [[0, A], [A^dagger, 0]]. Avoids the
// squared-condition loss of A^dagger A, which matters at the 1e-8
// nullspace threshold downstream.
std::vector<double> singular_values(const ComplexMatrix& a);

} // namespace umarg

#pragma once

#include <complex>
#include <vector>

#include "nrpi/errors.hpp"

namespace nrpi {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense n-by-n complex matrix, row-major storage.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int n);
    ComplexMatrix(int n, std::vector<Complex> row_major_entries);

    static ComplexMatrix identity(int n);

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<Complex>& entries() const { return e_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;

    /// Largest entry magnitude.
    double max_abs() const;

    ComplexVector apply(const ComplexVector& x) const;  // A x
    ComplexVector column(int j) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    int n_;
    std::vector<Complex> e_;
};

/// Eigen decomposition of a Hermitian matrix. values are sorted descending;
/// column j of vectors pairs with values[j]; columns are orthonormal.
struct HermitianEigenResult {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Real univariate polynomial, coefficients in ascending degree order.
struct RealPolynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
};

constexpr double kDefaultTol = 1e-10;

/// (A + A*)/2
ComplexMatrix re_part(const ComplexMatrix& a);

/// i(A* - A)/2; satisfies A = re_part(A) + i*im_part(A).
ComplexMatrix im_part(const ComplexMatrix& a);

/// e^{-i theta} A
ComplexMatrix rotate(const ComplexMatrix& a, double theta);

/// Eigen decomposition by cyclic complex Jacobi rotations. Requires
/// ||H - H*||_F <= tol * ||H||_F and dim <= 64. Deterministic; ties in the
/// descending value sort are broken by the ascending index of the first
/// significant eigenvector component.
HermitianEigenResult hermitian_eigen(const ComplexMatrix& h, double tol = kDefaultTol);

/// Monic characteristic polynomial det(lambda I - H) of a Hermitian matrix,
/// by the Faddeev-LeVerrier recursion. Coefficients ascending.
RealPolynomial char_poly(const ComplexMatrix& h, double tol = kDefaultTol);

namespace detail {

/// Jacobi eigensolver without the public dimension cap (used internally for
/// the commutant linear system, where the matrix is n^2-by-n^2).
HermitianEigenResult jacobi_eigen(const ComplexMatrix& h);

double hermitian_deviation(const ComplexMatrix& a);  // ||A - A*||_F

}  // namespace detail

}  // namespace nrpi

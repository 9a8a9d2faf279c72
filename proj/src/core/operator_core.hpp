#pragma once

#include <Eigen/Dense>
#include <complex>

#include "core/errors.hpp"

namespace halfline {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Inner product convention used everywhere in this library: linear in the
// first slot, conjugate-linear in the second.
inline Complex hdot(const Vector& x, const Vector& y) { return y.dot(x); }

constexpr double kHermitianTol = 1e-10;
constexpr double kUnitaryTol = 1e-10;

// A complex spectral parameter with its imaginary part kept alongside,
// since nearly every formula branches on sign(Im lambda).
struct SpectralPoint {
  Complex lambda;
  double lambda_i;

  explicit SpectralPoint(Complex l) : lambda(l), lambda_i(l.imag()) {}
  SpectralPoint(double re, double im) : lambda(re, im), lambda_i(im) {}
};

// Hermitian coefficient of the differential expression, held together with
// its eigendecomposition A = V diag(alpha) V*. The decomposition is computed
// once at construction; every propagator and resolvent formula reduces to
// scalar exponentials in this eigenbasis.
class HermitianOperator {
 public:
  static HermitianOperator make(const Matrix& m);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }

  Vector to_eigenbasis(const Vector& x) const { return eigenvectors_.adjoint() * x; }
  Vector from_eigenbasis(const Vector& c) const { return eigenvectors_ * c; }

 private:
  HermitianOperator(Matrix m, RealVector ev, Matrix vec)
      : matrix_(std::move(m)), eigenvalues_(std::move(ev)), eigenvectors_(std::move(vec)) {}

  Matrix matrix_;
  RealVector eigenvalues_;  // ascending
  Matrix eigenvectors_;     // unitary, columns match eigenvalues_
};

// Unitary coupling between the two boundary traces.
class UnitaryParameter {
 public:
  static UnitaryParameter make(const Matrix& m);
  static UnitaryParameter phase(int dim, double phi);  // e^{i phi} I
  static UnitaryParameter identity(int dim) { return phase(dim, 0.0); }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  explicit UnitaryParameter(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

// e^{-i(lambda - A) tau} = e^{-i lambda tau} V diag(e^{i alpha_k tau}) V*.
// Unitary for real lambda; operator norm e^{Im(lambda) tau} in general.
Matrix propagator(const HermitianOperator& A, const SpectralPoint& lambda, double tau);

}  // namespace halfline

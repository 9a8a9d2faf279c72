#include "core/operator_core.hpp"

#include <cmath>
#include <string>

namespace halfline {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::TooCloseToRealAxis: return "TooCloseToRealAxis";
    case ErrorCode::DegenerateKernel: return "DegenerateKernel";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::WrongHalfPlane: return "WrongHalfPlane";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

HermitianOperator HermitianOperator::make(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    fail(ErrorCode::NotSquare, "operator matrix must be square and nonempty, got " +
                                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const double scale = std::max(1.0, m.norm());
  const double defect = (m - m.adjoint()).norm() / scale;
  if (defect > kHermitianTol)
    fail(ErrorCode::NotHermitian,
         "symmetry defect " + std::to_string(defect) + " exceeds tolerance");

  // Store the symmetrized matrix so the stored value is Hermitian exactly.
  Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::InvalidArgument, "eigendecomposition failed");
  return HermitianOperator(std::move(sym), es.eigenvalues(), es.eigenvectors());
}

UnitaryParameter UnitaryParameter::make(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    fail(ErrorCode::NotSquare, "coupling matrix must be square and nonempty");
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  const double defect =
      std::max((m.adjoint() * m - id).norm(), (m * m.adjoint() - id).norm());
  if (defect > kUnitaryTol)
    fail(ErrorCode::NotUnitary,
         "unitarity defect " + std::to_string(defect) + " exceeds tolerance");
  return UnitaryParameter(m);
}

UnitaryParameter UnitaryParameter::phase(int dim, double phi) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "dim must be positive");
  Matrix m = std::exp(Complex(0.0, phi)) * Matrix::Identity(dim, dim);
  return UnitaryParameter(std::move(m));
}

Matrix propagator(const HermitianOperator& A, const SpectralPoint& lambda, double tau) {
  const int n = A.dim();
  Vector diag(n);
  for (int k = 0; k < n; ++k)
    diag[k] = std::exp(Complex(0.0, -1.0) * (lambda.lambda - A.eigenvalues()[k]) * tau);
  return A.eigenvectors() * diag.asDiagonal() * A.eigenvectors().adjoint();
}

}  // namespace halfline

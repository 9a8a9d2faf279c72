#include "core/boundary_triplet.hpp"

#include <cmath>

namespace halfline {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

BoundaryPair boundary_map(const TwoComponentFunction& u) {
  const Vector ta = u.left.trace();
  const Vector tb = u.right.trace();
  BoundaryPair p;
  p.gamma1 = (ta + tb) * (Complex(0.0, -1.0) / kSqrt2);  // 1/(i sqrt 2) = -i/sqrt 2
  p.gamma2 = (ta - tb) * (1.0 / kSqrt2);
  return p;
}

TwoComponentFunction solve_boundary_targets(const Vector& F1, const Vector& F2,
                                            const HermitianOperator& A,
                                            double a, double b) {
  const int dim = A.dim();
  if (F1.size() != dim || F2.size() != dim)
    fail(ErrorCode::DimensionMismatch, "boundary targets must have length dim");
  const Complex i(0.0, 1.0);
  HalfLineFunction u1(Side::Left, a, dim);
  HalfLineFunction u2(Side::Right, b, dim);
  u1.add_atom(Complex(1.0, 0.0), (i * F1 + F2) / kSqrt2);
  u2.add_atom(Complex(-1.0, 0.0), (i * F1 - F2) / kSqrt2);
  return TwoComponentFunction(std::move(u1), std::move(u2));
}

Complex green_defect(const TwoComponentFunction& u, const TwoComponentFunction& v,
                     const HermitianOperator& A) {
  const TwoComponentFunction lu = apply_expression(u, A);
  const TwoComponentFunction lv = apply_expression(v, A);
  const Complex lhs = l2_inner(lu.left, v.left) + l2_inner(lu.right, v.right) -
                      l2_inner(u.left, lv.left) - l2_inner(u.right, lv.right);
  const BoundaryPair pu = boundary_map(u);
  const BoundaryPair pv = boundary_map(v);
  const Complex boundary_form = hdot(pu.gamma2, pv.gamma1) - hdot(pu.gamma1, pv.gamma2);
  return lhs - boundary_form;
}

DeficiencyReport deficiency_indices(Side side, const HermitianOperator& A) {
  DeficiencyReport report{side, 0, 0};
  for (int k = 0; k < A.dim(); ++k) {
    const double alpha = A.eigenvalues()[k];
    // i u' + alpha u = z u  =>  u = e^{-i(z - alpha) t}.
    const Complex rate_m = Complex(0.0, -1.0) * (Complex(0.0, -1.0) - alpha);  // z = -i
    const Complex rate_n = Complex(0.0, -1.0) * (Complex(0.0, 1.0) - alpha);   // z = +i
    const auto decays = [side](Complex rate) {
      return side == Side::Left ? rate.real() > kAtomDecayMin
                                : rate.real() < -kAtomDecayMin;
    };
    if (decays(rate_m)) ++report.m;
    if (decays(rate_n)) ++report.n;
  }
  return report;
}

GreenCheckReport green_check(const HermitianOperator& A, double a, double b,
                             int trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "trials must be positive");
  if (!(a < b)) fail(ErrorCode::InvalidArgument, "requires a < b");
  GreenCheckReport report;
  report.trials = trials;
  report.seed = seed;
  Rng rng(seed);
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    const TwoComponentFunction u = random_twocomponent(rng, A.dim(), a, b);
    const TwoComponentFunction v = random_twocomponent(rng, A.dim(), a, b);
    const double scale = 1.0 + std::sqrt(l2_norm_sq(u)) * std::sqrt(l2_norm_sq(v));
    const double rel = std::abs(green_defect(u, v, A)) / scale;
    report.max_defect = std::max(report.max_defect, rel);
    sum += rel;
  }
  report.mean_defect = sum / trials;
  report.pass = report.max_defect < report.tolerance;
  return report;
}

}  // namespace halfline

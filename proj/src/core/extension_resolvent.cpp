#include "core/extension_resolvent.hpp"

#include <cmath>
#include <string>

namespace halfline {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kNormGuard = 1e-300;

// Homogeneous rate of component k: the mode e^{-i(lambda - alpha_k)(t - anchor)}.
inline Complex homogeneous_rate(const SpectralPoint& lambda, double alpha) {
  return Complex(0.0, -1.0) * (lambda.lambda - alpha);
}

void check_kernel_denominator(Complex denom, Complex mu, Complex beta) {
  const double guard = 1e-12 * (1.0 + std::abs(mu) + std::abs(beta));
  if (std::abs(denom) < guard)
    fail(ErrorCode::DegenerateKernel,
         "input rate collides with a homogeneous mode (|mu - beta| = " +
             std::to_string(std::abs(denom)) + ")");
}

void check_input(const ExtensionLW& ext, const TwoComponentFunction& f) {
  if (f.dim() != ext.dim())
    fail(ErrorCode::DimensionMismatch, "function dimension does not match extension");
  if (f.a() != ext.a() || f.b() != ext.b())
    fail(ErrorCode::InvalidArgument, "function anchors do not match the extension interval");
}

// l(u) - lambda u - f, merged so algebraically cancelling atoms subtract
// coefficient-wise before any norm is taken.
TwoComponentFunction residual_function(const ExtensionLW& ext, const SpectralPoint& lambda,
                                       const TwoComponentFunction& f,
                                       const TwoComponentFunction& u) {
  const RealVector& alpha = ext.coefficient().eigenvalues();
  auto one_side = [&](const HalfLineFunction& uf, const HalfLineFunction& ff) {
    HalfLineFunction r(uf.side(), uf.anchor(), uf.dim());
    for (const auto& atom : uf.atoms()) {
      Vector c(uf.dim());
      for (int k = 0; k < uf.dim(); ++k)
        c[k] = (kI * atom.rate + alpha[k] - lambda.lambda) * atom.coeff[k];
      r.add_atom(atom.rate, std::move(c));
    }
    for (const auto& atom : ff.atoms()) r.add_atom(atom.rate, -atom.coeff);
    return r.merged();
  };
  return TwoComponentFunction(one_side(u.left, f.left), one_side(u.right, f.right));
}

void finish_output(const ExtensionLW& ext, const SpectralPoint& lambda,
                   const TwoComponentFunction& f, ResolventOutput& out) {
  out.bc_defect =
      (out.u.right.trace() - ext.coupling_eigen() * out.u.left.trace()).norm();
  const double fnorm = std::sqrt(l2_norm_sq(f));
  const TwoComponentFunction r = residual_function(ext, lambda, f, out.u);
  out.residual = std::sqrt(l2_norm_sq(r)) / std::max(fnorm, kNormGuard);
}

}  // namespace

ExtensionLW::ExtensionLW(HermitianOperator A, UnitaryParameter W, double a, double b)
    : A_(std::move(A)), W_(std::move(W)), a_(a), b_(b) {
  if (!(a_ < b_)) fail(ErrorCode::InvalidArgument, "requires a < b");
  if (A_.dim() != W_.dim())
    fail(ErrorCode::DimensionMismatch, "coefficient and coupling dimensions differ");
  W_eigen_ = A_.eigenvectors().adjoint() * W_.matrix() * A_.eigenvectors();
}

TwoComponentFunction apply_LW(const ExtensionLW& ext, const TwoComponentFunction& u) {
  check_input(ext, u);
  const double defect = (u.right.trace() - ext.coupling_eigen() * u.left.trace()).norm();
  const double scale = 1.0 + std::sqrt(l2_norm_sq(u));
  if (defect > 1e-10 * scale)
    fail(ErrorCode::NotInDomain, "boundary condition defect " + std::to_string(defect) +
                                     " exceeds 1e-10 * (1 + |u|)");
  return apply_expression(u, ext.coefficient());
}

ResolventOutput resolve_upper(const ExtensionLW& ext, const SpectralPoint& lambda,
                              const TwoComponentFunction& f, double min_imag) {
  if (!(lambda.lambda_i >= min_imag))
    fail(ErrorCode::TooCloseToRealAxis,
         "Im lambda = " + std::to_string(lambda.lambda_i) + " below " +
             std::to_string(min_imag));
  check_input(ext, f);
  const int dim = ext.dim();
  const RealVector& alpha = ext.coefficient().eigenvalues();

  // Right component: each input atom (nu, c) maps to (nu, d) with
  // d_k = i c_k / (beta_k - nu). No homogeneous mode decays on the right.
  HalfLineFunction u2(Side::Right, ext.b(), dim);
  for (const auto& atom : f.right.atoms()) {
    Vector d(dim);
    for (int k = 0; k < dim; ++k) {
      const Complex beta = homogeneous_rate(lambda, alpha[k]);
      d[k] = kI * atom.coeff[k] / (beta - atom.rate);
    }
    u2.add_atom(atom.rate, std::move(d));
  }

  const Vector f_star = ext.coupling_eigen().adjoint() * u2.trace();

  // Left component: homogeneous coefficients accumulate f_star plus the
  // rate-beta part of each particular solution; the rate-mu parts cancel
  // them exactly at t = a.
  HalfLineFunction u1(Side::Left, ext.a(), dim);
  Vector hom = f_star;
  for (const auto& atom : f.left.atoms()) {
    Vector d(dim);
    for (int k = 0; k < dim; ++k) {
      const Complex beta = homogeneous_rate(lambda, alpha[k]);
      const Complex denom = atom.rate - beta;
      check_kernel_denominator(denom, atom.rate, beta);
      const Complex part = kI * atom.coeff[k] / denom;
      hom[k] += part;
      d[k] = -part;
    }
    u1.add_atom(atom.rate, std::move(d));
  }
  for (int k = 0; k < dim; ++k) {
    if (hom[k] == 0.0) continue;
    Vector c = Vector::Zero(dim);
    c[k] = hom[k];
    u1.add_atom(homogeneous_rate(lambda, alpha[k]), std::move(c));
  }

  ResolventOutput out{lambda,
                      TwoComponentFunction(std::move(u1), std::move(u2)),
                      f_star,
                      std::nullopt,
                      0.0,
                      0.0};
  finish_output(ext, lambda, f, out);
  return out;
}

ResolventOutput resolve_lower(const ExtensionLW& ext, const SpectralPoint& lambda,
                              const TwoComponentFunction& f, double min_imag) {
  if (!(lambda.lambda_i <= -min_imag))
    fail(ErrorCode::TooCloseToRealAxis,
         "Im lambda = " + std::to_string(lambda.lambda_i) + " above -" +
             std::to_string(min_imag));
  check_input(ext, f);
  const int dim = ext.dim();
  const RealVector& alpha = ext.coefficient().eigenvalues();

  // Left component: (mu, c) maps to (mu, d) with d_k = -i c_k / (mu - beta_k);
  // here Re(mu - beta_k) = Re mu + |Im lambda| keeps the denominator safe.
  HalfLineFunction u1(Side::Left, ext.a(), dim);
  for (const auto& atom : f.left.atoms()) {
    Vector d(dim);
    for (int k = 0; k < dim; ++k) {
      const Complex beta = homogeneous_rate(lambda, alpha[k]);
      d[k] = -kI * atom.coeff[k] / (atom.rate - beta);
    }
    u1.add_atom(atom.rate, std::move(d));
  }

  const Vector g_star = ext.coupling_eigen() * u1.trace();

  HalfLineFunction u2(Side::Right, ext.b(), dim);
  Vector hom = g_star;
  for (const auto& atom : f.right.atoms()) {
    Vector d(dim);
    for (int k = 0; k < dim; ++k) {
      const Complex beta = homogeneous_rate(lambda, alpha[k]);
      const Complex denom = atom.rate - beta;
      check_kernel_denominator(denom, atom.rate, beta);
      const Complex part = kI * atom.coeff[k] / denom;
      hom[k] += part;
      d[k] = -part;
    }
    u2.add_atom(atom.rate, std::move(d));
  }
  for (int k = 0; k < dim; ++k) {
    if (hom[k] == 0.0) continue;
    Vector c = Vector::Zero(dim);
    c[k] = hom[k];
    u2.add_atom(homogeneous_rate(lambda, alpha[k]), std::move(c));
  }

  ResolventOutput out{lambda,
                      TwoComponentFunction(std::move(u1), std::move(u2)),
                      std::nullopt,
                      g_star,
                      0.0,
                      0.0};
  finish_output(ext, lambda, f, out);
  return out;
}

ResolventOutput resolve(const ExtensionLW& ext, const SpectralPoint& lambda,
                        const TwoComponentFunction& f, double min_imag) {
  if (lambda.lambda_i > 0.0) return resolve_upper(ext, lambda, f, min_imag);
  if (lambda.lambda_i < 0.0) return resolve_lower(ext, lambda, f, min_imag);
  fail(ErrorCode::TooCloseToRealAxis, "lambda is real");
}

double resolvent_bound_fstar(const ExtensionLW& ext, const SpectralPoint& lambda,
                             const TwoComponentFunction& f, double min_imag) {
  const ResolventOutput out = resolve_upper(ext, lambda, f, min_imag);
  return out.f_star->squaredNorm();
}

double residual_quadrature(const ExtensionLW& ext, const SpectralPoint& lambda,
                           const TwoComponentFunction& f, const TwoComponentFunction& u,
                           double T, int N) {
  if (!(T > 0.0) || N < 16) fail(ErrorCode::InvalidArgument, "bad quadrature window");
  check_input(ext, f);
  check_input(ext, u);
  const int dim = ext.dim();
  const RealVector& alpha = ext.coefficient().eigenvalues();

  double rate_scale = 1.0 + std::abs(lambda.lambda);
  for (int k = 0; k < dim; ++k) rate_scale = std::max(rate_scale, std::abs(alpha[k]));
  for (const auto* hf : {&u.left, &u.right, &f.left, &f.right})
    for (const auto& atom : hf->atoms())
      rate_scale = std::max(rate_scale, std::abs(atom.rate));
  const double h = 5e-3 / rate_scale;  // five-point stencil step

  auto side_integral = [&](const HalfLineFunction& uf, const HalfLineFunction& ff) {
    const double lo = uf.side() == Side::Left ? uf.anchor() - T : uf.anchor();
    const double hi = lo + T;
    const int nodes = std::max(N, 2);
    const double dt = (hi - lo) / (nodes - 1);
    // Per-atom stencil shift factors e^{j rate h}, j = -2..2.
    struct Shifted {
      Complex rate;
      Vector coeff;
      Complex shift[5];
    };
    std::vector<Shifted> atoms;
    for (const auto& atom : uf.atoms()) {
      Shifted s{atom.rate, atom.coeff, {}};
      for (int j = -2; j <= 2; ++j) s.shift[j + 2] = std::exp(atom.rate * (j * h));
      atoms.push_back(std::move(s));
    }
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double t = lo + i * dt;
      Vector vals[5];
      for (auto& v : vals) v = Vector::Zero(dim);
      for (const auto& s : atoms) {
        const Complex base = std::exp(s.rate * (t - uf.anchor()));
        for (int j = 0; j < 5; ++j) vals[j] += (base * s.shift[j]) * s.coeff;
      }
      // u'(t) from the five-point central difference.
      const Vector du =
          (vals[0] - 8.0 * vals[1] + 8.0 * vals[3] - vals[4]) / (12.0 * h);
      Vector defect = kI * du - lambda.lambda * vals[2] - evaluate_unchecked(ff, t);
      for (int k = 0; k < dim; ++k) defect[k] += alpha[k] * vals[2][k];
      const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
      acc += w * dt * defect.squaredNorm();
    }
    return acc;
  };

  const double total = side_integral(u.left, f.left) + side_integral(u.right, f.right);
  return std::sqrt(total) / std::max(std::sqrt(l2_norm_sq(f)), kNormGuard);
}

}  // namespace halfline

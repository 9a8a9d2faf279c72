#pragma once

#include <vector>

#include "core/operator_core.hpp"

namespace halfline {

enum class Side { Left, Right };

const char* side_name(Side s);

// Minimal decay margin for atom rates; keeps every Gram denominator
// strictly away from zero.
constexpr double kAtomDecayMin = 1e-12;

// One exponential mode c e^{mu (t - anchor)} on a half-line, with the
// coefficient vector expressed in the eigenbasis of the operator A fixed at
// configuration time. Left atoms need Re mu > 0, right atoms Re mu < 0, so
// each atom is square integrable on its ray.
struct ExponentialAtom {
  Complex rate;
  Vector coeff;
};

// A finite sum of exponential atoms on (-inf, anchor] or [anchor, +inf).
// The empty sum is the zero function. This family is closed under the
// differential expression and under all the resolvent integral operators,
// so every norm and inner product below is evaluated in closed form.
class HalfLineFunction {
 public:
  HalfLineFunction(Side side, double anchor, int dim);

  static HalfLineFunction zero(Side side, double anchor, int dim) {
    return HalfLineFunction(side, anchor, dim);
  }

  void add_atom(Complex rate, Vector coeff);

  Side side() const { return side_; }
  double anchor() const { return anchor_; }
  int dim() const { return dim_; }
  const std::vector<ExponentialAtom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  // Value at the anchor (exact: the sum of the coefficients).
  Vector trace() const;

  // Sum coefficients of atoms whose rates compare equal and drop exact
  // zeros. Keeps cancellation between algebraically matched atoms exact.
  HalfLineFunction merged() const;

  HalfLineFunction scaled(Complex s) const;

 private:
  Side side_;
  double anchor_;
  int dim_;
  std::vector<ExponentialAtom> atoms_;
};

// u = (u1, u2) in L2(H,(-inf,a)) (+) L2(H,(b,+inf)).
struct TwoComponentFunction {
  HalfLineFunction left;
  HalfLineFunction right;

  TwoComponentFunction(HalfLineFunction l, HalfLineFunction r);

  static TwoComponentFunction zero(int dim, double a, double b) {
    return TwoComponentFunction(HalfLineFunction::zero(Side::Left, a, dim),
                                HalfLineFunction::zero(Side::Right, b, dim));
  }

  int dim() const { return left.dim(); }
  double a() const { return left.anchor(); }
  double b() const { return right.anchor(); }
};

// Pointwise value; t must lie on the function's ray (anchor included).
Vector evaluate(const HalfLineFunction& f, double t);

// Pointwise value without the domain check; atoms are entire along the
// real line, which the finite-difference oracles rely on near the anchor.
Vector evaluate_unchecked(const HalfLineFunction& f, double t);

// Exact inner product (linear in f, conjugate-linear in g):
// sum over atom pairs of <c_f, c_g> / (mu_f + conj(mu_g)), negated on the
// right half-line.
Complex l2_inner(const HalfLineFunction& f, const HalfLineFunction& g);

double l2_norm_sq(const HalfLineFunction& f);
double l2_norm_sq(const TwoComponentFunction& u);

// Independent check of l2_inner: composite Gauss-Legendre over a window of
// length T adjacent to the anchor, at least N nodes.
Complex quadrature_inner(const HalfLineFunction& f, const HalfLineFunction& g,
                         double T, int N);

// Image under l(u) = i u' + A u; on an atom the coefficient picks up the
// factor (i mu + alpha_k) per eigencomponent, the rate is unchanged.
HalfLineFunction apply_expression(const HalfLineFunction& f, const HermitianOperator& A);
TwoComponentFunction apply_expression(const TwoComponentFunction& u, const HermitianOperator& A);

HalfLineFunction add(const HalfLineFunction& f, const HalfLineFunction& g);
TwoComponentFunction add(const TwoComponentFunction& u, const TwoComponentFunction& v);
TwoComponentFunction scaled(const TwoComponentFunction& u, Complex s);
TwoComponentFunction sub(const TwoComponentFunction& u, const TwoComponentFunction& v);

}  // namespace halfline

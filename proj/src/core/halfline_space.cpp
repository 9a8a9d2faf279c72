#include "core/halfline_space.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "core/quadrature.hpp"

namespace halfline {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

HalfLineFunction::HalfLineFunction(Side side, double anchor, int dim)
    : side_(side), anchor_(anchor), dim_(dim) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "dim must be positive");
  if (!std::isfinite(anchor)) fail(ErrorCode::InvalidArgument, "anchor must be finite");
}

void HalfLineFunction::add_atom(Complex rate, Vector coeff) {
  if (coeff.size() != dim_)
    fail(ErrorCode::DimensionMismatch, "atom coefficient has length " +
                                           std::to_string(coeff.size()) + ", expected " +
                                           std::to_string(dim_));
  const double re = rate.real();
  if (side_ == Side::Left ? re < kAtomDecayMin : re > -kAtomDecayMin)
    fail(ErrorCode::InvalidArgument,
         std::string("atom rate does not decay on the ") + side_name(side_) +
             " half-line (Re rate = " + std::to_string(re) + ")");
  atoms_.push_back({rate, std::move(coeff)});
}

Vector HalfLineFunction::trace() const {
  Vector v = Vector::Zero(dim_);
  for (const auto& atom : atoms_) v += atom.coeff;
  return v;
}

HalfLineFunction HalfLineFunction::merged() const {
  std::map<std::pair<double, double>, Vector> acc;
  for (const auto& atom : atoms_) {
    auto key = std::make_pair(atom.rate.real(), atom.rate.imag());
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, atom.coeff);
    else
      it->second += atom.coeff;
  }
  HalfLineFunction out(side_, anchor_, dim_);
  for (const auto& [key, coeff] : acc) {
    if (coeff.isZero(0.0)) continue;
    out.add_atom(Complex(key.first, key.second), coeff);
  }
  return out;
}

HalfLineFunction HalfLineFunction::scaled(Complex s) const {
  HalfLineFunction out(side_, anchor_, dim_);
  for (const auto& atom : atoms_) out.add_atom(atom.rate, s * atom.coeff);
  return out;
}

TwoComponentFunction::TwoComponentFunction(HalfLineFunction l, HalfLineFunction r)
    : left(std::move(l)), right(std::move(r)) {
  if (left.side() != Side::Left || right.side() != Side::Right)
    fail(ErrorCode::SideMismatch, "components must be (left, right)");
  if (left.dim() != right.dim())
    fail(ErrorCode::DimensionMismatch, "component dimensions differ");
  if (!(left.anchor() < right.anchor()))
    fail(ErrorCode::InvalidArgument, "requires a < b");
}

Vector evaluate_unchecked(const HalfLineFunction& f, double t) {
  Vector v = Vector::Zero(f.dim());
  for (const auto& atom : f.atoms())
    v += std::exp(atom.rate * (t - f.anchor())) * atom.coeff;
  return v;
}

Vector evaluate(const HalfLineFunction& f, double t) {
  if (f.side() == Side::Left ? t > f.anchor() : t < f.anchor())
    fail(ErrorCode::OutOfDomain, "t = " + std::to_string(t) + " is outside the " +
                                     std::string(side_name(f.side())) + " half-line");
  return evaluate_unchecked(f, t);
}

namespace {

void check_compatible(const HalfLineFunction& f, const HalfLineFunction& g) {
  if (f.side() != g.side() || f.anchor() != g.anchor())
    fail(ErrorCode::SideMismatch, "functions live on different half-lines");
  if (f.dim() != g.dim())
    fail(ErrorCode::DimensionMismatch, "function dimensions differ");
}

}  // namespace

Complex l2_inner(const HalfLineFunction& f, const HalfLineFunction& g) {
  check_compatible(f, g);
  const double sign = f.side() == Side::Left ? 1.0 : -1.0;
  Complex acc = 0.0;
  for (const auto& af : f.atoms())
    for (const auto& ag : g.atoms())
      acc += hdot(af.coeff, ag.coeff) * (sign / (af.rate + std::conj(ag.rate)));
  return acc;
}

double l2_norm_sq(const HalfLineFunction& f) { return l2_inner(f, f).real(); }

double l2_norm_sq(const TwoComponentFunction& u) {
  return l2_norm_sq(u.left) + l2_norm_sq(u.right);
}

Complex quadrature_inner(const HalfLineFunction& f, const HalfLineFunction& g,
                         double T, int N) {
  check_compatible(f, g);
  if (!(T > 0.0)) fail(ErrorCode::InvalidArgument, "window length T must be positive");
  if (N < 16) fail(ErrorCode::InvalidArgument, "need at least 16 quadrature points");
  const double lo = f.side() == Side::Left ? f.anchor() - T : f.anchor();
  const double hi = lo + T;
  return composite_gauss_legendre(
      [&](double t) { return hdot(evaluate_unchecked(f, t), evaluate_unchecked(g, t)); },
      lo, hi, N);
}

HalfLineFunction apply_expression(const HalfLineFunction& f, const HermitianOperator& A) {
  if (A.dim() != f.dim())
    fail(ErrorCode::DimensionMismatch, "operator dimension does not match function");
  HalfLineFunction out(f.side(), f.anchor(), f.dim());
  for (const auto& atom : f.atoms()) {
    Vector c(f.dim());
    for (int k = 0; k < f.dim(); ++k)
      c[k] = (Complex(0.0, 1.0) * atom.rate + A.eigenvalues()[k]) * atom.coeff[k];
    out.add_atom(atom.rate, std::move(c));
  }
  return out;
}

TwoComponentFunction apply_expression(const TwoComponentFunction& u, const HermitianOperator& A) {
  return TwoComponentFunction(apply_expression(u.left, A), apply_expression(u.right, A));
}

HalfLineFunction add(const HalfLineFunction& f, const HalfLineFunction& g) {
  check_compatible(f, g);
  HalfLineFunction out = f;
  for (const auto& atom : g.atoms()) out.add_atom(atom.rate, atom.coeff);
  return out.merged();
}

TwoComponentFunction add(const TwoComponentFunction& u, const TwoComponentFunction& v) {
  return TwoComponentFunction(add(u.left, v.left), add(u.right, v.right));
}

TwoComponentFunction scaled(const TwoComponentFunction& u, Complex s) {
  return TwoComponentFunction(u.left.scaled(s), u.right.scaled(s));
}

TwoComponentFunction sub(const TwoComponentFunction& u, const TwoComponentFunction& v) {
  return add(u, scaled(v, Complex(-1.0, 0.0)));
}

}  // namespace halfline

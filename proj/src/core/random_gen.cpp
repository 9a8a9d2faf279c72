#include "core/random_gen.hpp"

#include <Eigen/QR>

namespace halfline {

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Complex Rng::complex_in_box(double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return Complex(re, im);
}

Vector Rng::complex_vector(int dim, double half_width) {
  Vector v(dim);
  for (int k = 0; k < dim; ++k) v[k] = complex_in_box(half_width);
  return v;
}

Vector Rng::nonzero_complex_vector(int dim, double half_width) {
  for (;;) {
    Vector v = complex_vector(dim, half_width);
    if (v.norm() > 0.1 * half_width) return v;
  }
}

Matrix Rng::random_hermitian(int dim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = complex_in_box();
  return 0.5 * (m + m.adjoint());
}

Matrix Rng::random_unitary(int dim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = complex_in_box();
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  // Fix column phases so Q is a function of m alone, not of pivot choices.
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

HalfLineFunction random_halfline(Rng& rng, Side side, double anchor, int dim,
                                 const AtomDistribution& dist) {
  HalfLineFunction f(side, anchor, dim);
  const int n_atoms = rng.uniform_int(1, dist.max_atoms);
  const double sign = side == Side::Left ? 1.0 : -1.0;
  for (int i = 0; i < n_atoms; ++i) {
    const double re = sign * rng.uniform(dist.rate_re_lo, dist.rate_re_hi);
    const double im = rng.uniform(-dist.rate_im_max, dist.rate_im_max);
    f.add_atom(Complex(re, im), rng.complex_vector(dim, dist.coeff_half_width));
  }
  return f;
}

TwoComponentFunction random_twocomponent(Rng& rng, int dim, double a, double b,
                                         const AtomDistribution& dist) {
  return TwoComponentFunction(random_halfline(rng, Side::Left, a, dim, dist),
                              random_halfline(rng, Side::Right, b, dim, dist));
}

}  // namespace halfline

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/spectral_probe.hpp"
#include "test_helpers.hpp"

using namespace halfline;

namespace {

HalfLineFunction single_left(double anchor, int dim, Complex rate, int component,
                             Complex value = 1.0) {
  HalfLineFunction f(Side::Left, anchor, dim);
  Vector c = Vector::Zero(dim);
  c[component] = value;
  f.add_atom(rate, std::move(c));
  return f;
}

}  // namespace

TEST_CASE("evaluate") {
  const auto f = single_left(0.0, 2, Complex(1.0, 0.0), 0);
  CHECK(std::abs(evaluate(f, 0.0)[0] - 1.0) < 1e-15);  // anchor value = coefficient
  CHECK(std::abs(evaluate(f, 0.0)[1]) == 0.0);
  CHECK(std::abs(evaluate(f, -1.0)[0] - std::exp(-1.0)) < 1e-15);

  HalfLineFunction g(Side::Right, 2.0, 1);
  g.add_atom(Complex(-1.0, 0.0), Vector::Ones(1));
  try {
    evaluate(g, 1.0);  // wrong side of the anchor
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("atom decay constraint") {
  HalfLineFunction f(Side::Left, 0.0, 1);
  CHECK_THROWS_AS(f.add_atom(Complex(-0.5, 0.0), Vector::Ones(1)), Error);
  CHECK_THROWS_AS(f.add_atom(Complex(0.0, 1.0), Vector::Ones(1)), Error);
  CHECK_NOTHROW(f.add_atom(Complex(1e-10, 0.0), Vector::Ones(1)));
}

TEST_CASE("l2_inner closed forms") {
  SUBCASE("left self inner product = 1/2") {
    // integral of e^{2t} over (-inf, 0].
    const auto f = single_left(0.0, 3, Complex(1.0, 0.0), 0);
    CHECK(std::abs(l2_inner(f, f) - 0.5) < 1e-15);
  }

  SUBCASE("orthogonal coefficients give zero") {
    const auto f = single_left(0.0, 3, Complex(1.0, 0.2), 0);
    const auto g = single_left(0.0, 3, Complex(2.0, -0.3), 1);
    CHECK(std::abs(l2_inner(f, g)) == 0.0);
  }

  SUBCASE("right atoms with rate -2 lambda_i") {
    // integral of e^{-4 lambda_i (t-b)} over [b, inf) = 1/(4 lambda_i).
    const double lambda_i = 0.75;
    HalfLineFunction f(Side::Right, 5.0, 2);
    Vector c(2);
    c << Complex(0.6, 0.0), Complex(0.0, 0.8);  // unit norm
    f.add_atom(Complex(-2.0 * lambda_i, 0.0), c);
    CHECK(std::abs(l2_inner(f, f) - 1.0 / (4.0 * lambda_i)) < 1e-15);
  }

  SUBCASE("side mismatch is rejected") {
    const auto f = single_left(0.0, 1, Complex(1.0, 0.0), 0);
    HalfLineFunction g(Side::Right, 0.5, 1);
    CHECK_THROWS_AS(l2_inner(f, g), Error);
  }
}

TEST_CASE("l2_norm_sq") {
  SUBCASE("zero function") {
    CHECK(l2_norm_sq(TwoComponentFunction::zero(3, -1.0, 1.0)) == 0.0);
  }

  SUBCASE("witness profile e^{-2 lambda_i b}/(2 lambda_i)") {
    const double lambda_i = 0.4, b = 1.5;
    const auto A = HermitianOperator::make(Matrix::Zero(1, 1));
    const auto w = witness_function(SpectralPoint(0.3, lambda_i), A, Vector::Ones(1),
                                    -1.0, b);
    const double expected = std::exp(-2.0 * lambda_i * b) / (2.0 * lambda_i);
    CHECK(l2_norm_sq(w) == doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("orthogonal pieces add like Pythagoras") {
    HalfLineFunction f(Side::Left, 0.0, 2);
    Vector c0 = Vector::Zero(2), c1 = Vector::Zero(2);
    c0[0] = 2.0;
    c1[1] = Complex(0.0, 3.0);
    f.add_atom(Complex(1.0, 0.0), c0);
    f.add_atom(Complex(2.0, -1.0), c1);
    const auto f0 = single_left(0.0, 2, Complex(1.0, 0.0), 0, 2.0);
    const auto f1 = single_left(0.0, 2, Complex(2.0, -1.0), 1, Complex(0.0, 3.0));
    CHECK(l2_norm_sq(f) ==
          doctest::Approx(l2_norm_sq(f0) + l2_norm_sq(f1)).epsilon(1e-14));
  }
}

TEST_CASE("quadrature_inner matches the closed form") {
  SUBCASE("reference value 1/2") {
    const auto f = single_left(0.0, 1, Complex(1.0, 0.0), 0);
    CHECK(std::abs(quadrature_inner(f, f, 40.0, 400) - 0.5) < 1e-10);
  }

  SUBCASE("short window underestimates a positive integrand") {
    const auto f = single_left(0.0, 1, Complex(1.0, 0.0), 0);
    const double short_window = quadrature_inner(f, f, 1.0, 64).real();
    const double longer = quadrature_inner(f, f, 4.0, 64).real();
    CHECK(short_window < longer);
    CHECK(longer < 0.5 + 1e-12);
  }

  SUBCASE("zero function") {
    const HalfLineFunction z = HalfLineFunction::zero(Side::Right, 1.0, 2);
    CHECK(std::abs(quadrature_inner(z, z, 10.0, 64)) == 0.0);
  }

  SUBCASE("randomized agreement at 1e-8 relative") {
    Rng rng(23);
    AtomDistribution dist;
    dist.rate_re_lo = 0.1;
    dist.rate_re_hi = 5.0;
    dist.rate_im_max = 1.0;
    for (int trial = 0; trial < 40; ++trial) {
      const int dim = rng.uniform_int(1, 4);
      const Side side = trial % 2 == 0 ? Side::Left : Side::Right;
      const double anchor = rng.uniform(-2, 2);
      const auto f = random_halfline(rng, side, anchor, dim, dist);
      const auto g = random_halfline(rng, side, anchor, dim, dist);
      double min_rate = 1e300;
      for (const auto* h : {&f, &g})
        for (const auto& atom : h->atoms())
          min_rate = std::min(min_rate, std::abs(atom.rate.real()));
      const Complex exact = l2_inner(f, g);
      const Complex quad = quadrature_inner(f, g, 40.0 / min_rate, 2000);
      const double scale =
          std::sqrt(l2_norm_sq(f)) * std::sqrt(l2_norm_sq(g)) + 1e-30;
      CHECK(std::abs(exact - quad) / scale < 1e-8);
    }
  }
}

TEST_CASE("apply_expression") {
  SUBCASE("i d/dt of e^t is i e^t") {
    const auto A = HermitianOperator::make(Matrix::Zero(1, 1));
    const auto f = single_left(0.0, 1, Complex(1.0, 0.0), 0);
    const auto lf = apply_expression(f, A);
    REQUIRE(lf.atoms().size() == 1);
    CHECK(std::abs(lf.atoms()[0].coeff[0] - Complex(0.0, 1.0)) < 1e-15);
    CHECK(lf.atoms()[0].rate == Complex(1.0, 0.0));
  }

  SUBCASE("homogeneous rate solves l(u) = lambda u per component") {
    Rng rng(5);
    const auto A = HermitianOperator::make(rng.random_hermitian(3));
    const Complex lambda(0.4, 0.9);
    for (int k = 0; k < 3; ++k) {
      // rate i(alpha_k - lambda) turns l into multiplication by lambda
      const Complex rate = Complex(0.0, 1.0) * (A.eigenvalues()[k] - lambda);
      const auto f = single_left(0.0, 3, rate, k, Complex(0.3, -0.2));
      const auto lf = apply_expression(f, A);
      CHECK(std::abs(lf.atoms()[0].coeff[k] - lambda * f.atoms()[0].coeff[k]) < 1e-14);
    }
  }

  SUBCASE("zero maps to zero and the map is linear") {
    Rng rng(29);
    const auto A = HermitianOperator::make(rng.random_hermitian(2));
    const auto z = HalfLineFunction::zero(Side::Left, 0.0, 2);
    CHECK(apply_expression(z, A).is_zero());

    const auto f = random_halfline(rng, Side::Left, 0.0, 2);
    const auto g = random_halfline(rng, Side::Left, 0.0, 2);
    const Complex s(1.4, -0.6);
    const auto lhs = apply_expression(add(f, g.scaled(s)), A);
    const auto rhs = add(apply_expression(f, A), apply_expression(g, A).scaled(s));
    const auto diff = add(lhs, rhs.scaled(Complex(-1.0, 0.0)));
    CHECK(l2_norm_sq(diff) < 1e-24 * (1.0 + l2_norm_sq(lhs)));
  }
}

TEST_CASE("inner product structure") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = rng.uniform_int(1, 5);
    const Side side = trial % 2 == 0 ? Side::Left : Side::Right;
    const auto f = random_halfline(rng, side, 0.5, dim);
    const auto g = random_halfline(rng, side, 0.5, dim);
    const Complex fg = l2_inner(f, g);

    // Cauchy-Schwarz with exact Gram sums.
    CHECK(std::norm(fg) <= l2_norm_sq(f) * l2_norm_sq(g) * (1.0 + 1e-12) + 1e-12);
    // Hermitian symmetry.
    CHECK(std::abs(std::conj(fg) - l2_inner(g, f)) < 1e-12 * (1.0 + std::abs(fg)));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/spectral_probe.hpp"
#include "test_helpers.hpp"

using namespace halfline;

namespace {

ExtensionLW random_extension(Rng& rng, int dim, double a = -1.0, double b = 1.0) {
  return ExtensionLW(HermitianOperator::make(rng.random_hermitian(dim)),
                     UnitaryParameter::make(rng.random_unitary(dim)), a, b);
}

Complex pairing(const TwoComponentFunction& u, const TwoComponentFunction& v) {
  return l2_inner(u.left, v.left) + l2_inner(u.right, v.right);
}

}  // namespace

TEST_CASE("apply_LW enforces the boundary condition") {
  Rng rng(71);
  const auto ext = random_extension(rng, 3);

  // Build u with u2(b) = W u1(a) exactly.
  const Vector ta = rng.complex_vector(3);
  HalfLineFunction left(Side::Left, ext.a(), 3);
  left.add_atom(Complex(1.0, 0.0), ta);
  HalfLineFunction right(Side::Right, ext.b(), 3);
  right.add_atom(Complex(-1.0, 0.0), ext.coupling_eigen() * ta);
  const TwoComponentFunction u(std::move(left), std::move(right));
  CHECK_NOTHROW(apply_LW(ext, u));

  // Violate the condition by an O(1) amount.
  HalfLineFunction bad(Side::Right, ext.b(), 3);
  bad.add_atom(Complex(-1.0, 0.0), ext.coupling_eigen() * ta + Vector::Ones(3));
  const TwoComponentFunction v(u.left, std::move(bad));
  try {
    apply_LW(ext, v);
    FAIL("expected NotInDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInDomain);
  }
}

TEST_CASE("resolve rejects the real axis") {
  Rng rng(73);
  const auto ext = random_extension(rng, 2);
  const auto f = random_twocomponent(rng, 2, ext.a(), ext.b());
  for (double im : {0.0, 1e-9, -1e-9}) {
    try {
      resolve(ext, SpectralPoint(0.5, im), f);
      FAIL("expected TooCloseToRealAxis");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooCloseToRealAxis);
    }
  }
}

TEST_CASE("resolvent of zero is zero") {
  Rng rng(79);
  const auto ext = random_extension(rng, 2);
  const auto z = TwoComponentFunction::zero(2, ext.a(), ext.b());
  const auto up = resolve_upper(ext, SpectralPoint(0.3, 0.8), z);
  CHECK(l2_norm_sq(up.u) == 0.0);
  CHECK(up.f_star->norm() == 0.0);
  CHECK(up.residual == 0.0);
  const auto low = resolve_lower(ext, SpectralPoint(0.3, -0.8), z);
  CHECK(l2_norm_sq(low.u) == 0.0);
  CHECK(low.g_star->norm() == 0.0);
}

TEST_CASE("upper resolvent of the witness") {
  // Right-component image norm^2 = e^{-2 li b} |f0|^2 / (8 li^3).
  Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = rng.uniform_int(1, 5);
    const auto ext = random_extension(rng, dim);
    const double li = rng.uniform(0.2, 2.0);
    const SpectralPoint lam(rng.uniform(-2, 2), li);
    const Vector f0 = rng.nonzero_complex_vector(dim);
    const auto w = witness_function(lam, ext.coefficient(), f0, ext.a(), ext.b());
    const auto out = resolve_upper(ext, lam, w);
    const double expected =
        std::exp(-2.0 * li * ext.b()) * f0.squaredNorm() / (8.0 * li * li * li);
    CHECK(l2_norm_sq(out.u.right) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(out.residual < 1e-10);
    CHECK(out.bc_defect < 1e-10 * (1.0 + std::sqrt(l2_norm_sq(w))));
    CHECK(out.f_star.has_value());
    CHECK(!out.g_star.has_value());
  }
}

TEST_CASE("dim-1 residual with a quadrature cross-check") {
  const auto A = HermitianOperator::make(Matrix::Zero(1, 1));
  const ExtensionLW ext(A, UnitaryParameter::identity(1), -1.0, 1.0);
  Rng rng(89);
  const auto f = random_twocomponent(rng, 1, -1.0, 1.0);
  const SpectralPoint lam(0.0, 1.0);
  const auto out = resolve_upper(ext, lam, f);
  CHECK(out.residual < 1e-10);
  CHECK(residual_quadrature(ext, lam, f, out.u, 40.0, 2000) < 1e-6);
}

TEST_CASE("lower resolvent bounds and pairing") {
  Rng rng(97);

  SUBCASE("left image norm is at most |f1| / |Im lambda|") {
    for (int trial = 0; trial < 20; ++trial) {
      const int dim = rng.uniform_int(1, 5);
      const auto ext = random_extension(rng, dim);
      const SpectralPoint lam(rng.uniform(-2, 2), -rng.uniform(0.05, 3.0));
      const auto f = random_twocomponent(rng, dim, ext.a(), ext.b());
      const auto out = resolve_lower(ext, lam, f);
      const double bound = l2_norm_sq(f.left) / (lam.lambda_i * lam.lambda_i);
      CHECK(l2_norm_sq(out.u.left) <= bound * (1.0 + 1e-12));
      CHECK(out.residual < 1e-10);
      CHECK(out.g_star.has_value());
    }
  }

  SUBCASE("adjoint pairing (R_lambda f, g) = (f, R_conj(lambda) g)") {
    for (int trial = 0; trial < 30; ++trial) {
      const int dim = rng.uniform_int(1, 5);
      const auto ext = random_extension(rng, dim);
      const double li = rng.uniform(0.05, 3.0);
      const SpectralPoint lam(rng.uniform(-2, 2), li);
      const auto f = random_twocomponent(rng, dim, ext.a(), ext.b());
      const auto g = random_twocomponent(rng, dim, ext.a(), ext.b());
      const Complex lhs = pairing(resolve_upper(ext, lam, f).u, g);
      const Complex rhs =
          pairing(f, resolve_lower(ext, SpectralPoint(std::conj(lam.lambda)), g).u);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
  }
}

TEST_CASE("f_star bound") {
  Rng rng(101);

  SUBCASE("no right input, no f_star") {
    const auto ext = random_extension(rng, 3);
    TwoComponentFunction f(random_halfline(rng, Side::Left, ext.a(), 3),
                           HalfLineFunction::zero(Side::Right, ext.b(), 3));
    CHECK(resolvent_bound_fstar(ext, SpectralPoint(0.1, 0.7), f) == 0.0);
  }

  SUBCASE("witness saturates the bound with equality") {
    for (int trial = 0; trial < 10; ++trial) {
      const int dim = rng.uniform_int(1, 5);
      const auto ext = random_extension(rng, dim);
      const double li = rng.uniform(0.1, 2.0);
      const SpectralPoint lam(rng.uniform(-2, 2), li);
      const auto w = witness_function(lam, ext.coefficient(),
                                      rng.nonzero_complex_vector(dim), ext.a(), ext.b());
      const double fstar_sq = resolvent_bound_fstar(ext, lam, w);
      const double cap = l2_norm_sq(w.right) / (2.0 * li);
      CHECK(fstar_sq == doctest::Approx(cap).epsilon(1e-10));
    }
  }

  SUBCASE("random inputs respect the inequality") {
    for (int trial = 0; trial < 500; ++trial) {
      const int dim = rng.uniform_int(1, 4);
      const auto ext = random_extension(rng, dim);
      const double li = rng.uniform(0.02, 4.0);
      const SpectralPoint lam(rng.uniform(-3, 3), li);
      const auto f = random_twocomponent(rng, dim, ext.a(), ext.b());
      const double fstar_sq = resolvent_bound_fstar(ext, lam, f);
      CHECK(fstar_sq <= l2_norm_sq(f.right) / (2.0 * li) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("first resolvent identity") {
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(1, 4);
    const auto ext = random_extension(rng, dim);
    const double sign = trial % 2 == 0 ? 1.0 : -1.0;
    const SpectralPoint lam(rng.uniform(-2, 2), sign * rng.uniform(0.1, 2.0));
    const SpectralPoint zeta(rng.uniform(-2, 2), sign * rng.uniform(0.1, 2.0));
    if (std::abs(lam.lambda - zeta.lambda) < 0.05) continue;
    const auto f = random_twocomponent(rng, dim, ext.a(), ext.b());

    const auto r_lam = resolve(ext, lam, f).u;
    const auto r_zeta = resolve(ext, zeta, f).u;
    const auto lhs = sub(r_lam, r_zeta);
    const auto rhs = scaled(resolve(ext, lam, r_zeta).u, lam.lambda - zeta.lambda);
    const double scale =
        1e-300 + std::sqrt(l2_norm_sq(lhs)) + std::sqrt(l2_norm_sq(rhs));
    CHECK(std::sqrt(l2_norm_sq(sub(lhs, rhs))) < 1e-9 * scale);
  }
}

TEST_CASE("distinct couplings give distinct resolvents") {
  Rng rng(107);
  const int dim = 3;
  const auto A = HermitianOperator::make(rng.random_hermitian(dim));
  const Matrix w1 = rng.random_unitary(dim);
  const Matrix w2 = rng.random_unitary(dim);
  REQUIRE((w1 - w2).norm() > 1e-6);
  const ExtensionLW e1(A, UnitaryParameter::make(w1), -1.0, 1.0);
  const ExtensionLW e2(A, UnitaryParameter::make(w2), -1.0, 1.0);

  const SpectralPoint lam(0.4, 1.1);
  const auto w = witness_function(lam, A, rng.nonzero_complex_vector(dim), -1.0, 1.0);
  const auto u1 = resolve_upper(e1, lam, w).u;
  const auto u2 = resolve_upper(e2, lam, w).u;
  CHECK(std::sqrt(l2_norm_sq(sub(u1, u2))) > 1e-8);
}

TEST_CASE("degenerate kernel is reported, not divided through") {
  const auto A = HermitianOperator::make(Matrix::Zero(1, 1));
  const ExtensionLW ext(A, UnitaryParameter::identity(1), -1.0, 1.0);
  const SpectralPoint lam(0.3, 0.5);
  // Left input rate exactly equal to the homogeneous mode -i(lambda - 0).
  HalfLineFunction left(Side::Left, -1.0, 1);
  left.add_atom(Complex(0.0, -1.0) * lam.lambda, Vector::Ones(1));
  const TwoComponentFunction f(std::move(left),
                               HalfLineFunction::zero(Side::Right, 1.0, 1));
  try {
    resolve_upper(ext, lam, f);
    FAIL("expected DegenerateKernel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateKernel);
  }
}

TEST_CASE("boundary condition holds for every resolvent output") {
  Rng rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = rng.uniform_int(1, 6);
    const auto ext = random_extension(rng, dim);
    const double li = (trial % 2 == 0 ? 1.0 : -1.0) * rng.uniform(0.01, 5.0);
    const auto f = random_twocomponent(rng, dim, ext.a(), ext.b());
    const auto out = resolve(ext, SpectralPoint(rng.uniform(-3, 3), li), f);
    CHECK(out.bc_defect <= 1e-10 * (1.0 + std::sqrt(l2_norm_sq(f))));
    CHECK(out.residual < 1e-10);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/serialization.hpp"
#include "test_helpers.hpp"

using namespace halfline;

TEST_CASE("operator JSON round trip") {
  Rng rng(151);
  const auto A = HermitianOperator::make(rng.random_hermitian(4));
  const auto back = hermitian_from_json(hermitian_to_json(A));
  CHECK((back.matrix() - A.matrix()).norm() < 1e-15);
  CHECK((back.eigenvalues() - A.eigenvalues()).norm() < 1e-12);
}

TEST_CASE("operator JSON rejects malformed input") {
  CHECK_THROWS_AS(parse_json("not json at all"), Error);
  CHECK_THROWS_AS(hermitian_from_json(parse_json("{\"dim\": 2}")), Error);
  CHECK_THROWS_AS(hermitian_from_json(parse_json(
                      "{\"dim\": 2, \"matrix\": [[0,0],[0,0]]}")),
                  Error);  // wrong entry count
  try {
    hermitian_from_json(parse_json(
        "{\"dim\": 1, \"matrix\": [[0,1]]}"));  // an imaginary diagonal
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
}

TEST_CASE("function JSON round trip preserves values and norms") {
  Rng rng(157);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(1, 5);
    const auto u = random_twocomponent(rng, dim, -1.5, 0.5);
    const auto back = twocomponent_from_json(twocomponent_to_json(u));
    CHECK(l2_norm_sq(back) == doctest::Approx(l2_norm_sq(u)).epsilon(1e-14));
    const double t = rng.uniform(-4.0, -1.5);
    CHECK((evaluate(back.left, t) - evaluate(u.left, t)).norm() < 1e-14);
  }
}

TEST_CASE("function JSON rejects non-decaying atoms") {
  const char* text =
      "{\"left\": {\"side\": \"left\", \"anchor\": -1, \"dim\": 1,"
      "  \"atoms\": [{\"rate\": [-1, 0], \"coeff\": [[1, 0]]}]},"
      " \"right\": {\"side\": \"right\", \"anchor\": 1, \"dim\": 1, \"atoms\": []}}";
  try {
    twocomponent_from_json(parse_json(text));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("resolvent JSON carries exactly one closure vector") {
  Rng rng(163);
  const ExtensionLW ext(HermitianOperator::make(rng.random_hermitian(2)),
                        UnitaryParameter::make(rng.random_unitary(2)), -1.0, 1.0);
  const auto f = random_twocomponent(rng, 2, -1.0, 1.0);

  const Json upper = resolvent_to_json(resolve(ext, SpectralPoint(0.2, 0.9), f));
  CHECK(upper.contains("f_star"));
  CHECK(!upper.contains("g_star"));
  CHECK(upper["residual"].get<double>() < 1e-10);

  const Json lower = resolvent_to_json(resolve(ext, SpectralPoint(0.2, -0.9), f));
  CHECK(lower.contains("g_star"));
  CHECK(!lower.contains("f_star"));

  // The embedded u parses back to the same function.
  const auto u = twocomponent_from_json(upper["u"]);
  const auto direct = resolve(ext, SpectralPoint(0.2, 0.9), f).u;
  CHECK(std::sqrt(l2_norm_sq(sub(u, direct))) < 1e-12);
}

TEST_CASE("scan CSV shape") {
  Rng rng(167);
  const ExtensionLW ext(HermitianOperator::make(rng.random_hermitian(2)),
                        UnitaryParameter::make(rng.random_unitary(2)), -1.0, 1.0);
  const auto rows = continuous_spectrum_scan(ext, {0.0, 1.0}, {0.5}, Vector::Ones(2));
  const std::string csv = scan_to_csv(rows);
  CHECK(csv.rfind("x,epsilon,witness_ratio,bound,satisfied\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("\r") == std::string::npos);

  // 17 significant digits survive a parse back.
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

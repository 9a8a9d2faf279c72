#pragma once

#include <cstdint>
#include <random>

#include "core/halfline_space.hpp"

namespace halfline {

// Seeded generator with explicit bit-to-double mappings, so a fixed seed
// reproduces the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  Complex complex_in_box(double half_width = 1.0);
  Vector complex_vector(int dim, double half_width = 1.0);
  Vector nonzero_complex_vector(int dim, double half_width = 1.0);
  Matrix random_hermitian(int dim);
  Matrix random_unitary(int dim);

 private:
  std::mt19937_64 gen_;
};

struct AtomDistribution {
  int max_atoms = 3;
  double rate_re_lo = 0.1;
  double rate_re_hi = 3.0;
  double rate_im_max = 1.0;
  double coeff_half_width = 1.0;
};

HalfLineFunction random_halfline(Rng& rng, Side side, double anchor, int dim,
                                 const AtomDistribution& dist = {});
TwoComponentFunction random_twocomponent(Rng& rng, int dim, double a, double b,
                                         const AtomDistribution& dist = {});

}  // namespace halfline

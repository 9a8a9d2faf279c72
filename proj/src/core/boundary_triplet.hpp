#pragma once

#include <cstdint>

#include "core/halfline_space.hpp"
#include "core/random_gen.hpp"

namespace halfline {

// Boundary values of u = (u1, u2):
//   gamma1 = (u1(a) + u2(b)) / (i sqrt(2)),
//   gamma2 = (u1(a) - u2(b)) / sqrt(2).
// The traces are recovered by u1(a) = (i gamma1 + gamma2)/sqrt(2) and
// u2(b) = (i gamma1 - gamma2)/sqrt(2).
struct BoundaryPair {
  Vector gamma1;
  Vector gamma2;
};

BoundaryPair boundary_map(const TwoComponentFunction& u);

// A concrete element of the maximal domain hitting prescribed boundary
// values (gamma1, gamma2) = (F1, F2): one decaying atom per half-line with
// unit rate, scaled to the traces (i F1 + F2)/sqrt(2) and (i F1 - F2)/sqrt(2).
TwoComponentFunction solve_boundary_targets(const Vector& F1, const Vector& F2,
                                            const HermitianOperator& A,
                                            double a, double b);

// Lagrange (Green) identity defect
//   (Lu, v) - (u, Lv) - [(gamma2(u), gamma1(v)) - (gamma1(u), gamma2(v))],
// which vanishes on the atom family. Note the pairing order: with the
// 1/(i sqrt 2) normalization of gamma1 above, the opposite order flips the
// sign of the boundary form.
Complex green_defect(const TwoComponentFunction& u, const TwoComponentFunction& v,
                     const HermitianOperator& A);

struct DeficiencyReport {
  Side side;
  int m;  // dim ker(B* + i)
  int n;  // dim ker(B* - i)
};

// Counts the decaying modes of i u' + A u = (-i|+i) u on the given
// half-line, one mode per eigencomponent of A.
DeficiencyReport deficiency_indices(Side side, const HermitianOperator& A);

struct GreenCheckReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double max_defect = 0.0;   // relative: |defect| / (1 + |u| |v|)
  double mean_defect = 0.0;
  double tolerance = 1e-10;
  bool pass = false;
};

// Randomized Green-identity sweep used by the CLI and the acceptance suite.
GreenCheckReport green_check(const HermitianOperator& A, double a, double b,
                             int trials, std::uint64_t seed);

}  // namespace halfline

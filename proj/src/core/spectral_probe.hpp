#pragma once

#include <vector>

#include "core/extension_resolvent.hpp"

namespace halfline {

// Evidence that a real lambda is not an eigenvalue: the general solution of
// the eigenvalue problem on the left ray has constant H-norm (the propagator
// is unitary), so it cannot be square integrable over an infinite ray.
struct PointSpectrumReport {
  Complex lambda;
  double norm_variation = 0.0;  // max_j | |u(t_j)| - |u(t_0)| | over the window
  bool not_eigenvalue = false;
};

// Samples |e^{i(A - lambda)(t-a)} f0| on [a - 100, a]. f0 is given in the
// eigenbasis of A. A complex lambda is accepted as a control: the variation
// then shows the exponential growth or decay instead.
PointSpectrumReport point_spectrum_test(const ExtensionLW& ext, const SpectralPoint& lambda,
                                        const Vector& f0, int samples);

// The input (0, e^{-i(conj(lambda) - A) t} f0) whose resolvent image
// saturates the lower bound 1/(2 Im lambda). Squared norm:
// e^{-2 Im(lambda) b} |f0|^2 / (2 Im lambda).
TwoComponentFunction witness_function(const SpectralPoint& lambda,
                                      const HermitianOperator& A, const Vector& f0,
                                      double a, double b);

struct NormBoundReport {
  SpectralPoint lambda;
  double witness_ratio = 0.0;  // right-component norm of the image over |witness|
  double bound = 0.0;          // 1 / (2 Im lambda)
  bool satisfied = false;      // witness_ratio >= bound * (1 - 1e-10)
  // Extra diagnostics carried along for the CSV/JSON reports.
  double residual = 0.0;
  double bc_defect = 0.0;
};

NormBoundReport norm_lower_bound(const ExtensionLW& ext, const SpectralPoint& lambda,
                                 const Vector& f0);

// Cartesian sweep of norm_lower_bound over {x + i eps}; rows ordered by
// (x index, eps index), cells evaluated independently (possibly in
// parallel).
std::vector<NormBoundReport> continuous_spectrum_scan(const ExtensionLW& ext,
                                                      const std::vector<double>& real_points,
                                                      const std::vector<double>& epsilons,
                                                      const Vector& f0);

}  // namespace halfline

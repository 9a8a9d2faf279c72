#pragma once

#include "core/spectral_probe.hpp"

namespace halfline {

// Transport between two walls of a Neumann box: i du/dt - d^2u/dx^2 = f on
// |t| > 1, x in [0,1], with u_x(t,0) = u_x(t,1) = 0 and the coupling
// u(1,x) = e^{i phi} u(-1,x). In the cosine eigenbasis the problem splits
// into independent scalar channels with A = diag((k pi)^2); truncation
// keeps the first n_modes channels exactly and discards the rest.
struct NeumannConfig {
  int n_modes = 8;
  double phi = 0.0;  // stored reduced mod 2 pi
  double a = -1.0;
  double b = 1.0;
};

// diag((k pi)^2), k = 0..n_modes-1.
HermitianOperator build_neumann_operator(int n_modes);

ExtensionLW build_example_extension(const NeumannConfig& cfg);

struct ExampleRun {
  std::vector<NormBoundReport> cells;
  double max_residual = 0.0;
  double max_bc_defect = 0.0;
  bool all_satisfied = true;
};

// Spectrum scan plus resolvent residual checks over the lambda grid,
// f0 in the cosine-mode basis.
ExampleRun run_example(const NeumannConfig& cfg, const std::vector<double>& real_points,
                       const std::vector<double>& epsilons, const Vector& f0);

// Plot data: u(t, x) = sum_k c_k(t) cos(k pi x) sampled on n_x points of
// [0, 1] for each t that lies on one of the rays. Carries no accuracy claim
// beyond the mode truncation itself.
struct FieldSample {
  double t;
  double x;
  Complex value;
};

std::vector<FieldSample> sample_field(const TwoComponentFunction& u,
                                      const std::vector<double>& t_points, int n_x = 129);

}  // namespace halfline

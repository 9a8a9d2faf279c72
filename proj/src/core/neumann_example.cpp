#include "core/neumann_example.hpp"

#include <cmath>

namespace halfline {

HermitianOperator build_neumann_operator(int n_modes) {
  if (n_modes < 1) fail(ErrorCode::InvalidArgument, "n_modes must be positive");
  Matrix m = Matrix::Zero(n_modes, n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double kpi = k * M_PI;
    m(k, k) = kpi * kpi;
  }
  return HermitianOperator::make(m);
}

ExtensionLW build_example_extension(const NeumannConfig& cfg) {
  if (cfg.n_modes < 1) fail(ErrorCode::InvalidArgument, "n_modes must be positive");
  if (!(cfg.a < cfg.b)) fail(ErrorCode::InvalidArgument, "requires a < b");
  double phi = std::fmod(cfg.phi, 2.0 * M_PI);
  if (phi < 0.0) phi += 2.0 * M_PI;
  return ExtensionLW(build_neumann_operator(cfg.n_modes),
                     UnitaryParameter::phase(cfg.n_modes, phi), cfg.a, cfg.b);
}

ExampleRun run_example(const NeumannConfig& cfg, const std::vector<double>& real_points,
                       const std::vector<double>& epsilons, const Vector& f0) {
  const ExtensionLW ext = build_example_extension(cfg);
  ExampleRun run;
  run.cells = continuous_spectrum_scan(ext, real_points, epsilons, f0);
  for (const auto& cell : run.cells) {
    run.max_residual = std::max(run.max_residual, cell.residual);
    run.max_bc_defect = std::max(run.max_bc_defect, cell.bc_defect);
    run.all_satisfied = run.all_satisfied && cell.satisfied;
  }
  return run;
}

std::vector<FieldSample> sample_field(const TwoComponentFunction& u,
                                      const std::vector<double>& t_points, int n_x) {
  if (n_x < 2) fail(ErrorCode::InvalidArgument, "need at least 2 x samples");
  std::vector<FieldSample> rows;
  for (double t : t_points) {
    const bool on_left = t <= u.a();
    const bool on_right = t >= u.b();
    if (!on_left && !on_right) continue;  // the gap (a, b) carries no field
    const Vector c = evaluate(on_left ? u.left : u.right, t);
    for (int j = 0; j < n_x; ++j) {
      const double x = static_cast<double>(j) / (n_x - 1);
      Complex v = 0.0;
      for (int k = 0; k < c.size(); ++k) v += c[k] * std::cos(k * M_PI * x);
      rows.push_back({t, x, v});
    }
  }
  return rows;
}

}  // namespace halfline

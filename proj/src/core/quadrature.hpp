#pragma once

#include <vector>

namespace halfline {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached per order; nodes found by Newton iteration on P_n.
const GaussLegendreRule& gauss_legendre(int order);

// Composite Gauss-Legendre over [lo, hi] using panels of `order` points,
// sized so the total node count is at least `min_points`.
template <typename F>
auto composite_gauss_legendre(F&& f, double lo, double hi, int min_points,
                              int order = 10) -> decltype(f(0.0)) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const int panels = std::max(1, (min_points + order - 1) / order);
  const double width = (hi - lo) / panels;
  decltype(f(0.0)) acc{};
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (int j = 0; j < order; ++j)
      acc += (half * rule.weights[j]) * f(mid + half * rule.nodes[j]);
  }
  return acc;
}

}  // namespace halfline

#include "splitcheck/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace splitcheck::duhamel {

void QuadratureSpec::validate() const {
  if (gauss_order < 2) throw InvalidArgument("QuadratureSpec: gauss_order must be >= 2");
  if (panels < 1) throw InvalidArgument("QuadratureSpec: panels must be >= 1");
  if (!(target_tol > 0.0)) throw InvalidArgument("QuadratureSpec: target_tol must be > 0");
  if (max_panels < panels) throw InvalidArgument("QuadratureSpec: max_panels below panels");
}

GaussLegendre::GaussLegendre(int order) : nodes_(order), weights_(order) {
  if (order < 1) throw InvalidArgument("GaussLegendre: order must be >= 1");
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

std::vector<QuadraturePoint> GaussLegendre::composite(double a, double b, int panels) const {
  if (panels < 1) throw InvalidArgument("GaussLegendre::composite: panels must be >= 1");
  std::vector<QuadraturePoint> points;
  points.reserve(static_cast<std::size_t>(panels) * nodes_.size());
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double half = 0.5 * h;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      points.push_back({lo + half * (nodes_[k] + 1.0), half * weights_[k]});
    }
  }
  return points;
}

}  // namespace splitcheck::duhamel

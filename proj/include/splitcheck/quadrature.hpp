#pragma once

#include <string>
#include <vector>

#include "splitcheck/errors.hpp"
#include "splitcheck/matrix_core.hpp"

namespace splitcheck::duhamel {

using linalg::ComplexMatrix;

struct QuadratureSpec {
  int gauss_order = 8;       // nodes per panel
  int panels = 1;            // starting panel count
  double target_tol = 1e-10; // absolute, in operator norm
  int max_panels = 32;       // refinement cap

  void validate() const;
};

struct QuadraturePoint {
  double x;
  double w;
};

// Gauss-Legendre rule on [-1, 1], nodes from Newton iteration on P_n.
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  // Composite rule on [a, b] with `panels` equal panels, nodes ascending.
  std::vector<QuadraturePoint> composite(double a, double b, int panels) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

template <class Integrand>
ComplexMatrix integrate(Integrand&& f, double a, double b, const GaussLegendre& rule, int panels,
                        Eigen::Index dim) {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& p : rule.composite(a, b, panels)) sum += p.w * f(p.x);
  return sum;
}

// Evaluates `eval(panels)` with panels = spec.panels, 2*spec.panels, ... until
// two successive results differ by less than target_tol / 2 in operator norm.
// Throws ToleranceNotReached when the next doubling would exceed max_panels.
template <class Evaluator>
ComplexMatrix refine_panels(Evaluator&& eval, const QuadratureSpec& spec, const std::string& what,
                            int* panels_used = nullptr) {
  spec.validate();
  int panels = spec.panels;
  ComplexMatrix previous = eval(panels);
  while (true) {
    if (panels * 2 > spec.max_panels) {
      throw ToleranceNotReached(what + ": target tolerance not reached at " +
                                std::to_string(panels) + " panels");
    }
    panels *= 2;
    ComplexMatrix current = eval(panels);
    if (linalg::op_norm(current - previous) < spec.target_tol / 2) {
      if (panels_used) *panels_used = panels;
      return current;
    }
    previous = std::move(current);
  }
}

}  // namespace splitcheck::duhamel

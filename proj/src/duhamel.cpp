#include "splitcheck/duhamel.hpp"

#include <cmath>

#include "splitcheck/splitting.hpp"

namespace splitcheck::duhamel {

using linalg::commutator;
using linalg::expm;
using linalg::op_norm;

namespace {

void require_same_dims(std::initializer_list<const ComplexMatrix*> ms, const char* who) {
  const auto n = (*ms.begin())->rows();
  for (const auto* m : ms) {
    if (m->rows() != n || m->cols() != n) {
      throw DimensionMismatch(std::string(who) + ": operands must be square of equal dimension");
    }
  }
}

// int_0^a e^{sP} D e^{-sP} ds
ComplexMatrix conjugation_integral(const ComplexMatrix& p, const ComplexMatrix& d, double a,
                                   const GaussLegendre& rule, int panels) {
  return integrate([&](double s) { return ComplexMatrix(expm(p, s) * d * expm(p, -s)); }, 0.0, a,
                   rule, panels, p.rows());
}

// Reuses one GaussLegendre rule across the refinement loop.
template <class Fixed>
ComplexMatrix adaptive(Fixed&& fixed, const QuadratureSpec& quad, const std::string& what) {
  quad.validate();
  const GaussLegendre rule(quad.gauss_order);
  return refine_panels([&](int panels) { return fixed(rule, panels); }, quad, what);
}

}  // namespace

ComplexMatrix z_integral_left(const ComplexMatrix& p, const ComplexMatrix& q, double t,
                              const GaussLegendre& rule, int panels) {
  require_same_dims({&p, &q}, "z_integral");
  const ComplexMatrix pq = commutator(p, q);
  return expm(p, t) * conjugation_integral(-p, pq, t, rule, panels);
}

ComplexMatrix z_integral_right(const ComplexMatrix& p, const ComplexMatrix& q, double t,
                               const GaussLegendre& rule, int panels) {
  require_same_dims({&p, &q}, "z_integral");
  const ComplexMatrix pq = commutator(p, q);
  return conjugation_integral(p, pq, t, rule, panels) * expm(p, t);
}

ComplexMatrix w_double_integral(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                const ComplexMatrix& p3, double tau, const GaussLegendre& rule,
                                int panels) {
  require_same_dims({&p1, &p2, &p3}, "w_integral");
  const auto n = p1.rows();
  const ComplexMatrix c23 = commutator(p2, p3);
  const ComplexMatrix d1 = commutator(p1, c23);
  const ComplexMatrix d2 = commutator(p2, c23);

  ComplexMatrix first = ComplexMatrix::Zero(n, n);
  ComplexMatrix second = ComplexMatrix::Zero(n, n);
  for (const auto& eta : rule.composite(0.0, tau, panels)) {
    const ComplexMatrix k1 = conjugation_integral(p1, d1, eta.x, rule, panels);
    const ComplexMatrix k2 = conjugation_integral(p2, d2, eta.x, rule, panels);
    first += eta.w * (expm(p1, tau - eta.x) * k1 * expm(p1, eta.x));
    second += eta.w * k2;
  }
  return first + expm(p1, tau) * second;
}

ComplexMatrix w_defining(const ComplexMatrix& p1, const ComplexMatrix& p2,
                         const ComplexMatrix& p3, double tau, const GaussLegendre& rule,
                         int panels) {
  require_same_dims({&p1, &p2, &p3}, "w_defining");
  const ComplexMatrix c23 = commutator(p2, p3);
  const ComplexMatrix e1 = expm(p1, tau);
  return e1 * conjugation_integral(p2, c23, tau, rule, panels) -
         conjugation_integral(p1, c23, tau, rule, panels) * e1;
}

ComplexMatrix duhamel_error_fixed(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                  const ComplexMatrix& p3, double t, const GaussLegendre& rule,
                                  int panels) {
  require_same_dims({&p1, &p2, &p3}, "duhamel_error");
  const ComplexMatrix l = p1 + p2 + p3;
  // Outer contributions are summed in fixed node order so results are
  // bit-reproducible.
  return integrate(
      [&](double tau) {
        return ComplexMatrix(expm(l, t - tau) * w_double_integral(p1, p2, p3, tau, rule, panels) *
                             expm(p2, tau) * expm(p3, tau));
      },
      0.0, t, rule, panels, p1.rows());
}

ComplexMatrix z_integral(const ComplexMatrix& p, const ComplexMatrix& q, double t,
                         const QuadratureSpec& quad) {
  const ComplexMatrix left = adaptive(
      [&](const GaussLegendre& rule, int panels) { return z_integral_left(p, q, t, rule, panels); },
      quad, "z_integral (left form)");
  const ComplexMatrix right = adaptive(
      [&](const GaussLegendre& rule, int panels) { return z_integral_right(p, q, t, rule, panels); },
      quad, "z_integral (right form)");
  const double gap = op_norm(left - right);
  if (!(gap <= quad.target_tol)) {
    throw ToleranceNotReached("z_integral: left and right forms differ by " + std::to_string(gap));
  }
  return left;
}

ComplexMatrix w_integral(const ComplexMatrix& p1, const ComplexMatrix& p2, const ComplexMatrix& p3,
                         double tau, const QuadratureSpec& quad) {
  return adaptive(
      [&](const GaussLegendre& rule, int panels) {
        return w_double_integral(p1, p2, p3, tau, rule, panels);
      },
      quad, "w_integral");
}

ComplexMatrix w_integral_defining(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                  const ComplexMatrix& p3, double tau,
                                  const QuadratureSpec& quad) {
  return adaptive(
      [&](const GaussLegendre& rule, int panels) {
        return w_defining(p1, p2, p3, tau, rule, panels);
      },
      quad, "w_integral_defining");
}

ComplexMatrix duhamel_error(const ComplexMatrix& p1, const ComplexMatrix& p2,
                            const ComplexMatrix& p3, double t, const QuadratureSpec& quad) {
  require_same_dims({&p1, &p2, &p3}, "duhamel_error");
  const auto check = splitting::check_second_order(p1, p2, p3, 1e-8);
  if (!check.satisfied) {
    throw ConditionViolated("duhamel_error: second-order residual " +
                            std::to_string(check.residual) + " too large");
  }
  return adaptive(
      [&](const GaussLegendre& rule, int panels) {
        return duhamel_error_fixed(p1, p2, p3, t, rule, panels);
      },
      quad, "duhamel_error");
}

double error_bound(const ComplexMatrix& p1, const ComplexMatrix& p2, const ComplexMatrix& p3,
                   double t) {
  require_same_dims({&p1, &p2, &p3}, "error_bound");
  const ComplexMatrix c23 = commutator(p2, p3);
  return t * t * t / 6.0 * (op_norm(commutator(p1, c23)) + op_norm(commutator(p2, c23)));
}

TripleVerification verify_triple(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                 const ComplexMatrix& p3, const std::vector<double>& times,
                                 const QuadratureSpec& quad) {
  constexpr double kMeasurable = 1e-12;
  const splitting::OperatorSet ops{{"P1", p1}, {"P2", p2}, {"P3", p3}};
  const auto scheme = splitting::make_three_factor();

  std::vector<ComplexMatrix> measured, represented;
  for (double t : times) {
    measured.push_back(splitting::splitting_error(scheme, ops, t));
    represented.push_back(duhamel_error(p1, p2, p3, t, quad));
  }

  auto preferred_sign = [&](std::size_t i) {
    return op_norm(measured[i] - represented[i]) <= op_norm(measured[i] + represented[i]) ? 1 : -1;
  };

  TripleVerification out;
  out.times = times;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (op_norm(measured[i]) > kMeasurable) {
      out.sign_factor = preferred_sign(i);
      out.calibration_time = times[i];
      break;
    }
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    ErrorReport r;
    r.measured_error_norm = op_norm(measured[i]);
    r.duhamel_norm = op_norm(represented[i]);
    r.bound_value = error_bound(p1, p2, p3, times[i]);
    r.sign_factor = out.sign_factor;
    r.discrepancy = op_norm(measured[i] - out.sign_factor * represented[i]);
    if (r.measured_error_norm > kMeasurable && preferred_sign(i) != out.sign_factor) {
      out.sign_consistent = false;
    }
    out.max_discrepancy = std::max(out.max_discrepancy, r.discrepancy);
    out.reports.push_back(r);
  }
  return out;
}

}  // namespace splitcheck::duhamel

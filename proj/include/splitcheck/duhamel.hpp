#pragma once

// Nested Gauss-Legendre evaluation of the commutator integrals behind the
// exact error representation of the three-factor splitting
// S(t) = e^{tP1} e^{tP2} e^{tP3}, and the resulting cubic error bound.

#include <string>
#include <vector>

#include "splitcheck/quadrature.hpp"

namespace splitcheck::duhamel {

// --- fixed-rule evaluators (one rule, one panel count at every level) -------

// e^{tP} int_0^t e^{-sP} [P,Q] e^{sP} ds
ComplexMatrix z_integral_left(const ComplexMatrix& p, const ComplexMatrix& q, double t,
                              const GaussLegendre& rule, int panels);
// int_0^t e^{sP} [P,Q] e^{-sP} ds e^{tP}
ComplexMatrix z_integral_right(const ComplexMatrix& p, const ComplexMatrix& q, double t,
                               const GaussLegendre& rule, int panels);

// W(tau) as the double integral
//   int_0^tau e^{(tau-eta)P1} K1(eta) e^{eta P1} d eta + e^{tau P1} int_0^tau K2(eta) d eta,
//   K1(eta) = int_0^eta e^{xi P1} [P1,[P2,P3]] e^{-xi P1} d xi,
//   K2(eta) = int_0^eta e^{xi P2} [P2,[P2,P3]] e^{-xi P2} d xi.
ComplexMatrix w_double_integral(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                const ComplexMatrix& p3, double tau, const GaussLegendre& rule,
                                int panels);
// W(tau) = e^{tau P1} int_0^tau e^{eta P2}[P2,P3]e^{-eta P2} d eta
//        - int_0^tau e^{eta P1}[P2,P3]e^{-eta P1} d eta e^{tau P1}
ComplexMatrix w_defining(const ComplexMatrix& p1, const ComplexMatrix& p2,
                         const ComplexMatrix& p3, double tau, const GaussLegendre& rule,
                         int panels);

// int_0^t e^{(t-tau)L} W(tau) e^{tau P2} e^{tau P3} d tau with W from
// w_double_integral and L = P1 + P2 + P3.
ComplexMatrix duhamel_error_fixed(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                  const ComplexMatrix& p3, double t, const GaussLegendre& rule,
                                  int panels);

// --- adaptive entry points (panel doubling to QuadratureSpec::target_tol) ----

// [e^{tP}, Q] via the left-multiplied integral; the right-multiplied form is
// evaluated as well and must agree within target_tol.
ComplexMatrix z_integral(const ComplexMatrix& p, const ComplexMatrix& q, double t,
                         const QuadratureSpec& quad = {});

ComplexMatrix w_integral(const ComplexMatrix& p1, const ComplexMatrix& p2, const ComplexMatrix& p3,
                         double tau, const QuadratureSpec& quad = {});

ComplexMatrix w_integral_defining(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                  const ComplexMatrix& p3, double tau,
                                  const QuadratureSpec& quad = {});

// Triple-nested error representation. Requires the second-order condition at
// tolerance 1e-8 (see splitting::check_second_order); throws ConditionViolated
// otherwise.
ComplexMatrix duhamel_error(const ComplexMatrix& p1, const ComplexMatrix& p2,
                            const ComplexMatrix& p3, double t, const QuadratureSpec& quad = {});

// (t^3 / 6) (||[P1,[P2,P3]]|| + ||[P2,[P2,P3]]||)
double error_bound(const ComplexMatrix& p1, const ComplexMatrix& p2, const ComplexMatrix& p3,
                   double t);

struct ErrorReport {
  double measured_error_norm = 0.0;
  double duhamel_norm = 0.0;
  double bound_value = 0.0;
  int sign_factor = 1;
  double discrepancy = 0.0;
};

struct TripleVerification {
  std::vector<double> times;
  std::vector<ErrorReport> reports;  // parallel to times
  int sign_factor = 1;
  double calibration_time = 0.0;     // 0 when no time had a measurable error
  bool sign_consistent = true;
  double max_discrepancy = 0.0;
};

// Compares duhamel_error with the measured S(t) - e^{tL} at every t. The sign
// factor is fixed at the first t whose measured error exceeds 1e-12 and must
// be the preferred sign at every other such t.
TripleVerification verify_triple(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                 const ComplexMatrix& p3, const std::vector<double>& times,
                                 const QuadratureSpec& quad = {});

}  // namespace splitcheck::duhamel

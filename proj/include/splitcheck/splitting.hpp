#pragma once

#include <map>
#include <string>
#include <vector>

#include "splitcheck/matrix_core.hpp"

namespace splitcheck::splitting {

using linalg::ComplexMatrix;

struct Operand {
  std::string ref;
  double coefficient = 1.0;

  friend bool operator==(const Operand&, const Operand&) = default;
};

// S(t) = e^{t c_1 X_1} e^{t c_2 X_2} ... e^{t c_n X_n}. As an operator acting
// on states, the rightmost factor acts first.
class SplittingScheme {
 public:
  SplittingScheme(std::string name, std::vector<Operand> operands, bool canonical = false);

  const std::string& name() const { return name_; }
  const std::vector<Operand>& operands() const { return operands_; }
  bool canonical() const { return canonical_; }

  // Distinct operator references in first-appearance order.
  std::vector<std::string> references() const;
  double coefficient_sum(const std::string& ref) const;
  bool is_palindromic() const;

  friend bool operator==(const SplittingScheme&, const SplittingScheme&) = default;

 private:
  std::string name_;
  std::vector<Operand> operands_;
  bool canonical_ = false;
};

SplittingScheme make_lie_trotter();
SplittingScheme make_strang();
// e^{tP1} e^{tP2} e^{tP3} over references "P1", "P2", "P3".
SplittingScheme make_three_factor();

// Named lookup: "lie-trotter", "strang", "three-factor".
SplittingScheme scheme_by_name(const std::string& name);

class OperatorSet {
 public:
  OperatorSet() = default;
  OperatorSet(std::initializer_list<std::pair<const std::string, ComplexMatrix>> bindings);

  void bind(const std::string& ref, ComplexMatrix m);
  const ComplexMatrix& at(const std::string& ref) const;
  bool contains(const std::string& ref) const { return bindings_.count(ref) != 0; }
  Eigen::Index dim() const { return dim_; }

 private:
  std::map<std::string, ComplexMatrix> bindings_;
  Eigen::Index dim_ = 0;
};

// The generator sum_k c_k X_k that the scheme approximates.
ComplexMatrix generator(const SplittingScheme& scheme, const OperatorSet& ops);

ComplexMatrix apply_splitting(const SplittingScheme& scheme, const OperatorSet& ops, double t);

// E(t) = S(t) - e^{tL}.
ComplexMatrix splitting_error(const SplittingScheme& scheme, const OperatorSet& ops, double t);

// S(h)^{steps} - e^{T L} with T = steps * h.
ComplexMatrix global_error(const SplittingScheme& scheme, const OperatorSet& ops, double h,
                           int steps);

struct SecondOrderCheck {
  bool satisfied = false;
  double residual = 0.0;
};

// residual = ||[P1,P2] + [P1,P3] + [P2,P3]||; satisfied when
// residual <= tol * (1 + ||P1||^2 + ||P2||^2 + ||P3||^2).
SecondOrderCheck check_second_order(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                    const ComplexMatrix& p3, double tol);

enum class E3Form {
  // -(1/6)[P2,[P1,P2]] - (1/6)[P3,[P1,P2]]  (from the Taylor expansion)
  taylor_reduced,
  // (1/6)([P1,[P2,P3]] + [P2,[P2,P3]])  (from the Duhamel representation)
  building_blocks,
};

ComplexMatrix leading_error_e3(const ComplexMatrix& p1, const ComplexMatrix& p2,
                               const ComplexMatrix& p3, E3Form form);

}  // namespace splitcheck::splitting

#include "splitcheck/splitting.hpp"

#include <algorithm>
#include <cmath>

#include "splitcheck/errors.hpp"

namespace splitcheck::splitting {

using linalg::commutator;
using linalg::expm;
using linalg::op_norm;

SplittingScheme::SplittingScheme(std::string name, std::vector<Operand> operands, bool canonical)
    : name_(std::move(name)), operands_(std::move(operands)), canonical_(canonical) {
  if (operands_.empty()) throw InvalidArgument("SplittingScheme '" + name_ + "': no operands");
  for (const auto& op : operands_) {
    if (op.ref.empty()) throw InvalidArgument("SplittingScheme '" + name_ + "': empty reference");
    if (!std::isfinite(op.coefficient)) {
      throw InvalidArgument("SplittingScheme '" + name_ + "': non-finite coefficient");
    }
  }
  if (canonical_) {
    const auto refs = references();
    if (refs.size() != 2 || std::find(refs.begin(), refs.end(), "A") == refs.end() ||
        std::find(refs.begin(), refs.end(), "B") == refs.end()) {
      throw NonCanonicalScheme("SplittingScheme '" + name_ +
                               "': canonical schemes reference exactly A and B");
    }
    for (const char* ref : {"A", "B"}) {
      if (std::abs(coefficient_sum(ref) - 1.0) > 1e-12) {
        throw NonCanonicalScheme("SplittingScheme '" + name_ + "': coefficients of " + ref +
                                 " sum to " + std::to_string(coefficient_sum(ref)) + ", not 1");
      }
    }
  }
}

std::vector<std::string> SplittingScheme::references() const {
  std::vector<std::string> refs;
  for (const auto& op : operands_) {
    if (std::find(refs.begin(), refs.end(), op.ref) == refs.end()) refs.push_back(op.ref);
  }
  return refs;
}

double SplittingScheme::coefficient_sum(const std::string& ref) const {
  double sum = 0.0;
  for (const auto& op : operands_) {
    if (op.ref == ref) sum += op.coefficient;
  }
  return sum;
}

bool SplittingScheme::is_palindromic() const {
  return std::equal(operands_.begin(), operands_.end(), operands_.rbegin());
}

SplittingScheme make_lie_trotter() {
  return SplittingScheme("lie-trotter", {{"A", 1.0}, {"B", 1.0}}, true);
}

SplittingScheme make_strang() {
  return SplittingScheme("strang", {{"A", 0.5}, {"B", 1.0}, {"A", 0.5}}, true);
}

SplittingScheme make_three_factor() {
  return SplittingScheme("three-factor", {{"P1", 1.0}, {"P2", 1.0}, {"P3", 1.0}}, false);
}

SplittingScheme scheme_by_name(const std::string& name) {
  if (name == "lie-trotter") return make_lie_trotter();
  if (name == "strang") return make_strang();
  if (name == "three-factor") return make_three_factor();
  throw InvalidArgument("unknown scheme '" + name + "'");
}

OperatorSet::OperatorSet(
    std::initializer_list<std::pair<const std::string, ComplexMatrix>> bindings) {
  for (const auto& [ref, m] : bindings) bind(ref, m);
}

void OperatorSet::bind(const std::string& ref, ComplexMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("OperatorSet: '" + ref + "' is not square");
  if (!bindings_.empty() && m.rows() != dim_) {
    throw DimensionMismatch("OperatorSet: '" + ref + "' has dimension " +
                            std::to_string(m.rows()) + ", expected " + std::to_string(dim_));
  }
  dim_ = m.rows();
  bindings_.insert_or_assign(ref, std::move(m));
}

const ComplexMatrix& OperatorSet::at(const std::string& ref) const {
  auto it = bindings_.find(ref);
  if (it == bindings_.end()) throw UnboundReference("operator '" + ref + "' is not bound");
  return it->second;
}

ComplexMatrix generator(const SplittingScheme& scheme, const OperatorSet& ops) {
  const auto n = ops.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& op : scheme.operands()) sum += op.coefficient * ops.at(op.ref);
  return sum;
}

ComplexMatrix apply_splitting(const SplittingScheme& scheme, const OperatorSet& ops, double t) {
  const auto n = ops.dim();
  ComplexMatrix product = ComplexMatrix::Identity(n, n);
  for (const auto& op : scheme.operands()) {
    const ComplexMatrix& x = ops.at(op.ref);
    if (op.coefficient == 0.0) continue;
    product = product * expm(x, op.coefficient * t);
  }
  return product;
}

ComplexMatrix splitting_error(const SplittingScheme& scheme, const OperatorSet& ops, double t) {
  return apply_splitting(scheme, ops, t) - expm(generator(scheme, ops), t);
}

ComplexMatrix global_error(const SplittingScheme& scheme, const OperatorSet& ops, double h,
                           int steps) {
  if (steps < 0) throw InvalidArgument("global_error: negative step count");
  const ComplexMatrix step = apply_splitting(scheme, ops, h);
  const auto n = ops.dim();
  ComplexMatrix propagated = ComplexMatrix::Identity(n, n);
  for (int k = 0; k < steps; ++k) propagated = step * propagated;
  return propagated - expm(generator(scheme, ops), h * steps);
}

SecondOrderCheck check_second_order(const ComplexMatrix& p1, const ComplexMatrix& p2,
                                    const ComplexMatrix& p3, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("check_second_order: tol must be positive");
  SecondOrderCheck out;
  out.residual = linalg::second_order_residual(p1, p2, p3);
  const double n1 = op_norm(p1), n2 = op_norm(p2), n3 = op_norm(p3);
  out.satisfied = out.residual <= tol * (1.0 + n1 * n1 + n2 * n2 + n3 * n3);
  return out;
}

ComplexMatrix leading_error_e3(const ComplexMatrix& p1, const ComplexMatrix& p2,
                               const ComplexMatrix& p3, E3Form form) {
  switch (form) {
    case E3Form::taylor_reduced: {
      const ComplexMatrix c12 = commutator(p1, p2);
      return -(commutator(p2, c12) + commutator(p3, c12)) / 6.0;
    }
    case E3Form::building_blocks: {
      const ComplexMatrix c23 = commutator(p2, p3);
      return (commutator(p1, c23) + commutator(p2, c23)) / 6.0;
    }
  }
  throw InvalidArgument("leading_error_e3: unknown form");
}

}  // namespace splitcheck::splitting

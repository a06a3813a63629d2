#pragma once

// Named closed forms for the Taylor error coefficients of the three-factor
// splitting and the exact chain of identities connecting them.

#include <string>
#include <vector>

#include "splitcheck/lie_symbolic.hpp"

namespace splitcheck::algebra {

// (1/2)([P1,P2] + [P1,P3] + [P2,P3])
FreeElement e2_form();

// Degree-3 coefficient as it comes out of a raw Taylor expansion, including
// the non-Lie terms [P_k,P_l] P_j and (1/2)(P1 P2 P3 - P3 P2 P1).
FreeElement e3_naive_form();

// After substituting the second-order condition into three of the
// [P_k,P_l] P_j terms: pure commutators plus (1/2)[P2,[P1,P3]].
FreeElement e3_substituted_form();

// -(1/6)[P1,[P2,P3]] - (1/6)[P2,[P1,P2]] + (1/6)[P2,[P1,P3]] - (1/3)[P3,[P1,P2]]
FreeElement e3_grouped_form();

// -(1/6)[P2,[P1,P2]] - (1/6)[P3,[P1,P2]], optionally with a perturbed first
// coefficient (used to check that certification detects faults).
FreeElement e3_reduced_form(const Rational& first_coefficient = Rational(-1, 6));

// (1/6)([P1,[P2,P3]] + [P2,[P2,P3]])
FreeElement e3_building_blocks_form();

// [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] for generators X, Y, Z.
FreeElement jacobi_residual(int x, int y, int z);

struct CertificationStep {
  std::string name;
  bool passed = false;
  std::string detail;
  // Element that should have vanished (exactly, or modulo the condition
  // ideal); empty when the step passed.
  FreeElement offending;
};

struct CertificationOptions {
  // Replace -1/6 by -1/5 in the reduced E3 target.
  bool mutate_reduced_form = false;
};

std::vector<CertificationStep> certify_chain(const CertificationOptions& options = {});

}  // namespace splitcheck::algebra

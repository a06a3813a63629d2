#include "splitcheck/identities.hpp"

namespace splitcheck::algebra {

namespace {

FreeElement br(int i, int j) { return expand_bracket(bracket(i, j)); }
FreeElement br(int i, int j, int k) { return expand_bracket(bracket(i, j, k)); }
FreeElement gen(int i) { return FreeElement::generator(i); }

// Commutator part shared by the naive and substituted forms of E3.
FreeElement e3_lie_part() {
  return Rational(1, 3) * br(1, 1, 2) + Rational(1, 6) * br(2, 1, 2) +
         Rational(1, 3) * br(1, 1, 3) + Rational(1, 6) * br(3, 1, 3) +
         Rational(1, 3) * br(2, 2, 3) + Rational(1, 6) * br(3, 2, 3) +
         Rational(1, 6) * br(1, 2, 3) - Rational(1, 6) * br(3, 1, 2);
}

CertificationStep exact_zero(std::string name, const FreeElement& residual) {
  CertificationStep step;
  step.name = std::move(name);
  step.passed = residual.is_zero();
  step.detail = step.passed ? "exact" : "nonzero residual";
  if (!step.passed) step.offending = residual;
  return step;
}

CertificationStep zero_mod_condition(std::string name, const FreeElement& difference) {
  CertificationStep step;
  step.name = std::move(name);
  if (auto cert = reduce_mod_condition(difference)) {
    step.passed = true;
    step.detail = "ideal coefficients C*P_j:";
    for (const auto& c : cert->condition_times_word) step.detail += " " + c.to_string();
    step.detail += "; P_j*C:";
    for (const auto& c : cert->word_times_condition) step.detail += " " + c.to_string();
  } else {
    step.passed = false;
    step.detail = "not in the condition ideal";
    step.offending = normal_form_mod_condition(difference);
  }
  return step;
}

CertificationStep not_in_ideal(std::string name, const FreeElement& element) {
  CertificationStep step;
  step.name = std::move(name);
  step.passed = !reduce_mod_condition(element).has_value();
  step.detail = step.passed ? "not reducible, as required" : "unexpectedly reducible";
  if (!step.passed) step.offending = element;
  return step;
}

}  // namespace

FreeElement e2_form() { return Rational(1, 2) * second_order_condition(); }

FreeElement e3_naive_form() {
  const FreeElement half_products =
      br(1, 2) * gen(1) + br(1, 2) * gen(2) + br(1, 3) * gen(1) + br(1, 3) * gen(3) +
      br(2, 3) * gen(2) + br(2, 3) * gen(3) + gen(1) * gen(2) * gen(3) - gen(3) * gen(2) * gen(1);
  return e3_lie_part() + Rational(1, 2) * half_products;
}

FreeElement e3_substituted_form() { return e3_lie_part() + Rational(1, 2) * br(2, 1, 3); }

FreeElement e3_grouped_form() {
  return Rational(-1, 6) * br(1, 2, 3) - Rational(1, 6) * br(2, 1, 2) +
         Rational(1, 6) * br(2, 1, 3) - Rational(1, 3) * br(3, 1, 2);
}

FreeElement e3_reduced_form(const Rational& first_coefficient) {
  return first_coefficient * br(2, 1, 2) - Rational(1, 6) * br(3, 1, 2);
}

FreeElement e3_building_blocks_form() {
  return Rational(1, 6) * (br(1, 2, 3) + br(2, 2, 3));
}

FreeElement jacobi_residual(int x, int y, int z) {
  return br(x, y, z) + br(y, z, x) + br(z, x, y);
}

std::vector<CertificationStep> certify_chain(const CertificationOptions& options) {
  const auto taylor = splitting_taylor(3);
  std::vector<CertificationStep> steps;

  steps.push_back(exact_zero("taylor t^0 coefficient vanishes", taylor[0]));
  steps.push_back(exact_zero("taylor t^1 coefficient vanishes (consistency)", taylor[1]));
  steps.push_back(exact_zero("t^2 coefficient equals (1/2)([P1,P2]+[P1,P3]+[P2,P3])",
                             taylor[2] - e2_form()));
  steps.push_back(exact_zero("t^3 coefficient equals the naive E3 display",
                             taylor[3] - e3_naive_form()));
  steps.push_back(not_in_ideal("naive E3 is not itself in the condition ideal", taylor[3]));

  steps.push_back(zero_mod_condition("substitution step: naive E3 == substituted form mod C",
                                     taylor[3] - e3_substituted_form()));
  steps.push_back(zero_mod_condition("grouping step: substituted == grouped form mod C",
                                     e3_substituted_form() - e3_grouped_form()));

  steps.push_back(exact_zero("Jacobi: [P2,[P1,P3]] == [P1,[P2,P3]] + [P3,[P1,P2]]",
                             br(2, 1, 3) - br(1, 2, 3) - br(3, 1, 2)));
  {
    FreeElement first_failure;
    bool ok = true;
    for (int x = 1; x <= kGenerators && ok; ++x)
      for (int y = 1; y <= kGenerators && ok; ++y)
        for (int z = 1; z <= kGenerators && ok; ++z) {
          const FreeElement r = jacobi_residual(x, y, z);
          if (!r.is_zero()) {
            ok = false;
            first_failure = r;
          }
        }
    steps.push_back(exact_zero("Jacobi identity for all 27 generator triples", first_failure));
  }

  const Rational first = options.mutate_reduced_form ? Rational(-1, 5) : Rational(-1, 6);
  const FreeElement reduced = e3_reduced_form(first);
  steps.push_back(exact_zero("grouped form + Jacobi == reduced E3 exactly",
                             e3_grouped_form() - reduced));
  steps.push_back(zero_mod_condition("naive E3 == -(1/6)[P2,[P1,P2]] - (1/6)[P3,[P1,P2]] mod C",
                                     taylor[3] - reduced));
  steps.push_back(zero_mod_condition(
      "reduced E3 == (1/6)([P1,[P2,P3]] + [P2,[P2,P3]]) mod C",
      reduced - e3_building_blocks_form()));
  steps.push_back(zero_mod_condition("naive E3 == building-blocks E3 mod C",
                                     taylor[3] - e3_building_blocks_form()));
  return steps;
}

}  // namespace splitcheck::algebra

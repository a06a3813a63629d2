#pragma once

// Exact computations in the free associative algebra over three
// noncommuting generators P1, P2, P3 with rational coefficients.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitcheck/rational.hpp"

namespace splitcheck::algebra {

inline constexpr int kGenerators = 3;

// A monomial P_{i1} P_{i2} ... P_{ik}. The empty word is the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<std::uint8_t> letters);

  static Word generator(int index);

  int degree() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  Word operator*(const Word& right) const;

  // Lexicographic on letter sequences.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  // "P1 P2 P3"; the unit prints as "1".
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> letters_;
};

// Finite linear combination of words. Zero coefficients are never stored, so
// two elements are equal exactly when their term maps are equal.
class FreeElement {
 public:
  using Terms = std::map<Word, Rational>;

  FreeElement() = default;
  FreeElement(const Word& word, const Rational& coefficient = 1);

  static FreeElement generator(int index) { return FreeElement(Word::generator(index)); }
  static FreeElement unit() { return FreeElement(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& word) const;

  // -1 for the zero element.
  int max_degree() const;
  bool is_homogeneous(int degree) const;
  FreeElement homogeneous_part(int degree) const;
  FreeElement truncated(int max_degree) const;

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  FreeElement& operator*=(const Rational& scalar);

  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const Rational& s) { return a *= s; }
  friend FreeElement operator*(const Rational& s, FreeElement a) { return a *= s; }
  FreeElement operator-() const;

  // Noncommutative product (concatenation of words).
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  void add_term(const Word& word, const Rational& coefficient);
  Terms terms_;
};

FreeElement commutator(const FreeElement& x, const FreeElement& y);

// Immutable binary tree of nested commutators with an optional rational weight.
class BracketTree {
 public:
  static BracketTree leaf(int generator);
  static BracketTree bracket(const BracketTree& left, const BracketTree& right);

  BracketTree scaled(const Rational& factor) const;

  bool is_leaf() const;
  int generator() const;
  const BracketTree& left() const;
  const BracketTree& right() const;
  const Rational& scale() const;
  int leaf_count() const;

 private:
  struct Node;
  explicit BracketTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// [P_i, P_j] and [P_i, [P_j, P_k]] as trees.
BracketTree bracket(int i, int j);
BracketTree bracket(int i, int j, int k);

FreeElement expand_bracket(const BracketTree& expr);

// Coefficients of t^j, j = 0..max_degree, in e^{tP1} e^{tP2} e^{tP3} - e^{t(P1+P2+P3)}.
std::vector<FreeElement> splitting_taylor(int max_degree);

// C = [P1,P2] + [P1,P3] + [P2,P3].
FreeElement second_order_condition();

// Exact witness that a degree-3 element lies in the two-sided ideal generated
// by C:  target = sum_j condition_times_word[j] * C P_j + word_times_condition[j] * P_j C.
struct IdealCertificate {
  std::array<Rational, kGenerators> condition_times_word;
  std::array<Rational, kGenerators> word_times_condition;

  FreeElement reconstruct() const;
};

// Returns a certificate when the (degree-3 homogeneous, or zero) target lies in
// the ideal, std::nullopt when it does not. Throws InvalidArgument otherwise.
std::optional<IdealCertificate> reduce_mod_condition(const FreeElement& target);

// Canonical coset representative of a degree-3 element modulo the ideal:
// the unique element of target + ideal whose coefficients vanish on the pivot
// words of the reduced echelon basis of the ideal.
FreeElement normal_form_mod_condition(const FreeElement& target);

bool element_equal(const FreeElement& a, const FreeElement& b);

// Deterministic text: one "num/den * P_i P_j ..." line per term in word order,
// or the single line "0" for the zero element.
std::string to_text(const FreeElement& element);

}  // namespace splitcheck::algebra

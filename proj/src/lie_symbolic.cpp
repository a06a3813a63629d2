#include "splitcheck/lie_symbolic.hpp"

#include <sstream>

#include "splitcheck/errors.hpp"

namespace splitcheck::algebra {

namespace {

void check_generator(int index) {
  if (index < 1 || index > kGenerators) {
    throw InvalidArgument("generator index must be in 1.." + std::to_string(kGenerators) +
                          ", got " + std::to_string(index));
  }
}

}  // namespace

// ---- Word -------------------------------------------------------------------

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int letter : letters) {
    check_generator(letter);
    letters_.push_back(static_cast<std::uint8_t>(letter));
  }
}

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (auto letter : letters_) check_generator(letter);
}

Word Word::generator(int index) { return Word{index}; }

Word Word::operator*(const Word& right) const {
  std::vector<std::uint8_t> joined = letters_;
  joined.insert(joined.end(), right.letters_.begin(), right.letters_.end());
  Word w;
  w.letters_ = std::move(joined);
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += 'P';
    out += static_cast<char>('0' + letters_[i]);
  }
  return out;
}

// ---- FreeElement --------------------------------------------------------------

FreeElement::FreeElement(const Word& word, const Rational& coefficient) {
  add_term(word, coefficient);
}

void FreeElement::add_term(const Word& word, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational FreeElement::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

int FreeElement::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

bool FreeElement::is_homogeneous(int degree) const {
  for (const auto& [w, c] : terms_) {
    if (w.degree() != degree) return false;
  }
  return true;
}

FreeElement FreeElement::homogeneous_part(int degree) const {
  FreeElement out;
  for (const auto& [w, c] : terms_) {
    if (w.degree() == degree) out.terms_.emplace(w, c);
  }
  return out;
}

FreeElement FreeElement::truncated(int max_degree) const {
  FreeElement out;
  for (const auto& [w, c] : terms_) {
    if (w.degree() <= max_degree) out.terms_.emplace(w, c);
  }
  return out;
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

FreeElement FreeElement::operator-() const { return *this * Rational(-1); }

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

FreeElement commutator(const FreeElement& x, const FreeElement& y) { return x * y - y * x; }

// ---- BracketTree --------------------------------------------------------------

struct BracketTree::Node {
  int generator = 0;  // 0 for interior nodes
  std::optional<BracketTree> left;
  std::optional<BracketTree> right;
  Rational scale{1};
  int leaves = 1;
};

BracketTree BracketTree::leaf(int generator) {
  check_generator(generator);
  auto node = std::make_shared<Node>();
  node->generator = generator;
  return BracketTree(std::move(node));
}

BracketTree BracketTree::bracket(const BracketTree& left, const BracketTree& right) {
  auto node = std::make_shared<Node>();
  node->left = left;
  node->right = right;
  node->leaves = left.node_->leaves + right.node_->leaves;
  return BracketTree(std::move(node));
}

BracketTree BracketTree::scaled(const Rational& factor) const {
  auto node = std::make_shared<Node>(*node_);
  node->scale *= factor;
  return BracketTree(std::move(node));
}

bool BracketTree::is_leaf() const { return node_->generator != 0; }

int BracketTree::generator() const {
  if (!is_leaf()) throw InvalidArgument("BracketTree: not a leaf");
  return node_->generator;
}

const BracketTree& BracketTree::left() const {
  if (is_leaf()) throw InvalidArgument("BracketTree: leaf has no children");
  return *node_->left;
}

const BracketTree& BracketTree::right() const {
  if (is_leaf()) throw InvalidArgument("BracketTree: leaf has no children");
  return *node_->right;
}

const Rational& BracketTree::scale() const { return node_->scale; }

int BracketTree::leaf_count() const { return node_->leaves; }

BracketTree bracket(int i, int j) {
  return BracketTree::bracket(BracketTree::leaf(i), BracketTree::leaf(j));
}

BracketTree bracket(int i, int j, int k) {
  return BracketTree::bracket(BracketTree::leaf(i), bracket(j, k));
}

FreeElement expand_bracket(const BracketTree& expr) {
  FreeElement body = expr.is_leaf()
                         ? FreeElement::generator(expr.generator())
                         : commutator(expand_bracket(expr.left()), expand_bracket(expr.right()));
  return body * expr.scale();
}

// ---- Taylor coefficients of the three-factor splitting ------------------------

namespace {

FreeElement truncated_exp(const FreeElement& x, int max_degree) {
  FreeElement sum = FreeElement::unit();
  FreeElement term = FreeElement::unit();
  for (int k = 1; k <= max_degree; ++k) {
    term = (term * x).truncated(max_degree) * Rational(1, k);
    sum += term;
  }
  return sum;
}

}  // namespace

std::vector<FreeElement> splitting_taylor(int max_degree) {
  if (max_degree < 2 || max_degree > 6) {
    throw InvalidArgument("splitting_taylor: max_degree must be in 2..6, got " +
                          std::to_string(max_degree));
  }
  const FreeElement p1 = FreeElement::generator(1);
  const FreeElement p2 = FreeElement::generator(2);
  const FreeElement p3 = FreeElement::generator(3);

  FreeElement product = (truncated_exp(p1, max_degree) * truncated_exp(p2, max_degree))
                            .truncated(max_degree);
  product = (product * truncated_exp(p3, max_degree)).truncated(max_degree);
  const FreeElement difference = product - truncated_exp(p1 + p2 + p3, max_degree);

  std::vector<FreeElement> by_degree;
  by_degree.reserve(max_degree + 1);
  for (int j = 0; j <= max_degree; ++j) by_degree.push_back(difference.homogeneous_part(j));
  return by_degree;
}

FreeElement second_order_condition() {
  return expand_bracket(bracket(1, 2)) + expand_bracket(bracket(1, 3)) +
         expand_bracket(bracket(2, 3));
}

// ---- Ideal membership at degree 3 ---------------------------------------------

namespace {

constexpr int kIdealGenerators = 2 * kGenerators;

const std::vector<Word>& degree3_basis() {
  static const std::vector<Word> basis = [] {
    std::vector<Word> words;
    for (int a = 1; a <= kGenerators; ++a)
      for (int b = 1; b <= kGenerators; ++b)
        for (int c = 1; c <= kGenerators; ++c) words.push_back(Word{a, b, c});
    return words;
  }();
  return basis;
}

// Columns 0..2 are C*P_j, columns 3..5 are P_j*C.
const std::vector<FreeElement>& ideal_generators() {
  static const std::vector<FreeElement> gens = [] {
    const FreeElement c = second_order_condition();
    std::vector<FreeElement> out;
    for (int j = 1; j <= kGenerators; ++j) out.push_back(c * FreeElement::generator(j));
    for (int j = 1; j <= kGenerators; ++j) out.push_back(FreeElement::generator(j) * c);
    return out;
  }();
  return gens;
}

using RationalRow = std::vector<Rational>;

void check_degree3(const FreeElement& target, const char* who) {
  if (!target.is_homogeneous(3)) {
    throw InvalidArgument(std::string(who) + ": target must be homogeneous of degree 3");
  }
}

// Reduced row echelon form of the ideal generators written as rows over the
// word basis. Each row records which combination of generators produced it.
struct IdealEchelon {
  std::vector<RationalRow> rows;         // over degree-3 words
  std::vector<RationalRow> combination;  // over ideal generators
  std::vector<std::size_t> pivots;       // word column of each row's pivot
};

const IdealEchelon& ideal_echelon() {
  static const IdealEchelon echelon = [] {
    const auto& basis = degree3_basis();
    const auto& gens = ideal_generators();
    IdealEchelon e;
    for (int g = 0; g < kIdealGenerators; ++g) {
      RationalRow row(basis.size());
      for (std::size_t w = 0; w < basis.size(); ++w) row[w] = gens[g].coefficient(basis[w]);
      RationalRow combo(kIdealGenerators);
      combo[g] = 1;
      e.rows.push_back(std::move(row));
      e.combination.push_back(std::move(combo));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < basis.size() && rank < e.rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < e.rows.size() && e.rows[pivot][col].is_zero()) ++pivot;
      if (pivot == e.rows.size()) continue;
      std::swap(e.rows[rank], e.rows[pivot]);
      std::swap(e.combination[rank], e.combination[pivot]);
      const Rational inv = Rational(1) / e.rows[rank][col];
      for (auto& x : e.rows[rank]) x *= inv;
      for (auto& x : e.combination[rank]) x *= inv;
      for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (r == rank || e.rows[r][col].is_zero()) continue;
        const Rational f = e.rows[r][col];
        for (std::size_t k = 0; k < basis.size(); ++k) e.rows[r][k] -= f * e.rows[rank][k];
        for (std::size_t k = 0; k < kIdealGenerators; ++k)
          e.combination[r][k] -= f * e.combination[rank][k];
      }
      e.pivots.push_back(col);
      ++rank;
    }
    e.rows.resize(rank);
    e.combination.resize(rank);
    return e;
  }();
  return echelon;
}

// Eliminates pivot words from `target`; returns the residual vector over words
// and accumulates the used generator combination into `used`.
RationalRow eliminate(const FreeElement& target, RationalRow& used) {
  const auto& basis = degree3_basis();
  const auto& e = ideal_echelon();
  RationalRow v(basis.size());
  for (std::size_t w = 0; w < basis.size(); ++w) v[w] = target.coefficient(basis[w]);
  used.assign(kIdealGenerators, Rational(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const Rational f = v[e.pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) v[k] -= f * e.rows[r][k];
    for (std::size_t k = 0; k < kIdealGenerators; ++k) used[k] += f * e.combination[r][k];
  }
  return v;
}

}  // namespace

FreeElement IdealCertificate::reconstruct() const {
  const auto& gens = ideal_generators();
  FreeElement out;
  for (int j = 0; j < kGenerators; ++j) {
    out += gens[j] * condition_times_word[j];
    out += gens[kGenerators + j] * word_times_condition[j];
  }
  return out;
}

std::optional<IdealCertificate> reduce_mod_condition(const FreeElement& target) {
  check_degree3(target, "reduce_mod_condition");
  RationalRow used;
  const RationalRow residual = eliminate(target, used);
  for (const auto& x : residual) {
    if (!x.is_zero()) return std::nullopt;
  }
  IdealCertificate cert;
  for (int j = 0; j < kGenerators; ++j) {
    cert.condition_times_word[j] = used[j];
    cert.word_times_condition[j] = used[kGenerators + j];
  }
  return cert;
}

FreeElement normal_form_mod_condition(const FreeElement& target) {
  check_degree3(target, "normal_form_mod_condition");
  RationalRow used;
  const RationalRow residual = eliminate(target, used);
  const auto& basis = degree3_basis();
  FreeElement out;
  for (std::size_t w = 0; w < basis.size(); ++w) {
    if (!residual[w].is_zero()) out += FreeElement(basis[w], residual[w]);
  }
  return out;
}

bool element_equal(const FreeElement& a, const FreeElement& b) { return a == b; }

std::string to_text(const FreeElement& element) {
  if (element.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, c] : element.terms()) os << c.to_string() << " * " << w.to_string() << '\n';
  return os.str();
}

}  // namespace splitcheck::algebra

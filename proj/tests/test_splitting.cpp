#include <doctest.h>

#include <sstream>

#include "oracle_values.hpp"
#include "splitcheck/errors.hpp"
#include "splitcheck/scheme_io.hpp"
#include "splitcheck/splitting.hpp"
#include "test_util.hpp"

using namespace splitcheck;
using namespace splitcheck::linalg;
using namespace splitcheck::splitting;

namespace {

OperatorSet pair_from_oracle() {
  return {{"A", from_rows(oracle::kP1, oracle::kDim)}, {"B", from_rows(oracle::kP2, oracle::kDim)}};
}

}  // namespace

TEST_CASE("built-in schemes") {
  const auto lt = make_lie_trotter();
  const auto st = make_strang();
  CHECK(lt.canonical());
  CHECK(st.is_palindromic());
  CHECK_FALSE(lt.is_palindromic());
  CHECK(st.coefficient_sum("A") == 1.0);
  CHECK(st.references() == std::vector<std::string>{"A", "B"});
  CHECK(scheme_by_name("strang") == st);
  CHECK(make_three_factor().references() == std::vector<std::string>{"P1", "P2", "P3"});
  CHECK_THROWS_AS(scheme_by_name("yoshida"), InvalidArgument);
}

TEST_CASE("canonical schemes are validated") {
  CHECK_THROWS_AS(SplittingScheme("x", {{"A", 0.5}, {"B", 1.0}}, true), NonCanonicalScheme);
  CHECK_THROWS_AS(SplittingScheme("x", {{"A", 1.0}, {"C", 1.0}}, true), NonCanonicalScheme);
  CHECK_THROWS_AS(SplittingScheme("x", {}, false), InvalidArgument);
  CHECK_NOTHROW(SplittingScheme("x", {{"A", 0.5}, {"B", 1.0}, {"A", 0.5}}, true));
}

TEST_CASE("operator binding") {
  OperatorSet ops;
  ops.bind("A", ComplexMatrix::Zero(3, 3));
  CHECK_THROWS_AS(ops.bind("B", ComplexMatrix::Zero(2, 2)), DimensionMismatch);
  CHECK_THROWS_AS(ops.at("B"), UnboundReference);
  CHECK_THROWS_AS(apply_splitting(make_strang(), ops, 0.1), UnboundReference);
}

TEST_CASE("global errors match the high-precision oracle") {
  const auto ops = pair_from_oracle();
  CHECK(rel_diff(op_norm(global_error(make_strang(), ops, 0.125, 8)), oracle::kStrangGlobalError) <=
        1e-10);
  CHECK(rel_diff(op_norm(global_error(make_lie_trotter(), ops, 0.125, 8)),
                 oracle::kLieTrotterGlobalError) <= 1e-10);
}

TEST_CASE("local error ratios under step halving") {
  const auto ops = pair_from_oracle();
  // local errors: Lie-Trotter O(h^2), Strang O(h^3)
  const double lt = op_norm(splitting_error(make_lie_trotter(), ops, 0.01)) /
                    op_norm(splitting_error(make_lie_trotter(), ops, 0.005));
  const double st = op_norm(splitting_error(make_strang(), ops, 0.01)) /
                    op_norm(splitting_error(make_strang(), ops, 0.005));
  CHECK(lt == doctest::Approx(4.0).epsilon(0.02));
  CHECK(st == doctest::Approx(8.0).epsilon(0.02));
}

TEST_CASE("Strang leading error term") {
  const auto ops = pair_from_oracle();
  const auto& a = ops.at("A");
  const auto& b = ops.at("B");
  const ComplexMatrix ab = commutator(a, b);
  const ComplexMatrix e3 = -commutator(b, ab) / 12.0 - commutator(a, ab) / 24.0;
  // S - e^{tL} = t^3 E3 + O(t^4), so the gap shrinks linearly in t.
  double gaps[2];
  int k = 0;
  for (double t : {2e-3, 1e-3}) {
    const ComplexMatrix scaled = splitting_error(make_strang(), ops, t) / (t * t * t);
    gaps[k++] = op_norm(scaled - e3);
  }
  CHECK(gaps[1] <= 3e-3 * op_norm(e3));
  CHECK(gaps[0] / gaps[1] == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("trivial splittings") {
  const auto ops = pair_from_oracle();
  CHECK(op_norm(splitting_error(make_strang(), ops, 0.0)) == 0.0);
  OperatorSet commuting{{"A", ComplexMatrix::Identity(3, 3) * Complex(0, 1)},
                        {"B", ComplexMatrix::Identity(3, 3) * Complex(0, -2)}};
  CHECK(op_norm(splitting_error(make_lie_trotter(), commuting, 0.7)) <= 1e-15);
}

TEST_CASE("three-factor error on a constrained triple") {
  const ComplexMatrix p1 = from_rows(oracle::kP1, oracle::kDim);
  const ComplexMatrix p2 = from_rows(oracle::kP2, oracle::kDim);
  const ComplexMatrix p3 = from_rows(oracle::kP3, oracle::kDim);
  const OperatorSet ops{{"P1", p1}, {"P2", p2}, {"P3", p3}};
  CHECK(check_second_order(p1, p2, p3, 1e-10).satisfied);
  CHECK_FALSE(check_second_order(p1, p2, p1 + p2, 1e-10).satisfied);
  CHECK(rel_diff(op_norm(splitting_error(make_three_factor(), ops, 0.25)),
                 oracle::kTripleErrorNormAt025) <= 1e-9);
  CHECK(rel_diff(op_norm(splitting_error(make_three_factor(), ops, 0.5)),
                 oracle::kTripleErrorNormAt05) <= 1e-9);

  const auto reduced = leading_error_e3(p1, p2, p3, E3Form::taylor_reduced);
  const auto blocks = leading_error_e3(p1, p2, p3, E3Form::building_blocks);
  CHECK(rel_diff(op_norm(blocks), oracle::kE3Norm) <= 1e-12);
  CHECK(op_norm(reduced - blocks) <= 1e-10 * op_norm(blocks));
  const double t = 1e-3;
  CHECK(op_norm(splitting_error(make_three_factor(), ops, t) / (t * t * t) - blocks) <=
        1e-2 * op_norm(blocks));
}

TEST_CASE("scheme text round trip") {
  for (const auto& s : {make_lie_trotter(), make_strang(), make_three_factor()}) {
    std::stringstream ss;
    write_scheme(ss, s);
    CHECK(read_scheme(ss) == s);
  }
  std::stringstream custom("# comment\nname custom\ncanonical true\nB 0.5\nA 1\nB 0.5\n");
  const auto s = read_scheme(custom);
  CHECK(s.name() == "custom");
  CHECK(s.is_palindromic());
  std::stringstream bad("name x\ncanonical maybe\nA 1\n");
  CHECK_THROWS_AS(read_scheme(bad), ConfigError);
  std::stringstream noncanon("name x\ncanonical true\nA 0.4\nB 1\n");
  CHECK_THROWS_AS(read_scheme(noncanon), Error);
}

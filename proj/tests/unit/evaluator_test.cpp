#include <gtest/gtest.h>

#include "circuitgp/error.hpp"
#include "circuitgp/evaluator.hpp"
#include "circuitgp/evolution.hpp"
#include "circuitgp/prefix.hpp"
#include "circuitgp/verifier.hpp"
#include "test_support.hpp"

namespace circuitgp {
namespace {

std::vector<int> bits_of(const PackedColumn& c, std::size_t count) {
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(c.get(i));
  return out;
}

TruthTable ordered_table(std::size_t n, std::vector<std::uint32_t> order) {
  const auto rows = order.size();
  return TruthTable(default_input_names(n), {"F"}, std::move(order), {PackedColumn(rows)});
}

TEST(EvalPacked, GoldenCircuitOnSampleTable) {
  auto t = testing::table3();
  EXPECT_EQ(eval_packed(parse_prefix(testing::kGoldenCircuit, 3), t).words()[0], 0b11111000u);
  EXPECT_EQ(eval_packed(parse_prefix("A0", 3), t).words()[0], 0b10101010u);
}

TEST(EvalPacked, ComplementIsMaskedToRowCount) {
  auto t = table_from_expression(parse_prefix("A0", 1), 1);
  // rows (0, 1) evaluate to (1, 0); bit i is row i
  EXPECT_EQ(eval_packed(parse_prefix("(NOT A0)", 1), t).words()[0], 0b01u);
  auto c = eval_packed(parse_prefix("(NOR A0 (NAND A0 A0))", 1), t);
  EXPECT_EQ(c.words()[0], 0b00u);
}

TEST(EvalPacked, RejectsFlipFlops) {
  try {
    eval_packed(parse_prefix("(AND A0 (DFF A1))", 3), testing::table3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SequentialNotAllowed);
  }
}

TEST(EvalSequential, DFlipFlopIsTransparent) {
  auto t = ordered_table(2, {0, 1, 2, 3});
  EXPECT_EQ(bits_of(eval_sequential(parse_prefix("(DFF A0)", 2), t), 4), (std::vector<int>{0, 1, 0, 1}));
}

TEST(EvalSequential, TFlipFlopToggles) {
  // rows 001, 011, 101 first: A0 = 1, 1, 1
  auto t = ordered_table(3, {1, 3, 5, 0, 2, 4, 6, 7});
  EXPECT_EQ(bits_of(eval_sequential(parse_prefix("(TFF A0)", 3), t), 8),
            (std::vector<int>{1, 0, 1, 1, 1, 1, 1, 0}));
}

TEST(EvalSequential, NestedFlipFlopsSeePostEdgeValues) {
  auto t = ordered_table(1, {0, 1});
  EXPECT_EQ(bits_of(eval_sequential(parse_prefix("(TFF (TFF A0))", 1), t), 2), (std::vector<int>{0, 1}));
}

TEST(EvalSequential, StateIsPerNode) {
  auto t = ordered_table(2, {1, 3, 0, 2});
  // Two independent toggles always agree, so their sum bit is 0.
  auto c = eval_sequential(parse_prefix("(HA (TFF A0) (TFF A0))", 2), t);
  EXPECT_EQ(c.popcount(), 0u);
}

TEST(EvalSequential, JkAndRsOverAClockSequence) {
  // J = A1, K = A0; rows: 10 (set), 00 (hold), 11 (toggle), 01 (reset)
  auto t = ordered_table(2, {2, 0, 3, 1});
  EXPECT_EQ(bits_of(eval_sequential(parse_prefix("(JKFF A1 A0)", 2), t), 4), (std::vector<int>{1, 1, 0, 0}));
  // S = A1, R = A0; rows: 11 (set-dominant), 00, 01 (reset), 10
  t = ordered_table(2, {3, 0, 1, 2});
  EXPECT_EQ(bits_of(eval_sequential(parse_prefix("(RSFF A1 A0)", 2), t), 4), (std::vector<int>{1, 1, 0, 1}));
}

TEST(EvalSequential, RepeatedEvaluationDoesNotLeakState) {
  auto t = testing::table3();
  auto tree = parse_prefix("(TFF (OR A0 (JKFF A1 A2)))", 3);
  EXPECT_EQ(eval_sequential(tree, t), eval_sequential(tree, t));
}

TEST(Fitness, SampleTableExamples) {
  auto t = testing::table3();
  EXPECT_EQ(fitness(parse_prefix(testing::kGoldenCircuit, 3), t, 0), (Fitness{0, 8}));
  EXPECT_EQ(fitness(parse_prefix("A0", 3), t, 0), (Fitness{3, 8}));
  EXPECT_EQ(fitness(parse_prefix("A0", 3), table_from_expression(parse_prefix("A0", 3), 3), 0).mismatches, 0u);
}

TEST(Fitness, ErrorPercent) {
  EXPECT_DOUBLE_EQ(error_percent({0, 8}), 0.0);
  EXPECT_DOUBLE_EQ(error_percent({3, 8}), 37.5);
  EXPECT_DOUBLE_EQ(error_percent({8, 8}), 100.0);
  double last = -1.0;
  for (std::size_t k = 0; k <= 64; ++k) {
    const double e = error_percent({k, 64});
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 100.0);
    EXPECT_GT(e, last);
    last = e;
  }
}

TEST(Evaluator, PackedMatchesNaiveInterpreter) {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng.below(8);
    auto table = testing::random_table(rng, n, 1);
    auto tree = random_tree(rng, n, testing::combinational_functions(), 10, 50);
    auto packed = eval_packed(tree, table);
    for (std::size_t r = 0; r < table.row_count(); ++r) {
      auto assignment = assignment_from_combination(table.combination(r), n);
      std::unique_ptr<bool[]> a(new bool[n]);
      std::copy(assignment.begin(), assignment.end(), a.get());
      SequentialFrame frame(tree.size());
      ASSERT_EQ(packed.get(r), naive_eval_row(tree, {a.get(), n}, frame)) << to_prefix(tree);
    }
    ASSERT_EQ(eval_sequential(tree, table), packed);
    ASSERT_EQ(fitness(tree, table_from_expression(tree, n), 0).mismatches, 0u);
  }
}

}  // namespace
}  // namespace circuitgp

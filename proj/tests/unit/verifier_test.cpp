#include <gtest/gtest.h>

#include <memory>

#include "circuitgp/evolution.hpp"
#include "circuitgp/prefix.hpp"
#include "circuitgp/verifier.hpp"
#include "test_support.hpp"

namespace circuitgp {
namespace {

bool eval_once(const CircuitTree& tree, std::uint32_t combination, std::size_t n) {
  std::unique_ptr<bool[]> a(new bool[n]);
  for (std::size_t i = 0; i < n; ++i) a[i] = (combination >> i) & 1u;
  SequentialFrame frame(tree.size());
  return naive_eval_row(tree, {a.get(), n}, frame);
}

TEST(NaiveEval, SampleRows) {
  auto golden = parse_prefix(testing::kGoldenCircuit, 3);
  EXPECT_TRUE(eval_once(golden, 0b011, 3));
  EXPECT_FALSE(eval_once(golden, 0b000, 3));
  EXPECT_FALSE(eval_once(parse_prefix("(NOT A0)", 1), 1, 1));
}

TEST(NaiveEval, FlipFlopsUpdateTheFrame) {
  auto tree = parse_prefix("(TFF A0)", 1);
  std::unique_ptr<bool[]> one(new bool[1]{true});
  SequentialFrame frame(tree.size());
  EXPECT_TRUE(naive_eval_row(tree, {one.get(), 1}, frame));
  EXPECT_FALSE(naive_eval_row(tree, {one.get(), 1}, frame));
  EXPECT_TRUE(naive_eval_row(tree, {one.get(), 1}, frame));
}

TEST(Verify, GoldenCircuitIsCorrect) {
  auto v = verify_circuit(parse_prefix(testing::kGoldenCircuit, 3), testing::table3(), 0);
  EXPECT_TRUE(v.correct());
  EXPECT_FALSE(v.first_failing_combination.has_value());
}

TEST(Verify, FirstFailureInRowOrder) {
  auto t = testing::table3();
  auto v = verify_circuit(parse_prefix("A0", 3), t, 0);
  ASSERT_EQ(v.status, VerdictStatus::Wrong);
  EXPECT_EQ(t.format_combination(*v.first_failing_combination), "001");
}

TEST(Verify, SelfGeneratedTablesAreCorrect) {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(6);
    auto tree = random_tree(rng, n, testing::combinational_functions(), 10, 50);
    EXPECT_TRUE(verify_circuit(tree, table_from_expression(tree, n), 0).correct()) << to_prefix(tree);
  }
}

TEST(Verify, ReportedCombinationReproducesTheMismatch) {
  Rng rng(41);
  int wrong = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(6);
    auto table = testing::random_table(rng, n, 1);
    auto tree = random_tree(rng, n, testing::combinational_functions(), 10, 50);
    const auto before = table;
    auto v = verify_circuit(tree, table, 0);
    auto again = verify_circuit(tree, table, 0);
    ASSERT_EQ(v.status, again.status);
    ASSERT_EQ(v.first_failing_combination, again.first_failing_combination);
    ASSERT_EQ(table, before);
    if (v.correct()) continue;
    ++wrong;
    const auto code = *v.first_failing_combination;
    std::size_t row = 0;
    while (table.combination(row) != code) ++row;
    EXPECT_NE(eval_once(tree, code, n), table.output_column(0).get(row));
  }
  EXPECT_GT(wrong, 0);
}

TEST(Verify, AgreesWithFitnessOnSequentialTrees) {
  Rng rng(51);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng.below(4);
    auto tree = random_tree(rng, n, testing::all_functions(), 6, 20);
    // Target is the tree's own sequential output so both verdicts occur.
    auto table = testing::random_table(rng, n, 1);
    if (rng.coin()) {
      auto out = eval_sequential(tree, table);
      table = TruthTable(table.input_names(), table.output_names(),
                         std::vector<std::uint32_t>(table.combinations().begin(), table.combinations().end()), {out});
    }
    ASSERT_EQ(verify_circuit(tree, table, 0).correct(), fitness(tree, table, 0).mismatches == 0) << to_prefix(tree);
  }
}

}  // namespace
}  // namespace circuitgp

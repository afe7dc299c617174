#include "gauss/verify.h"

#include <numeric>

#include "gtest/gtest.h"

#include "oracle.h"

namespace gauss {
namespace {

using Exps = std::vector<std::int64_t>;

VerificationReport WithoutTiming(VerificationReport r) {
  r.elapsed_ms = 0;
  return r;
}

TEST(Prop11Test, Examples) {
  const auto r3 = verify_prop_1_1(PrimeModulus(3));
  EXPECT_TRUE(r3.success);
  EXPECT_EQ(r3.total_functions, 2u);
  EXPECT_EQ(r3.passing_spectral, 1u);
  ASSERT_EQ(r3.witnesses.size(), 1u);
  EXPECT_EQ(r3.witnesses[0].exps, legendre_function(PrimeModulus(3)).exps());

  const auto r7 = verify_prop_1_1(PrimeModulus(7));
  EXPECT_TRUE(r7.success);
  EXPECT_EQ(r7.total_functions, 32u);
  EXPECT_EQ(r7.passing_spectral, 1u);
  EXPECT_EQ(r7.witnesses[0].exps, legendre_function(PrimeModulus(7)).exps());

  const auto r13 = verify_prop_1_1(PrimeModulus(13));
  EXPECT_TRUE(r13.success);
  EXPECT_EQ(r13.total_functions, 2048u);
  EXPECT_EQ(r13.passing_spectral, 1u);
  EXPECT_EQ(r13.passing_oracle, 1u);
}

TEST(Prop11Test, BudgetExceeded) {
  EXPECT_THROW(verify_prop_1_1(PrimeModulus(13), {2047}), BudgetExceeded);
}

TEST(Thm12Test, Examples) {
  const auto a = verify_thm_1_2(PrimeModulus(5), UnityOrder(2));
  EXPECT_TRUE(a.success);
  EXPECT_EQ(a.total_functions, 8u);
  EXPECT_EQ(a.passing_spectral, 1u);

  const auto b = verify_thm_1_2(PrimeModulus(7), UnityOrder(6));
  EXPECT_TRUE(b.success);
  EXPECT_EQ(b.total_functions, 7776u);
  EXPECT_EQ(b.passing_spectral, 5u);
  EXPECT_EQ(b.passing_oracle, 5u);
  for (const Witness& w : b.witnesses) EXPECT_TRUE(w.a.has_value());

  const auto c = verify_thm_1_2(PrimeModulus(5), UnityOrder(3));
  EXPECT_TRUE(c.success);
  EXPECT_EQ(c.total_functions, 27u);
  EXPECT_EQ(c.passing_spectral, 0u);

  EXPECT_THROW(verify_thm_1_2(PrimeModulus(3), UnityOrder(6)), HypothesisViolation);
}

TEST(Cor13Test, Examples) {
  const auto a = verify_cor_1_3(PrimeModulus(3), UnityOrder(2));
  EXPECT_TRUE(a.success);
  EXPECT_EQ(a.total_functions, 4u);
  const auto b = verify_cor_1_3(PrimeModulus(5), UnityOrder(4));
  EXPECT_TRUE(b.success);
  EXPECT_EQ(b.total_functions, 256u);
  // eps * chi for 4 constants and 3 nontrivial characters.
  EXPECT_EQ(b.passing_spectral, 12u);
  EXPECT_EQ(b.passing_oracle, 12u);
  EXPECT_THROW(verify_cor_1_3(PrimeModulus(3), UnityOrder(3)), HypothesisViolation);
}

TEST(Lemma21Test, Examples) {
  const auto a = verify_lemma_2_1(PrimeModulus(3), UnityOrder(2));
  EXPECT_TRUE(a.success);
  ASSERT_EQ(a.passing_spectral, 2u);
  EXPECT_EQ(a.witnesses[0].exps, (Exps{0, 0}));
  EXPECT_EQ(a.witnesses[1].exps, (Exps{1, 1}));

  const auto b = verify_lemma_2_1(PrimeModulus(5), UnityOrder(2));
  EXPECT_TRUE(b.success);
  EXPECT_EQ(b.total_functions, 16u);
  EXPECT_EQ(b.passing_spectral, 2u);

  const auto c = verify_lemma_2_1(PrimeModulus(3), UnityOrder(4));
  EXPECT_TRUE(c.success);
  EXPECT_EQ(c.total_functions, 16u);
  EXPECT_EQ(c.passing_spectral, 4u);
  EXPECT_EQ(c.passing_oracle, 4u);
  EXPECT_THROW(verify_lemma_2_1(PrimeModulus(5), UnityOrder(10)), HypothesisViolation);
}

TEST(Prop22Test, Examples) {
  EXPECT_EQ(verify_prop_2_2(PrimeModulus(7), UnityOrder(2)).passing_spectral, 1u);
  const auto cubic = verify_prop_2_2(PrimeModulus(7), UnityOrder(3));
  EXPECT_TRUE(cubic.success);
  EXPECT_EQ(cubic.passing_spectral, 2u);
  const auto r11 = verify_prop_2_2(PrimeModulus(11), UnityOrder(2));
  EXPECT_TRUE(r11.success);
  EXPECT_EQ(r11.total_functions, 512u);
  EXPECT_EQ(r11.passing_spectral, 1u);
}

TEST(Cor23Test, Examples) {
  const auto a = verify_cor_2_3(PrimeModulus(3), UnityOrder(2));
  EXPECT_TRUE(a.success);
  EXPECT_EQ(a.total_functions, 4u);
  ASSERT_EQ(a.passing_spectral, 2u);
  // +-Legendre mod 3.
  EXPECT_EQ(a.witnesses[0].exps, (Exps{0, 1}));
  EXPECT_EQ(a.witnesses[1].exps, (Exps{1, 0}));

  const auto b = verify_cor_2_3(PrimeModulus(5), UnityOrder(4));
  EXPECT_TRUE(b.success);
  EXPECT_EQ(b.passing_spectral, 12u);
  const auto c = verify_cor_2_3(PrimeModulus(5), UnityOrder(3));
  EXPECT_TRUE(c.success);
  EXPECT_EQ(c.passing_spectral, 0u);
}

TEST(Thm17Test, TrivialCharacterIsTheOnlyDisagreement) {
  // The trivial character (extended by 0) has autocorrelation p - 2 off zero,
  // so the -1 profile picks out exactly the nontrivial characters.
  for (auto [p, n] : {std::pair{5, 4}, {7, 2}, {7, 6}, {3, 6}}) {
    const auto r = verify_thm_1_7(PrimeModulus(p), UnityOrder(n));
    const std::int64_t characters = std::gcd<std::int64_t>(n, p - 1);
    EXPECT_EQ(r.passing_oracle, static_cast<std::uint64_t>(characters)) << p << "," << n;
    EXPECT_EQ(r.passing_spectral, static_cast<std::uint64_t>(characters - 1)) << p << "," << n;
    EXPECT_EQ(r.mismatches, std::vector<Exps>{Exps(p - 1, 0)}) << p << "," << n;
    EXPECT_FALSE(r.success);
    EXPECT_EQ(r.details.at("trivial_autocorrelation"), p - 2);
    EXPECT_EQ(r.details.at("nontrivial_mismatches"), 0);
    EXPECT_TRUE(testing::near(testing::numeric_autocorrelation(
                                  UnitFunction(PrimeModulus(p), UnityOrder(n), Exps(p - 1, 0)), 1),
                              std::complex<double>(p - 2, 0)));
  }
}

TEST(Thm17Test, RemarkFunctionFails) {
  const auto c = verify_thm_1_7(PrimeModulus(3), UnityOrder(6));
  for (const Witness& w : c.witnesses) EXPECT_NE(w.exps, (Exps{0, 5}));
  const auto legendre7 = verify_thm_1_7(PrimeModulus(7), UnityOrder(2));
  ASSERT_EQ(legendre7.witnesses.size(), 1u);
  EXPECT_EQ(legendre7.witnesses[0].exps, legendre_function(PrimeModulus(7)).exps());
}

TEST(RemarkTest, Counterexample) {
  const auto r = remark_counterexample();
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.details.at("norm_squared"), 3);
  EXPECT_EQ(r.details.at("is_character"), 0);
  EXPECT_EQ(r.details.at("p_divides_n"), 1);
  EXPECT_EQ(r.details.at("minimal_n"), 6);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].a, 2);
}

TEST(SearchTest, Examples) {
  const auto r = search_p_divides_n(PrimeModulus(3), UnityOrder(6));
  EXPECT_TRUE(r.success);
  bool found = false;
  for (const Witness& w : r.witnesses) found = found || w.exps == Exps{0, 5};
  EXPECT_TRUE(found);

  const auto none = search_p_divides_n(PrimeModulus(3), UnityOrder(3));
  EXPECT_EQ(none.details.at("non_character_hits"), 0);
  EXPECT_FALSE(none.success);
  EXPECT_THROW(search_p_divides_n(PrimeModulus(3), UnityOrder(2)), HypothesisViolation);
}

TEST(GridTest, EmptyAndSingle) {
  EXPECT_TRUE(verify_grid({}).empty());
  const GridCell cell{Statement::kFourierCharacterization, 5, 2};
  const auto reports = verify_grid(std::span(&cell, 1));
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].statement, "thm_1_2");
  EXPECT_EQ(reports[0].total_functions, 8u);
}

TEST(GridTest, ErrorsBecomeFailedReports) {
  const std::vector<GridCell> cells = {{Statement::kFourierCharacterization, 3, 6},
                                       {Statement::kGaussConverse, 9, 2},
                                       {Statement::kFourierCharacterization, 13, 10},
                                       {Statement::kFourierCharacterization, 5, 2}};
  const auto reports = verify_grid(cells);
  ASSERT_EQ(reports.size(), 4u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_FALSE(reports[i].success);
    EXPECT_TRUE(reports[i].error.has_value());
  }
  EXPECT_NE(reports[0].error->find("p divides n"), std::string::npos);
  EXPECT_TRUE(reports[3].success);
  EXPECT_FALSE(all_succeeded(reports));
}

TEST(GridTest, Deterministic) {
  const std::vector<GridCell> cells = {{Statement::kFourierCharacterization, 7, 3},
                                       {Statement::kWitnessDichotomy, 5, 3},
                                       {Statement::kRationalGaussSum, 5, 2}};
  const auto first = verify_grid(cells);
  const auto second = verify_grid(cells);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(WithoutTiming(first[i]), WithoutTiming(second[i]));
  }
}

TEST(StatementTest, IdentifiersRoundTrip) {
  for (Statement s : all_statements()) EXPECT_EQ(parse_statement(statement_id(s)), s);
  EXPECT_FALSE(parse_statement("thm_9_9").has_value());
}

}  // namespace
}  // namespace gauss

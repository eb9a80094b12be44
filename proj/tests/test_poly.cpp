#include <algorithm>

#include <gtest/gtest.h>

#include "partycred/io.hpp"
#include "partycred/poly_solvers.hpp"
#include "partycred/solve.hpp"
#include "partycred/search.hpp"
#include "support.hpp"

using namespace partycred;
using partycred::testing::instance;
using partycred::testing::Names;

namespace {

const Names abc({"p", "a", "b"});

Rule rule(ScoringKind kind, int r = 1) { return make_scoring(kind, 3, r); }

}  // namespace

TEST(MinScoring, PluralityExample) {
  const auto in = instance(abc, {{"p>a>b", 3}, {"a>p>b", 1}, {"b>a>p", 1}}, rule(ScoringKind::Plurality), Direction::Min);
  const auto r = min_scoring(in);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(certifies(in, r).ok());
  EXPECT_EQ(oracle_min(in).value, 1);
}

TEST(MinScoring, EveryPartyRanksPFirst) {
  const auto in = instance(abc, {{"p>a>b", 3}, {"p>b>a", 2}}, rule(ScoringKind::Plurality), Direction::Min);
  EXPECT_EQ(min_scoring(in).status, SolveStatus::Infeasible);
}

TEST(MinScoring, VetoSingleParty) {
  const Names pa({"p", "a"});
  const auto in = instance(pa, {{"p>a", 3}}, make_scoring(ScoringKind::Veto, 2), Direction::Min);
  EXPECT_EQ(min_scoring(in).status, SolveStatus::Infeasible);
}

TEST(MinScoring, RejectsWrongShape) {
  auto in = instance(abc, {{"p>a>b", 3}, {"a>p>b", 1}}, rule(ScoringKind::Plurality), Direction::Max);
  EXPECT_THROW(min_scoring(in), ValidationError);
  in.direction = Direction::Min;
  in.mode = DestinationMode::Multiple;
  EXPECT_THROW(min_scoring(in), ValidationError);
}

TEST(MinScoring, PartialPartySwitch) {
  // Only part of the big party needs to move.
  const auto in = instance(abc, {{"p>a>b", 9}, {"a>b>p", 2}}, rule(ScoringKind::Plurality), Direction::Min);
  const auto r = min_scoring(in);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.value, oracle_min(in).value);
  EXPECT_LT(r.value, 9);
}

TEST(MinCondorcet, Example) {
  const auto in = instance(abc, {{"p>a>b", 3}, {"a>p>b", 1}}, CondorcetRule{}, Direction::Min);
  const auto r = min_condorcet(in);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(oracle_min(in).value, 1);
}

TEST(MinCondorcet, SingleParty) {
  const auto in = instance(abc, {{"p>a>b", 3}}, CondorcetRule{}, Direction::Min);
  EXPECT_EQ(min_condorcet(in).status, SolveStatus::Infeasible);
}

TEST(MinCondorcet, NoDestinationPrefersRival) {
  const auto in = instance(abc, {{"p>a>b", 3}, {"p>b>a", 2}}, CondorcetRule{}, Direction::Min);
  EXPECT_EQ(min_condorcet(in).status, SolveStatus::Infeasible);
}

TEST(MaxApproval, PluralityExample) {
  const auto in = instance(abc, {{"p>a>b", 3}, {"a>b>p", 2}}, rule(ScoringKind::Plurality), Direction::Max);
  const auto r = max_r_approval(in);
  EXPECT_EQ(r.value, 2);
  EXPECT_TRUE(certifies(in, r).ok());
  EXPECT_EQ(oracle_max(in).value, 2);
}

TEST(MaxApproval, SingleParty) {
  const auto in = instance(abc, {{"p>a>b", 3}}, rule(ScoringKind::Plurality), Direction::Max);
  EXPECT_EQ(max_r_approval(in).value, 0);
}

TEST(MaxApproval, EveryDestinationDethrones) {
  // 2-approval: moving either voter into the other party ties p with a or b.
  const auto in = instance(abc, {{"p>a>b", 1}, {"p>b>a", 1}}, rule(ScoringKind::Approval, 2), Direction::Max);
  EXPECT_EQ(max_r_approval(in).value, 0);
  EXPECT_EQ(oracle_max(in).value, 0);
}

TEST(MaxApproval, RejectsBorda) {
  const auto in = instance(abc, {{"p>a>b", 3}, {"a>b>p", 1}}, rule(ScoringKind::Borda), Direction::Max);
  EXPECT_FALSE(has_poly_solver(in));
  EXPECT_THROW(max_r_approval(in), ValidationError);
  EXPECT_THROW(solve_poly(in), std::invalid_argument);
}

TEST(Routing, Table) {
  auto in = instance(abc, {{"p>a>b", 3}, {"a>b>p", 1}}, rule(ScoringKind::Borda), Direction::Min);
  EXPECT_TRUE(has_poly_solver(in));
  in.rule = CondorcetRule{};
  EXPECT_TRUE(has_poly_solver(in));
  in.rule = MaximinRule{};
  EXPECT_FALSE(has_poly_solver(in));
  in.rule = CopelandRule{};
  EXPECT_FALSE(has_poly_solver(in));
  in.direction = Direction::Max;
  in.rule = CondorcetRule{};
  EXPECT_FALSE(has_poly_solver(in));
  in.rule = rule(ScoringKind::Veto);
  EXPECT_TRUE(has_poly_solver(in));
  in.model = WinnerModel::CoWinner;
  EXPECT_FALSE(has_poly_solver(in));
  in.model = WinnerModel::Unique;
  in.mode = DestinationMode::Multiple;
  EXPECT_FALSE(has_poly_solver(in));
}

// Two P1 voters joining P2 leave p tied with a, which co-winner accepts;
// max_r_approval never tries a destination that disapproves p.
TEST(MaxApproval, CoWinnerTieThroughRivalParty) {
  const auto in = instance(abc, {{"p>a>b", 5}, {"a>p>b", 1}}, rule(ScoringKind::Plurality), Direction::Max,
                           WinnerModel::CoWinner);
  EXPECT_EQ(oracle(in).value, 2);
  EXPECT_EQ(max_r_approval(in).value, 1);
  EXPECT_EQ(solve(in).value, 2);
}

// Property: on small random instances the polynomial solvers agree with
// enumeration and their witnesses certify the value.
class PolyVsOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(PolyVsOracle, Agree) {
  const std::string rule_text = GetParam();
  for (Direction dir : {Direction::Min, Direction::Max}) {
    for (WinnerModel model : {WinnerModel::Unique, WinnerModel::CoWinner}) {
      for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GenerateOptions o;
        o.seed = seed * 7919 + static_cast<std::uint64_t>(dir) * 13 + static_cast<std::uint64_t>(model);
        o.parties = 2 + static_cast<int>(seed % 3);
        o.candidates = rule_text.starts_with("scoring") ? 3 : std::min(3 + static_cast<int>(seed % 2), o.parties + 1);
        o.min_size = 1;
        o.max_size = 3;
        o.rule = rule_text;
        o.direction = dir;
        o.model = model;
        const auto doc = generate_random(o);
        if (!has_poly_solver(doc.instance)) continue;
        const auto fast = solve_poly(doc.instance);
        const auto slow = oracle(doc.instance);
        ASSERT_EQ(fast.status, slow.status) << serialize_instance(doc);
        if (fast.solved()) {
          ASSERT_EQ(fast.value, slow.value) << serialize_instance(doc);
          ASSERT_TRUE(certifies(doc.instance, fast).ok()) << serialize_instance(doc);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rules, PolyVsOracle,
                         ::testing::Values("plurality", "veto", "approval:2", "borda", "condorcet", "scoring:3,1,0"));

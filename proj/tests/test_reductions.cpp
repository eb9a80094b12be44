#include <gtest/gtest.h>

#include "partycred/reductions.hpp"
#include "partycred/search.hpp"

using namespace partycred;

namespace {

X3CInstance triple_copy() { return {3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}; }

// Every element in exactly three sets, no exact cover.
X3CInstance no_cover() { return {6, {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}}}; }

X3CInstance six_with_cover() { return {6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {2, 4, 5}, {0, 4, 5}, {1, 2, 3}}}; }

GraphInstance star(int bound) {
  GraphInstance g{8, {}, bound};
  for (int v = 1; v < 8; ++v) g.edges.emplace_back(0, v);
  return g;
}

GraphInstance triangle(int t) { return {3, {{0, 1}, {1, 2}, {0, 2}}, t}; }
GraphInstance path4(int t) { return {4, {{0, 1}, {1, 2}, {2, 3}}, t}; }

Election election_of(const ReducedInstance& r) { return materialize(r.instance.election); }

}  // namespace

TEST(NaiveSolvers, Basics) {
  std::vector<int> cover;
  EXPECT_TRUE(solve_x3c_naive(triple_copy(), &cover));
  EXPECT_EQ(cover.size(), 1u);
  EXPECT_FALSE(solve_x3c_naive(no_cover()));
  EXPECT_TRUE(solve_x3c_naive(six_with_cover()));
  EXPECT_FALSE(solve_is_naive(triangle(2)));
  EXPECT_TRUE(solve_is_naive(path4(2)));
  EXPECT_TRUE(solve_vc_naive(star(1), &cover));
  EXPECT_EQ(cover, std::vector<int>{0});
  EXPECT_FALSE(solve_vc_naive(star(0)));
}

TEST(NaiveSolvers, Cap) {
  GraphInstance big{13, {}, 1};
  EXPECT_THROW(solve_is_naive(big), ValidationError);
}

TEST(Validation, X3C) {
  EXPECT_NO_THROW(validate_x3c(no_cover()));
  EXPECT_THROW(validate_x3c({6, {{0, 1, 2}}}), ValidationError);
  EXPECT_THROW(validate_x3c({3, {{0, 0, 1}, {0, 1, 2}, {1, 2, 2}}}), ValidationError);
  EXPECT_THROW(validate_x3c({4, {}}), ValidationError);
}

TEST(Validation, Graph) {
  EXPECT_THROW(validate_graph({2, {{0, 0}}, 0}), ValidationError);
  EXPECT_THROW(validate_graph({2, {{0, 1}, {1, 0}}, 0}), ValidationError);
  EXPECT_THROW(validate_graph({2, {{0, 2}}, 0}), ValidationError);
}

TEST(ReductionNames, RoundTrip) {
  for (auto kind : {ReductionKind::VcCopelandMin, ReductionKind::X3cMaximinMin, ReductionKind::X3cBordaMax,
                    ReductionKind::X3cCondorcetMax, ReductionKind::IsMaximinMax, ReductionKind::IsCopelandMax}) {
    EXPECT_EQ(parse_reduction_kind(reduction_name(kind)), kind);
  }
  EXPECT_FALSE(parse_reduction_kind("nope").has_value());
}

TEST(VcCopelandMin, Identities) {
  const auto g = star(1);
  const auto r = reduce_vc_to_copeland_min(g, Rational(1, 2));
  const int e = static_cast<int>(g.edges.size());
  EXPECT_EQ(r.instance.election.num_candidates(), e + 6);
  const auto s = copeland_scores(election_of(r), Rational(1, 2));
  EXPECT_EQ(s[r.candidate("p")], Rational(e + 4));
  EXPECT_EQ(s[r.candidate("a1")], Rational(e + 2));
  EXPECT_EQ(s[r.candidate("a2")], Rational(e));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(s[r.candidate("b" + std::to_string(i))], Rational(5 - i));
  for (int i = 1; i <= e; ++i) EXPECT_EQ(s[r.candidate("e" + std::to_string(i))], Rational(e - i + 3));
}

TEST(VcCopelandMin, RejectsNonConforming) {
  EXPECT_THROW(reduce_vc_to_copeland_min(triangle(0), Rational(1, 2)), ValidationError);  // odd n
  EXPECT_THROW(reduce_vc_to_copeland_min(star(2), Rational(1, 2)), ValidationError);      // 2t >= n-5
  const GraphInstance cycle{8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}}, 1};
  EXPECT_THROW(reduce_vc_to_copeland_min(cycle, Rational(1, 2)), ValidationError);  // no degree-1 pair
}

TEST(X3cMaximinMin, Identities) {
  for (const auto& x : {no_cover(), six_with_cover()}) {
    const auto r = reduce_x3c_to_maximin_min(x);
    const int m = x.universe_size, n = static_cast<int>(x.sets.size());
    EXPECT_EQ(r.instance.election.num_candidates(), m + 4);
    EXPECT_EQ(r.instance.election.total_voters(), 2 * n + m / 3 + 1);
    const auto s = maximin_scores(election_of(r));
    EXPECT_EQ(s[r.candidate("p")], Rational(n + 1));
    EXPECT_EQ(s[r.candidate("z")], Rational(n));
    // N(x,p) = 4 for every element, so no element reaches p.
    for (int i = 1; i <= m; ++i) EXPECT_LE(s[r.candidate("x" + std::to_string(i))], Rational(4));
    EXPECT_EQ(r.instance.k, m / 3);
  }
}

TEST(X3cMaximinMin, TripleCopyTiesPWithElements) {
  // n = 3 gives s(p) = 4 = s(x_i), so p is not the unique winner.
  EXPECT_THROW(reduce_x3c_to_maximin_min(triple_copy()), ValidationError);
}

TEST(X3cBordaMax, Identities) {
  for (const auto& x : {triple_copy(), no_cover(), six_with_cover()}) {
    const auto r = reduce_x3c_to_borda_max(x);
    const int m = x.universe_size, n = static_cast<int>(x.sets.size());
    EXPECT_EQ(r.instance.election.num_candidates(), m + 6);
    const auto s = scoring_points(election_of(r), scoring_vector_for(ScoringKind::Borda, m + 6));
    const Count p = s[r.candidate("p")];
    EXPECT_EQ(p - s[r.candidate("z")], 5);
    EXPECT_EQ(p - s[r.candidate("y")], 3 * n + 4);
    for (int i = 1; i <= m; ++i) EXPECT_GT(p, s[r.candidate("x" + std::to_string(i))]);
    EXPECT_EQ(r.instance.k, n - m / 3);
  }
}

TEST(X3cCondorcetMax, Identities) {
  for (const auto& x : {triple_copy(), no_cover()}) {
    const auto r = reduce_x3c_to_condorcet_max(x);
    const int m = x.universe_size, n = static_cast<int>(x.sets.size());
    EXPECT_EQ(r.instance.election.num_candidates(), 2 * n + m + 9);
    EXPECT_EQ(r.instance.election.total_voters(), 2 * n + 5);
    EXPECT_EQ(condorcet_winner(election_of(r)), r.candidate("p"));
  }
}

TEST(IsMaximinMax, Table2) {
  for (const auto& g : {triangle(2), path4(2)}) {
    const auto r = reduce_is_to_maximin_max(g);
    const int n = g.num_vertices, m = static_cast<int>(g.edges.size());
    EXPECT_EQ(r.instance.election.num_candidates(), m + 3);
    const auto N = pairwise_matrix(election_of(r));
    const auto p = r.candidate("p"), a = r.candidate("a"), b = r.candidate("b");
    EXPECT_EQ(N(p, b), n + 1);
    EXPECT_EQ(N(p, a), n + 1);
    EXPECT_EQ(N(b, p), n);
    EXPECT_EQ(N(b, a), n + 1);
    for (int i = 1; i <= m; ++i) {
      const auto ei = r.candidate("e" + std::to_string(i));
      EXPECT_EQ(N(p, ei), n + 2);
      EXPECT_EQ(N(b, ei), n);
      EXPECT_EQ(N(ei, p), n - 1);
      EXPECT_EQ(N(ei, b), n + 1);
      EXPECT_EQ(N(ei, a), n + 1);
      EXPECT_EQ(N(a, ei), n);
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        const auto ej = r.candidate("e" + std::to_string(j));
        EXPECT_GE(N(ei, ej), j < i ? n : n - 1);
      }
    }
    EXPECT_EQ(N(a, p), n);
    EXPECT_EQ(N(a, b), n);
  }
}

TEST(IsCopelandMax, Identities) {
  for (const auto& g : {triangle(2), triangle(1), path4(2)}) {
    const auto r = reduce_is_to_copeland_max(g, Rational(1, 2));
    const int n = g.num_vertices, m = static_cast<int>(g.edges.size());
    EXPECT_EQ(r.instance.election.total_voters(), 2 * n + 1);
    const auto N = pairwise_matrix(election_of(r));
    const int c = r.instance.election.num_candidates();
    for (int i = 0; i < c; ++i) {
      for (int j = i + 1; j < c; ++j) EXPECT_NE(N(i, j), N(j, i));
    }
    EXPECT_EQ(copeland_scores(N, Rational(1, 2))[r.candidate("p")], Rational(3 * m));
  }
}

TEST(Provenance, PlansCertifyConstructiveDirection) {
  std::vector<int> items;
  {
    const auto r = reduce_x3c_to_borda_max(six_with_cover());
    ASSERT_TRUE(solve_x3c_naive(six_with_cover(), &items));
    EXPECT_TRUE(check_witness(r.instance, plan_from_source_solution(r, items)).ok());
  }
  {
    const auto r = reduce_x3c_to_condorcet_max(triple_copy());
    ASSERT_TRUE(solve_x3c_naive(triple_copy(), &items));
    EXPECT_TRUE(check_witness(r.instance, plan_from_source_solution(r, items)).ok());
  }
  {
    const auto r = reduce_x3c_to_maximin_min(six_with_cover());
    ASSERT_TRUE(solve_x3c_naive(six_with_cover(), &items));
    EXPECT_TRUE(check_witness(r.instance, plan_from_source_solution(r, items)).ok());
  }
  {
    const auto r = reduce_is_to_maximin_max(path4(2));
    ASSERT_TRUE(solve_is_naive(path4(2), &items));
    EXPECT_TRUE(check_witness(r.instance, plan_from_source_solution(r, items)).ok());
  }
  {
    const auto r = reduce_is_to_copeland_max(path4(2), Rational(1, 2));
    ASSERT_TRUE(solve_is_naive(path4(2), &items));
    EXPECT_TRUE(check_witness(r.instance, plan_from_source_solution(r, items)).ok());
  }
}

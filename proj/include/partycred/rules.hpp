#pragma once

// Voting rules: scoring vectors, Condorcet, Copeland^alpha and Maximin, plus
// winner determination under the unique-winner and co-winner models.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "partycred/election.hpp"

namespace partycred {

/// Exact rational used for Copeland alpha and score tables.
using Rational = boost::rational<std::int64_t>;

enum class ScoringKind { Plurality, Veto, Approval, Borda, Custom };

struct ScoringRule {
  ScoringKind kind = ScoringKind::Custom;
  int approvals = 0;  // r for Approval
  std::vector<Count> vector;

  friend bool operator==(const ScoringRule&, const ScoringRule&) = default;
};

struct CondorcetRule {
  friend bool operator==(const CondorcetRule&, const CondorcetRule&) = default;
};

struct CopelandRule {
  Rational alpha{1, 2};

  friend bool operator==(const CopelandRule&, const CopelandRule&) = default;
};

struct MaximinRule {
  friend bool operator==(const MaximinRule&, const MaximinRule&) = default;
};

using Rule = std::variant<ScoringRule, CondorcetRule, CopelandRule, MaximinRule>;

enum class WinnerModel { Unique, CoWinner };

/// One score per candidate.
using ScoreTable = std::vector<Rational>;

/// Named scoring vector of length m. `r` is only read for Approval.
/// Throws ValidationError when r is outside [1, m] or m < 1.
std::vector<Count> scoring_vector_for(ScoringKind kind, int m, int r = 1);

ScoringRule make_scoring(ScoringKind kind, int m, int r = 1);
ScoringRule make_custom_scoring(std::vector<Count> vector);

/// Throws ValidationError when the rule cannot be applied to m candidates
/// (vector length, monotonicity, negative points, alpha outside [0,1]).
void validate_rule(const Rule& rule, int m);

/// Grammar form of the rule: plurality, veto, approval:<r>, borda,
/// condorcet, maximin, copeland:<p>/<q>; custom vectors print as scoring:<v,...>.
std::string rule_name(const Rule& rule);

bool is_pairwise_rule(const Rule& rule);

/// Integer points per candidate under a scoring vector.
std::vector<Count> scoring_points(const Election& e, const std::vector<Count>& vector);
ScoreTable scoring_scores(const Election& e, const std::vector<Count>& vector);

ScoreTable copeland_scores(const PairwiseMatrix& n, const Rational& alpha);
ScoreTable copeland_scores(const Election& e, const Rational& alpha);

/// Throws ValidationError for single-candidate elections.
ScoreTable maximin_scores(const PairwiseMatrix& n);
ScoreTable maximin_scores(const Election& e);

std::optional<CandidateId> condorcet_winner(const PairwiseMatrix& n);
std::optional<CandidateId> condorcet_winner(const Election& e);

/// Indices attaining the maximum, ascending.
std::vector<CandidateId> argmax(const ScoreTable& scores);
std::vector<CandidateId> argmax(const std::vector<Count>& scores);

/// Winner set under `rule`; Condorcet yields the Condorcet winner or nothing.
std::vector<CandidateId> winners(const Election& e, const Rule& rule);

/// Winner set for a pairwise rule computed from an existing matrix.
std::vector<CandidateId> pairwise_winners(const PairwiseMatrix& n, const Rule& rule);

/// Unique: `c` is the only winner. CoWinner: `c` is among the winners.
bool wins(const std::vector<CandidateId>& winner_set, CandidateId c, WinnerModel model);
bool wins(const Election& e, const Rule& rule, CandidateId c, WinnerModel model);

}  // namespace partycred

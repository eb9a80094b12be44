#include "partycred/rules.hpp"

#include <algorithm>

#include "partycred/kernels.hpp"

namespace partycred {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<Count> scoring_vector_for(ScoringKind kind, int m, int r) {
  if (m < 1) throw ValidationError("scoring vector needs at least one candidate");
  std::vector<Count> v(m, 0);
  switch (kind) {
    case ScoringKind::Plurality:
      v[0] = 1;
      break;
    case ScoringKind::Veto:
      std::fill(v.begin(), v.end() - 1, 1);
      break;
    case ScoringKind::Approval:
      if (r < 1 || r > m) {
        throw ValidationError("approval count " + std::to_string(r) + " outside [1, " +
                              std::to_string(m) + "]");
      }
      std::fill(v.begin(), v.begin() + r, 1);
      break;
    case ScoringKind::Borda:
      for (int i = 0; i < m; ++i) v[i] = m - 1 - i;
      break;
    case ScoringKind::Custom:
      throw ValidationError("custom scoring vectors have no named form");
  }
  return v;
}

ScoringRule make_scoring(ScoringKind kind, int m, int r) {
  ScoringRule rule;
  rule.kind = kind;
  rule.approvals = kind == ScoringKind::Approval ? r : 0;
  rule.vector = scoring_vector_for(kind, m, r);
  return rule;
}

ScoringRule make_custom_scoring(std::vector<Count> vector) {
  ScoringRule rule;
  rule.kind = ScoringKind::Custom;
  rule.vector = std::move(vector);
  return rule;
}

void validate_rule(const Rule& rule, int m) {
  std::visit(Overloaded{
                 [m](const ScoringRule& s) {
                   if (static_cast<int>(s.vector.size()) != m) {
                     throw ValidationError("scoring vector has length " +
                                           std::to_string(s.vector.size()) + ", expected " +
                                           std::to_string(m));
                   }
                   for (std::size_t i = 0; i < s.vector.size(); ++i) {
                     if (s.vector[i] < 0) throw ValidationError("scoring vector has negative entry");
                     if (i > 0 && s.vector[i] > s.vector[i - 1]) {
                       throw ValidationError("scoring vector must be non-increasing");
                     }
                   }
                 },
                 [](const CondorcetRule&) {},
                 [](const CopelandRule& c) {
                   if (c.alpha < 0 || c.alpha > 1) throw ValidationError("copeland alpha outside [0,1]");
                 },
                 [m](const MaximinRule&) {
                   if (m < 2) throw ValidationError("maximin needs at least two candidates");
                 },
             },
             rule);
}

std::string rule_name(const Rule& rule) {
  return std::visit(Overloaded{
                        [](const ScoringRule& s) -> std::string {
                          switch (s.kind) {
                            case ScoringKind::Plurality: return "plurality";
                            case ScoringKind::Veto: return "veto";
                            case ScoringKind::Approval: return "approval:" + std::to_string(s.approvals);
                            case ScoringKind::Borda: return "borda";
                            case ScoringKind::Custom: break;
                          }
                          std::string out = "scoring:";
                          for (std::size_t i = 0; i < s.vector.size(); ++i) {
                            if (i) out += ',';
                            out += std::to_string(s.vector[i]);
                          }
                          return out;
                        },
                        [](const CondorcetRule&) -> std::string { return "condorcet"; },
                        [](const CopelandRule& c) -> std::string {
                          return "copeland:" + std::to_string(c.alpha.numerator()) + "/" +
                                 std::to_string(c.alpha.denominator());
                        },
                        [](const MaximinRule&) -> std::string { return "maximin"; },
                    },
                    rule);
}

bool is_pairwise_rule(const Rule& rule) { return !std::holds_alternative<ScoringRule>(rule); }

std::vector<Count> scoring_points(const Election& e, const std::vector<Count>& vector) {
  if (static_cast<int>(vector.size()) != e.num_candidates()) {
    throw ValidationError("scoring vector length does not match candidate count");
  }
  std::vector<Count> points(e.num_candidates(), 0);
  for (const Ballot& b : e.ballots()) {
    const auto& order = b.preference.order();
    for (std::size_t i = 0; i < order.size(); ++i) points[order[i]] += b.weight * vector[i];
  }
  return points;
}

ScoreTable scoring_scores(const Election& e, const std::vector<Count>& vector) {
  auto points = scoring_points(e, vector);
  return ScoreTable(points.begin(), points.end());
}

ScoreTable copeland_scores(const PairwiseMatrix& n, const Rational& alpha) {
  const int m = n.size();
  ScoreTable scores(m);
  std::vector<Count> margins(m);
  for (CandidateId c = 0; c < m; ++c) {
    for (CandidateId d = 0; d < m; ++d) margins[d] = n(c, d) - n(d, c);
    const auto signs = kernels::count_signs(margins, c);
    scores[c] = Rational(signs.positive) + alpha * Rational(signs.zero);
  }
  return scores;
}

ScoreTable copeland_scores(const Election& e, const Rational& alpha) {
  return copeland_scores(pairwise_matrix(e), alpha);
}

ScoreTable maximin_scores(const PairwiseMatrix& n) {
  const int m = n.size();
  if (m < 2) throw ValidationError("maximin needs at least two candidates");
  ScoreTable scores(m);
  for (CandidateId c = 0; c < m; ++c) {
    Count worst = -1;
    for (CandidateId d = 0; d < m; ++d) {
      if (d == c) continue;
      if (worst < 0 || n(c, d) < worst) worst = n(c, d);
    }
    scores[c] = Rational(worst);
  }
  return scores;
}

ScoreTable maximin_scores(const Election& e) { return maximin_scores(pairwise_matrix(e)); }

std::optional<CandidateId> condorcet_winner(const PairwiseMatrix& n) {
  const int m = n.size();
  for (CandidateId c = 0; c < m; ++c) {
    bool beats_all = true;
    for (CandidateId d = 0; d < m && beats_all; ++d) {
      if (d != c && n(c, d) <= n(d, c)) beats_all = false;
    }
    if (beats_all) return c;
  }
  return std::nullopt;
}

std::optional<CandidateId> condorcet_winner(const Election& e) {
  return condorcet_winner(pairwise_matrix(e));
}

namespace {

template <class T>
std::vector<CandidateId> argmax_impl(const std::vector<T>& scores) {
  std::vector<CandidateId> out;
  if (scores.empty()) return out;
  const T best = *std::max_element(scores.begin(), scores.end());
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] == best) out.push_back(static_cast<CandidateId>(c));
  }
  return out;
}

}  // namespace

std::vector<CandidateId> argmax(const ScoreTable& scores) { return argmax_impl(scores); }
std::vector<CandidateId> argmax(const std::vector<Count>& scores) { return argmax_impl(scores); }

std::vector<CandidateId> pairwise_winners(const PairwiseMatrix& n, const Rule& rule) {
  if (n.size() == 1) return {0};
  return std::visit(Overloaded{
                        [](const ScoringRule&) -> std::vector<CandidateId> {
                          throw std::logic_error("scoring rules are not computed from pairwise counts");
                        },
                        [&n](const CondorcetRule&) -> std::vector<CandidateId> {
                          if (auto w = condorcet_winner(n)) return {*w};
                          return {};
                        },
                        [&n](const CopelandRule& c) { return argmax(copeland_scores(n, c.alpha)); },
                        [&n](const MaximinRule&) { return argmax(maximin_scores(n)); },
                    },
                    rule);
}

std::vector<CandidateId> winners(const Election& e, const Rule& rule) {
  if (const auto* s = std::get_if<ScoringRule>(&rule)) return argmax(scoring_points(e, s->vector));
  return pairwise_winners(pairwise_matrix(e), rule);
}

bool wins(const std::vector<CandidateId>& winner_set, CandidateId c, WinnerModel model) {
  if (model == WinnerModel::Unique) return winner_set.size() == 1 && winner_set.front() == c;
  return std::find(winner_set.begin(), winner_set.end(), c) != winner_set.end();
}

bool wins(const Election& e, const Rule& rule, CandidateId c, WinnerModel model) {
  return wins(winners(e, rule), c, model);
}

}  // namespace partycred

#include "partycred/poly_solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace partycred {
namespace {

void require(bool condition, const char* what) {
  if (!condition) throw ValidationError(what);
}

const ScoringRule* scoring_of(const ProblemInstance& instance) {
  return std::get_if<ScoringRule>(&instance.rule);
}

void attach_verified(const ProblemInstance& instance, SolveResult& result) {
  if (auto check = certifies(instance, result); !check) {
    throw std::logic_error(result.solver + " built an invalid witness: " + check.reason);
  }
}

/// Number of ones in a 0/1 scoring vector, or -1 for any other shape.
int approval_count(const std::vector<Count>& v) {
  int ones = 0;
  for (Count x : v) {
    if (x != 0 && x != 1) return -1;
    ones += static_cast<int>(x);
  }
  // Non-increasing already holds for valid rules, so the ones form a prefix.
  return ones;
}

bool approval_solvable(const std::vector<Count>& v) {
  const int r = approval_count(v);
  const int m = static_cast<int>(v.size());
  return r >= 1 && (r <= kMaxApprovalR || r >= m - 1);
}

}  // namespace

SolveResult min_scoring(const ProblemInstance& instance) {
  validate_instance(instance);
  const ScoringRule* rule = scoring_of(instance);
  require(rule != nullptr, "min_scoring needs a scoring rule");
  require(instance.direction == Direction::Min, "min_scoring solves MIN instances");
  require(instance.mode == DestinationMode::One, "min_scoring is one-destination only");

  const PartyElection& pe = instance.election;
  const int l = pe.num_parties();
  const int m = pe.num_candidates();
  const CandidateId p = instance.p;
  const auto& vec = rule->vector;
  const auto points = [&](PartyId q, CandidateId c) {
    return vec[pe.party(q).preference.positions()[c]];
  };
  const std::vector<Count> score = scoring_points(materialize(pe), vec);

  SolveResult result;
  result.solver = "min_scoring";
  result.status = SolveStatus::Infeasible;
  Count best = std::numeric_limits<Count>::max();
  CandidateId best_rival = -1;
  PartyId best_dest = -1;

  std::vector<Count> gain(l);
  std::vector<PartyId> order(l);
  std::vector<Count> cum_voters(l + 1), cum_gain(l + 1);

  for (CandidateId rival = 0; rival < m; ++rival) {
    if (rival == p) continue;
    // Gap to close: a tie suffices under the unique-winner model.
    const Count need = score[p] - score[rival] + (instance.model == WinnerModel::CoWinner ? 1 : 0);
    if (need <= 0) continue;  // cannot happen when p wins initially

    for (PartyId q = 0; q < l; ++q) gain[q] = points(q, p) - points(q, rival);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](PartyId a, PartyId b) {
      return gain[a] != gain[b] ? gain[a] > gain[b] : a < b;
    });
    for (int i = 0; i < l; ++i) {
      cum_voters[i + 1] = cum_voters[i] + pe.party(order[i]).size;
      cum_gain[i + 1] = cum_gain[i] + pe.party(order[i]).size * gain[order[i]];
    }

    for (PartyId dest = 0; dest < l; ++dest) {
      const Count pull = points(dest, rival) - points(dest, p);
      // Sources with pull + gain > 0 form a prefix of the sorted order; the
      // destination itself has gain == -pull and is never part of it.
      const int eligible = static_cast<int>(
          std::partition_point(order.begin(), order.end(),
                               [&](PartyId q) { return gain[q] + pull > 0; }) -
          order.begin());
      const auto reduced = [&](int j) { return pull * cum_voters[j] + cum_gain[j]; };
      if (eligible == 0 || reduced(eligible) < need) continue;

      int lo = 1, hi = eligible;
      while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (reduced(mid) >= need) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      const Count per_voter = pull + gain[order[lo - 1]];
      const Count rest = need - reduced(lo - 1);
      const Count value = cum_voters[lo - 1] + (rest + per_voter - 1) / per_voter;
      if (value < best) {
        best = value;
        best_rival = rival;
        best_dest = dest;
      }
    }
  }

  if (best_rival < 0) return result;

  // Rebuild the greedy witness for the winning (rival, destination) pair.
  for (PartyId q = 0; q < l; ++q) gain[q] = points(q, p) - points(q, best_rival);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](PartyId a, PartyId b) {
    return gain[a] != gain[b] ? gain[a] > gain[b] : a < b;
  });
  std::vector<Count> counts(l, 0);
  Count left = best;
  for (PartyId q : order) {
    if (left == 0) break;
    const Count take = std::min(left, pe.party(q).size);
    counts[q] = take;
    left -= take;
  }

  result.status = SolveStatus::Solved;
  result.value = best;
  result.witness = SwitchPlan::to_destination(best_dest, counts);
  attach_verified(instance, result);
  return result;
}

SolveResult min_condorcet(const ProblemInstance& instance) {
  validate_instance(instance);
  require(std::holds_alternative<CondorcetRule>(instance.rule), "min_condorcet needs the Condorcet rule");
  require(instance.direction == Direction::Min, "min_condorcet solves MIN instances");
  require(instance.mode == DestinationMode::One, "min_condorcet is one-destination only");

  const PartyElection& pe = instance.election;
  const CandidateId p = instance.p;
  const PairwiseMatrix n = pairwise_matrix(materialize(pe));

  SolveResult result;
  result.solver = "min_condorcet";
  result.status = SolveStatus::Infeasible;

  for (CandidateId rival = 0; rival < pe.num_candidates(); ++rival) {
    if (rival == p) continue;
    // Each voter moved from a p>rival party into a rival>p party shifts the
    // margin by two; p stops being the Condorcet winner once it reaches zero.
    const Count needed = (n.margin(p, rival) + 1) / 2;
    PartyId dest = -1;
    Count available = 0;
    for (PartyId q = 0; q < pe.num_parties(); ++q) {
      if (pe.party(q).preference.prefers(rival, p)) {
        if (dest < 0) dest = q;
      } else {
        available += pe.party(q).size;
      }
    }
    if (dest < 0 || available < needed) continue;
    if (result.solved() && needed >= result.value) continue;

    std::vector<Count> counts(pe.num_parties(), 0);
    Count left = needed;
    for (PartyId q = 0; q < pe.num_parties() && left > 0; ++q) {
      if (pe.party(q).preference.prefers(rival, p)) continue;
      counts[q] = std::min(left, pe.party(q).size);
      left -= counts[q];
    }
    result.status = SolveStatus::Solved;
    result.value = needed;
    result.witness = SwitchPlan::to_destination(dest, counts);
  }

  if (result.solved()) attach_verified(instance, result);
  return result;
}

SolveResult max_r_approval(const ProblemInstance& instance) {
  validate_instance(instance);
  const ScoringRule* rule = scoring_of(instance);
  require(rule != nullptr && approval_solvable(rule->vector),
          "max_r_approval needs Plurality, Veto or r-Approval with small r");
  require(instance.direction == Direction::Max, "max_r_approval solves MAX instances");
  require(instance.mode == DestinationMode::One, "max_r_approval is one-destination only");

  const PartyElection& pe = instance.election;
  const int l = pe.num_parties();
  const int m = pe.num_candidates();
  const CandidateId p = instance.p;
  const int r = approval_count(rule->vector);
  const auto approves = [&](PartyId q, CandidateId c) {
    return pe.party(q).preference.positions()[c] < r;
  };

  SolveResult result;
  result.solver = "max_r_approval";
  result.status = SolveStatus::Solved;
  result.value = 0;
  result.witness = SwitchPlan::to_destination(0, {});

  for (PartyId dest = 0; dest < l; ++dest) {
    if (!approves(dest, p)) continue;

    std::vector<CandidateId> rivals;  // approved by dest, other than p
    for (CandidateId c = 0; c < m; ++c) {
      if (c != p && approves(dest, c)) rivals.push_back(c);
    }

    // Parties that must each keep one voter behind.
    std::vector<PartyId> keep;
    if (instance.model == WinnerModel::Unique && !rivals.empty()) {
      const int u = static_cast<int>(rivals.size());
      if (u <= 3) {
        // Minimum set cover over at most three elements, by breadth over masks.
        const unsigned full = (1u << u) - 1;
        std::vector<int> cover_mask_party(full + 1, -1);
        for (PartyId q = 0; q < l; ++q) {
          if (q == dest || pe.party(q).size == 0 || !approves(q, p)) continue;
          unsigned mask = 0;
          for (int i = 0; i < u; ++i) {
            if (!approves(q, rivals[i])) mask |= 1u << i;
          }
          if (mask != 0 && cover_mask_party[mask] < 0) cover_mask_party[mask] = q;
        }
        std::vector<int> dist(full + 1, -1), via(full + 1, -1), prev(full + 1, -1);
        dist[0] = 0;
        std::vector<unsigned> frontier{0};
        while (!frontier.empty() && dist[full] < 0) {
          std::vector<unsigned> next;
          for (unsigned covered : frontier) {
            for (unsigned mask = 1; mask <= full; ++mask) {
              if (cover_mask_party[mask] < 0) continue;
              const unsigned to = covered | mask;
              if (dist[to] >= 0) continue;
              dist[to] = dist[covered] + 1;
              via[to] = cover_mask_party[mask];
              prev[to] = static_cast<int>(covered);
              next.push_back(to);
            }
          }
          frontier = std::move(next);
        }
        if (dist[full] < 0) continue;
        for (unsigned at = full; at != 0; at = static_cast<unsigned>(prev[at])) keep.push_back(via[at]);
      } else {
        // Veto shape: each voter disapproves a single candidate, so every rival
        // needs its own p-approving voter that vetoes it.
        std::vector<int> vetoer(m, -1);
        for (PartyId q = 0; q < l; ++q) {
          if (q == dest || pe.party(q).size == 0 || !approves(q, p)) continue;
          const CandidateId vetoed = pe.party(q).preference.order().back();
          if (vetoer[vetoed] < 0) vetoer[vetoed] = q;
        }
        bool covered = true;
        for (CandidateId c : rivals) {
          if (vetoer[c] < 0) {
            covered = false;
            break;
          }
          keep.push_back(vetoer[c]);
        }
        if (!covered) continue;
      }
    }

    std::vector<Count> counts(l, 0);
    for (PartyId q = 0; q < l; ++q) {
      if (q != dest) counts[q] = pe.party(q).size;
    }
    for (PartyId q : keep) --counts[q];
    const Count value = std::accumulate(counts.begin(), counts.end(), Count{0});
    if (value > result.value) {
      result.value = value;
      result.witness = SwitchPlan::to_destination(dest, counts);
    }
  }

  attach_verified(instance, result);
  return result;
}

bool has_poly_solver(const ProblemInstance& instance) {
  if (instance.mode != DestinationMode::One) return false;
  if (instance.direction == Direction::Min) {
    return std::holds_alternative<ScoringRule>(instance.rule) ||
           std::holds_alternative<CondorcetRule>(instance.rule);
  }
  if (instance.model == WinnerModel::CoWinner) return false;
  const ScoringRule* rule = scoring_of(instance);
  return rule != nullptr && approval_solvable(rule->vector);
}

SolveResult solve_poly(const ProblemInstance& instance) {
  if (!has_poly_solver(instance)) {
    throw std::invalid_argument("no polynomial solver for " + rule_name(instance.rule) +
                                (instance.direction == Direction::Min ? " MIN" : " MAX"));
  }
  if (instance.direction == Direction::Max) return max_r_approval(instance);
  if (std::holds_alternative<CondorcetRule>(instance.rule)) return min_condorcet(instance);
  return min_scoring(instance);
}

}  // namespace partycred

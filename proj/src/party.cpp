#include "partycred/party.hpp"

#include <algorithm>

namespace partycred {

PartyElection::PartyElection(int num_candidates, std::vector<Party> parties)
    : num_candidates_(num_candidates), parties_(std::move(parties)) {
  if (num_candidates_ < 1) throw ValidationError("election needs at least one candidate");
  if (parties_.empty()) throw ValidationError("election needs at least one party");
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    const Party& party = parties_[i];
    if (party.preference.size() != num_candidates_) {
      throw ValidationError("party " + std::to_string(i) + " ranks " +
                            std::to_string(party.preference.size()) + " candidates, expected " +
                            std::to_string(num_candidates_));
    }
    if (party.size < 0) throw ValidationError("party " + std::to_string(i) + " has negative size");
    total_ += party.size;
  }
  if (total_ < 1) throw ValidationError("election needs at least one voter");
}

void validate_instance(const ProblemInstance& instance) {
  const PartyElection& pe = instance.election;
  validate_rule(instance.rule, pe.num_candidates());
  if (instance.p < 0 || instance.p >= pe.num_candidates()) {
    throw ValidationError("distinguished candidate out of range");
  }
  if (instance.k < 0) throw ValidationError("k must be non-negative");
  for (PartyId i = 0; i < pe.num_parties(); ++i) {
    if (pe.party(i).size < 1) {
      throw ValidationError("party " + std::to_string(i) + " starts empty");
    }
  }
  const auto w = winners(materialize(pe), instance.rule);
  if (!wins(w, instance.p, instance.model)) {
    std::string set;
    for (CandidateId c : w) set += (set.empty() ? "" : ",") + std::to_string(c);
    throw ValidationError("distinguished candidate " + std::to_string(instance.p) +
                          " is not the initial " +
                          (instance.model == WinnerModel::Unique ? "unique " : "") +
                          "winner; winners are {" + set + "}");
  }
}

Count SwitchPlan::total() const {
  Count t = 0;
  for (const Move& mv : moves) t += mv.count;
  return t;
}

SwitchPlan SwitchPlan::canonical() const {
  SwitchPlan out;
  out.destination = destination;
  for (const Move& mv : moves) {
    if (mv.count != 0) out.moves.push_back(mv);
  }
  std::stable_sort(out.moves.begin(), out.moves.end(), [](const Move& a, const Move& b) {
    return a.to != b.to ? a.to < b.to : a.from < b.from;
  });
  return out;
}

SwitchPlan SwitchPlan::to_destination(PartyId destination, const std::vector<Count>& counts) {
  SwitchPlan plan;
  plan.destination = destination;
  for (std::size_t q = 0; q < counts.size(); ++q) {
    if (counts[q] > 0) plan.moves.push_back({static_cast<PartyId>(q), destination, counts[q]});
  }
  return plan;
}

bool answer(const ProblemInstance& instance, const SolveResult& result) {
  if (!result.solved()) return false;
  return instance.direction == Direction::Min ? result.value <= instance.k
                                              : result.value >= instance.k;
}

Election materialize(const PartyElection& pe) {
  std::vector<Ballot> ballots;
  ballots.reserve(pe.parties().size());
  for (const Party& party : pe.parties()) {
    if (party.size > 0) ballots.push_back({party.preference, party.size});
  }
  return Election(pe.num_candidates(), std::move(ballots));
}

namespace {

WitnessCheck fail(WitnessIssue issue, std::string reason) { return {issue, std::move(reason)}; }

WitnessCheck check_structure(const PartyElection& pe, const SwitchPlan& plan) {
  const int l = pe.num_parties();
  std::vector<Count> outflow(l, 0);
  for (const Move& mv : plan.moves) {
    if (mv.from < 0 || mv.from >= l || mv.to < 0 || mv.to >= l) {
      return fail(WitnessIssue::UnknownParty, "move references an unknown party");
    }
    if (mv.count < 0) return fail(WitnessIssue::NegativeCount, "negative move count");
    if (mv.from == mv.to && mv.count > 0) {
      return fail(WitnessIssue::SelfMove, "voters not in P violated: party " +
                                              std::to_string(mv.from) + " moves into itself");
    }
    outflow[mv.from] += mv.count;
  }
  for (PartyId q = 0; q < l; ++q) {
    if (outflow[q] > pe.party(q).size) {
      return fail(WitnessIssue::Overdraw, "overdraw: party " + std::to_string(q) + " loses " +
                                              std::to_string(outflow[q]) + " of " +
                                              std::to_string(pe.party(q).size) + " voters");
    }
  }
  return {};
}

}  // namespace

PartyElection apply_switch(const PartyElection& pe, const SwitchPlan& plan) {
  if (auto check = check_structure(pe, plan); !check) throw ValidationError(check.reason);
  std::vector<Party> parties = pe.parties();
  for (const Move& mv : plan.moves) {
    parties[mv.from].size -= mv.count;
    parties[mv.to].size += mv.count;
  }
  return PartyElection(pe.num_candidates(), std::move(parties));
}

bool min_success(const ProblemInstance& instance, const Election& after) {
  const auto w = winners(after, instance.rule);
  return !wins(w, instance.p, instance.model);
}

bool max_success(const ProblemInstance& instance, const Election& after) {
  return wins(winners(after, instance.rule), instance.p, instance.model);
}

bool success(const ProblemInstance& instance, const Election& after) {
  return instance.direction == Direction::Min ? min_success(instance, after)
                                              : max_success(instance, after);
}

WitnessCheck check_witness(const ProblemInstance& instance, const SwitchPlan& plan) {
  const PartyElection& pe = instance.election;
  if (auto check = check_structure(pe, plan); !check) return check;

  if (instance.mode == DestinationMode::One) {
    if (!plan.destination) return fail(WitnessIssue::MissingDestination, "one-destination plan has no destination");
    if (*plan.destination < 0 || *plan.destination >= pe.num_parties()) {
      return fail(WitnessIssue::UnknownParty, "destination is not a party");
    }
    for (const Move& mv : plan.moves) {
      if (mv.count == 0) continue;
      if (mv.from == *plan.destination) {
        return fail(WitnessIssue::SelfMove, "voters not in P violated: destination loses voters");
      }
      if (mv.to != *plan.destination) {
        return fail(WitnessIssue::StrayDestination, "move targets party " + std::to_string(mv.to) +
                                                        " instead of the destination");
      }
    }
  } else {
    std::vector<bool> source(pe.num_parties(), false), target(pe.num_parties(), false);
    for (const Move& mv : plan.moves) {
      if (mv.count == 0) continue;
      source[mv.from] = true;
      target[mv.to] = true;
    }
    for (PartyId q = 0; q < pe.num_parties(); ++q) {
      if (source[q] && target[q]) {
        return fail(WitnessIssue::SourceIsDestination,
                    "party " + std::to_string(q) + " both loses and receives voters");
      }
    }
  }

  const Count moved = plan.total();
  if (instance.direction == Direction::Min ? moved > instance.k : moved < instance.k) {
    return fail(WitnessIssue::BoundViolated, "plan moves " + std::to_string(moved) +
                                                 " voters, bound is " + std::to_string(instance.k));
  }
  const Election after = materialize(apply_switch(pe, plan));
  if (!success(instance, after)) {
    return fail(WitnessIssue::PredicateFailed, "success predicate does not hold after switching");
  }
  return {};
}

WitnessCheck certifies(const ProblemInstance& instance, const SolveResult& result) {
  if (!result.solved()) return fail(WitnessIssue::PredicateFailed, "result is not solved");
  if (!result.witness) return fail(WitnessIssue::PredicateFailed, "solved result lacks a witness");
  if (result.witness->total() != result.value) {
    return fail(WitnessIssue::BoundViolated, "witness moves " + std::to_string(result.witness->total()) +
                                                 " voters but value is " + std::to_string(result.value));
  }
  ProblemInstance at_value = instance;
  at_value.k = result.value;
  return check_witness(at_value, *result.witness);
}

}  // namespace partycred

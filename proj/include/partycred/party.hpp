#pragma once

// Party-based elections, voter switching, and the MIN/MAX problem instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partycred/election.hpp"
#include "partycred/rules.hpp"

namespace partycred {

using PartyId = int;

struct Party {
  Preference preference;
  Count size = 0;

  friend bool operator==(const Party&, const Party&) = default;
};

/// Candidates plus parties whose members all cast the party preference.
class PartyElection {
 public:
  /// Throws ValidationError for an empty party list, mismatched preferences,
  /// negative sizes, or no voters at all.
  PartyElection(int num_candidates, std::vector<Party> parties);

  int num_candidates() const { return num_candidates_; }
  int num_parties() const { return static_cast<int>(parties_.size()); }
  const std::vector<Party>& parties() const { return parties_; }
  const Party& party(PartyId id) const { return parties_.at(id); }
  Count total_voters() const { return total_; }

  friend bool operator==(const PartyElection&, const PartyElection&) = default;

 private:
  int num_candidates_;
  std::vector<Party> parties_;
  Count total_ = 0;
};

enum class DestinationMode { One, Multiple };
enum class Direction { Min, Max };

struct ProblemInstance {
  PartyElection election;
  CandidateId p = 0;
  Count k = 0;
  Rule rule;
  WinnerModel model = WinnerModel::Unique;
  DestinationMode mode = DestinationMode::One;
  Direction direction = Direction::Min;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Throws ValidationError unless the rule fits, p is in range, k >= 0, every
/// party starts non-empty, and p wins the unswitched election under `model`.
void validate_instance(const ProblemInstance& instance);

struct Move {
  PartyId from = 0;
  PartyId to = 0;
  Count count = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Voters leaving their party for another one. One-destination plans carry
/// `destination` and every move targets it.
struct SwitchPlan {
  std::optional<PartyId> destination;
  std::vector<Move> moves;

  Count total() const;

  /// Moves ordered by (to, from) with zero counts dropped.
  SwitchPlan canonical() const;

  /// counts[q] voters leave party q for `destination`.
  static SwitchPlan to_destination(PartyId destination, const std::vector<Count>& counts);

  friend bool operator==(const SwitchPlan&, const SwitchPlan&) = default;
};

enum class SolveStatus { Solved, Infeasible, BudgetExhausted };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Count value = 0;
  std::optional<SwitchPlan> witness;
  std::string solver;
  std::uint64_t nodes = 0;

  bool solved() const { return status == SolveStatus::Solved; }
};

/// Decision answer: MIN value <= k, MAX value >= k. False unless solved.
bool answer(const ProblemInstance& instance, const SolveResult& result);

/// One weighted ballot per non-empty party.
Election materialize(const PartyElection& pe);

/// Throws ValidationError on unknown parties, negative counts, self moves,
/// or a source losing more voters than it has.
PartyElection apply_switch(const PartyElection& pe, const SwitchPlan& plan);

/// Unique: p is no longer the sole winner. CoWinner: p left the winner set.
bool min_success(const ProblemInstance& instance, const Election& after);

/// Unique: p is still the sole winner. CoWinner: p is still a winner.
bool max_success(const ProblemInstance& instance, const Election& after);

bool success(const ProblemInstance& instance, const Election& after);

enum class WitnessIssue {
  None,
  UnknownParty,
  NegativeCount,
  SelfMove,
  Overdraw,
  MissingDestination,
  StrayDestination,
  SourceIsDestination,
  BoundViolated,
  PredicateFailed,
};

struct WitnessCheck {
  WitnessIssue issue = WitnessIssue::None;
  std::string reason;

  bool ok() const { return issue == WitnessIssue::None; }
  explicit operator bool() const { return ok(); }
};

/// Structure, destination mode, the k bound (<= k for MIN, >= k for MAX) and
/// the success predicate on the switched election.
WitnessCheck check_witness(const ProblemInstance& instance, const SwitchPlan& plan);

/// A solved result whose witness moves exactly `value` voters and passes
/// check_witness with k set to that value.
WitnessCheck certifies(const ProblemInstance& instance, const SolveResult& result);

}  // namespace partycred

#include "partycred/election.hpp"

#include "partycred/kernels.hpp"

namespace partycred {

std::optional<std::string> validate_preference(std::span<const CandidateId> order, int m) {
  std::vector<bool> seen(m > 0 ? m : 0, false);
  for (CandidateId c : order) {
    if (c < 0 || c >= m) return "candidate " + std::to_string(c) + " out of range";
    if (seen[c]) return "duplicate " + std::to_string(c);
    seen[c] = true;
  }
  for (int c = 0; c < m; ++c) {
    if (!seen[c]) return "missing " + std::to_string(c);
  }
  return std::nullopt;
}

Preference::Preference(std::vector<CandidateId> order) : order_(std::move(order)) {
  const int m = static_cast<int>(order_.size());
  if (m < 1) throw ValidationError("preference must rank at least one candidate");
  if (auto why = validate_preference(order_, m)) throw ValidationError("invalid preference: " + *why);
  positions_.assign(m, 0);
  for (int i = 0; i < m; ++i) positions_[order_[i]] = i;
}

int Preference::rank_of(CandidateId c) const {
  if (c < 0 || c >= size()) throw std::out_of_range("unknown candidate " + std::to_string(c));
  return positions_[c] + 1;
}

int rank_of(const Preference& pref, CandidateId c) { return pref.rank_of(c); }

Election::Election(int num_candidates, std::vector<Ballot> ballots)
    : num_candidates_(num_candidates), ballots_(std::move(ballots)) {
  if (num_candidates_ < 1) throw ValidationError("election needs at least one candidate");
  for (const Ballot& b : ballots_) {
    if (b.preference.size() != num_candidates_) {
      throw ValidationError("ballot ranks " + std::to_string(b.preference.size()) +
                            " candidates, election has " + std::to_string(num_candidates_));
    }
    if (b.weight <= 0) throw ValidationError("ballot weight must be positive");
    total_ += b.weight;
  }
  if (total_ < 1) throw ValidationError("election needs at least one voter");
}

void accumulate_pairwise(PairwiseMatrix& matrix, const Preference& pref, Count weight) {
  kernels::pairwise_accumulate(matrix.data(), pref.positions(), weight);
}

PairwiseMatrix pairwise_matrix(const Election& e) {
  PairwiseMatrix n(e.num_candidates());
  for (const Ballot& b : e.ballots()) accumulate_pairwise(n, b.preference, b.weight);
  return n;
}

}  // namespace partycred

#pragma once

// Candidates, ballots and pairwise comparison counts.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace partycred {

/// Dense candidate index in [0, m). Names live in the IO layer only.
using CandidateId = int;

/// Voter counts. 64-bit so weighted sums never overflow at desk or benchmark scale.
using Count = std::int64_t;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns a description of the first violation, or nullopt when `order` is a
/// permutation of {0..m-1}.
std::optional<std::string> validate_preference(std::span<const CandidateId> order, int m);

/// A strict linear order over all candidates, most preferred first.
class Preference {
 public:
  Preference() = default;
  /// Throws ValidationError unless `order` is a permutation of {0..size-1}.
  explicit Preference(std::vector<CandidateId> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<CandidateId>& order() const { return order_; }
  CandidateId at(int position) const { return order_[position]; }

  /// 1-based position of `c`. Throws std::out_of_range for unknown candidates.
  int rank_of(CandidateId c) const;

  /// 0-based positions indexed by candidate, used by the pairwise kernels.
  const std::vector<std::int32_t>& positions() const { return positions_; }

  bool prefers(CandidateId a, CandidateId b) const { return positions_[a] < positions_[b]; }

  friend bool operator==(const Preference& a, const Preference& b) { return a.order_ == b.order_; }

 private:
  std::vector<CandidateId> order_;
  std::vector<std::int32_t> positions_;
};

/// Free-function form of Preference::rank_of.
int rank_of(const Preference& pref, CandidateId c);

struct Ballot {
  Preference preference;
  Count weight = 1;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

/// A profile of weighted ballots. Identical voters share one ballot.
class Election {
 public:
  /// Throws ValidationError on a size mismatch, a non-positive weight, or an
  /// empty profile.
  Election(int num_candidates, std::vector<Ballot> ballots);

  int num_candidates() const { return num_candidates_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  Count total_voters() const { return total_; }

 private:
  int num_candidates_;
  std::vector<Ballot> ballots_;
  Count total_ = 0;
};

/// N(c,d): number of voters preferring c to d. Row-major m x m, diagonal zero.
class PairwiseMatrix {
 public:
  PairwiseMatrix() = default;
  explicit PairwiseMatrix(int m) : m_(m), n_(static_cast<std::size_t>(m) * m, 0) {}

  int size() const { return m_; }
  Count operator()(CandidateId c, CandidateId d) const { return n_[index(c, d)]; }
  Count& at(CandidateId c, CandidateId d) { return n_[index(c, d)]; }

  /// N(c,d) - N(d,c).
  Count margin(CandidateId c, CandidateId d) const { return (*this)(c, d) - (*this)(d, c); }

  std::span<Count> data() { return n_; }
  std::span<const Count> data() const { return n_; }
  std::span<const Count> row(CandidateId c) const {
    return std::span<const Count>(n_).subspan(static_cast<std::size_t>(c) * m_, m_);
  }

  friend bool operator==(const PairwiseMatrix&, const PairwiseMatrix&) = default;

 private:
  std::size_t index(CandidateId c, CandidateId d) const {
    return static_cast<std::size_t>(c) * m_ + d;
  }

  int m_ = 0;
  std::vector<Count> n_;
};

PairwiseMatrix pairwise_matrix(const Election& e);

/// Adds `weight` copies of `pref` into `matrix` (negative weights subtract).
void accumulate_pairwise(PairwiseMatrix& matrix, const Preference& pref, Count weight);

}  // namespace partycred

#include "partycred/search.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace partycred {
namespace {

constexpr Count kUnreachable = std::numeric_limits<Count>::max() / 4;
constexpr std::uint64_t kOracleEnumerationLimit = 50'000'000;

void require_direction(const ProblemInstance& instance, Direction direction, const char* who) {
  if (instance.direction != direction) {
    throw ValidationError(std::string(who) + " called with the wrong direction");
  }
}

// ---------------------------------------------------------------------------
// Oracle: literal enumeration, every plan evaluated from scratch.
// ---------------------------------------------------------------------------

class OracleRun {
 public:
  OracleRun(const ProblemInstance& instance) : instance_(instance) {
    minimize_ = instance.direction == Direction::Min;
    result_.solver = "oracle";
    result_.status = SolveStatus::Infeasible;
  }

  void consider(const SwitchPlan& plan) {
    ++result_.nodes;
    const Count total = plan.total();
    if (result_.solved() && (minimize_ ? total >= result_.value : total <= result_.value)) return;
    if (!success(instance_, materialize(apply_switch(instance_.election, plan)))) return;
    result_.status = SolveStatus::Solved;
    result_.value = total;
    result_.witness = plan.canonical();
  }

  SolveResult take() { return std::move(result_); }

 private:
  const ProblemInstance& instance_;
  bool minimize_ = true;
  SolveResult result_;
};

void enumerate_one_destination(const ProblemInstance& instance, OracleRun& run) {
  const PartyElection& pe = instance.election;
  const int l = pe.num_parties();
  for (PartyId dest = 0; dest < l; ++dest) {
    std::vector<PartyId> sources;
    for (PartyId q = 0; q < l; ++q) {
      if (q != dest) sources.push_back(q);
    }
    std::vector<Count> counts(l, 0);
    while (true) {
      run.consider(SwitchPlan::to_destination(dest, counts));
      int i = static_cast<int>(sources.size()) - 1;
      while (i >= 0 && counts[sources[i]] == pe.party(sources[i]).size) {
        counts[sources[i]] = 0;
        --i;
      }
      if (i < 0) break;
      ++counts[sources[i]];
    }
  }
}

// All ways to send at most `size` voters of party `q` to the other parties,
// as per-destination count vectors in lexicographic order.
void distributions(int l, PartyId q, Count size, std::vector<Count>& current, int at, Count left,
                   std::vector<std::vector<Count>>& out) {
  if (at == l) {
    out.push_back(current);
    return;
  }
  if (at == q) {
    distributions(l, q, size, current, at + 1, left, out);
    return;
  }
  for (Count x = 0; x <= left; ++x) {
    current[at] = x;
    distributions(l, q, size, current, at + 1, left - x, out);
  }
  current[at] = 0;
}

void enumerate_multiple_destinations(const ProblemInstance& instance, OracleRun& run) {
  const PartyElection& pe = instance.election;
  const int l = pe.num_parties();
  std::vector<std::vector<std::vector<Count>>> per_source(l);
  std::uint64_t combinations = 1;
  for (PartyId q = 0; q < l; ++q) {
    std::vector<Count> current(l, 0);
    distributions(l, q, pe.party(q).size, current, 0, pe.party(q).size, per_source[q]);
    combinations *= per_source[q].size();
    if (combinations > kOracleEnumerationLimit) {
      throw CapExceeded("multiple-destination oracle would enumerate more than " +
                        std::to_string(kOracleEnumerationLimit) + " plans");
    }
  }
  std::vector<std::size_t> index(l, 0);
  std::vector<Count> inflow(l), outflow(l);
  while (true) {
    std::fill(inflow.begin(), inflow.end(), 0);
    std::fill(outflow.begin(), outflow.end(), 0);
    SwitchPlan plan;
    for (PartyId q = 0; q < l; ++q) {
      const auto& dist = per_source[q][index[q]];
      for (PartyId d = 0; d < l; ++d) {
        if (dist[d] == 0) continue;
        plan.moves.push_back({q, d, dist[d]});
        outflow[q] += dist[d];
        inflow[d] += dist[d];
      }
    }
    bool partitioned = true;
    for (PartyId q = 0; q < l; ++q) {
      if (inflow[q] > 0 && outflow[q] > 0) partitioned = false;
    }
    if (partitioned) run.consider(plan);

    int i = l - 1;
    while (i >= 0 && index[i] + 1 == per_source[i].size()) {
      index[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++index[i];
  }
}

SolveResult run_oracle(const ProblemInstance& instance, const SearchOptions& options) {
  validate_instance(instance);
  if (instance.election.total_voters() > options.voter_cap) {
    throw CapExceeded("oracle limited to " + std::to_string(options.voter_cap) + " voters, instance has " +
                      std::to_string(instance.election.total_voters()));
  }
  OracleRun run(instance);
  if (instance.mode == DestinationMode::One) {
    enumerate_one_destination(instance, run);
  } else {
    enumerate_multiple_destinations(instance, run);
  }
  return run.take();
}

// ---------------------------------------------------------------------------
// Exact search: incremental evaluation plus admissible bounds.
// ---------------------------------------------------------------------------

struct BudgetExhausted {};

/// Current scores or pairwise counts of the switched election.
class Evaluator {
 public:
  explicit Evaluator(const ProblemInstance& instance) : instance_(instance) {
    const PartyElection& pe = instance.election;
    m_ = pe.num_candidates();
    if (const auto* s = std::get_if<ScoringRule>(&instance.rule)) {
      scoring_ = true;
      points_.assign(pe.num_parties(), std::vector<Count>(m_, 0));
      for (PartyId q = 0; q < pe.num_parties(); ++q) {
        for (CandidateId c = 0; c < m_; ++c) {
          points_[q][c] = s->vector[pe.party(q).preference.positions()[c]];
        }
      }
      score_.assign(m_, 0);
      for (PartyId q = 0; q < pe.num_parties(); ++q) adjust(q, pe.party(q).size);
    } else {
      n_ = PairwiseMatrix(m_);
      for (PartyId q = 0; q < pe.num_parties(); ++q) adjust(q, pe.party(q).size);
    }
  }

  void adjust(PartyId q, Count delta) {
    if (delta == 0) return;
    if (scoring_) {
      const auto& pts = points_[q];
      for (CandidateId c = 0; c < m_; ++c) score_[c] += delta * pts[c];
    } else {
      accumulate_pairwise(n_, instance_.election.party(q).preference, delta);
    }
  }

  void move(PartyId from, PartyId to, Count count) {
    adjust(from, -count);
    adjust(to, count);
  }

  std::vector<CandidateId> winner_set() const {
    if (scoring_) return argmax(score_);
    return pairwise_winners(n_, instance_.rule);
  }

  bool success() const {
    const bool p_wins = wins(winner_set(), instance_.p, instance_.model);
    return instance_.direction == Direction::Min ? !p_wins : p_wins;
  }

  bool scoring() const { return scoring_; }
  Count points(PartyId q, CandidateId c) const { return points_[q][c]; }
  const std::vector<Count>& score() const { return score_; }
  const PairwiseMatrix& pairwise() const { return n_; }

 private:
  const ProblemInstance& instance_;
  int m_ = 0;
  bool scoring_ = false;
  std::vector<std::vector<Count>> points_;
  std::vector<Count> score_;
  PairwiseMatrix n_;
};

/// Bookkeeping shared by both exact searches.
struct SearchRun {
  const ProblemInstance& instance;
  const SearchOptions& options;
  SolveResult result;
  bool minimize;

  SearchRun(const ProblemInstance& inst, const SearchOptions& opts)
      : instance(inst), options(opts), minimize(inst.direction == Direction::Min) {
    result.solver = "exact_search";
    result.status = SolveStatus::Infeasible;
  }

  void tick() {
    if (++result.nodes > options.node_budget) throw BudgetExhausted{};
  }

  bool improves(Count total) const {
    if (!result.solved()) return true;
    return minimize ? total < result.value : total > result.value;
  }

  void record(Count total, SwitchPlan plan) {
    result.status = SolveStatus::Solved;
    result.value = total;
    result.witness = plan.canonical();
  }
};

/// Branch and bound over per-source counts for one fixed destination.
class OneDestinationSearch {
 public:
  OneDestinationSearch(SearchRun& run, Evaluator& eval, PartyId dest)
      : run_(run), eval_(eval), inst_(run.instance), dest_(dest) {
    const PartyElection& pe = inst_.election;
    m_ = pe.num_candidates();
    for (PartyId q = 0; q < pe.num_parties(); ++q) {
      if (q != dest && pe.party(q).size > 0) sources_.push_back(q);
    }
    const int r = static_cast<int>(sources_.size());
    counts_.assign(pe.num_parties(), 0);
    suffix_capacity_.assign(r + 1, 0);
    for (int i = r - 1; i >= 0; --i) suffix_capacity_[i] = suffix_capacity_[i + 1] + size(i);

    if (eval_.scoring()) {
      build_scoring_tables();
    } else {
      build_pairwise_tables();
    }
    if (const auto* c = std::get_if<CopelandRule>(&inst_.rule)) alpha_ = c->alpha;
  }

  void run() { dfs(0, 0); }

 private:
  Count size(int i) const { return inst_.election.party(sources_[i]).size; }

  // Per-voter change of gap(p, c) = score(p) - score(c) when a voter of source i moves.
  Count gap_shift(int i, CandidateId c) const {
    const PartyId q = sources_[i];
    const CandidateId p = inst_.p;
    return (eval_.points(dest_, p) - eval_.points(q, p)) - (eval_.points(dest_, c) - eval_.points(q, c));
  }

  void build_scoring_tables() {
    const int r = static_cast<int>(sources_.size());
    if (run_.minimize) {
      // For each rival, sources that shrink the gap, best first.
      closing_.assign(m_, {});
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == inst_.p) continue;
        for (int i = 0; i < r; ++i) {
          const Count g = -gap_shift(i, c);
          if (g > 0) closing_[c].push_back({g, i});
        }
        std::stable_sort(closing_[c].begin(), closing_[c].end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
      }
    } else {
      // For each rival, the most the remaining sources can widen the gap.
      widening_.assign(m_, std::vector<Count>(r + 1, 0));
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == inst_.p) continue;
        for (int i = r - 1; i >= 0; --i) {
          widening_[c][i] = widening_[c][i + 1] + size(i) * std::max<Count>(0, gap_shift(i, c));
        }
      }
    }
  }

  void build_pairwise_tables() {
    // gainable_[i](x,y): voters among sources i.. that would raise N(x,y) by
    // moving to the destination (destination ranks x over y, source does not).
    const int r = static_cast<int>(sources_.size());
    const Preference& dpref = inst_.election.party(dest_).preference;
    gainable_.assign(r + 1, PairwiseMatrix(m_));
    for (int i = r - 1; i >= 0; --i) {
      gainable_[i] = gainable_[i + 1];
      const Preference& qpref = inst_.election.party(sources_[i]).preference;
      for (CandidateId x = 0; x < m_; ++x) {
        for (CandidateId y = 0; y < m_; ++y) {
          if (x != y && dpref.prefers(x, y) && qpref.prefers(y, x)) gainable_[i].at(x, y) += size(i);
        }
      }
    }
  }

  // Lower bound on extra voters needed before MIN succeeds.
  Count min_extra(int i) const {
    const CandidateId p = inst_.p;
    const bool co = inst_.model == WinnerModel::CoWinner;
    Count best = kUnreachable;
    if (eval_.scoring()) {
      const auto& score = eval_.score();
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == p) continue;
        Count left = score[p] - score[c] + (co ? 1 : 0);
        Count need = 0;
        for (const auto& [g, idx] : closing_[c]) {
          if (idx < i) continue;
          const Count cap = size(idx);
          if (g * cap >= left) {
            need += (left + g - 1) / g;
            left = 0;
            break;
          }
          need += cap;
          left -= g * cap;
        }
        if (left <= 0) best = std::min(best, need);
      }
      return best;
    }
    const PairwiseMatrix& n = eval_.pairwise();
    const PairwiseMatrix& gain = gainable_[i];
    if (std::holds_alternative<CondorcetRule>(inst_.rule)) {
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == p) continue;
        const Count margin = n.margin(p, c);
        if (2 * gain(c, p) >= margin) best = std::min(best, (margin + 1) / 2);
      }
      return best;
    }
    if (std::holds_alternative<MaximinRule>(inst_.rule)) {
      // One voter moves any single count by at most one, so a maximin gap by at most two.
      const auto scores = maximin_scores(n);
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == p) continue;
        const Rational gap = scores[p] - scores[c] + (co ? 1 : 0);
        const Count g = boost::rational_cast<Count>(gap);
        best = std::min(best, std::max<Count>(1, (g + 1) / 2));
      }
      return best;
    }
    return 1;
  }

  // False when no completion of the remaining sources can keep p winning.
  bool max_feasible(int i) const {
    const CandidateId p = inst_.p;
    const bool unique = inst_.model == WinnerModel::Unique;
    if (eval_.scoring()) {
      const auto& score = eval_.score();
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == p) continue;
        const Count reach = score[p] - score[c] + widening_[c][i];
        if (unique ? reach <= 0 : reach < 0) return false;
      }
      return true;
    }
    const PairwiseMatrix& n = eval_.pairwise();
    const PairwiseMatrix& gain = gainable_[i];
    const auto max_margin = [&](CandidateId x, CandidateId y) { return n.margin(x, y) + 2 * gain(x, y); };
    const auto min_margin = [&](CandidateId x, CandidateId y) { return n.margin(x, y) - 2 * gain(y, x); };

    if (std::holds_alternative<CondorcetRule>(inst_.rule)) {
      for (CandidateId c = 0; c < m_; ++c) {
        if (c != p && max_margin(p, c) <= 0) return false;
      }
      return true;
    }
    if (std::holds_alternative<MaximinRule>(inst_.rule)) {
      Count p_best = kUnreachable;
      for (CandidateId d = 0; d < m_; ++d) {
        if (d != p) p_best = std::min(p_best, n(p, d) + gain(p, d));
      }
      for (CandidateId c = 0; c < m_; ++c) {
        if (c == p) continue;
        Count c_worst = kUnreachable;
        for (CandidateId d = 0; d < m_; ++d) {
          if (d != c) c_worst = std::min(c_worst, n(c, d) - gain(d, c));
        }
        if (unique ? p_best <= c_worst : p_best < c_worst) return false;
      }
      return true;
    }
    // Copeland: optimistic score for p against pessimistic scores for rivals.
    Rational p_best = 0;
    for (CandidateId d = 0; d < m_; ++d) {
      if (d == p) continue;
      const Count hi = max_margin(p, d);
      if (hi > 0) {
        p_best += 1;
      } else if (hi == 0) {
        p_best += alpha_;
      }
    }
    for (CandidateId c = 0; c < m_; ++c) {
      if (c == p) continue;
      Rational c_worst = 0;
      for (CandidateId d = 0; d < m_; ++d) {
        if (d == c) continue;
        const Count lo = min_margin(c, d);
        if (lo > 0) {
          c_worst += 1;
        } else if (lo == 0) {
          c_worst += alpha_;
        }
      }
      if (unique ? p_best <= c_worst : p_best < c_worst) return false;
    }
    return true;
  }

  void dfs(int i, Count total) {
    run_.tick();
    const int r = static_cast<int>(sources_.size());
    if (run_.minimize) {
      if (eval_.success()) {
        if (run_.improves(total)) run_.record(total, SwitchPlan::to_destination(dest_, counts_));
        return;
      }
      if (i == r) return;
      const Count extra = min_extra(i);
      if (extra > suffix_capacity_[i]) return;
      if (run_.result.solved() && total + extra >= run_.result.value) return;
      for (Count x = 0; x <= size(i); ++x) {
        if (run_.result.solved() && total + x >= run_.result.value) break;
        apply(i, x);
        dfs(i + 1, total + x);
        apply(i, -x);
      }
      return;
    }

    if (run_.result.solved() && total + suffix_capacity_[i] <= run_.result.value) return;
    if (i == r) {
      if (eval_.success() && run_.improves(total)) {
        run_.record(total, SwitchPlan::to_destination(dest_, counts_));
      }
      return;
    }
    if (!max_feasible(i)) return;
    for (Count x = size(i); x >= 0; --x) {
      if (run_.result.solved() && total + x + suffix_capacity_[i + 1] <= run_.result.value) break;
      apply(i, x);
      dfs(i + 1, total + x);
      apply(i, -x);
    }
  }

  void apply(int i, Count x) {
    if (x == 0) return;
    eval_.move(sources_[i], dest_, x);
    counts_[sources_[i]] += x;
  }

  SearchRun& run_;
  Evaluator& eval_;
  const ProblemInstance& inst_;
  PartyId dest_;
  int m_ = 0;
  Rational alpha_{0};
  std::vector<PartyId> sources_;
  std::vector<Count> counts_;
  std::vector<Count> suffix_capacity_;
  std::vector<std::vector<std::pair<Count, int>>> closing_;
  std::vector<std::vector<Count>> widening_;
  std::vector<PairwiseMatrix> gainable_;
};

/// Search over final party sizes; moved voters = total shrinkage.
class MultipleDestinationSearch {
 public:
  MultipleDestinationSearch(SearchRun& run, Evaluator& eval) : run_(run), eval_(eval) {
    const PartyElection& pe = run.instance.election;
    l_ = pe.num_parties();
    initial_.resize(l_);
    for (PartyId q = 0; q < l_; ++q) initial_[q] = pe.party(q).size;
    final_ = initial_;
    suffix_size_.assign(l_ + 1, 0);
    for (int q = l_ - 1; q >= 0; --q) suffix_size_[q] = suffix_size_[q + 1] + initial_[q];
  }

  void run() { dfs(0, run_.instance.election.total_voters(), 0); }

 private:
  void dfs(PartyId q, Count left, Count cost) {
    run_.tick();
    if (run_.minimize && run_.result.solved() && cost >= run_.result.value) return;
    if (!run_.minimize && run_.result.solved() && cost + suffix_size_[q] <= run_.result.value) return;
    if (q == l_ - 1) {
      set_size(q, left);
      const Count total = cost + std::max<Count>(0, initial_[q] - left);
      if (eval_.success() && run_.improves(total)) run_.record(total, plan());
      set_size(q, initial_[q]);
      return;
    }
    for (Count f : candidate_sizes(q, left)) {
      set_size(q, f);
      dfs(q + 1, left - f, cost + std::max<Count>(0, initial_[q] - f));
    }
    set_size(q, initial_[q]);
  }

  // Cheap sizes first for MIN, expensive (shrinking) sizes first for MAX.
  std::vector<Count> candidate_sizes(PartyId q, Count left) const {
    std::vector<Count> out;
    const Count keep = std::min(initial_[q], left);
    if (run_.minimize) {
      for (Count f = keep; f <= left; ++f) out.push_back(f);
      for (Count f = keep - 1; f >= 0; --f) out.push_back(f);
    } else {
      for (Count f = 0; f <= left; ++f) out.push_back(f);
    }
    return out;
  }

  void set_size(PartyId q, Count f) {
    eval_.adjust(q, f - final_[q]);
    final_[q] = f;
  }

  SwitchPlan plan() const {
    SwitchPlan out;
    std::vector<Count> surplus(l_), deficit(l_);
    for (PartyId q = 0; q < l_; ++q) {
      surplus[q] = std::max<Count>(0, final_[q] - initial_[q]);
      deficit[q] = std::max<Count>(0, initial_[q] - final_[q]);
    }
    PartyId to = 0;
    for (PartyId from = 0; from < l_; ++from) {
      while (deficit[from] > 0) {
        while (surplus[to] == 0) ++to;
        const Count x = std::min(deficit[from], surplus[to]);
        out.moves.push_back({from, to, x});
        deficit[from] -= x;
        surplus[to] -= x;
      }
    }
    return out;
  }

  SearchRun& run_;
  Evaluator& eval_;
  int l_ = 0;
  std::vector<Count> initial_, final_, suffix_size_;
};

SolveResult run_exact(const ProblemInstance& instance, const SearchOptions& options) {
  validate_instance(instance);
  SearchRun run(instance, options);
  Evaluator eval(instance);
  try {
    if (instance.mode == DestinationMode::One) {
      for (PartyId dest = 0; dest < instance.election.num_parties(); ++dest) {
        OneDestinationSearch search(run, eval, dest);
        search.run();
      }
      if (!run.minimize && run.result.solved() == false) {
        run.record(0, SwitchPlan::to_destination(0, {}));
      }
    } else {
      MultipleDestinationSearch search(run, eval);
      search.run();
    }
  } catch (const BudgetExhausted&) {
    run.result.status = SolveStatus::BudgetExhausted;
    run.result.witness.reset();
    run.result.value = 0;
  }
  return std::move(run.result);
}

}  // namespace

SolveResult oracle_min(const ProblemInstance& instance, const SearchOptions& options) {
  require_direction(instance, Direction::Min, "oracle_min");
  return run_oracle(instance, options);
}

SolveResult oracle_max(const ProblemInstance& instance, const SearchOptions& options) {
  require_direction(instance, Direction::Max, "oracle_max");
  return run_oracle(instance, options);
}

SolveResult oracle(const ProblemInstance& instance, const SearchOptions& options) {
  return run_oracle(instance, options);
}

SolveResult exact_search_min(const ProblemInstance& instance, const SearchOptions& options) {
  require_direction(instance, Direction::Min, "exact_search_min");
  return run_exact(instance, options);
}

SolveResult exact_search_max(const ProblemInstance& instance, const SearchOptions& options) {
  require_direction(instance, Direction::Max, "exact_search_max");
  return run_exact(instance, options);
}

SolveResult exact_search(const ProblemInstance& instance, const SearchOptions& options) {
  return run_exact(instance, options);
}

}  // namespace partycred

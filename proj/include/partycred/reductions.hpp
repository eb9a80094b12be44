#pragma once

// Instance generators for the six NP-hardness constructions, together with
// brute-force solvers for their source problems (X3C, Vertex Cover,
// Independent Set). A reduction is checked by solving both sides.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partycred/party.hpp"

namespace partycred {

/// Exact cover by 3-sets. Elements are 0-based.
struct X3CInstance {
  int universe_size = 0;
  std::vector<std::array<int, 3>> sets;
};

/// Simple undirected graph with a size bound t. Vertices are 0-based.
struct GraphInstance {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int bound = 0;
};

/// Throws ValidationError unless every set holds three distinct in-range
/// elements, the universe size is a positive multiple of 3 and, when
/// `exactly_three` is set, every element occurs in exactly three sets.
void validate_x3c(const X3CInstance& x3c, bool exactly_three = true);

/// Throws ValidationError on self-loops, duplicate edges, out-of-range
/// endpoints or a negative bound.
void validate_graph(const GraphInstance& g);

/// Largest source instance the naive solvers accept (elements, sets, vertices).
inline constexpr int kNaiveSolverCap = 12;

/// On success `cover` receives the chosen set indices.
bool solve_x3c_naive(const X3CInstance& x3c, std::vector<int>* cover = nullptr);
/// Vertex cover of size at most g.bound.
bool solve_vc_naive(const GraphInstance& g, std::vector<int>* cover = nullptr);
/// Independent set of size at least g.bound.
bool solve_is_naive(const GraphInstance& g, std::vector<int>* independent = nullptr);

enum class ReductionKind {
  VcCopelandMin,
  X3cMaximinMin,
  X3cBordaMax,
  X3cCondorcetMax,
  IsMaximinMax,
  IsCopelandMax,
};

std::string_view reduction_name(ReductionKind kind);
std::optional<ReductionKind> parse_reduction_kind(std::string_view name);

/// Links source objects (vertices or sets) to the parties that represent them.
struct Provenance {
  ReductionKind kind = ReductionKind::VcCopelandMin;
  /// Destination party used by the constructive direction of the proof.
  PartyId destination = 0;
  /// item_party[i]: party of vertex i or set i.
  std::vector<PartyId> item_party;
  /// True when the parties of solution items move; false when all other
  /// item parties move (Borda MAX).
  bool solution_items_move = true;
  /// Extra labelled parties or candidates worth recording (e.g. v', v'').
  std::vector<std::pair<std::string, int>> notes;
};

struct ReducedInstance {
  ProblemInstance instance;
  std::vector<std::string> candidate_names;
  std::vector<std::string> party_names;
  Provenance provenance;

  CandidateId candidate(std::string_view name) const;
  PartyId party(std::string_view name) const;
};

/// Vertex Cover -> Copeland^alpha MIN. Requires an even vertex count,
/// 2t < n - 5 and two non-adjacent degree-1 vertices.
ReducedInstance reduce_vc_to_copeland_min(const GraphInstance& g, const Rational& alpha);

/// X3C -> Maximin MIN with k = m/3. Requires n - m/3 even.
ReducedInstance reduce_x3c_to_maximin_min(const X3CInstance& x3c);

/// X3C -> Borda MAX with k = n - m/3.
ReducedInstance reduce_x3c_to_borda_max(const X3CInstance& x3c);

/// X3C -> Condorcet MAX with k = m/3.
ReducedInstance reduce_x3c_to_condorcet_max(const X3CInstance& x3c);

/// Independent Set -> Maximin MAX with k = t.
ReducedInstance reduce_is_to_maximin_max(const GraphInstance& g);

/// Independent Set -> Copeland^alpha MAX with k = t.
ReducedInstance reduce_is_to_copeland_max(const GraphInstance& g, const Rational& alpha);

/// Converts a source solution (vertex or set indices) into the switch plan
/// the constructive direction of the proof uses.
SwitchPlan plan_from_source_solution(const ReducedInstance& reduced, const std::vector<int>& items);

}  // namespace partycred

#include "partycred/reductions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <initializer_list>
#include <set>

namespace partycred {
namespace {

using Seq = std::vector<CandidateId>;

Seq cat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& s : parts) out.insert(out.end(), s.begin(), s.end());
  return out;
}

Seq reversed(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

/// `xs` without the members of `drop`, order kept.
Seq without(const Seq& xs, const Seq& drop) {
  Seq out;
  for (CandidateId c : xs) {
    if (std::find(drop.begin(), drop.end(), c) == drop.end()) out.push_back(c);
  }
  return out;
}

/// Elements first..last (1-based, inclusive) of xs; empty when first > last.
Seq span_of(const Seq& xs, int first, int last) {
  if (first > last) return {};
  return Seq(xs.begin() + (first - 1), xs.begin() + last);
}

/// xs with each `from` replaced by its paired `to`.
Seq substitute(Seq xs, const std::vector<std::pair<CandidateId, CandidateId>>& swaps) {
  for (CandidateId& c : xs) {
    for (const auto& [from, to] : swaps) {
      if (c == from) {
        c = to;
        break;
      }
    }
  }
  return xs;
}

class Construction {
 public:
  CandidateId add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<CandidateId>(names_.size() - 1);
  }

  Seq add_group(const std::string& prefix, int count) {
    Seq out;
    for (int i = 1; i <= count; ++i) out.push_back(add(prefix + std::to_string(i)));
    return out;
  }

  PartyId party(std::string name, Count size, const Seq& order) {
    party_names_.push_back(std::move(name));
    sizes_.push_back(size);
    orders_.push_back(order);
    return static_cast<PartyId>(party_names_.size() - 1);
  }

  ReducedInstance finish(Rule rule, Direction direction, Count k, CandidateId p, Provenance provenance) {
    const int m = static_cast<int>(names_.size());
    std::vector<Party> parties;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (auto why = validate_preference(orders_[i], m)) {
        throw std::logic_error("construction produced a malformed preference for " + party_names_[i] +
                               ": " + *why);
      }
      parties.push_back({Preference(orders_[i]), sizes_[i]});
    }
    ReducedInstance out{
        ProblemInstance{PartyElection(m, std::move(parties)), p, k, std::move(rule), WinnerModel::Unique,
                        DestinationMode::One, direction},
        names_, party_names_, std::move(provenance)};
    validate_instance(out.instance);
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> party_names_;
  std::vector<Count> sizes_;
  std::vector<Seq> orders_;
};

void require(bool condition, const std::string& why) {
  if (!condition) throw ValidationError(why);
}

std::vector<std::vector<int>> incident_edges(const GraphInstance& g) {
  std::vector<std::vector<int>> out(g.num_vertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    out[g.edges[i].first].push_back(static_cast<int>(i));
    out[g.edges[i].second].push_back(static_cast<int>(i));
  }
  return out;
}

Seq pick(const Seq& pool, const std::vector<int>& indices) {
  Seq out;
  for (int i : indices) out.push_back(pool[i]);
  return out;
}

}  // namespace

void validate_x3c(const X3CInstance& x3c, bool exactly_three) {
  require(x3c.universe_size > 0 && x3c.universe_size % 3 == 0,
          "X3C universe size must be a positive multiple of 3");
  std::vector<int> occurrences(x3c.universe_size, 0);
  for (std::size_t t = 0; t < x3c.sets.size(); ++t) {
    const auto& s = x3c.sets[t];
    for (int x : s) {
      require(x >= 0 && x < x3c.universe_size, "X3C set " + std::to_string(t + 1) + " has an out-of-range element");
    }
    require(s[0] != s[1] && s[0] != s[2] && s[1] != s[2],
            "X3C set " + std::to_string(t + 1) + " repeats an element");
    for (int x : s) ++occurrences[x];
  }
  if (exactly_three) {
    for (int x = 0; x < x3c.universe_size; ++x) {
      require(occurrences[x] == 3, "X3C element " + std::to_string(x + 1) + " occurs in " +
                                       std::to_string(occurrences[x]) + " sets, expected exactly 3");
    }
  }
}

void validate_graph(const GraphInstance& g) {
  require(g.num_vertices >= 1, "graph needs at least one vertex");
  require(g.bound >= 0, "graph bound must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    require(u >= 0 && u < g.num_vertices && v >= 0 && v < g.num_vertices, "edge endpoint out of range");
    require(u != v, "self-loop on vertex " + std::to_string(u + 1));
    require(seen.insert({std::min(u, v), std::max(u, v)}).second,
            "duplicate edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
  }
}

bool solve_x3c_naive(const X3CInstance& x3c, std::vector<int>* cover) {
  validate_x3c(x3c, false);
  require(x3c.universe_size <= kNaiveSolverCap && static_cast<int>(x3c.sets.size()) <= kNaiveSolverCap,
          "X3C instance exceeds the naive solver cap");
  const int m = x3c.universe_size;
  std::vector<bool> covered(m, false);
  std::vector<int> chosen;
  std::function<bool()> search = [&]() -> bool {
    int first = 0;
    while (first < m && covered[first]) ++first;
    if (first == m) return true;
    for (std::size_t t = 0; t < x3c.sets.size(); ++t) {
      const auto& s = x3c.sets[t];
      if (std::find(s.begin(), s.end(), first) == s.end()) continue;
      if (covered[s[0]] || covered[s[1]] || covered[s[2]]) continue;
      for (int x : s) covered[x] = true;
      chosen.push_back(static_cast<int>(t));
      if (search()) return true;
      chosen.pop_back();
      for (int x : s) covered[x] = false;
    }
    return false;
  };
  const bool found = search();
  if (found && cover) *cover = chosen;
  return found;
}

namespace {

template <class Accept>
bool best_subset(const GraphInstance& g, Accept accept, std::vector<int>* out) {
  validate_graph(g);
  require(g.num_vertices <= kNaiveSolverCap, "graph exceeds the naive solver cap");
  const unsigned n = static_cast<unsigned>(g.num_vertices);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!accept(mask)) continue;
    if (out) {
      out->clear();
      for (unsigned v = 0; v < n; ++v) {
        if (mask & (1u << v)) out->push_back(static_cast<int>(v));
      }
    }
    return true;
  }
  return false;
}

}  // namespace

bool solve_vc_naive(const GraphInstance& g, std::vector<int>* cover) {
  return best_subset(
      g,
      [&](unsigned mask) {
        if (std::popcount(mask) > g.bound) return false;
        for (auto [u, v] : g.edges) {
          if (!(mask & (1u << u)) && !(mask & (1u << v))) return false;
        }
        return true;
      },
      cover);
}

bool solve_is_naive(const GraphInstance& g, std::vector<int>* independent) {
  return best_subset(
      g,
      [&](unsigned mask) {
        if (std::popcount(mask) < g.bound) return false;
        for (auto [u, v] : g.edges) {
          if ((mask & (1u << u)) && (mask & (1u << v))) return false;
        }
        return true;
      },
      independent);
}

std::string_view reduction_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::VcCopelandMin: return "vc-copeland-min";
    case ReductionKind::X3cMaximinMin: return "x3c-maximin-min";
    case ReductionKind::X3cBordaMax: return "x3c-borda-max";
    case ReductionKind::X3cCondorcetMax: return "x3c-condorcet-max";
    case ReductionKind::IsMaximinMax: return "is-maximin-max";
    case ReductionKind::IsCopelandMax: return "is-copeland-max";
  }
  return "unknown";
}

std::optional<ReductionKind> parse_reduction_kind(std::string_view name) {
  for (auto kind : {ReductionKind::VcCopelandMin, ReductionKind::X3cMaximinMin, ReductionKind::X3cBordaMax,
                    ReductionKind::X3cCondorcetMax, ReductionKind::IsMaximinMax, ReductionKind::IsCopelandMax}) {
    if (reduction_name(kind) == name) return kind;
  }
  return std::nullopt;
}

CandidateId ReducedInstance::candidate(std::string_view name) const {
  for (std::size_t i = 0; i < candidate_names.size(); ++i) {
    if (candidate_names[i] == name) return static_cast<CandidateId>(i);
  }
  throw std::out_of_range("no candidate named " + std::string(name));
}

PartyId ReducedInstance::party(std::string_view name) const {
  for (std::size_t i = 0; i < party_names.size(); ++i) {
    if (party_names[i] == name) return static_cast<PartyId>(i);
  }
  throw std::out_of_range("no party named " + std::string(name));
}

ReducedInstance reduce_vc_to_copeland_min(const GraphInstance& g, const Rational& alpha) {
  validate_graph(g);
  const int n = g.num_vertices;
  require(n % 2 == 0, "vertex count must be even");
  require(2 * g.bound < n - 5, "bound t must satisfy t < (n-5)/2");
  const auto incident = incident_edges(g);

  // v' and v'': the first pair of degree-1 vertices that are not each other's
  // neighbour, so some minimum cover avoids both.
  int v1 = -1, v2 = -1;
  for (int u = 0; u < n && v1 < 0; ++u) {
    if (incident[u].size() != 1) continue;
    for (int w = u + 1; w < n; ++w) {
      if (incident[w].size() != 1) continue;
      if (incident[u][0] == incident[w][0]) continue;
      v1 = u;
      v2 = w;
      break;
    }
  }
  require(v1 >= 0, "graph needs two non-adjacent degree-1 vertices");

  Construction b;
  const CandidateId p = b.add("p");
  const Seq a = b.add_group("a", 2);
  const Seq bs = b.add_group("b", 3);
  const Seq edges = b.add_group("e", static_cast<int>(g.edges.size()));

  Provenance prov;
  prov.kind = ReductionKind::VcCopelandMin;
  prov.item_party.resize(n);
  prov.notes = {{"v'", v1}, {"v''", v2}};
  for (int v = 0; v < n; ++v) {
    const Seq own = pick(edges, incident[v]);
    const Seq rest = without(edges, own);
    const Seq order = (v == v1 || v == v2) ? cat({own, a, {p}, bs, rest}) : cat({own, {p}, bs, a, rest});
    prov.item_party[v] = b.party("V" + std::to_string(v + 1), 1, order);
  }
  prov.destination = b.party("P", 1, cat({bs, edges, {p}, a}));
  b.party("P1", (n - 2) / 2, cat({{a[0]}, {p}, {a[1]}, edges, bs}));
  b.party("P2", (n - 2) / 2, cat({edges, bs, {a[0]}, {p}, {a[1]}}));
  return b.finish(CopelandRule{alpha}, Direction::Min, g.bound, p, std::move(prov));
}

ReducedInstance reduce_x3c_to_maximin_min(const X3CInstance& x3c) {
  validate_x3c(x3c);
  const int m = x3c.universe_size;
  const int n = static_cast<int>(x3c.sets.size());
  require((n - m / 3) % 2 == 0, "n - m/3 must be even to split the filler voters in half");
  require(n - m / 3 > 0, "n must exceed m/3");
  // Every x scores 4 against p, so p = n+1 only wins outright when n >= 4.
  require(n >= 4, "need at least four sets so p outscores every element candidate");

  Construction b;
  const Seq xs = b.add_group("x", m);
  const CandidateId p = b.add("p");
  const CandidateId z = b.add("z");
  const CandidateId alpha = b.add("alpha");
  const CandidateId beta = b.add("beta");

  Provenance prov;
  prov.kind = ReductionKind::X3cMaximinMin;
  for (int t = 0; t < n; ++t) {
    std::array<int, 3> s = x3c.sets[t];
    std::sort(s.begin(), s.end());
    const Seq members = pick(xs, {s[0], s[1], s[2]});
    prov.item_party.push_back(
        b.party("S" + std::to_string(t + 1), 1, cat({members, {z, p}, without(xs, members), {beta, alpha}})));
  }
  const Count half = (n - m / 3) / 2;
  b.party("H1", half, cat({{beta, alpha, p}, xs, {z}}));
  b.party("H2", half, cat({{alpha, p}, xs, {z, beta}}));
  for (int i = 1; i <= m / 3; ++i) {
    const Seq block = span_of(xs, 3 * i - 2, 3 * i);
    const Seq rest = without(xs, block);
    b.party("B" + std::to_string(i) + "a", 1, cat({{beta, alpha, p}, rest, {z}, block}));
    b.party("B" + std::to_string(i) + "b", 1, cat({{alpha, p}, rest, {z}, block, {beta}}));
  }
  prov.destination = b.party("P", 1, cat({{z}, xs, {p, alpha, beta}}));
  return b.finish(MaximinRule{}, Direction::Min, m / 3, p, std::move(prov));
}

ReducedInstance reduce_x3c_to_borda_max(const X3CInstance& x3c) {
  validate_x3c(x3c);
  const int m = x3c.universe_size;
  const int n = static_cast<int>(x3c.sets.size());

  Construction b;
  const Seq xs = b.add_group("x", m);
  const CandidateId p = b.add("p");
  const Seq d = b.add_group("d", 3);
  const CandidateId y = b.add("y");
  const CandidateId z = b.add("z");

  Provenance prov;
  prov.kind = ReductionKind::X3cBordaMax;
  prov.solution_items_move = false;
  for (int t = 0; t < n; ++t) {
    std::array<int, 3> s = x3c.sets[t];
    std::sort(s.begin(), s.end());
    const Seq masked = substitute(xs, {{xs[s[0]], d[0]}, {xs[s[1]], d[1]}, {xs[s[2]], d[2]}});
    prov.item_party.push_back(b.party("S" + std::to_string(t + 1), 1,
                                      cat({{z}, masked, {p, xs[s[0]], xs[s[1]], xs[s[2]], y}})));
  }
  b.party("Q", n, cat({{y, p}, reversed(xs), {z}, d}));
  prov.destination = b.party("P", 1, cat({xs, {p}, d, {y, z}}));
  return b.finish(make_scoring(ScoringKind::Borda, m + 6), Direction::Max, n - m / 3, p, std::move(prov));
}

ReducedInstance reduce_x3c_to_condorcet_max(const X3CInstance& x3c) {
  validate_x3c(x3c);
  const int m = x3c.universe_size;
  const int n = static_cast<int>(x3c.sets.size());

  Construction b;
  const Seq xs = b.add_group("x", m);
  const Seq as = b.add_group("a", 4);
  const Seq bs = b.add_group("b", 4);
  const Seq cs = b.add_group("c", n);
  const Seq ds = b.add_group("d", n);
  const CandidateId p = b.add("p");

  Provenance prov;
  prov.kind = ReductionKind::X3cCondorcetMax;
  std::vector<Seq> members(n);
  for (int t = 1; t <= n; ++t) {
    std::array<int, 3> s = x3c.sets[t - 1];
    std::sort(s.begin(), s.end());
    members[t - 1] = pick(xs, {s[0], s[1], s[2]});
  }
  for (int t = 1; t <= n; ++t) {
    const Seq& st = members[t - 1];
    b.party("S" + std::to_string(t), 1,
            cat({span_of(ds, t + 1, n), span_of(cs, 1, t), as, st, {p}, without(xs, st), reversed(bs),
                 span_of(cs, t + 1, n), span_of(ds, 1, t)}));
  }
  for (int t = 1; t <= n; ++t) {
    const Seq& st = members[t - 1];
    prov.item_party.push_back(b.party(
        "T" + std::to_string(t), 1,
        cat({span_of(ds, 1, t), span_of(cs, t + 1, n), bs, without(reversed(xs), st), {p}, reversed(st),
             reversed(as), span_of(cs, 1, t), span_of(ds, t + 1, n)})));
  }
  for (int i = 0; i < 4; ++i) {
    const bool forward = i % 2 == 0;
    b.party("R" + std::to_string(i + 1), 1,
            cat({{as[i], bs[i], p}, forward ? xs : reversed(xs), without(as, {as[i]}), without(bs, {bs[i]}),
                 forward ? cs : reversed(cs), forward ? ds : reversed(ds)}));
  }
  prov.destination = b.party("P", 1, cat({xs, {p}, as, bs, cs, ds}));
  return b.finish(CondorcetRule{}, Direction::Max, m / 3, p, std::move(prov));
}

ReducedInstance reduce_is_to_maximin_max(const GraphInstance& g) {
  validate_graph(g);
  const int n = g.num_vertices;
  const auto incident = incident_edges(g);

  Construction b;
  const CandidateId a = b.add("a");
  const CandidateId bb = b.add("b");
  const CandidateId p = b.add("p");
  const Seq edges = b.add_group("e", static_cast<int>(g.edges.size()));

  Provenance prov;
  prov.kind = ReductionKind::IsMaximinMax;
  for (int v = 0; v < n; ++v) {
    const Seq own = pick(edges, incident[v]);
    prov.item_party.push_back(
        b.party("V" + std::to_string(v + 1), 1, cat({{a}, without(edges, own), {p}, own, {bb}})));
  }
  b.party("Q", n, cat({{bb, p}, reversed(edges), {a}}));
  prov.destination = b.party("P", 1, cat({edges, {p, bb, a}}));
  return b.finish(MaximinRule{}, Direction::Max, g.bound, p, std::move(prov));
}

ReducedInstance reduce_is_to_copeland_max(const GraphInstance& g, const Rational& alpha) {
  validate_graph(g);
  const int n = g.num_vertices;
  const int m = static_cast<int>(g.edges.size());
  const auto incident = incident_edges(g);

  Construction b;
  const Seq as = b.add_group("a", m);
  const Seq bs = b.add_group("b", m);
  const Seq cs = b.add_group("c", m);
  const CandidateId p = b.add("p");
  const Seq edges = b.add_group("e", m);

  Provenance prov;
  prov.kind = ReductionKind::IsCopelandMax;
  for (int v = 0; v < n; ++v) {
    const Seq own = pick(edges, incident[v]);
    prov.item_party.push_back(
        b.party("V" + std::to_string(v + 1), 1, cat({as, without(edges, own), cs, {p}, own, bs})));
  }
  b.party("Q", n, cat({bs, cs, {p}, edges, as}));
  prov.destination = b.party("P", 1, cat({edges, {p}, as, bs, cs}));
  return b.finish(CopelandRule{alpha}, Direction::Max, g.bound, p, std::move(prov));
}

SwitchPlan plan_from_source_solution(const ReducedInstance& reduced, const std::vector<int>& items) {
  const Provenance& prov = reduced.provenance;
  std::vector<bool> chosen(prov.item_party.size(), false);
  for (int i : items) chosen.at(i) = true;
  std::vector<Count> counts(reduced.instance.election.num_parties(), 0);
  for (std::size_t i = 0; i < prov.item_party.size(); ++i) {
    if (chosen[i] == prov.solution_items_move) {
      const PartyId q = prov.item_party[i];
      counts[q] = reduced.instance.election.party(q).size;
    }
  }
  return SwitchPlan::to_destination(prov.destination, counts);
}

}  // namespace partycred

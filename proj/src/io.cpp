#include "partycred/io.hpp"

#include <charconv>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace partycred {

ParseError::ParseError(int line, const std::string& what)
    : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (ch == ':' || ch == '>' || ch == '#' || ch == ' ' || ch == '\t') return false;
  }
  return true;
}

struct Lines {
  std::vector<std::pair<int, std::string_view>> content;  // (line number, stripped text)
  std::vector<std::string> comments;
};

Lines read_lines(std::string_view text) {
  Lines out;
  int number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      const auto comment = trim(line.substr(hash + 1));
      if (trim(line.substr(0, hash)).empty()) out.comments.emplace_back(comment);
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.content.emplace_back(number, line);
  }
  return out;
}

/// Bounded uniform draw in [0, bound) by rejection, independent of the
/// standard library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  const auto num = to_int(text.substr(0, slash));
  if (!num) throw ValidationError("expected a rational p/q, got '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(*num);
  const auto den = to_int(text.substr(slash + 1));
  if (!den || *den == 0) throw ValidationError("expected a rational p/q, got '" + std::string(text) + "'");
  return Rational(*num, *den);
}

Rule parse_rule(std::string_view text, int m) {
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  const auto no_arg = [&](Rule rule) -> Rule {
    if (has_arg) throw ValidationError("rule '" + std::string(head) + "' takes no argument");
    return rule;
  };

  Rule rule;
  if (head == "plurality") {
    rule = no_arg(make_scoring(ScoringKind::Plurality, m));
  } else if (head == "veto") {
    rule = no_arg(make_scoring(ScoringKind::Veto, m));
  } else if (head == "borda") {
    rule = no_arg(make_scoring(ScoringKind::Borda, m));
  } else if (head == "condorcet") {
    rule = no_arg(CondorcetRule{});
  } else if (head == "maximin") {
    rule = no_arg(MaximinRule{});
  } else if (head == "approval") {
    const auto r = to_int(arg);
    if (!r) throw ValidationError("approval needs an integer r, as in approval:2");
    if (*r < 1 || *r > m) throw ValidationError("approval r must be between 1 and the candidate count");
    rule = make_scoring(ScoringKind::Approval, m, static_cast<int>(*r));
  } else if (head == "copeland") {
    if (!has_arg) throw ValidationError("copeland needs alpha, as in copeland:1/2");
    rule = CopelandRule{parse_rational(arg)};
  } else if (head == "scoring") {
    std::vector<Count> v;
    for (std::string_view part : split(arg, ',')) {
      const auto x = to_int(part);
      if (!x) throw ValidationError("scoring vector entries must be integers");
      v.push_back(*x);
    }
    rule = make_custom_scoring(std::move(v));
  } else {
    throw ValidationError("unknown rule '" + std::string(text) + "'");
  }
  validate_rule(rule, m);
  return rule;
}

std::string_view direction_name(Direction d) { return d == Direction::Min ? "min" : "max"; }
std::string_view model_name(WinnerModel m) { return m == WinnerModel::Unique ? "unique" : "cowinner"; }
std::string_view dest_mode_name(DestinationMode m) { return m == DestinationMode::One ? "one" : "multi"; }

InstanceDocument parse_instance(std::string_view text) {
  const Lines lines = read_lines(text);

  std::map<std::string, std::pair<int, std::string_view>> keys;
  struct PartyLine {
    int line;
    std::string name;
    Count size;
    std::string_view order;
  };
  std::vector<PartyLine> party_lines;

  static const std::set<std::string> known{"candidates", "rule", "model", "dest", "direction", "k", "distinguished"};
  for (auto [number, line] : lines.content) {
    if (line.starts_with("party ") || line.starts_with("party\t")) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(number, "party line needs ':' before the ranking");
      const auto head = words(line.substr(5, colon - 5));
      if (head.size() != 2) throw ParseError(number, "expected 'party <name> <size>: ...'");
      if (!valid_name(head[0])) throw ParseError(number, "invalid party name '" + std::string(head[0]) + "'");
      const auto size = to_int(head[1]);
      if (!size || *size < 1) throw ParseError(number, "party size must be a positive integer");
      party_lines.push_back({number, std::string(head[0]), *size, line.substr(colon + 1)});
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected 'key: value' or a party line");
    const std::string key(trim(line.substr(0, colon)));
    if (!known.contains(key)) throw ParseError(number, "unknown key '" + key + "'");
    if (auto it = keys.find(key); it != keys.end()) {
      throw ParseError(number, "duplicate key '" + key + "' (first on line " + std::to_string(it->second.first) + ")");
    }
    keys[key] = {number, trim(line.substr(colon + 1))};
  }

  const auto need = [&](const std::string& key) {
    auto it = keys.find(key);
    if (it == keys.end()) throw ParseError(0, "missing '" + key + ":' line");
    return it->second;
  };

  std::vector<std::string> candidate_names, party_names;

  const auto [cand_line, cand_text] = need("candidates");
  std::map<std::string, CandidateId, std::less<>> ids;
  for (std::string_view name : words(cand_text)) {
    if (!valid_name(name)) throw ParseError(cand_line, "invalid candidate name '" + std::string(name) + "'");
    if (!ids.emplace(std::string(name), static_cast<CandidateId>(ids.size())).second) {
      throw ParseError(cand_line, "duplicate candidate '" + std::string(name) + "'");
    }
    candidate_names.emplace_back(name);
  }
  const int m = static_cast<int>(candidate_names.size());
  if (m == 0) throw ParseError(cand_line, "no candidates");

  const auto [rule_line, rule_text] = need("rule");
  Rule rule;
  try {
    rule = parse_rule(rule_text, m);
  } catch (const ValidationError& e) {
    throw ParseError(rule_line, e.what());
  }

  WinnerModel model = WinnerModel::Unique;
  if (auto it = keys.find("model"); it != keys.end()) {
    if (it->second.second == "unique") {
      model = WinnerModel::Unique;
    } else if (it->second.second == "cowinner") {
      model = WinnerModel::CoWinner;
    } else {
      throw ParseError(it->second.first, "model must be unique or cowinner");
    }
  }
  DestinationMode mode = DestinationMode::One;
  if (auto it = keys.find("dest"); it != keys.end()) {
    if (it->second.second == "one") {
      mode = DestinationMode::One;
    } else if (it->second.second == "multi") {
      mode = DestinationMode::Multiple;
    } else {
      throw ParseError(it->second.first, "dest must be one or multi");
    }
  }
  Direction direction = Direction::Min;
  if (auto it = keys.find("direction"); it != keys.end()) {
    if (it->second.second == "min") {
      direction = Direction::Min;
    } else if (it->second.second == "max") {
      direction = Direction::Max;
    } else {
      throw ParseError(it->second.first, "direction must be min or max");
    }
  }
  Count k = 0;
  if (auto it = keys.find("k"); it != keys.end()) {
    const auto v = to_int(it->second.second);
    if (!v || *v < 0) throw ParseError(it->second.first, "k must be a non-negative integer");
    k = *v;
  }

  const auto [dist_line, dist_text] = need("distinguished");
  const auto p_it = ids.find(dist_text);
  if (p_it == ids.end()) throw ParseError(dist_line, "unknown candidate '" + std::string(dist_text) + "'");

  if (party_lines.empty()) throw ParseError(0, "no party lines");
  std::vector<Party> parties;
  std::set<std::string> party_seen;
  for (const PartyLine& pl : party_lines) {
    if (!party_seen.insert(pl.name).second) throw ParseError(pl.line, "duplicate party '" + pl.name + "'");
    std::vector<CandidateId> order;
    for (std::string_view name : split(pl.order, '>')) {
      const auto it = ids.find(name);
      if (it == ids.end()) throw ParseError(pl.line, "unknown candidate '" + std::string(name) + "'");
      order.push_back(it->second);
    }
    if (auto why = validate_preference(order, m)) {
      // Report by name rather than index.
      std::vector<bool> present(m, false);
      for (CandidateId c : order) {
        if (present[c]) throw ParseError(pl.line, "candidate '" + candidate_names[c] + "' ranked twice");
        present[c] = true;
      }
      for (CandidateId c = 0; c < m; ++c) {
        if (!present[c]) throw ParseError(pl.line, "ranking omits candidate '" + candidate_names[c] + "'");
      }
      throw ParseError(pl.line, *why);
    }
    parties.push_back({Preference(std::move(order)), pl.size});
    party_names.push_back(pl.name);
  }

  PartyElection pe(m, std::move(parties));
  const auto w = winners(materialize(pe), rule);
  if (!wins(w, p_it->second, model)) {
    std::string set;
    for (CandidateId c : w) set += (set.empty() ? "" : ", ") + candidate_names[c];
    throw ParseError(dist_line, "distinguished candidate '" + p_it->first + "' is not the initial " +
                                    (model == WinnerModel::Unique ? "unique " : "") + "winner; winners are {" +
                                    set + "}");
  }
  InstanceDocument doc{std::move(candidate_names), std::move(party_names),
                       ProblemInstance{std::move(pe), p_it->second, k, std::move(rule), model, mode, direction},
                       lines.comments};
  try {
    validate_instance(doc.instance);
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  const ProblemInstance& in = doc.instance;
  std::ostringstream out;
  for (const std::string& c : doc.comments) out << "# " << c << '\n';
  out << "candidates:";
  for (const std::string& name : doc.candidate_names) out << ' ' << name;
  out << "\nrule: " << rule_name(in.rule) << "\nmodel: " << model_name(in.model)
      << "\ndest: " << dest_mode_name(in.mode) << "\ndirection: " << direction_name(in.direction)
      << "\nk: " << in.k << "\ndistinguished: " << doc.candidate_names.at(in.p) << '\n';
  for (PartyId q = 0; q < in.election.num_parties(); ++q) {
    const Party& party = in.election.party(q);
    out << "party " << doc.party_names.at(q) << ' ' << party.size << ':';
    const auto& order = party.preference.order();
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " > " : " ") << doc.candidate_names[order[i]];
    out << '\n';
  }
  return out.str();
}

std::string serialize_result(const InstanceDocument& doc, const SolveResult& result,
                             std::optional<double> wall_time_ms) {
  using nlohmann::ordered_json;
  const ProblemInstance& in = doc.instance;
  ordered_json j;
  j["direction"] = direction_name(in.direction);
  j["rule"] = rule_name(in.rule);
  j["model"] = model_name(in.model);
  j["dest_mode"] = dest_mode_name(in.mode);
  switch (result.status) {
    case SolveStatus::Solved: j["value"] = result.value; break;
    case SolveStatus::Infeasible: j["value"] = "infeasible"; break;
    case SolveStatus::BudgetExhausted: j["value"] = "budget_exhausted"; break;
  }
  j["k"] = in.k;
  j["answer"] = answer(in, result);
  if (result.witness) {
    const SwitchPlan plan = result.witness->canonical();
    ordered_json w;
    if (plan.destination) {
      w["destination"] = doc.party_names.at(*plan.destination);
    } else {
      w["destination"] = nullptr;
    }
    w["moves"] = ordered_json::array();
    for (const Move& mv : plan.moves) {
      w["moves"].push_back(
          ordered_json{{"from", doc.party_names.at(mv.from)}, {"count", mv.count}, {"to", doc.party_names.at(mv.to)}});
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["solver"] = result.solver;
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j.dump(2) + "\n";
}

GraphInstance parse_graph(std::string_view text) {
  const Lines lines = read_lines(text);
  GraphInstance g;
  bool header = false, bound = false;
  for (auto [number, line] : lines.content) {
    const auto w = words(line);
    if (w[0] == "n") {
      if (header) throw ParseError(number, "duplicate 'n' header");
      const auto n = w.size() == 2 ? to_int(w[1]) : std::nullopt;
      if (!n || *n < 1) throw ParseError(number, "expected 'n <count>'");
      g.num_vertices = static_cast<int>(*n);
      header = true;
    } else if (w[0] == "t") {
      if (bound) throw ParseError(number, "duplicate 't' line");
      const auto t = w.size() == 2 ? to_int(w[1]) : std::nullopt;
      if (!t || *t < 0) throw ParseError(number, "expected 't <bound>'");
      g.bound = static_cast<int>(*t);
      bound = true;
    } else if (w[0] == "e") {
      if (!header) throw ParseError(number, "edge before 'n' header");
      const auto u = w.size() == 3 ? to_int(w[1]) : std::nullopt;
      const auto v = w.size() == 3 ? to_int(w[2]) : std::nullopt;
      if (!u || !v) throw ParseError(number, "expected 'e <u> <v>'");
      if (*u < 1 || *u > g.num_vertices || *v < 1 || *v > g.num_vertices) {
        throw ParseError(number, "vertex out of range 1.." + std::to_string(g.num_vertices));
      }
      g.edges.emplace_back(static_cast<int>(*u - 1), static_cast<int>(*v - 1));
    } else {
      throw ParseError(number, "expected 'n', 'e' or 't' line");
    }
  }
  if (!header) throw ParseError(0, "missing 'n <count>' header");
  try {
    validate_graph(g);
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
  return g;
}

X3CInstance parse_x3c(std::string_view text) {
  const Lines lines = read_lines(text);
  X3CInstance x;
  bool header = false;
  for (auto [number, line] : lines.content) {
    const auto w = words(line);
    if (w[0] == "m") {
      if (header) throw ParseError(number, "duplicate 'm' header");
      const auto m = w.size() == 2 ? to_int(w[1]) : std::nullopt;
      if (!m || *m < 1) throw ParseError(number, "expected 'm <count>'");
      x.universe_size = static_cast<int>(*m);
      header = true;
    } else if (w[0] == "s") {
      if (!header) throw ParseError(number, "set before 'm' header");
      if (w.size() != 4) throw ParseError(number, "expected 's <a> <b> <c>'");
      std::array<int, 3> s{};
      for (int i = 0; i < 3; ++i) {
        const auto v = to_int(w[i + 1]);
        if (!v || *v < 1 || *v > x.universe_size) {
          throw ParseError(number, "element out of range 1.." + std::to_string(x.universe_size));
        }
        s[i] = static_cast<int>(*v - 1);
      }
      x.sets.push_back(s);
    } else {
      throw ParseError(number, "expected 'm' or 's' line");
    }
  }
  if (!header) throw ParseError(0, "missing 'm <count>' header");
  return x;
}

InstanceDocument document_from(const ReducedInstance& reduced) {
  InstanceDocument doc{reduced.candidate_names, reduced.party_names, reduced.instance, {}};
  doc.comments.push_back("reduction " + std::string(reduction_name(reduced.provenance.kind)));
  return doc;
}

std::string serialize_provenance(const ReducedInstance& reduced) {
  using nlohmann::ordered_json;
  const Provenance& prov = reduced.provenance;
  ordered_json j;
  j["reduction"] = reduction_name(prov.kind);
  j["k"] = reduced.instance.k;
  j["destination"] = reduced.party_names.at(prov.destination);
  j["solution_items_move"] = prov.solution_items_move;
  ordered_json items = ordered_json::array();
  for (std::size_t i = 0; i < prov.item_party.size(); ++i) {
    items.push_back(ordered_json{{"item", i + 1}, {"party", reduced.party_names.at(prov.item_party[i])}});
  }
  j["items"] = std::move(items);
  ordered_json notes = ordered_json::object();
  for (const auto& [label, value] : prov.notes) notes[label] = value + 1;
  j["notes"] = std::move(notes);
  return j.dump(2) + "\n";
}

InstanceDocument generate_random(const GenerateOptions& o) {
  if (o.candidates < 1 || o.parties < 1 || o.min_size < 1 || o.max_size < o.min_size) {
    throw std::invalid_argument("generator bounds must be positive with min_size <= max_size");
  }
  const Rule rule = parse_rule(o.rule, o.candidates);
  std::mt19937_64 rng(o.seed);
  const auto span = static_cast<std::uint64_t>(o.max_size - o.min_size + 1);

  for (int attempt = 1; attempt <= o.max_attempts; ++attempt) {
    std::vector<Party> parties;
    for (int q = 0; q < o.parties; ++q) {
      std::vector<CandidateId> order(o.candidates);
      for (int i = 0; i < o.candidates; ++i) order[i] = i;
      for (int i = o.candidates - 1; i > 0; --i) {
        std::swap(order[i], order[draw(rng, static_cast<std::uint64_t>(i) + 1)]);
      }
      const Count size = o.min_size + static_cast<Count>(draw(rng, span));
      parties.push_back({Preference(std::move(order)), size});
    }
    PartyElection pe(o.candidates, std::move(parties));
    const auto w = winners(materialize(pe), rule);
    if (w.empty() || (o.model == WinnerModel::Unique && w.size() != 1)) continue;

    std::vector<std::string> candidate_names, party_names;
    for (int c = 1; c <= o.candidates; ++c) candidate_names.push_back("c" + std::to_string(c));
    for (int q = 1; q <= o.parties; ++q) party_names.push_back("P" + std::to_string(q));
    return InstanceDocument{std::move(candidate_names), std::move(party_names),
                            ProblemInstance{std::move(pe), w.front(), o.k, rule, o.model, o.mode, o.direction},
                            {"generated seed=" + std::to_string(o.seed) + " attempt=" + std::to_string(attempt)}};
  }
  throw std::runtime_error("no instance with a winner after " + std::to_string(o.max_attempts) + " attempts");
}

}  // namespace partycred

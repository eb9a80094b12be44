#pragma once

// Text formats: instance documents, graph and X3C sources, JSON results,
// plus the seeded random instance generator.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partycred/party.hpp"
#include "partycred/reductions.hpp"

namespace partycred {

/// Malformed input; `line` is 1-based, 0 when the problem is document-wide.
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct InstanceDocument {
  std::vector<std::string> candidate_names;
  std::vector<std::string> party_names;
  ProblemInstance instance;
  /// Emitted as leading `#` lines; not part of equality of instances.
  std::vector<std::string> comments;
};

/// Grammar (one construct per line, `#` starts a comment):
///   candidates: <name> ...
///   rule: plurality|veto|approval:<r>|borda|scoring:<v1>,...|condorcet|maximin|copeland:<p>/<q>
///   model: unique|cowinner        (default unique)
///   dest: one|multi               (default one)
///   direction: min|max            (default min)
///   k: <int>                      (default 0)
///   distinguished: <name>
///   party <name> <size>: <c1> > <c2> > ...
InstanceDocument parse_instance(std::string_view text);
std::string serialize_instance(const InstanceDocument& doc);

/// Rule text as accepted after `rule:`, for m candidates.
Rule parse_rule(std::string_view text, int m);
/// `p/q` or a plain integer; decimals are rejected.
Rational parse_rational(std::string_view text);

std::string_view direction_name(Direction d);
std::string_view model_name(WinnerModel m);
std::string_view dest_mode_name(DestinationMode m);

/// Deterministic JSON: direction, rule, model, dest_mode, value, answer,
/// witness, solver and, when given, wall_time_ms.
std::string serialize_result(const InstanceDocument& doc, const SolveResult& result,
                             std::optional<double> wall_time_ms = std::nullopt);

/// `n <count>` header, `e u v` per edge, optional `t <bound>`; 1-based vertices.
GraphInstance parse_graph(std::string_view text);
/// `m <count>` header, `s a b c` per set; 1-based elements.
X3CInstance parse_x3c(std::string_view text);

InstanceDocument document_from(const ReducedInstance& reduced);
/// Sidecar describing which party stands for which vertex or set.
std::string serialize_provenance(const ReducedInstance& reduced);

struct GenerateOptions {
  std::uint64_t seed = 1;
  int candidates = 3;
  int parties = 3;
  Count min_size = 1;
  Count max_size = 3;
  std::string rule = "plurality";
  Direction direction = Direction::Min;
  WinnerModel model = WinnerModel::Unique;
  DestinationMode mode = DestinationMode::One;
  Count k = 1;
  int max_attempts = 1000;
};

/// Uniform random party preferences and sizes; retries until some candidate
/// wins under the chosen model and makes it the distinguished one. Throws
/// std::runtime_error when `max_attempts` draws all fail.
InstanceDocument generate_random(const GenerateOptions& options);

}  // namespace partycred

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "partycred/io.hpp"
#include "partycred/poly_solvers.hpp"
#include "partycred/solve.hpp"

using namespace partycred;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kBudget = 2;
constexpr int kMismatch = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string describe(const SolveResult& r) {
  switch (r.status) {
    case SolveStatus::Solved: return std::to_string(r.value);
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

void print_table(const InstanceDocument& doc, const SolveResult& r) {
  const ProblemInstance& in = doc.instance;
  std::fprintf(stderr, "%-10s %s\n", "rule", rule_name(in.rule).c_str());
  std::fprintf(stderr, "%-10s %s %s %s\n", "problem", std::string(direction_name(in.direction)).c_str(),
               std::string(model_name(in.model)).c_str(), std::string(dest_mode_name(in.mode)).c_str());
  std::fprintf(stderr, "%-10s %s (k=%lld, answer=%s)\n", "value", describe(r).c_str(),
               static_cast<long long>(in.k), answer(in, r) ? "yes" : "no");
  std::fprintf(stderr, "%-10s %s, %llu nodes\n", "solver", r.solver.c_str(),
               static_cast<unsigned long long>(r.nodes));
  if (r.witness) {
    for (const Move& mv : r.witness->canonical().moves) {
      std::fprintf(stderr, "  %lld: %s -> %s\n", static_cast<long long>(mv.count), doc.party_names[mv.from].c_str(),
                   doc.party_names[mv.to].c_str());
    }
  }
}

Direction parse_direction(const std::string& s) {
  if (s == "min") return Direction::Min;
  if (s == "max") return Direction::Max;
  throw ValidationError("direction must be min or max");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Switching-voter problems in party-based elections"};
  app.require_subcommand(1);

  std::string file;
  std::string solver_name = "auto";
  std::uint64_t budget = SearchOptions{}.node_budget;
  bool json = false, timing = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a MIN or MAX instance");
  solve_cmd->add_option("file", file, "Instance document")->required();
  solve_cmd->add_option("--solver", solver_name, "auto|poly|search|oracle")
      ->check(CLI::IsMember({"auto", "poly", "search", "oracle"}));
  solve_cmd->add_option("--budget", budget, "Exact-search node budget");
  solve_cmd->add_flag("--json", json, "Print the result as JSON on stdout");
  solve_cmd->add_flag("--timing", timing, "Include wall_time_ms in the JSON");

  std::string kind_name, source, out_path, alpha_text = "1/2";
  int bound_override = -1;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build an instance from a graph or X3C source");
  reduce_cmd->add_option("kind", kind_name, "Reduction")->required();
  reduce_cmd->add_option("source", source, "Graph or X3C file")->required();
  reduce_cmd->add_option("--alpha", alpha_text, "Copeland alpha as p/q");
  reduce_cmd->add_option("--t", bound_override, "Graph bound t (overrides the file)");
  reduce_cmd->add_option("-o,--output", out_path, "Output instance path")->required();

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the routed solver against enumeration");
  verify_cmd->add_option("file", verify_file, "Instance document")->required();

  GenerateOptions gen;
  std::string sizes = "1..3", direction = "min", model = "unique", dest = "one", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--candidates", gen.candidates)->required();
  gen_cmd->add_option("--parties", gen.parties)->required();
  gen_cmd->add_option("--sizes", sizes, "A..B");
  gen_cmd->add_option("--rule", gen.rule)->required();
  gen_cmd->add_option("--direction", direction)->check(CLI::IsMember({"min", "max"}));
  gen_cmd->add_option("--model", model)->check(CLI::IsMember({"unique", "cowinner"}));
  gen_cmd->add_option("--dest", dest)->check(CLI::IsMember({"one", "multi"}));
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("-o,--output", gen_out, "Output path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      const InstanceDocument doc = parse_instance(read_file(file));
      SearchOptions options;
      options.node_budget = budget;
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = solve(doc.instance, *parse_solver_choice(solver_name), options);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      print_table(doc, r);
      if (json) std::cout << serialize_result(doc, r, timing ? std::optional<double>(ms) : std::nullopt);
      return r.status == SolveStatus::BudgetExhausted ? kBudget : kOk;
    }

    if (*reduce_cmd) {
      const auto kind = parse_reduction_kind(kind_name);
      if (!kind) throw ValidationError("unknown reduction '" + kind_name + "'");
      const std::string text = read_file(source);
      const Rational alpha = parse_rational(alpha_text);
      const auto graph = [&] {
        GraphInstance g = parse_graph(text);
        if (bound_override >= 0) g.bound = bound_override;
        return g;
      };
      ReducedInstance reduced = [&] {
        switch (*kind) {
          case ReductionKind::VcCopelandMin: return reduce_vc_to_copeland_min(graph(), alpha);
          case ReductionKind::X3cMaximinMin: return reduce_x3c_to_maximin_min(parse_x3c(text));
          case ReductionKind::X3cBordaMax: return reduce_x3c_to_borda_max(parse_x3c(text));
          case ReductionKind::X3cCondorcetMax: return reduce_x3c_to_condorcet_max(parse_x3c(text));
          case ReductionKind::IsMaximinMax: return reduce_is_to_maximin_max(graph());
          case ReductionKind::IsCopelandMax: return reduce_is_to_copeland_max(graph(), alpha);
        }
        throw ValidationError("unknown reduction");
      }();
      write_file(out_path, serialize_instance(document_from(reduced)));
      write_file(out_path + ".provenance.json", serialize_provenance(reduced));
      std::fprintf(stderr, "%s: %d candidates, %d parties, %lld voters, k=%lld\n", kind_name.c_str(),
                   reduced.instance.election.num_candidates(), reduced.instance.election.num_parties(),
                   static_cast<long long>(reduced.instance.election.total_voters()),
                   static_cast<long long>(reduced.instance.k));
      return kOk;
    }

    if (*verify_cmd) {
      const InstanceDocument doc = parse_instance(read_file(verify_file));
      const bool poly = has_poly_solver(doc.instance);
      const SolveResult fast = poly ? solve_poly(doc.instance) : exact_search(doc.instance);
      if (fast.status == SolveStatus::BudgetExhausted) {
        std::fprintf(stderr, "exact search exhausted its budget\n");
        return kBudget;
      }
      SolveResult slow;
      try {
        SearchOptions options;
        options.voter_cap = std::numeric_limits<Count>::max();
        slow = oracle(doc.instance, options);
      } catch (const CapExceeded& e) {
        std::fprintf(stderr, "oracle refused: %s\n", e.what());
        return kBudget;
      }
      const bool same = fast.status == slow.status && (!fast.solved() || fast.value == slow.value);
      const bool witness_ok = !fast.solved() || static_cast<bool>(certifies(doc.instance, fast));
      std::fprintf(stderr, "%-14s %s\n%-14s %s\n%-14s %s\n", fast.solver.c_str(), describe(fast).c_str(), "oracle",
                   describe(slow).c_str(), "agreement", same && witness_ok ? "yes" : "NO");
      return same && witness_ok ? kOk : kMismatch;
    }

    if (*gen_cmd) {
      const auto dots = sizes.find("..");
      if (dots == std::string::npos) throw ValidationError("--sizes must look like A..B");
      gen.min_size = std::stoll(sizes.substr(0, dots));
      gen.max_size = std::stoll(sizes.substr(dots + 2));
      gen.direction = parse_direction(direction);
      gen.model = model == "unique" ? WinnerModel::Unique : WinnerModel::CoWinner;
      gen.mode = dest == "one" ? DestinationMode::One : DestinationMode::Multiple;
      const std::string text = serialize_instance(generate_random(gen));
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        write_file(gen_out, text);
      }
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalid;
  }
  return kOk;
}

#include "partycred/solve.hpp"

#include "partycred/poly_solvers.hpp"

namespace partycred {

std::optional<SolverChoice> parse_solver_choice(std::string_view name) {
  if (name == "auto") return SolverChoice::Auto;
  if (name == "poly") return SolverChoice::Poly;
  if (name == "search") return SolverChoice::Search;
  if (name == "oracle") return SolverChoice::Oracle;
  return std::nullopt;
}

SolveResult solve(const ProblemInstance& instance, SolverChoice choice, const SearchOptions& options) {
  switch (choice) {
    case SolverChoice::Poly: return solve_poly(instance);
    case SolverChoice::Search: return exact_search(instance, options);
    case SolverChoice::Oracle: return oracle(instance, options);
    case SolverChoice::Auto: break;
  }
  return has_poly_solver(instance) ? solve_poly(instance) : exact_search(instance, options);
}

}  // namespace partycred

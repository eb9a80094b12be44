#pragma once

// Solver routing: the polynomial algorithm where one exists, exact search
// otherwise, or forced enumeration.

#include <optional>
#include <string_view>

#include "partycred/party.hpp"
#include "partycred/search.hpp"

namespace partycred {

enum class SolverChoice { Auto, Poly, Search, Oracle };

std::optional<SolverChoice> parse_solver_choice(std::string_view name);

/// Auto picks the polynomial solver when has_poly_solver() holds, else exact
/// search. Poly throws std::invalid_argument when no such solver exists.
SolveResult solve(const ProblemInstance& instance, SolverChoice choice = SolverChoice::Auto,
                  const SearchOptions& options = {});

}  // namespace partycred

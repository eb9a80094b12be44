#pragma once

// Exact solvers valid for every rule, direction and destination mode.
//
// The oracles enumerate every switch plan literally and evaluate each one from
// scratch; they are the ground truth for tests. The exact searches return the
// same values with branch-and-bound pruning and incremental evaluation, and
// report BudgetExhausted instead of running unbounded.

#include <cstdint>
#include <stdexcept>

#include "partycred/party.hpp"

namespace partycred {

struct SearchOptions {
  /// Oracle refuses instances with more voters than this.
  Count voter_cap = 16;
  /// Exact search gives up after visiting this many nodes.
  std::uint64_t node_budget = 200'000'000;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SolveResult oracle_min(const ProblemInstance& instance, const SearchOptions& options = {});
SolveResult oracle_max(const ProblemInstance& instance, const SearchOptions& options = {});
SolveResult oracle(const ProblemInstance& instance, const SearchOptions& options = {});

SolveResult exact_search_min(const ProblemInstance& instance, const SearchOptions& options = {});
SolveResult exact_search_max(const ProblemInstance& instance, const SearchOptions& options = {});
SolveResult exact_search(const ProblemInstance& instance, const SearchOptions& options = {});

}  // namespace partycred

#pragma once

// Polynomial-time exact solvers for the one-destination cases that admit them:
// MIN under any positional scoring rule, MIN under Condorcet, and MAX under
// Plurality, Veto and r-Approval with small r.

#include "partycred/party.hpp"

namespace partycred {

/// Largest r accepted by max_r_approval (Veto is accepted for every m).
inline constexpr int kMaxApprovalR = 4;

/// Greedy MIN for scoring rules. For every rival p' and destination D, voters
/// are taken from sources in decreasing order of per-voter gap reduction.
/// Runs in O(m * L log L). Throws ValidationError when preconditions fail.
SolveResult min_scoring(const ProblemInstance& instance);

/// MIN under Condorcet: ceil(margin(p,p')/2) voters preferring p to p' moved
/// into any party preferring p' to p.
SolveResult min_condorcet(const ProblemInstance& instance);

/// MAX under Plurality, Veto and r-Approval (r <= kMaxApprovalR).
///
/// Tries only destinations approving p. With such a destination D, every
/// other voter may move except a smallest set K of p-approving voters that,
/// for each candidate c approved by D, contains a voter disapproving c; the
/// value is n - |D| - |K|. Under the co-winner model K is empty.
/// Exact for the unique-winner model. Under co-winner a destination that does
/// not approve p can leave p tied and beat this value, so it is only a lower
/// bound there and has_poly_solver() routes those instances elsewhere.
SolveResult max_r_approval(const ProblemInstance& instance);

/// True when the instance is one of the shapes handled above.
bool has_poly_solver(const ProblemInstance& instance);

/// Dispatches to the matching polynomial solver. Throws std::invalid_argument
/// when has_poly_solver() is false.
SolveResult solve_poly(const ProblemInstance& instance);

}  // namespace partycred

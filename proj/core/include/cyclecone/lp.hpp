#pragma once

// Exact rational LP feasibility by two-phase-style simplex (phase I only),
// using Bland's rule so degenerate pivots never cycle.

#include <cstddef>
#include <vector>

#include "cyclecone/rational.hpp"

namespace cyclecone {

enum class Relation { less_equal, greater_equal, equal };

/// coefficients . x  (relation)  rhs
struct LinearConstraint {
  std::vector<ExactRational> coefficients;
  Relation relation = Relation::equal;
  ExactRational rhs;
};

struct LinearSystem {
  std::size_t variables = 0;
  /// Per-variable sign constraint; empty means every variable is free.
  std::vector<bool> nonnegative;
  std::vector<LinearConstraint> constraints;
};

struct LpResult {
  bool feasible = false;
  /// A point satisfying every constraint, when feasible.
  std::vector<ExactRational> witness;
};

/// Throws std::invalid_argument if a constraint length or the sign vector
/// does not match `variables`.
LpResult lp_feasible(const LinearSystem& system);

/// True iff `point` satisfies every constraint exactly.
bool satisfies(const LinearSystem& system, const std::vector<ExactRational>& point);

}  // namespace cyclecone

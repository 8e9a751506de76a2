#pragma once

// Exact feasibility and minimization over bounded integer variables with
// linear constraints. Depth-first search with interval propagation;
// variable counts here are small by construction, so exactness beats
// sophistication. Strict relations and rational right-hand sides are
// handled by clearing denominators in integer arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agenda_control/core.hpp"

namespace agenda_control {

enum class Rel { lt, le, eq, ge, gt };

struct IlpVariable {
  std::string name;
  long long lo = 0;  // >= 0 by contract
  long long hi = 0;
};

struct IlpConstraint {
  std::vector<std::pair<int, long long>> terms;  // (variable index, coefficient)
  Rel rel = Rel::le;
  long long rhs_num = 0;
  long long rhs_den = 1;  // > 0
};

struct IlpObjective {
  std::vector<std::pair<int, long long>> terms;
  bool minimize = true;
};

struct IntegerProgram {
  std::vector<IlpVariable> vars;
  std::vector<IlpConstraint> cons;
  std::optional<IlpObjective> objective;

  int add_variable(const std::string& name, long long lo, long long hi);
  void add_constraint(std::vector<std::pair<int, long long>> terms, Rel rel, long long rhs_num,
                      long long rhs_den = 1);
};

struct IlpBudget {
  std::size_t max_nodes = 50'000'000;
  std::size_t max_variables = 4096;
};

using IlpAssignment = std::vector<long long>;

// Any satisfying assignment, or nullopt if the program is infeasible.
// Deterministic: variables in declaration order, values ascending.
std::optional<IlpAssignment> solve_feasibility(const IntegerProgram& prog,
                                               const IlpBudget& budget = {});

// A minimizing (or maximizing) assignment with its objective value.
std::optional<std::pair<IlpAssignment, long long>> solve_minimize(const IntegerProgram& prog,
                                                                  const IlpBudget& budget = {});

// Independent constraint check, usable as an oracle against the solver.
bool satisfies(const IntegerProgram& prog, const IlpAssignment& assignment);

}  // namespace agenda_control

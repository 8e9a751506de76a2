#include "agenda_control/ilp.hpp"

#include <algorithm>
#include <limits>

namespace agenda_control {

int IntegerProgram::add_variable(const std::string& name, long long lo, long long hi) {
  if (lo < 0 || hi < lo) throw input_error("ilp variable bounds must satisfy 0 <= lo <= hi");
  vars.push_back({name, lo, hi});
  return static_cast<int>(vars.size()) - 1;
}

void IntegerProgram::add_constraint(std::vector<std::pair<int, long long>> terms, Rel rel,
                                    long long rhs_num, long long rhs_den) {
  if (rhs_den <= 0) throw input_error("ilp constraint denominator must be positive");
  for (auto& [v, c] : terms) {
    if (v < 0 || v >= static_cast<int>(vars.size()))
      throw input_error("ilp constraint names an undeclared variable");
    (void)c;
  }
  cons.push_back({std::move(terms), rel, rhs_num, rhs_den});
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Constraint normalized to lo <= sum(coef * x) <= hi with integer bounds.
struct NormCon {
  std::vector<long long> coef;  // dense over variables
  long long lo = -kInf;
  long long hi = kInf;
};

struct Search {
  const IntegerProgram& prog;
  const IlpBudget& budget;
  std::vector<NormCon> cons;
  // suffix_min[c][i] / suffix_max[c][i]: extreme contribution of variables i..n-1.
  std::vector<std::vector<long long>> suffix_min, suffix_max;
  std::vector<long long> cur;          // running sums per constraint
  std::vector<long long> obj_coef;     // dense objective (minimization sense)
  std::vector<long long> obj_suffix_min;
  IlpAssignment assignment;
  std::size_t nodes = 0;

  std::optional<IlpAssignment> best;
  long long best_value = kInf;
  bool optimizing = false;

  explicit Search(const IntegerProgram& p, const IlpBudget& b) : prog(p), budget(b) {
    const int n = static_cast<int>(p.vars.size());
    if (static_cast<std::size_t>(n) > b.max_variables)
      throw resource_error("integer program exceeds the variable budget");
    for (const IlpConstraint& c : p.cons) {
      NormCon nc;
      nc.coef.assign(n, 0);
      for (auto [v, k] : c.terms) nc.coef[v] += k * c.rhs_den;
      switch (c.rel) {
        case Rel::lt: nc.hi = c.rhs_num - 1; break;
        case Rel::le: nc.hi = c.rhs_num; break;
        case Rel::eq: nc.lo = nc.hi = c.rhs_num; break;
        case Rel::ge: nc.lo = c.rhs_num; break;
        case Rel::gt: nc.lo = c.rhs_num + 1; break;
      }
      cons.push_back(std::move(nc));
    }
    suffix_min.resize(cons.size());
    suffix_max.resize(cons.size());
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
      suffix_min[ci].assign(n + 1, 0);
      suffix_max[ci].assign(n + 1, 0);
      for (int i = n - 1; i >= 0; --i) {
        const long long k = cons[ci].coef[i];
        const long long amin = k >= 0 ? k * p.vars[i].lo : k * p.vars[i].hi;
        const long long amax = k >= 0 ? k * p.vars[i].hi : k * p.vars[i].lo;
        suffix_min[ci][i] = suffix_min[ci][i + 1] + amin;
        suffix_max[ci][i] = suffix_max[ci][i + 1] + amax;
      }
    }
    cur.assign(cons.size(), 0);
    obj_coef.assign(n, 0);
    if (p.objective) {
      optimizing = true;
      for (auto [v, k] : p.objective->terms) obj_coef[v] += p.objective->minimize ? k : -k;
    }
    obj_suffix_min.assign(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      const long long k = obj_coef[i];
      obj_suffix_min[i] =
          obj_suffix_min[i + 1] + (k >= 0 ? k * p.vars[i].lo : k * p.vars[i].hi);
    }
    assignment.assign(n, 0);
  }

  bool prune(int i) const {
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
      if (cur[ci] + suffix_max[ci][i] < cons[ci].lo) return true;
      if (cur[ci] + suffix_min[ci][i] > cons[ci].hi) return true;
    }
    return false;
  }

  long long running_objective(int i) const {
    long long v = 0;
    for (int j = 0; j < i; ++j) v += obj_coef[j] * assignment[j];
    return v;
  }

  // Returns true when a feasibility search can stop.
  bool dfs(int i, long long obj_so_far) {
    if (++nodes > budget.max_nodes)
      throw resource_error("integer program search exceeded the node budget");
    if (prune(i)) return false;
    const int n = static_cast<int>(prog.vars.size());
    if (optimizing && obj_so_far + obj_suffix_min[i] >= best_value) return false;
    if (i == n) {
      if (optimizing) {
        if (obj_so_far < best_value) {
          best_value = obj_so_far;
          best = assignment;
        }
        return false;
      }
      best = assignment;
      return true;
    }
    for (long long v = prog.vars[i].lo; v <= prog.vars[i].hi; ++v) {
      assignment[i] = v;
      for (std::size_t ci = 0; ci < cons.size(); ++ci) cur[ci] += cons[ci].coef[i] * v;
      const bool done = dfs(i + 1, obj_so_far + obj_coef[i] * v);
      for (std::size_t ci = 0; ci < cons.size(); ++ci) cur[ci] -= cons[ci].coef[i] * v;
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<IlpAssignment> solve_feasibility(const IntegerProgram& prog, const IlpBudget& budget) {
  IntegerProgram copy = prog;
  copy.objective.reset();
  Search s(copy, budget);
  s.dfs(0, 0);
  return s.best;
}

std::optional<std::pair<IlpAssignment, long long>> solve_minimize(const IntegerProgram& prog,
                                                                  const IlpBudget& budget) {
  if (!prog.objective) throw input_error("solve_minimize requires an objective");
  Search s(prog, budget);
  s.dfs(0, 0);
  if (!s.best) return std::nullopt;
  long long value = 0;
  for (auto [v, k] : prog.objective->terms) value += k * (*s.best)[v];
  return std::make_pair(*s.best, value);
}

bool satisfies(const IntegerProgram& prog, const IlpAssignment& assignment) {
  if (assignment.size() != prog.vars.size()) return false;
  for (std::size_t i = 0; i < prog.vars.size(); ++i) {
    if (assignment[i] < prog.vars[i].lo || assignment[i] > prog.vars[i].hi) return false;
  }
  for (const IlpConstraint& c : prog.cons) {
    long long lhs = 0;
    for (auto [v, k] : c.terms) lhs += k * assignment[v] * c.rhs_den;
    const long long rhs = c.rhs_num;
    switch (c.rel) {
      case Rel::lt:
        if (!(lhs < rhs)) return false;
        break;
      case Rel::le:
        if (!(lhs <= rhs)) return false;
        break;
      case Rel::eq:
        if (!(lhs == rhs)) return false;
        break;
      case Rel::ge:
        if (!(lhs >= rhs)) return false;
        break;
      case Rel::gt:
        if (!(lhs > rhs)) return false;
        break;
    }
  }
  return true;
}

}  // namespace agenda_control

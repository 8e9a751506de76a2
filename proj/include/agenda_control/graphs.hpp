#pragma once

// Exact desk-scale solvers for the auxiliary graph problems used as
// reduction sources and verification oracles. Branch-and-bound with a
// configurable node budget; intended scale is |V| <= 16.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "agenda_control/core.hpp"

namespace agenda_control {

struct Graph {
  std::vector<std::string> vertices;                      // sorted, unique
  std::set<std::pair<std::string, std::string>> edges;    // normalized (a < b)

  Graph() = default;
  Graph(std::vector<std::string> vs, std::vector<std::pair<std::string, std::string>> es);
  bool adjacent(const std::string& a, const std::string& b) const;
  int degree(const std::string& v) const;
};

struct BipartiteGraph {
  std::vector<std::string> red;   // sorted, unique
  std::vector<std::string> blue;  // sorted, unique
  std::set<std::pair<std::string, std::string>> edges;  // (red, blue)

  BipartiteGraph() = default;
  BipartiteGraph(std::vector<std::string> r, std::vector<std::string> b,
                 std::vector<std::pair<std::string, std::string>> es);
  bool adjacent(const std::string& r, const std::string& b) const;
  std::vector<std::string> red_neighbors(const std::string& b) const;
  std::vector<std::string> blue_neighbors(const std::string& r) const;
  int red_degree(const std::string& r) const;
};

enum class GraphProblem { rbds, clique, biclique, perfect_code };

std::string graph_problem_name(GraphProblem p);
GraphProblem graph_problem_from_name(const std::string& name);

struct GraphInstance {
  GraphProblem kind = GraphProblem::rbds;
  std::variant<Graph, BipartiteGraph> graph;
  int kappa = 0;

  const Graph& general() const;
  const BipartiteGraph& bipartite() const;
  void validate() const;  // kind must match graph shape; kappa >= 0
};

struct GraphBudget {
  std::size_t max_nodes = 20'000'000;
};

// Blue subset of size exactly kappa dominating all reds, or nullopt.
// Internally a minimum set cover, padded with unused blues when the
// minimum is smaller than kappa.
std::optional<std::vector<std::string>> solve_rbds(const BipartiteGraph& g, int kappa,
                                                   const GraphBudget& budget = {});

// Size of a minimum blue dominating set, or nullopt if some red vertex
// cannot be dominated at all.
std::optional<int> min_rbds_cover(const BipartiteGraph& g, std::vector<std::string>* witness,
                                  const GraphBudget& budget = {});

// Equivalent instance in which every red vertex has the maximum red
// degree, obtained by attaching fresh degree-1 blue leaves. Returns
// nullopt when the instance is unsatisfiable outright (a red vertex with
// no neighbor can never be dominated).
std::optional<BipartiteGraph> normalize_rbds(const BipartiteGraph& g);

std::optional<std::vector<std::string>> solve_clique(const Graph& g, int kappa,
                                                     const GraphBudget& budget = {});

std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> solve_biclique(
    const BipartiteGraph& g, int kappa, const GraphBudget& budget = {});

std::optional<std::vector<std::string>> solve_perfect_code(const Graph& g, int kappa,
                                                           const GraphBudget& budget = {});

// Witness validators (direct re-checks against the problem definitions).
bool is_rbds_witness(const BipartiteGraph& g, int kappa, const std::vector<std::string>& blues);
bool is_clique_witness(const Graph& g, int kappa, const std::vector<std::string>& vs);
bool is_biclique_witness(const BipartiteGraph& g, int kappa, const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys);
bool is_perfect_code_witness(const Graph& g, int kappa, const std::vector<std::string>& code);

// Decision answer for any instance kind.
bool graph_instance_yes(const GraphInstance& inst, const GraphBudget& budget = {});

}  // namespace agenda_control

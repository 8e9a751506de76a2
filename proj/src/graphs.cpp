#include "agenda_control/graphs.hpp"

#include <algorithm>
#include <map>

namespace agenda_control {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

Graph::Graph(std::vector<std::string> vs, std::vector<std::pair<std::string, std::string>> es)
    : vertices(sorted_unique(std::move(vs))) {
  std::set<std::string> known(vertices.begin(), vertices.end());
  for (auto& [a, b] : es) {
    if (a == b) throw input_error("graph has a self-loop at " + a);
    if (!known.count(a) || !known.count(b))
      throw input_error("graph edge references an undeclared vertex");
    edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
}

bool Graph::adjacent(const std::string& a, const std::string& b) const {
  return edges.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
}

int Graph::degree(const std::string& v) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v || b == v) ++d;
  }
  return d;
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> r, std::vector<std::string> b,
                               std::vector<std::pair<std::string, std::string>> es)
    : red(sorted_unique(std::move(r))), blue(sorted_unique(std::move(b))) {
  std::set<std::string> rs(red.begin(), red.end()), bs(blue.begin(), blue.end());
  for (const std::string& x : red) {
    if (bs.count(x)) throw input_error("vertex in both parts of a bipartition: " + x);
  }
  for (auto& [x, y] : es) {
    if (!rs.count(x) || !bs.count(y))
      throw input_error("bipartite edge must join a red vertex to a blue vertex");
    edges.emplace(x, y);
  }
}

bool BipartiteGraph::adjacent(const std::string& r, const std::string& b) const {
  return edges.count({r, b}) > 0;
}

std::vector<std::string> BipartiteGraph::red_neighbors(const std::string& b) const {
  std::vector<std::string> out;
  for (const std::string& r : red) {
    if (adjacent(r, b)) out.push_back(r);
  }
  return out;
}

std::vector<std::string> BipartiteGraph::blue_neighbors(const std::string& r) const {
  std::vector<std::string> out;
  for (const std::string& b : blue) {
    if (adjacent(r, b)) out.push_back(b);
  }
  return out;
}

int BipartiteGraph::red_degree(const std::string& r) const {
  return static_cast<int>(blue_neighbors(r).size());
}

std::string graph_problem_name(GraphProblem p) {
  switch (p) {
    case GraphProblem::rbds: return "rbds";
    case GraphProblem::clique: return "clique";
    case GraphProblem::biclique: return "biclique";
    case GraphProblem::perfect_code: return "perfect-code";
  }
  throw internal_error("unreachable graph problem kind");
}

GraphProblem graph_problem_from_name(const std::string& name) {
  if (name == "rbds") return GraphProblem::rbds;
  if (name == "clique") return GraphProblem::clique;
  if (name == "biclique") return GraphProblem::biclique;
  if (name == "perfect-code") return GraphProblem::perfect_code;
  throw input_error("unknown graph problem: " + name);
}

const Graph& GraphInstance::general() const {
  if (const Graph* g = std::get_if<Graph>(&graph)) return *g;
  throw input_error("graph instance kind requires a general graph");
}

const BipartiteGraph& GraphInstance::bipartite() const {
  if (const BipartiteGraph* g = std::get_if<BipartiteGraph>(&graph)) return *g;
  throw input_error("graph instance kind requires a bipartite graph");
}

void GraphInstance::validate() const {
  if (kappa < 0) throw input_error("kappa must be nonnegative");
  if (kind == GraphProblem::rbds || kind == GraphProblem::biclique) {
    (void)bipartite();
  } else {
    (void)general();
  }
}

namespace {

struct NodeCounter {
  std::size_t nodes = 0;
  std::size_t limit;
  explicit NodeCounter(std::size_t l) : limit(l) {}
  void tick() {
    if (++nodes > limit) throw resource_error("graph solver exceeded its node budget");
  }
};

// Minimum blue cover: classic set-cover branch and bound on the red vertex
// with the fewest remaining dominators.
struct RbdsSearch {
  const std::vector<std::vector<int>>& dominators;  // per red: blue indices
  NodeCounter& counter;
  std::vector<char> covered;          // per red
  std::vector<char> chosen;           // per blue
  std::vector<std::vector<int>> covers;  // per blue: red indices
  int chosen_count = 0;
  int best = -1;
  std::vector<int> best_set, current;

  RbdsSearch(const std::vector<std::vector<int>>& doms, const std::vector<std::vector<int>>& cov,
             NodeCounter& c)
      : dominators(doms), counter(c), covers(cov) {
    covered.assign(doms.size(), 0);
    chosen.assign(cov.size(), 0);
  }

  void run() {
    counter.tick();
    if (best != -1 && chosen_count >= best) return;
    int pick = -1, options = -1;
    for (int r = 0; r < static_cast<int>(dominators.size()); ++r) {
      if (covered[r]) continue;
      int avail = 0;
      for (int b : dominators[r]) {
        if (!chosen[b]) ++avail;
      }
      // chosen dominators would have covered r already
      if (pick == -1 || avail < options) {
        pick = r;
        options = avail;
      }
    }
    if (pick == -1) {
      best = chosen_count;
      best_set = current;
      return;
    }
    if (options == 0) return;
    for (int b : dominators[pick]) {
      if (chosen[b]) continue;
      chosen[b] = 1;
      ++chosen_count;
      current.push_back(b);
      std::vector<int> newly;
      for (int r : covers[b]) {
        if (!covered[r]) {
          covered[r] = 1;
          newly.push_back(r);
        }
      }
      run();
      for (int r : newly) covered[r] = 0;
      current.pop_back();
      --chosen_count;
      chosen[b] = 0;
    }
  }
};

}  // namespace

std::optional<int> min_rbds_cover(const BipartiteGraph& g, std::vector<std::string>* witness,
                                  const GraphBudget& budget) {
  const int nr = static_cast<int>(g.red.size());
  const int nb = static_cast<int>(g.blue.size());
  std::vector<std::vector<int>> dominators(nr), covers(nb);
  for (int r = 0; r < nr; ++r) {
    for (int b = 0; b < nb; ++b) {
      if (g.adjacent(g.red[r], g.blue[b])) {
        dominators[r].push_back(b);
        covers[b].push_back(r);
      }
    }
    if (dominators[r].empty()) return std::nullopt;
  }
  NodeCounter counter(budget.max_nodes);
  RbdsSearch search(dominators, covers, counter);
  search.run();
  if (search.best == -1) return std::nullopt;  // only possible when nr > 0 unreachable
  if (witness) {
    witness->clear();
    for (int b : search.best_set) witness->push_back(g.blue[b]);
    std::sort(witness->begin(), witness->end());
  }
  return search.best;
}

std::optional<std::vector<std::string>> solve_rbds(const BipartiteGraph& g, int kappa,
                                                   const GraphBudget& budget) {
  if (kappa < 0 || kappa > static_cast<int>(g.blue.size())) return std::nullopt;
  std::vector<std::string> witness;
  auto best = min_rbds_cover(g, &witness, budget);
  if (!best || *best > kappa) return std::nullopt;
  // Pad with the lexicographically smallest unused blues up to exactly kappa.
  std::set<std::string> used(witness.begin(), witness.end());
  for (const std::string& b : g.blue) {
    if (static_cast<int>(witness.size()) == kappa) break;
    if (!used.count(b)) {
      witness.push_back(b);
      used.insert(b);
    }
  }
  std::sort(witness.begin(), witness.end());
  return witness;
}

std::optional<BipartiteGraph> normalize_rbds(const BipartiteGraph& g) {
  int max_degree = 0;
  for (const std::string& r : g.red) max_degree = std::max(max_degree, g.red_degree(r));
  // A red vertex of degree zero can never be dominated, so such an
  // instance is unsatisfiable outright; attaching leaves to it would
  // change the answer rather than preserve it.
  for (const std::string& r : g.red) {
    if (g.red_degree(r) == 0) return std::nullopt;
  }

  std::vector<std::string> blue = g.blue;
  std::vector<std::pair<std::string, std::string>> edges(g.edges.begin(), g.edges.end());
  std::set<std::string> taken(g.blue.begin(), g.blue.end());
  taken.insert(g.red.begin(), g.red.end());
  int fresh = 0;
  for (const std::string& r : g.red) {
    int need = max_degree - g.red_degree(r);
    while (need-- > 0) {
      std::string leaf;
      do {
        leaf = "leaf" + std::to_string(fresh++);
      } while (taken.count(leaf));
      taken.insert(leaf);
      blue.push_back(leaf);
      edges.emplace_back(r, leaf);
    }
  }
  return BipartiteGraph(g.red, std::move(blue), std::move(edges));
}

std::optional<std::vector<std::string>> solve_clique(const Graph& g, int kappa,
                                                     const GraphBudget& budget) {
  if (kappa < 0) return std::nullopt;
  if (kappa == 0) return std::vector<std::string>{};
  const int n = static_cast<int>(g.vertices.size());
  if (kappa > n) return std::nullopt;
  NodeCounter counter(budget.max_nodes);
  std::vector<int> current;
  std::vector<std::string> result;
  // Extend increasing-index partial cliques.
  auto extend = [&](auto&& self, int start) -> bool {
    counter.tick();
    if (static_cast<int>(current.size()) == kappa) {
      for (int i : current) result.push_back(g.vertices[i]);
      return true;
    }
    const int missing = kappa - static_cast<int>(current.size());
    for (int v = start; v + missing <= n; ++v) {
      bool ok = true;
      for (int u : current) {
        if (!g.adjacent(g.vertices[u], g.vertices[v])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(v);
      if (self(self, v + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  if (extend(extend, 0)) return result;
  return std::nullopt;
}

std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> solve_biclique(
    const BipartiteGraph& g, int kappa, const GraphBudget& budget) {
  if (kappa < 0) return std::nullopt;
  if (kappa == 0) return std::make_pair(std::vector<std::string>{}, std::vector<std::string>{});
  const int nx = static_cast<int>(g.red.size());
  if (kappa > nx || kappa > static_cast<int>(g.blue.size())) return std::nullopt;
  NodeCounter counter(budget.max_nodes);
  std::vector<int> current;
  std::vector<std::vector<char>> common_stack;  // blue membership per depth
  std::vector<char> all_blue(g.blue.size(), 1);
  common_stack.push_back(all_blue);
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> out;

  auto extend = [&](auto&& self, int start) -> bool {
    counter.tick();
    const std::vector<char>& common = common_stack.back();
    int avail = 0;
    for (char c : common) avail += c;
    if (avail < kappa) return false;
    if (static_cast<int>(current.size()) == kappa) {
      std::vector<std::string> xs, ys;
      for (int i : current) xs.push_back(g.red[i]);
      for (std::size_t b = 0; b < g.blue.size() && static_cast<int>(ys.size()) < kappa; ++b) {
        if (common[b]) ys.push_back(g.blue[b]);
      }
      out = std::make_pair(xs, ys);
      return true;
    }
    const int missing = kappa - static_cast<int>(current.size());
    for (int v = start; v + missing <= nx; ++v) {
      std::vector<char> next = common;
      int count = 0;
      for (std::size_t b = 0; b < g.blue.size(); ++b) {
        if (next[b] && !g.adjacent(g.red[v], g.blue[b])) next[b] = 0;
        count += next[b];
      }
      if (count < kappa) continue;
      current.push_back(v);
      common_stack.push_back(std::move(next));
      if (self(self, v + 1)) return true;
      common_stack.pop_back();
      current.pop_back();
    }
    return false;
  };
  extend(extend, 0);
  return out;
}

std::optional<std::vector<std::string>> solve_perfect_code(const Graph& g, int kappa,
                                                           const GraphBudget& budget) {
  if (kappa < 0) return std::nullopt;
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) return kappa == 0 ? std::make_optional(std::vector<std::string>{}) : std::nullopt;
  std::vector<std::vector<int>> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v].push_back(v);
    for (int u = 0; u < n; ++u) {
      if (u != v && g.adjacent(g.vertices[v], g.vertices[u])) closed[v].push_back(u);
    }
    std::sort(closed[v].begin(), closed[v].end());
  }
  NodeCounter counter(budget.max_nodes);
  std::vector<char> dominated(n, 0);
  std::vector<int> code;
  std::vector<std::string> result;
  // Exact cover of V by closed neighborhoods, exactly kappa of them.
  auto extend = [&](auto&& self) -> bool {
    counter.tick();
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!dominated[v]) {
        u = v;
        break;
      }
    }
    if (u == -1) {
      if (static_cast<int>(code.size()) != kappa) return false;
      for (int v : code) result.push_back(g.vertices[v]);
      std::sort(result.begin(), result.end());
      return true;
    }
    if (static_cast<int>(code.size()) >= kappa) return false;
    for (int w : closed[u]) {
      bool clash = false;
      for (int x : closed[w]) {
        if (dominated[x]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (int x : closed[w]) dominated[x] = 1;
      code.push_back(w);
      if (self(self)) return true;
      code.pop_back();
      for (int x : closed[w]) dominated[x] = 0;
    }
    return false;
  };
  if (extend(extend)) return result;
  return std::nullopt;
}

bool is_rbds_witness(const BipartiteGraph& g, int kappa, const std::vector<std::string>& blues) {
  if (static_cast<int>(blues.size()) != kappa) return false;
  std::set<std::string> chosen(blues.begin(), blues.end());
  if (static_cast<int>(chosen.size()) != kappa) return false;
  std::set<std::string> valid(g.blue.begin(), g.blue.end());
  for (const std::string& b : chosen) {
    if (!valid.count(b)) return false;
  }
  for (const std::string& r : g.red) {
    bool dominated = false;
    for (const std::string& b : chosen) {
      if (g.adjacent(r, b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

bool is_clique_witness(const Graph& g, int kappa, const std::vector<std::string>& vs) {
  if (static_cast<int>(vs.size()) != kappa) return false;
  std::set<std::string> chosen(vs.begin(), vs.end());
  if (static_cast<int>(chosen.size()) != kappa) return false;
  std::set<std::string> valid(g.vertices.begin(), g.vertices.end());
  for (const std::string& v : chosen) {
    if (!valid.count(v)) return false;
  }
  for (const std::string& a : chosen) {
    for (const std::string& b : chosen) {
      if (a < b && !g.adjacent(a, b)) return false;
    }
  }
  return true;
}

bool is_biclique_witness(const BipartiteGraph& g, int kappa, const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys) {
  if (static_cast<int>(xs.size()) != kappa || static_cast<int>(ys.size()) != kappa) return false;
  std::set<std::string> sx(xs.begin(), xs.end()), sy(ys.begin(), ys.end());
  if (static_cast<int>(sx.size()) != kappa || static_cast<int>(sy.size()) != kappa) return false;
  for (const std::string& x : sx) {
    for (const std::string& y : sy) {
      if (!g.adjacent(x, y)) return false;
    }
  }
  return true;
}

bool is_perfect_code_witness(const Graph& g, int kappa, const std::vector<std::string>& code) {
  if (static_cast<int>(code.size()) != kappa) return false;
  std::set<std::string> chosen(code.begin(), code.end());
  if (static_cast<int>(chosen.size()) != kappa) return false;
  for (const std::string& v : g.vertices) {
    int dominators = 0;
    for (const std::string& w : chosen) {
      if (v == w || g.adjacent(v, w)) ++dominators;
    }
    if (dominators != 1) return false;
  }
  return true;
}

bool graph_instance_yes(const GraphInstance& inst, const GraphBudget& budget) {
  inst.validate();
  switch (inst.kind) {
    case GraphProblem::rbds:
      return solve_rbds(inst.bipartite(), inst.kappa, budget).has_value();
    case GraphProblem::clique:
      return solve_clique(inst.general(), inst.kappa, budget).has_value();
    case GraphProblem::biclique:
      return solve_biclique(inst.bipartite(), inst.kappa, budget).has_value();
    case GraphProblem::perfect_code:
      return solve_perfect_code(inst.general(), inst.kappa, budget).has_value();
  }
  throw internal_error("unreachable graph problem kind");
}

}  // namespace agenda_control

#include "agenda_control/reductions.hpp"

#include <algorithm>
#include <map>

#include "agenda_control/random_gen.hpp"

namespace agenda_control {

namespace {

struct TagInfo {
  ReductionTag tag;
  const char* name;
  GraphProblem source;
  ControlProblem target;
  // 0: successive; 1: absolute h; 2: relative h
  int procedure_family;
};

constexpr TagInfo kTags[kReductionTagCount] = {
    {ReductionTag::ccav_amd, "ccav_amd", GraphProblem::rbds, ControlProblem::CCAV, 1},
    {ReductionTag::ccdv_amd, "ccdv_amd", GraphProblem::rbds, ControlProblem::CCDV, 1},
    {ReductionTag::ccdv_amd_dual, "ccdv_amd_dual", GraphProblem::rbds, ControlProblem::CCDV, 1},
    {ReductionTag::dcav_amd, "dcav_amd", GraphProblem::perfect_code, ControlProblem::DCAV, 1},
    {ReductionTag::dcdv_amd, "dcdv_amd", GraphProblem::rbds, ControlProblem::DCDV, 1},
    {ReductionTag::dcdv_amd_dual, "dcdv_amd_dual", GraphProblem::rbds, ControlProblem::DCDV, 1},
    {ReductionTag::ccav_mh, "ccav_mh", GraphProblem::perfect_code, ControlProblem::CCAV, 2},
    {ReductionTag::ccdv_mh, "ccdv_mh", GraphProblem::rbds, ControlProblem::CCDV, 2},
    {ReductionTag::ccdv_mh_dual, "ccdv_mh_dual", GraphProblem::rbds, ControlProblem::CCDV, 2},
    {ReductionTag::dcav_mh, "dcav_mh", GraphProblem::perfect_code, ControlProblem::DCAV, 2},
    {ReductionTag::dcdv_mh, "dcdv_mh", GraphProblem::rbds, ControlProblem::DCDV, 2},
    {ReductionTag::dcdv_mh_dual, "dcdv_mh_dual", GraphProblem::rbds, ControlProblem::DCDV, 2},
    {ReductionTag::ccac_mh, "ccac_mh", GraphProblem::rbds, ControlProblem::CCAC, 2},
    {ReductionTag::ccav_succ, "ccav_succ", GraphProblem::perfect_code, ControlProblem::CCAV, 0},
    {ReductionTag::ccdv_succ, "ccdv_succ", GraphProblem::rbds, ControlProblem::CCDV, 0},
    {ReductionTag::ccdv_succ_dual, "ccdv_succ_dual", GraphProblem::rbds, ControlProblem::CCDV, 0},
    {ReductionTag::ccac_succ, "ccac_succ", GraphProblem::rbds, ControlProblem::CCAC, 0},
    {ReductionTag::ccdc_succ_clique, "ccdc_succ_clique", GraphProblem::clique,
     ControlProblem::CCDC, 0},
    {ReductionTag::ccdc_succ_biclique, "ccdc_succ_biclique", GraphProblem::biclique,
     ControlProblem::CCDC, 0},
    {ReductionTag::dcac_succ, "dcac_succ", GraphProblem::rbds, ControlProblem::DCAC, 0},
    {ReductionTag::dcdc_succ_clique, "dcdc_succ_clique", GraphProblem::clique,
     ControlProblem::DCDC, 0},
    {ReductionTag::dcdc_succ_biclique, "dcdc_succ_biclique", GraphProblem::biclique,
     ControlProblem::DCDC, 0},
};

const TagInfo& info_of(ReductionTag tag) {
  for (const TagInfo& t : kTags) {
    if (t.tag == tag) return t;
  }
  throw internal_error("unknown reduction tag");
}

[[noreturn]] void assumption_violated(const std::string& tag, const std::string& what) {
  throw input_error("assumption", tag + ": source violates assumption: " + what);
}

using Seq = std::vector<Candidate>;

Seq lex(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

Seq select(const Seq& base, const std::set<std::string>& keep) {
  Seq out;
  for (const auto& x : base) {
    if (keep.count(x)) out.push_back(x);
  }
  return out;
}

Seq minus(const Seq& base, const std::set<std::string>& drop) {
  Seq out;
  for (const auto& x : base) {
    if (!drop.count(x)) out.push_back(x);
  }
  return out;
}

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Seq reversed(Seq xs) {
  std::reverse(xs.begin(), xs.end());
  return xs;
}

// Names of the ordered block lifted from `base`: base, base_1, ...
Seq block_of(const Candidate& base, int h) {
  Seq out = {base};
  for (int i = 1; i < h; ++i) out.push_back(base + "_" + std::to_string(i));
  return out;
}

// Replaces each occurrence of a blocked candidate with its block.
Seq expand_blocks(const Seq& seq, const std::set<Candidate>& blocked, int h) {
  if (h <= 1 || blocked.empty()) return seq;
  Seq out;
  for (const Candidate& c : seq) {
    if (blocked.count(c)) {
      const Seq b = block_of(c, h);
      out.insert(out.end(), b.begin(), b.end());
    } else {
      out.push_back(c);
    }
  }
  return out;
}

struct Build {
  ControlProblem problem;
  ProcedureSpec procedure;
  std::vector<Candidate> registered;
  std::vector<Candidate> unregistered;
  Candidate distinguished;
  Seq agenda;
  std::vector<std::pair<Seq, int>> registered_votes;    // (order, multiplicity)
  std::vector<std::pair<Seq, int>> unregistered_votes;  // (order, multiplicity)
  Budgets budgets;

  ControlInstance finish() const {
    ControlInstance inst;
    inst.problem = problem;
    inst.goal = is_constructive(problem) ? Goal::constructive : Goal::destructive;
    inst.procedure = procedure;
    inst.registered = registered;
    std::sort(inst.registered.begin(), inst.registered.end());
    inst.unregistered = unregistered;
    std::sort(inst.unregistered.begin(), inst.unregistered.end());
    inst.distinguished = distinguished;
    inst.agenda = Agenda(agenda);
    inst.budgets = budgets;
    for (const auto& [order, mult] : registered_votes) {
      if (mult > 0) inst.registered_votes.push_back({order, mult});
    }
    for (const auto& [order, mult] : unregistered_votes) {
      if (mult > 0) inst.unregistered_votes.push_back({order, mult});
    }
    inst.validate();
    return inst;
  }
};

void check_reserved(const std::string& tag, const std::vector<std::string>& vertices,
                    const std::vector<Candidate>& reserved) {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  for (const Candidate& r : reserved) {
    if (vs.count(r))
      throw input_error(tag + ": source vertex collides with reserved candidate '" + r + "'");
  }
}

// RBDS preprocessing shared by the vote-control entries: checks the
// stated assumptions and normalizes red degrees to the maximum.
struct RbdsNormalized {
  BipartiteGraph graph;
  int ell = 0;  // uniform red degree after normalization
};

RbdsNormalized rbds_prepare(const std::string& tag, const BipartiteGraph& g, int kappa,
                            bool need_no_isolated, bool need_kappa_gt_1,
                            bool need_ell_plus_kappa) {
  if (kappa > static_cast<int>(g.blue.size()))
    assumption_violated(tag, "kappa must not exceed the number of blue vertices");
  if (need_kappa_gt_1 && kappa <= 1) assumption_violated(tag, "kappa must exceed one");
  if (need_no_isolated) {
    for (const auto& r : g.red) {
      if (g.red_degree(r) == 0) assumption_violated(tag, "isolated red vertex " + r);
    }
    for (const auto& b : g.blue) {
      if (g.red_neighbors(b).empty()) assumption_violated(tag, "isolated blue vertex " + b);
    }
  }
  auto normalized = normalize_rbds(g);
  if (!normalized) assumption_violated(tag, "a red vertex cannot be dominated at all");
  RbdsNormalized out{*normalized, 0};
  for (const auto& r : out.graph.red) out.ell = std::max(out.ell, out.graph.red_degree(r));
  if (need_ell_plus_kappa && out.ell + kappa > static_cast<int>(out.graph.blue.size()))
    assumption_violated(tag, "uniform degree plus kappa must fit into the blue side");
  return out;
}

// Agenda freedom: seed 0 keeps the default placement; otherwise the free
// positions are permuted deterministically from the seed.
Seq seeded_tail_agenda(const Candidate& head, Seq middle_default, std::uint64_t seed) {
  if (seed == 0) return concat({{head}, middle_default});
  Rng rng(seed);
  Seq middle = middle_default;
  rng.shuffle(middle);
  return concat({{head}, middle});
}

Seq seeded_block_tail_agenda(const Candidate& head, Seq middle_default, const Candidate& p,
                             const Seq& tail, std::uint64_t seed) {
  if (seed == 0) return concat({{head}, middle_default, {p}, tail});
  Rng rng(seed);
  Seq middle = middle_default;
  rng.shuffle(middle);
  const std::size_t at = rng.below(middle.size() + 1);
  middle.insert(middle.begin() + static_cast<std::ptrdiff_t>(at), p);
  return concat({{head}, middle, tail});
}

}  // namespace

std::string reduction_tag_name(ReductionTag tag) { return info_of(tag).name; }

ReductionTag reduction_tag_from_name(const std::string& name) {
  for (const TagInfo& t : kTags) {
    if (name == t.name) return t.tag;
  }
  throw input_error("unknown reduction tag: " + name);
}

std::vector<ReductionTag> all_reduction_tags() {
  std::vector<ReductionTag> tags;
  for (const TagInfo& t : kTags) tags.push_back(t.tag);
  return tags;
}

GraphProblem reduction_source_problem(ReductionTag tag) { return info_of(tag).source; }

ControlProblem reduction_target_problem(ReductionTag tag) { return info_of(tag).target; }

ProcedureSpec reduction_target_procedure(const ReductionKind& kind) {
  const TagInfo& t = info_of(kind.tag);
  if (t.procedure_family == 0) {
    if (kind.h != 1) throw input_error("successive-procedure reductions take no step parameter");
    return ProcedureSpec::successive();
  }
  if (kind.h < 1) throw input_error("reduction step parameter must be >= 1");
  return t.procedure_family == 1 ? ProcedureSpec::amendment_abs(kind.h)
                                 : ProcedureSpec::amendment_rel(kind.h);
}

Election mcgarvey_election(const OrientedGraph& graph) {
  if (graph.weights) throw input_error("the construction expects an unweighted oriented graph");
  if (graph.vertices.empty()) throw input_error("empty vertex set");
  std::vector<Vote> votes;
  for (const auto& [a, b] : graph.arcs) {
    Seq rest;
    for (const auto& v : graph.vertices) {
      if (v != a && v != b) rest.push_back(v);
    }
    votes.push_back({concat({{a, b}, rest}), 1});
    votes.push_back({concat({reversed(rest), {a, b}}), 1});
  }
  return Election(graph.vertices, std::move(votes));
}

namespace {

// --- amendment-family vote-control entries -----------------------------

Build build_ccav_amd(const BipartiteGraph& g0, int kappa, int h) {
  check_reserved("ccav_amd", g0.red, {"p", "q"});
  check_reserved("ccav_amd", g0.blue, {});
  if (kappa > static_cast<int>(g0.blue.size()))
    assumption_violated("ccav_amd", "kappa must not exceed the number of blue vertices");
  const Seq R = lex(g0.red);
  std::set<Candidate> blocked(R.begin(), R.end());
  auto X = [&](const Seq& s) { return expand_blocks(s, blocked, h); };

  Build b;
  b.problem = ControlProblem::CCAV;
  b.procedure = ProcedureSpec::amendment_abs(h);
  b.distinguished = "p";
  b.registered = X(concat({{"q"}, R, {"p"}}));
  b.agenda = X(concat({{"q"}, R, {"p"}}));
  b.registered_votes = {
      {X(concat({{"q"}, R, {"p"}})), kappa + 1},
      {X(concat({{"p"}, R, {"q"}})), 1},
      {X(concat({R, {"p", "q"}})), 1},
  };
  for (const auto& blue : lex(g0.blue)) {
    const std::set<Candidate> nb(g0.red_neighbors(blue).begin(), g0.red_neighbors(blue).end());
    b.unregistered_votes.push_back({X(concat({minus(R, nb), {"p", "q"}, select(R, nb)})), 1});
  }
  b.budgets.av = kappa;
  return b;
}

Build build_ccdv_amd(const BipartiteGraph& g0, int kappa, int h) {
  check_reserved("ccdv_amd", g0.red, {"p", "q"});
  const auto norm = rbds_prepare("ccdv_amd", g0, kappa, true, true, true);
  const BipartiteGraph& g = norm.graph;
  const int ell = norm.ell;
  const int nb = static_cast<int>(g.blue.size());
  const Seq R = lex(g.red);
  std::set<Candidate> blocked(R.begin(), R.end());
  auto X = [&](const Seq& s) { return expand_blocks(s, blocked, h); };

  Build b;
  b.problem = ControlProblem::CCDV;
  b.procedure = ProcedureSpec::amendment_abs(h);
  b.distinguished = "p";
  b.registered = X(concat({{"q"}, R, {"p"}}));
  b.agenda = X(concat({{"q"}, R, {"p"}}));
  b.registered_votes = {
      {X(concat({R, {"p", "q"}})), nb - kappa + 1 - ell},
      {X(concat({{"p", "q"}, R})), ell},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({X(concat({select(R, nbset), {"q"}, minus(R, nbset), {"p"}})), 1});
  }
  b.budgets.dv = kappa;
  return b;
}

Build build_ccdv_amd_dual(const BipartiteGraph& g, int kappa, int h) {
  check_reserved("ccdv_amd_dual", g.red, {"p", "q", "q2"});
  if (kappa < 1) assumption_violated("ccdv_amd_dual", "kappa must be at least one");
  if (kappa > static_cast<int>(g.blue.size()))
    assumption_violated("ccdv_amd_dual", "kappa must not exceed the number of blue vertices");
  const Seq R = lex(g.red);
  std::set<Candidate> blocked(R.begin(), R.end());
  blocked.insert("q2");
  auto X = [&](const Seq& s) { return expand_blocks(s, blocked, h); };

  Build b;
  b.problem = ControlProblem::CCDV;
  b.procedure = ProcedureSpec::amendment_abs(h);
  b.distinguished = "p";
  b.registered = X(concat({{"q", "q2"}, R, {"p"}}));
  b.agenda = X(concat({{"q", "q2"}, R, {"p"}}));
  b.registered_votes = {
      {X(concat({{"p", "q"}, R, {"q2"}})), kappa},
      {X(concat({R, {"p", "q", "q2"}})), 1},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back(
        {X(concat({{"q2"}, minus(R, nbset), {"q"}, select(R, nbset), {"p"}})), 1});
  }
  b.budgets.dv = static_cast<int>(g.blue.size()) - kappa;
  return b;
}

// Candidate pairs for the perfect-code entries: per vertex u, an
// x-candidate and a y-candidate.
struct XySets {
  Seq xs, ys;  // aligned with lex(vertices)
  std::map<std::string, std::set<Candidate>> nx, ny;  // closed neighborhoods
};

XySets xy_sets(const Graph& g) {
  XySets out;
  const Seq vs = lex(g.vertices);
  for (const auto& u : vs) {
    out.xs.push_back("x_" + u);
    out.ys.push_back("y_" + u);
  }
  for (const auto& u : vs) {
    std::set<Candidate> nx, ny;
    nx.insert("x_" + u);
    ny.insert("y_" + u);
    for (const auto& w : vs) {
      if (g.adjacent(u, w)) {
        nx.insert("x_" + w);
        ny.insert("y_" + w);
      }
    }
    out.nx[u] = std::move(nx);
    out.ny[u] = std::move(ny);
  }
  return out;
}

Build build_dcav_amd(const Graph& g, int kappa, int h) {
  if (kappa < 2) assumption_violated("dcav_amd", "kappa must be at least two");
  const XySets xy = xy_sets(g);
  std::set<Candidate> blocked(xy.xs.begin(), xy.xs.end());
  blocked.insert(xy.ys.begin(), xy.ys.end());
  auto X = [&](const Seq& s) { return expand_blocks(s, blocked, h); };

  Build b;
  b.problem = ControlProblem::DCAV;
  b.procedure = ProcedureSpec::amendment_abs(h);
  b.distinguished = "p";
  b.registered = X(concat({{"q"}, xy.xs, xy.ys, {"p"}}));
  b.agenda = X(concat({{"q"}, xy.xs, xy.ys, {"p"}}));
  b.registered_votes = {
      {X(concat({{"p", "q"}, xy.xs, xy.ys})), 1},
      {X(concat({{"q", "p"}, xy.xs, xy.ys})), kappa + 2},
      {X(concat({{"p"}, xy.xs, {"q"}, xy.ys})), kappa - 2},
      {X(concat({{"p"}, xy.xs, xy.ys, {"q"}})), kappa + 2},
  };
  for (const auto& u : lex(g.vertices)) {
    const auto& nx = xy.nx.at(u);
    const auto& ny = xy.ny.at(u);
    b.unregistered_votes.push_back(
        {X(concat({select(xy.xs, nx), minus(xy.ys, ny), {"q", "p"}, minus(xy.xs, nx),
                   select(xy.ys, ny)})),
         1});
  }
  b.budgets.av = kappa;
  return b;
}

Build build_dcdv_amd(const BipartiteGraph& g0, int kappa, int h) {
  check_reserved("dcdv_amd", g0.red, {"p", "q"});
  const auto norm = rbds_prepare("dcdv_amd", g0, kappa, true, true, true);
  const BipartiteGraph& g = norm.graph;
  const int ell = norm.ell;
  const int nb = static_cast<int>(g.blue.size());
  const Seq R = lex(g.red);
  std::set<Candidate> blocked(R.begin(), R.end());
  auto X = [&](const Seq& s) { return expand_blocks(s, blocked, h); };

  Build b;
  b.problem = ControlProblem::DCDV;
  b.procedure = ProcedureSpec::amendment_abs(h);
  b.distinguished = "p";
  b.registered = X(concat({{"q"}, R, {"p"}}));
  b.agenda = X(concat({{"q"}, R, {"p"}}));
  b.registered_votes = {
      {X(concat({R, {"q", "p"}})), nb + 1 - ell - kappa},
      {X(concat({{"q", "p"}, R})), ell},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({X(concat({{"p"}, select(R, nbset), {"q"}, minus(R, nbset)})), 1});
  }
  b.budgets.dv = kappa;
  return b;
}

Build build_dcdv_amd_dual(const BipartiteGraph& g, int kappa, int h) {
  check_reserved("dcdv_amd_dual", g.red, {"p", "q"});
  if (kappa < 1 || kappa >= static_cast<int>(g.blue.size()))
    assumption_violated("dcdv_amd_dual", "requires 1 <= kappa < |B|");
  const Seq R = lex(g.red);

  Build b;
  b.problem = ControlProblem::DCDV;
  b.procedure = ProcedureSpec::amendment_abs(h);  // same instance serves every step
  b.distinguished = "p";
  b.registered = concat({{"q"}, R, {"p"}});
  b.agenda = concat({{"q"}, R, {"p"}});
  b.registered_votes = {
      {concat({{"q", "p"}, R}), kappa},
      {concat({R, {"q", "p"}}), 1},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({concat({{"p"}, minus(R, nbset), {"q"}, select(R, nbset)}), 1});
  }
  b.budgets.dv = static_cast<int>(g.blue.size()) - kappa;
  return b;
}

// --- (m-h) family vote-control entries ---------------------------------

Build build_ccav_mh(const Graph& g, int kappa, int h, bool successive) {
  const std::string tag = successive ? "ccav_succ" : "ccav_mh";
  if (kappa < 2) assumption_violated(tag, "kappa must be at least two");
  const XySets xy = xy_sets(g);
  const Seq pblock = block_of("p", h);

  Build b;
  b.problem = ControlProblem::CCAV;
  b.procedure = successive ? ProcedureSpec::successive() : ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({xy.xs, xy.ys, pblock});
  b.agenda = concat({xy.xs, xy.ys, reversed(minus(pblock, {"p"})), {"p"}});
  b.registered_votes = {
      {concat({pblock, xy.xs, xy.ys}), kappa + 2},
      {concat({xy.xs, pblock, xy.ys}), kappa - 2},
      {concat({xy.xs, xy.ys, pblock}), kappa + 2},
  };
  for (const auto& u : lex(g.vertices)) {
    const auto& nx = xy.nx.at(u);
    const auto& ny = xy.ny.at(u);
    b.unregistered_votes.push_back(
        {concat({select(xy.xs, nx), minus(xy.ys, ny), pblock, minus(xy.xs, nx),
                 select(xy.ys, ny)}),
         1});
  }
  b.budgets.av = kappa;
  return b;
}

Build build_ccdv_mh(const BipartiteGraph& g0, int kappa, int h) {
  check_reserved("ccdv_mh", g0.red, {"p", "q"});
  if (kappa < 3) assumption_violated("ccdv_mh", "kappa must be at least three");
  const auto norm = rbds_prepare("ccdv_mh", g0, kappa, false, false, false);
  const BipartiteGraph& g = norm.graph;
  const int ell = norm.ell;
  if (ell < 1) assumption_violated("ccdv_mh", "red vertices must have neighbors");
  const int nb = static_cast<int>(g.blue.size());
  const Seq R = lex(g.red);
  const Seq pblock = block_of("p", h);

  Build b;
  b.problem = ControlProblem::CCDV;
  b.procedure = ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({{"q"}, R, pblock});
  b.agenda = concat({{"q"}, R, reversed(minus(pblock, {"p"})), {"p"}});
  b.registered_votes = {
      {concat({R, pblock, {"q"}}), nb - kappa + 1},
      {concat({{"q"}, pblock, R}), ell},
      {concat({pblock, {"q"}, R}), ell - 1},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({concat({{"q"}, select(R, nbset), pblock, minus(R, nbset)}), 1});
  }
  b.budgets.dv = kappa;
  return b;
}

Build build_ccdv_mh_dual(const BipartiteGraph& g, int kappa, int h, bool successive) {
  const std::string tag = successive ? "ccdv_succ_dual" : "ccdv_mh_dual";
  check_reserved(tag, g.red, {"p", "q"});
  if (kappa < 1 || kappa >= static_cast<int>(g.blue.size()))
    assumption_violated(tag, "requires 1 <= kappa < |B|");
  const Seq R = lex(g.red);
  const Seq pblock = successive ? Seq{"p"} : block_of("p", h);

  Build b;
  b.problem = ControlProblem::CCDV;
  b.procedure = successive ? ProcedureSpec::successive() : ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({{"q"}, R, pblock});
  b.agenda = concat({{"q"}, R, reversed(minus(pblock, {"p"})), {"p"}});
  b.registered_votes = {
      {concat({pblock, {"q"}, R}), kappa - 1},
      {concat({R, pblock, {"q"}}), 1},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({concat({{"q"}, minus(R, nbset), pblock, select(R, nbset)}), 1});
  }
  b.budgets.dv = static_cast<int>(g.blue.size()) - kappa;
  return b;
}

Build build_dcav_mh(const Graph& g, int kappa, int h, std::uint64_t seed) {
  if (kappa < 2) assumption_violated("dcav_mh", "kappa must be at least two");
  const XySets xy = xy_sets(g);
  const Seq pblock = block_of("p", h);
  const Seq tail = minus(pblock, {"p"});

  Build b;
  b.problem = ControlProblem::DCAV;
  b.procedure = ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({{"q"}, xy.xs, xy.ys, pblock});
  b.agenda = seeded_block_tail_agenda("q", concat({xy.xs, xy.ys}), "p", tail, seed);
  b.registered_votes = {
      {concat({pblock, {"q"}, xy.xs, xy.ys}), 1},
      {concat({{"q"}, pblock, xy.xs, xy.ys}), kappa + 2},
      {concat({pblock, xy.xs, {"q"}, xy.ys}), kappa - 2},
      {concat({pblock, xy.xs, xy.ys, {"q"}}), kappa + 2},
  };
  for (const auto& u : lex(g.vertices)) {
    const auto& nx = xy.nx.at(u);
    const auto& ny = xy.ny.at(u);
    b.unregistered_votes.push_back(
        {concat({select(xy.xs, nx), minus(xy.ys, ny), {"q"}, pblock, minus(xy.xs, nx),
                 select(xy.ys, ny)}),
         1});
  }
  b.budgets.av = kappa;
  return b;
}

Build build_dcdv_mh(const BipartiteGraph& g0, int kappa, int h, std::uint64_t seed) {
  check_reserved("dcdv_mh", g0.red, {"p", "q"});
  const auto norm = rbds_prepare("dcdv_mh", g0, kappa, true, true, true);
  const BipartiteGraph& g = norm.graph;
  const int ell = norm.ell;
  const int nb = static_cast<int>(g.blue.size());
  const Seq R = lex(g.red);
  const Seq pblock = block_of("p", h);
  const Seq tail = minus(pblock, {"p"});

  Build b;
  b.problem = ControlProblem::DCDV;
  b.procedure = ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({{"q"}, R, pblock});
  b.agenda = seeded_block_tail_agenda("q", R, "p", tail, seed);
  b.registered_votes = {
      {concat({R, {"q"}, pblock}), nb + 1 - ell - kappa},
      {concat({{"q"}, pblock, R}), ell},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({concat({pblock, select(R, nbset), {"q"}, minus(R, nbset)}), 1});
  }
  b.budgets.dv = kappa;
  return b;
}

Build build_dcdv_mh_dual(const BipartiteGraph& g, int kappa, int h, std::uint64_t seed) {
  check_reserved("dcdv_mh_dual", g.red, {"p", "q"});
  if (kappa < 1 || kappa + 2 > static_cast<int>(g.blue.size()))
    assumption_violated("dcdv_mh_dual", "requires 1 <= kappa <= |B| - 2");
  const Seq R = lex(g.red);

  Build b;
  b.problem = ControlProblem::DCDV;
  b.procedure = ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({{"q"}, R, {"p"}});
  b.agenda = seeded_tail_agenda("q", concat({R, {"p"}}), seed);
  b.registered_votes = {
      {concat({{"q", "p"}, R}), kappa},
      {concat({R, {"q", "p"}}), 1},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back({concat({{"p"}, minus(R, nbset), {"q"}, select(R, nbset)}), 1});
  }
  b.budgets.dv = static_cast<int>(g.blue.size()) - kappa;
  return b;
}

// --- candidate-control entries -----------------------------------------

Build build_ccac_mh(const BipartiteGraph& g, int kappa, int h) {
  check_reserved("ccac_mh", g.red, {"p"});
  check_reserved("ccac_mh", g.blue, {"p"});
  if (kappa > static_cast<int>(g.blue.size()))
    assumption_violated("ccac_mh", "kappa must not exceed the number of blue vertices");
  const Seq R = lex(g.red);
  const Seq B = lex(g.blue);
  const Seq pblock = block_of("p", h);

  // Majority graph of the lifted construction; block members mirror the
  // distinguished candidate's arcs.
  std::vector<std::string> vertices = concat({R, B, pblock});
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const auto& r : R) {
    for (const auto& pc : pblock) arcs.emplace_back(r, pc);
  }
  for (const auto& blue : B) {
    for (const auto& pc : pblock) arcs.emplace_back(pc, blue);
  }
  for (const auto& r : R) {
    for (const auto& blue : B) {
      if (g.adjacent(r, blue)) {
        arcs.emplace_back(blue, r);
      } else {
        arcs.emplace_back(r, blue);
      }
    }
  }
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (std::size_t j = i + 1; j < R.size(); ++j) arcs.emplace_back(R[i], R[j]);
  }
  for (std::size_t i = 0; i < pblock.size(); ++i) {
    for (std::size_t j = i + 1; j < pblock.size(); ++j) arcs.emplace_back(pblock[i], pblock[j]);
  }
  const Election e = mcgarvey_election(OrientedGraph(vertices, arcs));

  Build b;
  b.problem = ControlProblem::CCAC;
  b.procedure = ProcedureSpec::amendment_rel(h);
  b.distinguished = "p";
  b.registered = concat({R, pblock});
  b.unregistered = B;
  b.agenda = concat({R, B, pblock});
  for (const Vote& v : e.votes()) b.registered_votes.push_back({v.order, v.multiplicity});
  b.budgets.ac = kappa;
  return b;
}

Build build_ccdv_succ(const BipartiteGraph& g0, int kappa) {
  check_reserved("ccdv_succ", g0.red, {"p", "q", "p2"});
  if (kappa < 1) assumption_violated("ccdv_succ", "kappa must be at least one");
  const auto norm = rbds_prepare("ccdv_succ", g0, kappa, false, false, false);
  const BipartiteGraph& g = norm.graph;
  const int ell = norm.ell;
  if (ell < 1) assumption_violated("ccdv_succ", "red vertices must have neighbors");
  const int nb = static_cast<int>(g.blue.size());
  const Seq R = lex(g.red);

  Build b;
  b.problem = ControlProblem::CCDV;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = concat({{"q"}, R, {"p2", "p"}});
  b.agenda = concat({{"q"}, R, {"p2", "p"}});
  b.registered_votes = {
      {concat({R, {"p", "p2", "q"}}), nb - kappa},
      {concat({{"q", "p", "p2"}, R}), ell - 1},
      {concat({{"q"}, R, {"p", "p2"}}), 1},
      {concat({{"p2", "p", "q"}, R}), ell},
  };
  for (const auto& blue : lex(g.blue)) {
    const std::set<Candidate> nbset(g.red_neighbors(blue).begin(),
                                    g.red_neighbors(blue).end());
    b.registered_votes.push_back(
        {concat({{"q"}, select(R, nbset), {"p2", "p"}, minus(R, nbset)}), 1});
  }
  b.budgets.dv = kappa;
  return b;
}

Build build_ccac_succ(const BipartiteGraph& g, int kappa, std::uint64_t seed) {
  check_reserved("ccac_succ", g.blue, {"p", "q"});
  if (kappa > static_cast<int>(g.blue.size()))
    assumption_violated("ccac_succ", "kappa must not exceed the number of blue vertices");
  const Seq B = lex(g.blue);

  Build b;
  b.problem = ControlProblem::CCAC;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = {"p", "q"};
  b.unregistered = B;
  b.agenda = seeded_tail_agenda("q", lex(concat({B, {"p"}})), seed);
  b.registered_votes = {
      {concat({{"p"}, B, {"q"}}), 1},
      {concat({{"q", "p"}, B}), static_cast<int>(g.red.size())},
  };
  for (const auto& red : lex(g.red)) {
    const std::set<Candidate> nr(g.blue_neighbors(red).begin(), g.blue_neighbors(red).end());
    b.registered_votes.push_back({concat({select(B, nr), {"q", "p"}, minus(B, nr)}), 1});
  }
  b.budgets.ac = kappa;
  return b;
}

Build build_ccdc_succ_clique(const Graph& g, int kappa, std::uint64_t seed) {
  check_reserved("ccdc_succ_clique", g.vertices, {"p"});
  const int m_edges = static_cast<int>(g.edges.size());
  if (m_edges < kappa * (kappa - 1))
    assumption_violated("ccdc_succ_clique", "edge count must be at least kappa*(kappa-1)");
  const Seq U = lex(g.vertices);

  Build b;
  b.problem = ControlProblem::CCDC;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = concat({{"p"}, U});
  b.agenda = seeded_tail_agenda("p", U, seed);
  b.registered_votes = {{concat({{"p"}, U}), m_edges - kappa * (kappa - 1) + 1}};
  for (const auto& [u, v] : g.edges) {
    b.registered_votes.push_back({concat({{u, v}, {"p"}, minus(U, {u, v})}), 1});
  }
  b.budgets.dc = kappa;
  return b;
}

Build build_ccdc_succ_biclique(const BipartiteGraph& g, int kappa, std::uint64_t seed) {
  check_reserved("ccdc_succ_biclique", g.red, {"p"});
  const int mx = static_cast<int>(g.red.size());
  const int ny = static_cast<int>(g.blue.size());
  if (!(mx > kappa && ny > 2 * kappa))
    assumption_violated("ccdc_succ_biclique", "requires |X| > kappa and |Y| > 2*kappa");
  const Seq X = lex(g.red);

  Build b;
  b.problem = ControlProblem::CCDC;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = concat({{"p"}, X});
  b.agenda = seeded_tail_agenda("p", X, seed);
  b.registered_votes = {{concat({{"p"}, X}), ny - 2 * kappa + 1}};
  for (const auto& y : lex(g.blue)) {
    const std::set<Candidate> nyset(g.red_neighbors(y).begin(), g.red_neighbors(y).end());
    b.registered_votes.push_back({concat({minus(X, nyset), {"p"}, select(X, nyset)}), 1});
  }
  b.budgets.dc = mx - kappa;
  return b;
}

Build build_dcac_succ(const BipartiteGraph& g, int kappa) {
  check_reserved("dcac_succ", g.blue, {"p"});
  if (g.red.empty()) assumption_violated("dcac_succ", "requires at least one red vertex");
  if (kappa > static_cast<int>(g.blue.size()))
    assumption_violated("dcac_succ", "kappa must not exceed the number of blue vertices");
  const Seq B = lex(g.blue);

  Build b;
  b.problem = ControlProblem::DCAC;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = {"p"};
  b.unregistered = B;
  b.agenda = concat({{"p"}, B});
  b.registered_votes = {{concat({{"p"}, B}), static_cast<int>(g.red.size()) - 1}};
  for (const auto& red : lex(g.red)) {
    const std::set<Candidate> nr(g.blue_neighbors(red).begin(), g.blue_neighbors(red).end());
    b.registered_votes.push_back({concat({select(B, nr), {"p"}, minus(B, nr)}), 1});
  }
  b.budgets.ac = kappa;
  return b;
}

Build build_dcdc_succ_clique(const Graph& g, int kappa, std::uint64_t seed) {
  check_reserved("dcdc_succ_clique", g.vertices, {"p", "q"});
  if (kappa < 2) assumption_violated("dcdc_succ_clique", "kappa must be at least two");
  const int m_edges = static_cast<int>(g.edges.size());
  const int t = kappa * (kappa - 1) / 2;
  if (m_edges < t)
    assumption_violated("dcdc_succ_clique", "edge count must be at least kappa*(kappa-1)/2");
  const Seq U = lex(g.vertices);

  Build b;
  b.problem = ControlProblem::DCDC;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = concat({{"q", "p"}, U});
  b.agenda = seeded_tail_agenda("q", lex(concat({U, {"p"}})), seed);
  b.registered_votes = {
      {concat({{"q", "p"}, U}), m_edges - t + 1},
      {concat({{"p"}, U, {"q"}}), t},
  };
  for (const auto& [u, v] : g.edges) {
    b.registered_votes.push_back({concat({{u, v}, {"q", "p"}, minus(U, {u, v})}), 1});
  }
  b.budgets.dc = kappa;
  return b;
}

Build build_dcdc_succ_biclique(const BipartiteGraph& g, int kappa, std::uint64_t seed) {
  check_reserved("dcdc_succ_biclique", g.red, {"p", "q"});
  const int mx = static_cast<int>(g.red.size());
  const int ny = static_cast<int>(g.blue.size());
  if (!(std::min(mx, ny) > kappa && kappa > 1))
    assumption_violated("dcdc_succ_biclique", "requires min(|X|, |Y|) > kappa > 1");
  const Seq X = lex(g.red);

  Build b;
  b.problem = ControlProblem::DCDC;
  b.procedure = ProcedureSpec::successive();
  b.distinguished = "p";
  b.registered = concat({{"q", "p"}, X});
  b.agenda = seeded_tail_agenda("q", lex(concat({X, {"p"}})), seed);
  b.registered_votes = {
      {concat({{"p"}, X, {"q"}}), kappa},
      {concat({{"q", "p"}, X}), ny - kappa + 1},
  };
  for (const auto& y : lex(g.blue)) {
    const std::set<Candidate> nyset(g.red_neighbors(y).begin(), g.red_neighbors(y).end());
    b.registered_votes.push_back({concat({minus(X, nyset), {"q", "p"}, select(X, nyset)}), 1});
  }
  b.budgets.dc = mx - kappa;
  return b;
}

}  // namespace

ControlInstance build_reduction(const ReductionKind& kind, const GraphInstance& source,
                                std::uint64_t seed) {
  source.validate();
  const TagInfo& t = info_of(kind.tag);
  if (source.kind != t.source)
    throw input_error(std::string(t.name) + ": expected a " + graph_problem_name(t.source) +
                      " source, got " + graph_problem_name(source.kind));
  const int h = kind.h;
  if (t.procedure_family == 0 && h != 1)
    throw input_error(std::string(t.name) + ": successive entries take no step parameter");
  if (h < 1) throw input_error("reduction step parameter must be >= 1");
  const int kappa = source.kappa;

  Build b;
  switch (kind.tag) {
    case ReductionTag::ccav_amd: b = build_ccav_amd(source.bipartite(), kappa, h); break;
    case ReductionTag::ccdv_amd: b = build_ccdv_amd(source.bipartite(), kappa, h); break;
    case ReductionTag::ccdv_amd_dual:
      b = build_ccdv_amd_dual(source.bipartite(), kappa, h);
      break;
    case ReductionTag::dcav_amd: b = build_dcav_amd(source.general(), kappa, h); break;
    case ReductionTag::dcdv_amd: b = build_dcdv_amd(source.bipartite(), kappa, h); break;
    case ReductionTag::dcdv_amd_dual:
      b = build_dcdv_amd_dual(source.bipartite(), kappa, h);
      break;
    case ReductionTag::ccav_mh: b = build_ccav_mh(source.general(), kappa, h, false); break;
    case ReductionTag::ccdv_mh: b = build_ccdv_mh(source.bipartite(), kappa, h); break;
    case ReductionTag::ccdv_mh_dual:
      b = build_ccdv_mh_dual(source.bipartite(), kappa, h, false);
      break;
    case ReductionTag::dcav_mh: b = build_dcav_mh(source.general(), kappa, h, seed); break;
    case ReductionTag::dcdv_mh: b = build_dcdv_mh(source.bipartite(), kappa, h, seed); break;
    case ReductionTag::dcdv_mh_dual:
      b = build_dcdv_mh_dual(source.bipartite(), kappa, h, seed);
      break;
    case ReductionTag::ccac_mh: b = build_ccac_mh(source.bipartite(), kappa, h); break;
    case ReductionTag::ccav_succ: b = build_ccav_mh(source.general(), kappa, 1, true); break;
    case ReductionTag::ccdv_succ: b = build_ccdv_succ(source.bipartite(), kappa); break;
    case ReductionTag::ccdv_succ_dual:
      b = build_ccdv_mh_dual(source.bipartite(), kappa, 1, true);
      break;
    case ReductionTag::ccac_succ: b = build_ccac_succ(source.bipartite(), kappa, seed); break;
    case ReductionTag::ccdc_succ_clique:
      b = build_ccdc_succ_clique(source.general(), kappa, seed);
      break;
    case ReductionTag::ccdc_succ_biclique:
      b = build_ccdc_succ_biclique(source.bipartite(), kappa, seed);
      break;
    case ReductionTag::dcac_succ: b = build_dcac_succ(source.bipartite(), kappa); break;
    case ReductionTag::dcdc_succ_clique:
      b = build_dcdc_succ_clique(source.general(), kappa, seed);
      break;
    case ReductionTag::dcdc_succ_biclique:
      b = build_dcdc_succ_biclique(source.bipartite(), kappa, seed);
      break;
  }
  return b.finish();
}

ReductionReport verify_reduction(const ReductionKind& kind, const GraphInstance& source,
                                 std::uint64_t seed) {
  const ControlInstance target = build_reduction(kind, source, seed);

  ReductionReport report;
  report.source_yes = graph_instance_yes(source);

  SolveCaps caps;
  caps.bf_max_candidates = 64;
  caps.bf_max_total_votes = 4096;
  caps.bf_max_budget = 64;
  caps.bf_max_enumeration = 4'000'000;
  const Solution sol = brute_force_solve(target, caps);
  report.target_yes = sol.decision;
  report.agree = report.source_yes == report.target_yes;
  std::string detail = std::string("source=") + (report.source_yes ? "yes" : "no") +
                       " target=" + (report.target_yes ? "yes" : "no");
  if (report.target_yes) {
    detail += " target-witness-size=" + std::to_string(sol.witness.size());
  }
  report.detail = detail;
  return report;
}

}  // namespace agenda_control

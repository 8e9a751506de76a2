#include "agenda_control/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace agenda_control {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& code, const std::string& message) {
  throw input_error(code, "line " + std::to_string(line) + ": " + message);
}

// Tokenized non-empty lines with comments stripped.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : lines_(tokenize(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) throw input_error("syntax", "unexpected end of document");
    return lines_[pos_];
  }
  Line take() {
    Line l = peek();
    ++pos_;
    return l;
  }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void expect_header(Reader& r, const std::string& kind) {
  const Line l = r.take();
  if (l.tokens.size() != 3 || l.tokens[0] != "format" || l.tokens[1] != kind)
    fail(l.number, "syntax", "expected 'format " + kind + " v1'");
  if (l.tokens[2] != "v1") fail(l.number, "version", "unsupported version: " + l.tokens[2]);
}

int parse_count(const Line& l, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    fail(l.number, "bad_count", "expected a nonnegative integer, got '" + text + "'");
  }
}

std::vector<Candidate> parse_ids(const Line& l, std::size_t from) {
  std::vector<Candidate> ids;
  for (std::size_t i = from; i < l.tokens.size(); ++i) {
    if (!valid_candidate_id(l.tokens[i]))
      fail(l.number, "bad_candidate_id", "invalid identifier '" + l.tokens[i] + "'");
    ids.push_back(l.tokens[i]);
  }
  if (ids.empty()) fail(l.number, "syntax", "expected at least one identifier");
  return ids;
}

// `<count>: a>b>c` after the leading keyword tokens.
Vote parse_vote_tail(const Line& l, std::size_t from) {
  if (l.tokens.size() < from + 2) fail(l.number, "syntax", "expected '<count>: <order>'");
  std::string count_tok = l.tokens[from];
  if (count_tok.empty() || count_tok.back() != ':')
    fail(l.number, "syntax", "expected '<count>:' before the vote order");
  count_tok.pop_back();
  Vote v;
  v.multiplicity = parse_count(l, count_tok);
  if (v.multiplicity < 1) fail(l.number, "bad_count", "vote multiplicity must be >= 1");
  std::string joined;
  for (std::size_t i = from + 1; i < l.tokens.size(); ++i) joined += l.tokens[i];
  std::string id;
  for (char ch : joined + ">") {
    if (ch == '>') {
      if (id.empty()) fail(l.number, "syntax", "empty candidate in vote order");
      if (!valid_candidate_id(id)) fail(l.number, "bad_candidate_id", "invalid id '" + id + "'");
      v.order.push_back(id);
      id.clear();
    } else {
      id.push_back(ch);
    }
  }
  return v;
}

std::string vote_order_to_string(const Vote& v) {
  std::string s;
  for (std::size_t i = 0; i < v.order.size(); ++i) {
    if (i) s += ">";
    s += v.order[i];
  }
  return s;
}

std::vector<Vote> canonical_votes(std::vector<Vote> votes) {
  std::map<std::vector<Candidate>, int> grouped;
  for (const Vote& v : votes) grouped[v.order] += v.multiplicity;
  std::vector<Vote> out;
  for (const auto& [order, mult] : grouped) out.push_back({order, mult});
  return out;
}

std::string join_ids(const std::vector<Candidate>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += " ";
    s += ids[i];
  }
  return s;
}

}  // namespace

std::string procedure_to_string(const ProcedureSpec& spec) {
  if (spec.kind == ProcedureKind::successive) return "successive";
  if (spec.h_mode == HMode::absolute) return "amendment h=" + std::to_string(spec.h);
  return "amendment h=m-" + std::to_string(spec.h);
}

ProcedureSpec procedure_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "successive") {
    std::string extra;
    if (in >> extra) throw input_error("syntax: unexpected token after 'successive'");
    return ProcedureSpec::successive();
  }
  if (kind != "amendment") throw input_error("unknown procedure: " + text);
  std::string spec;
  if (!(in >> spec) || spec.rfind("h=", 0) != 0)
    throw input_error("amendment procedure requires 'h=<int>' or 'h=m-<int>'");
  std::string value = spec.substr(2);
  try {
    if (value.rfind("m-", 0) == 0) {
      return ProcedureSpec::amendment_rel(std::stoi(value.substr(2)));
    }
    return ProcedureSpec::amendment_abs(std::stoi(value));
  } catch (const input_error&) {
    throw;
  } catch (...) {
    throw input_error("bad amendment parameter: " + spec);
  }
}

DocumentKind sniff_document_kind(const std::string& text) {
  Reader r(text);
  const Line l = r.peek();
  if (l.tokens.size() >= 2 && l.tokens[0] == "format") {
    if (l.tokens[1] == "election") return DocumentKind::election;
    if (l.tokens[1] == "control-instance") return DocumentKind::control_instance;
    if (l.tokens[1] == "graph") return DocumentKind::graph;
    if (l.tokens[1] == "report") return DocumentKind::report;
  }
  fail(l.number, "syntax", "unrecognized document header");
}

Election parse_election(const std::string& text) {
  Reader r(text);
  expect_header(r, "election");
  Line cand = r.take();
  if (cand.tokens[0] != "candidates") fail(cand.number, "syntax", "expected 'candidates'");
  std::vector<Candidate> universe = parse_ids(cand, 1);
  std::vector<Vote> votes;
  while (!r.done()) {
    Line l = r.take();
    if (l.tokens[0] != "vote") fail(l.number, "unknown_key", "unexpected key '" + l.tokens[0] + "'");
    votes.push_back(parse_vote_tail(l, 1));
  }
  try {
    return Election(std::move(universe), std::move(votes));
  } catch (const input_error& e) {
    throw input_error(e.code(), std::string("election: ") + e.what());
  }
}

std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << "format election v1\n";
  out << "candidates " << join_ids(e.universe()) << "\n";
  for (const Vote& v : e.votes()) {
    out << "vote " << v.multiplicity << ": " << vote_order_to_string(v) << "\n";
  }
  return out.str();
}

ControlInstance parse_control_instance(const std::string& text) {
  Reader r(text);
  expect_header(r, "control-instance");
  ControlInstance inst;

  Line l = r.take();
  if (l.tokens[0] != "problem" || l.tokens.size() != 2)
    fail(l.number, "syntax", "expected 'problem <name>'");
  try {
    inst.problem = control_problem_from_name(l.tokens[1]);
  } catch (const input_error& e) {
    fail(l.number, "syntax", e.what());
  }

  if (inst.problem == ControlProblem::MULTIMODE) {
    l = r.take();
    if (l.tokens[0] != "goal" || l.tokens.size() != 2)
      fail(l.number, "syntax", "MULTIMODE requires 'goal constructive|destructive'");
    if (l.tokens[1] == "constructive") {
      inst.goal = Goal::constructive;
    } else if (l.tokens[1] == "destructive") {
      inst.goal = Goal::destructive;
    } else {
      fail(l.number, "syntax", "goal must be constructive or destructive");
    }
  } else {
    if (!r.done() && r.peek().tokens[0] == "goal")
      fail(r.peek().number, "unknown_key", "goal line is only valid for MULTIMODE");
    inst.goal = is_constructive(inst.problem) ? Goal::constructive : Goal::destructive;
  }

  l = r.take();
  if (l.tokens[0] != "procedure" || l.tokens.size() < 2)
    fail(l.number, "syntax", "expected 'procedure ...'");
  std::string proc;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    if (i > 1) proc += " ";
    proc += l.tokens[i];
  }
  try {
    inst.procedure = procedure_from_string(proc);
  } catch (const input_error& e) {
    fail(l.number, "syntax", e.what());
  }

  l = r.take();
  if (l.tokens[0] != "candidates") fail(l.number, "syntax", "expected 'candidates'");
  inst.registered = parse_ids(l, 1);
  std::sort(inst.registered.begin(), inst.registered.end());

  if (!r.done() && r.peek().tokens[0] == "unregistered-candidates") {
    l = r.take();
    inst.unregistered = parse_ids(l, 1);
    std::sort(inst.unregistered.begin(), inst.unregistered.end());
  }

  l = r.take();
  if (l.tokens[0] != "agenda") fail(l.number, "syntax", "expected 'agenda'");
  try {
    inst.agenda = Agenda(parse_ids(l, 1));
  } catch (const input_error& e) {
    fail(l.number, e.code(), e.what());
  }

  l = r.take();
  if (l.tokens[0] != "distinguished" || l.tokens.size() != 2)
    fail(l.number, "syntax", "expected 'distinguished <id>'");
  inst.distinguished = l.tokens[1];

  l = r.take();
  if (l.tokens[0] != "budgets" || l.tokens.size() != 5)
    fail(l.number, "syntax", "expected 'budgets av=<n> dv=<n> ac=<n> dc=<n>'");
  const char* keys[4] = {"av=", "dv=", "ac=", "dc="};
  int* slots[4] = {&inst.budgets.av, &inst.budgets.dv, &inst.budgets.ac, &inst.budgets.dc};
  for (int i = 0; i < 4; ++i) {
    const std::string& tok = l.tokens[i + 1];
    if (tok.rfind(keys[i], 0) != 0)
      fail(l.number, "syntax", std::string("expected '") + keys[i] + "<n>', got '" + tok + "'");
    *slots[i] = parse_count(l, tok.substr(3));
  }

  while (!r.done()) {
    l = r.take();
    if (l.tokens[0] != "vote" || l.tokens.size() < 3)
      fail(l.number, "unknown_key", "unexpected key '" + l.tokens[0] + "'");
    if (l.tokens[1] == "registered") {
      inst.registered_votes.push_back(parse_vote_tail(l, 2));
    } else if (l.tokens[1] == "unregistered") {
      inst.unregistered_votes.push_back(parse_vote_tail(l, 2));
    } else {
      fail(l.number, "syntax", "vote must be 'registered' or 'unregistered'");
    }
  }

  inst.registered_votes = canonical_votes(std::move(inst.registered_votes));
  inst.unregistered_votes = canonical_votes(std::move(inst.unregistered_votes));
  try {
    inst.validate();
  } catch (const input_error& e) {
    throw input_error(e.code(), std::string("control-instance: ") + e.what());
  }
  return inst;
}

std::string serialize_control_instance(const ControlInstance& inst) {
  std::ostringstream out;
  out << "format control-instance v1\n";
  out << "problem " << control_problem_name(inst.problem) << "\n";
  if (inst.problem == ControlProblem::MULTIMODE) {
    out << "goal " << (inst.goal == Goal::constructive ? "constructive" : "destructive") << "\n";
  }
  out << "procedure " << procedure_to_string(inst.procedure) << "\n";
  std::vector<Candidate> reg = inst.registered;
  std::sort(reg.begin(), reg.end());
  out << "candidates " << join_ids(reg) << "\n";
  if (!inst.unregistered.empty()) {
    std::vector<Candidate> unreg = inst.unregistered;
    std::sort(unreg.begin(), unreg.end());
    out << "unregistered-candidates " << join_ids(unreg) << "\n";
  }
  out << "agenda " << join_ids(inst.agenda.order()) << "\n";
  out << "distinguished " << inst.distinguished << "\n";
  out << "budgets av=" << inst.budgets.av << " dv=" << inst.budgets.dv
      << " ac=" << inst.budgets.ac << " dc=" << inst.budgets.dc << "\n";
  for (const Vote& v : canonical_votes(inst.registered_votes)) {
    out << "vote registered " << v.multiplicity << ": " << vote_order_to_string(v) << "\n";
  }
  for (const Vote& v : canonical_votes(inst.unregistered_votes)) {
    out << "vote unregistered " << v.multiplicity << ": " << vote_order_to_string(v) << "\n";
  }
  return out.str();
}

GraphInstance parse_graph_instance(const std::string& text) {
  Reader r(text);
  expect_header(r, "graph");
  std::vector<std::string> reds, blues, vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<int> kappa;
  std::optional<GraphProblem> problem;
  while (!r.done()) {
    Line l = r.take();
    const std::string& key = l.tokens[0];
    if (key == "red" || key == "blue" || key == "vertex") {
      std::vector<std::string> ids = parse_ids(l, 1);
      auto& target = key == "red" ? reds : key == "blue" ? blues : vertices;
      target.insert(target.end(), ids.begin(), ids.end());
    } else if (key == "edge") {
      if (l.tokens.size() != 3) fail(l.number, "syntax", "expected 'edge <u> <v>'");
      edges.emplace_back(l.tokens[1], l.tokens[2]);
    } else if (key == "kappa") {
      if (l.tokens.size() != 2) fail(l.number, "syntax", "expected 'kappa <n>'");
      kappa = parse_count(l, l.tokens[1]);
    } else if (key == "problem") {
      if (l.tokens.size() != 2) fail(l.number, "syntax", "expected 'problem <name>'");
      try {
        problem = graph_problem_from_name(l.tokens[1]);
      } catch (const input_error& e) {
        fail(l.number, "syntax", e.what());
      }
    } else {
      fail(l.number, "unknown_key", "unexpected key '" + key + "'");
    }
  }
  const bool bip = !reds.empty() || !blues.empty();
  if (bip && !vertices.empty())
    throw input_error("syntax", "graph mixes bipartite (red/blue) and general (vertex) lines");
  GraphInstance inst;
  try {
    if (bip) {
      inst.graph = BipartiteGraph(std::move(reds), std::move(blues), std::move(edges));
      inst.kind = problem.value_or(GraphProblem::rbds);
    } else {
      inst.graph = Graph(std::move(vertices), std::move(edges));
      inst.kind = problem.value_or(GraphProblem::clique);
    }
  } catch (const input_error& e) {
    throw input_error(e.code(), std::string("graph: ") + e.what());
  }
  inst.kappa = kappa.value_or(0);
  inst.validate();
  return inst;
}

std::string serialize_graph_instance(const GraphInstance& g) {
  std::ostringstream out;
  out << "format graph v1\n";
  out << "problem " << graph_problem_name(g.kind) << "\n";
  out << "kappa " << g.kappa << "\n";
  if (const BipartiteGraph* b = std::get_if<BipartiteGraph>(&g.graph)) {
    for (const auto& v : b->red) out << "red " << v << "\n";
    for (const auto& v : b->blue) out << "blue " << v << "\n";
    for (const auto& [x, y] : b->edges) out << "edge " << x << " " << y << "\n";
  } else {
    const Graph& gg = std::get<Graph>(g.graph);
    for (const auto& v : gg.vertices) out << "vertex " << v << "\n";
    for (const auto& [x, y] : gg.edges) out << "edge " << x << " " << y << "\n";
  }
  return out.str();
}

Solution parse_report(const std::string& text) {
  Reader r(text);
  expect_header(r, "report");
  Solution sol;
  bool have_decision = false;
  while (!r.done()) {
    Line l = r.take();
    const std::string& key = l.tokens[0];
    if (key == "decision" && l.tokens.size() == 2) {
      sol.decision = l.tokens[1] == "yes";
      if (!sol.decision && l.tokens[1] != "no") fail(l.number, "syntax", "decision must be yes|no");
      have_decision = true;
    } else if (key == "algorithm") {
      std::string v;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) v += (i > 1 ? " " : "") + l.tokens[i];
      sol.algorithm = v;
    } else if (key == "rationale") {
      std::string v;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) v += (i > 1 ? " " : "") + l.tokens[i];
      sol.rationale = v;
    } else if (key == "minimal" && l.tokens.size() == 2) {
      sol.minimal = l.tokens[1] == "true";
    } else if (key == "delete-candidate" && l.tokens.size() == 2) {
      sol.witness.deleted_candidates.push_back(l.tokens[1]);
    } else if (key == "add-candidate" && l.tokens.size() == 2) {
      sol.witness.added_candidates.push_back(l.tokens[1]);
    } else if (key == "delete-vote") {
      sol.witness.deleted_votes.push_back(parse_vote_tail(l, 1));
    } else if (key == "add-vote") {
      sol.witness.added_votes.push_back(parse_vote_tail(l, 1));
    } else {
      fail(l.number, "unknown_key", "unexpected key '" + key + "'");
    }
  }
  if (!have_decision) throw input_error("syntax", "report lacks a decision line");
  return sol;
}

std::string serialize_report(const Solution& sol) {
  std::ostringstream out;
  out << "format report v1\n";
  out << "decision " << (sol.decision ? "yes" : "no") << "\n";
  if (!sol.algorithm.empty()) out << "algorithm " << sol.algorithm << "\n";
  if (!sol.rationale.empty()) out << "rationale " << sol.rationale << "\n";
  out << "minimal " << (sol.minimal ? "true" : "false") << "\n";
  std::vector<Candidate> del = sol.witness.deleted_candidates;
  std::sort(del.begin(), del.end());
  for (const auto& c : del) out << "delete-candidate " << c << "\n";
  std::vector<Candidate> add = sol.witness.added_candidates;
  std::sort(add.begin(), add.end());
  for (const auto& c : add) out << "add-candidate " << c << "\n";
  for (const Vote& v : canonical_votes(sol.witness.deleted_votes)) {
    out << "delete-vote " << v.multiplicity << ": " << vote_order_to_string(v) << "\n";
  }
  for (const Vote& v : canonical_votes(sol.witness.added_votes)) {
    out << "add-vote " << v.multiplicity << ": " << vote_order_to_string(v) << "\n";
  }
  return out.str();
}

std::string canonicalize_document(const std::string& text) {
  switch (sniff_document_kind(text)) {
    case DocumentKind::election: return serialize_election(parse_election(text));
    case DocumentKind::control_instance:
      return serialize_control_instance(parse_control_instance(text));
    case DocumentKind::graph: return serialize_graph_instance(parse_graph_instance(text));
    case DocumentKind::report: return serialize_report(parse_report(text));
  }
  throw internal_error("unreachable document kind");
}

}  // namespace agenda_control

#pragma once

// Hardness-construction instance generators: every reduction in the
// catalog maps a source graph problem to a control instance with a
// guaranteed yes iff yes correspondence, which property tests exploit by
// solving both sides independently. Also the McGarvey election synthesis
// used by the candidate-addition construction.

#include <cstdint>
#include <string>

#include "agenda_control/control.hpp"
#include "agenda_control/graphs.hpp"
#include "agenda_control/solvers.hpp"

namespace agenda_control {

enum class ReductionTag {
  ccav_amd,
  ccdv_amd,
  ccdv_amd_dual,
  dcav_amd,
  dcdv_amd,
  dcdv_amd_dual,
  ccav_mh,
  ccdv_mh,
  ccdv_mh_dual,
  dcav_mh,
  dcdv_mh,
  dcdv_mh_dual,
  ccac_mh,
  ccav_succ,
  ccdv_succ,
  ccdv_succ_dual,
  ccac_succ,
  ccdc_succ_clique,
  ccdc_succ_biclique,
  dcac_succ,
  dcdc_succ_clique,
  dcdc_succ_biclique,
};

inline constexpr int kReductionTagCount = 22;

std::string reduction_tag_name(ReductionTag tag);
ReductionTag reduction_tag_from_name(const std::string& name);
std::vector<ReductionTag> all_reduction_tags();

struct ReductionKind {
  ReductionTag tag = ReductionTag::ccav_amd;
  int h = 1;  // step parameter for the lifted families; must be 1 for
              // the successive-procedure entries
};

// Source problem expected by a catalog entry.
GraphProblem reduction_source_problem(ReductionTag tag);
// Target control problem and procedure produced by a catalog entry.
ControlProblem reduction_target_problem(ReductionTag tag);
ProcedureSpec reduction_target_procedure(const ReductionKind& kind);

// Election whose majority graph equals the input exactly (absent arcs
// become ties), using one vote pair per arc.
Election mcgarvey_election(const OrientedGraph& graph);

// The exact election, agenda, budgets, and distinguished candidate of the
// cited construction. Enforces the construction's stated assumptions on
// the source (uniform red degree is normalized automatically); violations
// raise input_error naming the assumption. `seed` permutes agenda
// positions the construction leaves free (0 keeps the default order).
ControlInstance build_reduction(const ReductionKind& kind, const GraphInstance& source,
                                std::uint64_t seed = 0);

struct ReductionReport {
  bool source_yes = false;
  bool target_yes = false;
  bool agree = false;
  std::string detail;
};

// Solves the source exactly and the target by exhaustive search; the two
// answers must agree.
ReductionReport verify_reduction(const ReductionKind& kind, const GraphInstance& source,
                                 std::uint64_t seed = 0);

}  // namespace agenda_control

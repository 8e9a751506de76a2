#pragma once

// Bit-exact line-oriented text formats for elections, control instances,
// graphs, and solution reports. serialize(parse(t)) canonicalizes
// whitespace, vote grouping, and candidate ordering; canonicalization is
// idempotent. '#' starts a comment anywhere on a line.

#include <string>

#include "agenda_control/control.hpp"
#include "agenda_control/graphs.hpp"

namespace agenda_control {

enum class DocumentKind { election, control_instance, graph, report };

// Kind read from a document's `format` header line.
DocumentKind sniff_document_kind(const std::string& text);

Election parse_election(const std::string& text);
std::string serialize_election(const Election& e);

ControlInstance parse_control_instance(const std::string& text);
std::string serialize_control_instance(const ControlInstance& inst);

GraphInstance parse_graph_instance(const std::string& text);
std::string serialize_graph_instance(const GraphInstance& g);

Solution parse_report(const std::string& text);
std::string serialize_report(const Solution& sol);

std::string procedure_to_string(const ProcedureSpec& spec);
ProcedureSpec procedure_from_string(const std::string& text);

// parse + serialize for whichever kind the header names.
std::string canonicalize_document(const std::string& text);

}  // namespace agenda_control

#pragma once

#include <string>

#include "arce/bound.hpp"
#include "arce/cq.hpp"
#include "arce/pipeline.hpp"
#include "arce/prob.hpp"
#include "arce/tightness.hpp"

namespace arce {

// Rough shape of an input document, used to route CLI files to a parser.
enum class InputKind {
    Joint, // JSON with a "matrix" key, or bare CSV
    CQ,    // JSON with a "blocks" key
};

// Decides how to read a document: JSON objects are classified by key
// ("blocks" -> CQ, "matrix" -> Joint), anything else must parse as CSV.
// Throws ParseError when no reading applies.
InputKind sniff_input(const std::string& text);

// {"nx": .., "ny": .., "matrix": [[row 0], [row 1], ...]}, rows indexed by x.
std::string joint_to_json(const JointDistribution& p);
JointDistribution joint_from_json(const std::string& text);

// One CSV line per x value, ny comma-separated cells each.
std::string joint_to_csv(const JointDistribution& p);
JointDistribution joint_from_csv(const std::string& text);

// {"d_a": .., "weights": [..], "blocks": [block 0, ...]} where each block is
// a d_a x d_a matrix of [re, im] pairs.
std::string cq_to_json(const CQState& state);
CQState cq_from_json(const std::string& text);

std::string certificate_to_json(const BoundCertificate& cert);
std::string trace_to_json(const PipelineTrace& trace);
std::string search_result_to_json(const SearchResult& result);

} // namespace arce

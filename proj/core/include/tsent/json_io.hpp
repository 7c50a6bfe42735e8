#pragma once

#include <string>

#include "tsent/dag.hpp"
#include "tsent/entropy.hpp"
#include "tsent/fourier_motzkin.hpp"
#include "tsent/inequality.hpp"
#include "tsent/joint_distribution.hpp"
#include "tsent/quantum.hpp"
#include "tsent/scenarios.hpp"

namespace tsent {

// {"variables":[{"name","cardinality"}],"probabilities":[...]} with the table
// in lexicographic order, first variable most significant. Exact tables add
// "exact_probabilities" as "num/den" strings and win on load.
std::string distribution_to_json(const JointDistribution& dist);
JointDistribution distribution_from_json(const std::string& text);

// {"nodes":[{"name","observed","cardinality"}],"edges":[["parent","child"]]}
std::string dag_to_json(const Dag& dag);
Dag dag_from_json(const std::string& text);

// subsets serialized as sorted variable-name lists
std::string entropy_vector_to_json(const EntropyVector& v);

std::string inequality_system_to_json(const InequalitySystem& sys);
InequalitySystem inequality_system_from_json(const std::string& text);

std::string rational_system_to_json(const RationalSystem& sys);
RationalSystem rational_system_from_json(const std::string& text);

std::string fm_outcome_to_json(const FmOutcome& out);

std::string scan_report_to_json(const ScanReport& rep);
std::string search_report_to_json(const SearchReport& rep);
std::string evaluation_report_to_json(const EvaluationReport& rep);

// Complex matrices as row-major [re, im] pairs under a (q, dims, margin)
// header; used to serialize found counterexamples for audit.
std::string matrix_to_json_value(const CMatrix& m);

}  // namespace tsent

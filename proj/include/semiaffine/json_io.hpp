#pragma once

// JSON views of the result types. Key order is fixed (ordered_json) so that
// identical inputs serialize to identical bytes; sweep reports take an
// include_timing switch because wall time is the one field that legitimately
// differs between otherwise identical runs.

#include <json.hpp>

#include "semiaffine/search.hpp"
#include "semiaffine/sphere.hpp"
#include "semiaffine/structure.hpp"

namespace semiaffine {

using json = nlohmann::ordered_json;

// Elements render as element literals ("3", "(1,0)"), subsets as canonical
// set literals ("{2,5}").
json witness_json(const GroupSpec& g, const Witness& w);
json trace_json(const GroupSpec& g, const LemmaOneTrace& t);
json classification_json(const Classification& c);
json theorem_report_json(const TheoremReport& r);
json sweep_report_json(const SweepReport& r, bool include_timing = true);
json class_counts_json(const GroupSpec& g, const ClassCounts& c);

// Runs both line predicates; keys: spherical, witness, equivalent_semiaffine.
json sphere_report_json(const LinePointSet& p);

}  // namespace semiaffine

#ifndef DEFPART_REPORT_HPP
#define DEFPART_REPORT_HPP

#include <json.hpp>

#include "defpart/coloring.hpp"
#include "defpart/engine.hpp"
#include "defpart/verify.hpp"

namespace defpart {

// Field order is part of the output contract, so reports use
// nlohmann::ordered_json throughout.
using json = nlohmann::ordered_json;

json partition_report(const Instance& inst, const SolveResult& result, bool valid);
json color_report(const ColoringResult& result, bool proper);
json validity_report_json(const ValidityReport& report);
json trace_entry_json(const TraceEntry& entry);

}  // namespace defpart

#endif

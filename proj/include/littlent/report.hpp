#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "littlent/bounds.hpp"
#include "littlent/experiments.hpp"
#include "littlent/measures.hpp"

namespace littlent {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const MeasureValue& v);
nlohmann::json to_json(const BoundCheck& c);
nlohmann::json to_json(const DecisionReport& r);
nlohmann::json to_json(const StepTrace& t);

// Full trace report with the schema header and, when eps context is known,
// the informational runs x max-step-entropy product.
nlohmann::json trace_report(const std::vector<StepTrace>& steps,
                            const TraceConfig& config);

// One row per step x measure: step,bipartition,measure,value,kind,bound,pass
std::string trace_to_csv(const std::vector<StepTrace>& steps);

}  // namespace littlent

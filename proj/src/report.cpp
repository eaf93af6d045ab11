#include "littlent/report.hpp"

#include <algorithm>
#include <charconv>

namespace littlent {

namespace {

using nlohmann::json;

std::string csv_num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

nlohmann::json to_json(const MeasureValue& v) {
  json j;
  j["name"] = v.name;
  j["value"] = v.value;
  j["kind"] = measure_kind_name(v.kind);
  if (!v.converged) j["converged"] = false;
  if (v.product_certificate || !v.certificate_note.empty()) {
    json cert;
    if (!v.certificate_note.empty()) cert["note"] = v.certificate_note;
    if (v.product_certificate) {
      json sites = json::array();
      for (const auto& s : v.product_certificate->sites)
        sites.push_back({s(0).real(), s(0).imag(), s(1).real(), s(1).imag()});
      cert["product_state"] = sites;
    }
    j["certificate"] = cert;
  }
  return j;
}

nlohmann::json to_json(const BoundCheck& c) {
  return json{{"lhs", c.lhs},
              {"rhs", c.rhs},
              {"slack", c.slack},
              {"pass", c.pass},
              {"context", c.context}};
}

nlohmann::json to_json(const DecisionReport& r) {
  return json{{"schema", kReportSchema},
              {"q_exact", r.q_exact},
              {"q_hat", r.q_hat},
              {"p_hat", r.p_hat},
              {"decision", r.decision},
              {"runs", r.runs},
              {"seed", r.seed},
              {"epsilon", r.epsilon}};
}

nlohmann::json to_json(const StepTrace& t) {
  json j;
  j["step"] = t.step;
  j["distance"] = t.distance;
  json measures = json::object();
  for (const auto& [name, value] : t.measures) measures[name] = to_json(value);
  j["measures"] = measures;
  json bounds = json::object();
  for (const auto& [name, check] : t.bounds) bounds[name] = to_json(check);
  j["bounds"] = bounds;
  if (!t.errors.empty()) {
    json errors = json::object();
    for (const auto& [name, msg] : t.errors) errors[name] = msg;
    j["errors"] = errors;
  }
  return j;
}

nlohmann::json trace_report(const std::vector<StepTrace>& steps,
                            const TraceConfig& config) {
  json j;
  j["schema"] = kReportSchema;
  json arr = json::array();
  for (const StepTrace& t : steps) arr.push_back(to_json(t));
  j["steps"] = arr;
  if (config.eps_context) {
    j["epsilon"] = config.eps_context->epsilon;
    j["radius"] = config.eps_context->epsilon_bar;
    // Informational only: repetitions times the largest per-step entropy.
    double max_entropy = 0.0;
    bool have_entropy = false;
    for (const StepTrace& t : steps)
      for (const auto& [name, value] : t.measures)
        if (name.rfind("entropy@", 0) == 0) {
          have_entropy = true;
          max_entropy = std::max(max_entropy, value.value);
        }
    if (have_entropy) {
      long runs = required_runs(config.eps_context->epsilon, 1e-3);
      j["integrated_entanglement"] = {{"runs", runs},
                                      {"max_step_entropy", max_entropy},
                                      {"product", double(runs) * max_entropy}};
    }
  }
  return j;
}

std::string trace_to_csv(const std::vector<StepTrace>& steps) {
  std::string out = "step,bipartition,measure,value,kind,bound,pass\n";
  for (const StepTrace& t : steps) {
    auto row = [&](const std::string& split, const std::string& measure,
                   double value, const std::string& kind,
                   const BoundCheck* check) {
      out += std::to_string(t.step) + "," + split + "," + measure + "," +
             csv_num(value) + "," + kind;
      if (check)
        out += "," + csv_num(check->rhs) + "," +
               (check->pass ? "true" : "false");
      else
        out += ",,";
      out += "\n";
    };

    const BoundCheck* dist_check = nullptr;
    if (auto it = t.bounds.find("s_radius"); it != t.bounds.end())
      dist_check = &it->second;
    row("-", "trace_distance", t.distance, "exact", dist_check);

    for (const auto& [name, value] : t.measures) {
      std::string split = "-";
      std::string measure = name;
      if (auto pos = name.find('@'); pos != std::string::npos) {
        split = name.substr(pos + 1);
        measure = name.substr(0, pos);
      }
      const BoundCheck* check = nullptr;
      if (auto it = t.bounds.find(name); it != t.bounds.end())
        check = &it->second;
      row(split, measure, value.value, measure_kind_name(value.kind), check);
    }
  }
  return out;
}

}  // namespace littlent

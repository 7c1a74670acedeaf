#include "derlab/report.hpp"

#include <sstream>

namespace derlab {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["kind"] = "report";
  j["command"] = r.command;
  j["verdict"] = r.verdict;
  j["corpus"] = r.corpus;
  j["seed"] = r.seed;
  j["checks"] = r.checks;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::json e;
    e["code"] = w.code;
    e["detail"] = w.detail;
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  if (!r.payload.is_null()) j["payload"] = r.payload;
  return j;
}

std::string report_to_human(const Report& r, double wall_ms) {
  std::ostringstream os;
  os << r.command << ": " << r.verdict;
  if (!r.corpus.empty()) os << "  [" << r.corpus << "]";
  os << "  (checks=" << r.checks << ", seed=" << r.seed << ", " << wall_ms
     << " ms)\n";
  for (const auto& w : r.witnesses)
    os << "  - " << w.code << ": " << w.detail << "\n";
  return os.str();
}

int report_exit_code(const Report& r) {
  if (r.verdict == "pass") return 0;
  if (r.verdict == "fail") return 1;
  return 2;
}

}  // namespace derlab

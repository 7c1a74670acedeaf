#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "derlab/fincat.hpp"

namespace derlab {

/// Output of every checker command. Serialized reports are byte-identical
/// across runs with the same inputs and seed: wall-clock timing appears only
/// in the human rendering, the JSON carries the deterministic check counter.
struct Report {
  std::string command;
  std::string verdict;  // "pass" | "fail" | "undetermined"
  std::vector<Violation> witnesses;
  std::string corpus;
  uint64_t seed = 0;
  uint64_t checks = 0;
  nlohmann::json payload;  // command-specific extras, already deterministic

  bool passed() const { return verdict == "pass"; }
};

nlohmann::json report_to_json(const Report& r);
std::string report_to_human(const Report& r, double wall_ms);
/// 0 pass, 1 fail, 2 undetermined.
int report_exit_code(const Report& r);

}  // namespace derlab

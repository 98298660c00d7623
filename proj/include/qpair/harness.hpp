#pragma once

#include <string>
#include <vector>

#include "qpair/repr.hpp"

namespace qpair {

// Names of every registered check, in execution order.
std::vector<std::string> registered_checks();

// Configuration of one verification run.  Reports are byte-stable for a
// fixed configuration; wall-clock fields stay zero unless timing is on.
struct CheckConfig {
  std::string type = "A2";  // preset name, used when gcm_file is empty
  std::string gcm_file;
  long max_height = 6;       // weight-height cutoff for algebra-level checks
  long theorem_height = 0;   // 0: derived from max_height and the datum
  long max_power = 4;        // generator-power / divided-power bound
  long max_module_weight = 4;  // rank-one module ladder bound
  long ds_samples = 100;       // sample count for the projection check
  unsigned long long seed = 42;
  std::vector<std::string> checks = registered_checks();
  std::string format = "text";  // "text" or "json"
  bool timing = false;
};

struct CheckResult {
  std::string name;
  std::string statement;  // what the check verifies
  size_t instances = 0;   // verified identity instances
  bool pass = true;
  std::string counterexample;  // first failing instance, re-runnable inputs
  long long millis = 0;        // 0 unless timing was requested
};

struct CheckReport {
  CheckConfig config;
  long resolved_theorem_height = 0;
  std::string datum_name;
  size_t datum_rank = 0;
  std::vector<CheckResult> results;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Execute the selected checks against one Cartan datum.  Throws on an
// unknown check name or an unreadable matrix file.
CheckReport run_suite(const CheckConfig& cfg);

}  // namespace qpair

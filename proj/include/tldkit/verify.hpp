#pragma once

#include <string>
#include <vector>

namespace tldkit {

struct VerifyCase {
  std::string key;
  bool ok = false;
  std::string detail;  // empty when ok

  bool operator==(const VerifyCase&) const = default;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;  // sorted by key
  bool ok() const;
  int passed() const;
};

// Suite names accepted by run_suite, without the umbrella "all".
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") with sizes capped by max_n. Cases run
// concurrently on TLDKIT_THREADS threads (default: machine parallelism);
// the report is sorted by key and independent of scheduling.
VerifyReport run_suite(const std::string& suite, int max_n);

}  // namespace tldkit

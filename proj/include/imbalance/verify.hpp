#pragma once

#include <map>
#include <string>
#include <vector>

#include "imbalance/ints.hpp"

namespace imbalance {

// Whether a suite's records describe an algebraic identity (expected vs
// actual value) or a theorem instance (left side vs right side).  The
// distinction only affects report field names.
enum class RecordKind { identity, theorem };

struct CheckRecord {
  std::string instance;  // parameter rendering, e.g. "family 2, a=3,b=1,c=0"
  std::string expected;  // expected value / left side
  std::string actual;    // computed value / right side
  std::string detail;    // optional extra observation, e.g. the observed sign
  bool pass = false;
  long long millis = 0;
};

struct SuiteResult {
  std::string suite;
  RecordKind kind = RecordKind::identity;
  std::vector<CheckRecord> records;
  std::string note;  // conventions and corrections the suite relies on
  long long millis = 0;
  bool passed() const;
};

struct VerifyOptions {
  unsigned long long seed = 12345;
  long long cap = kDefaultExtensionCap;
  // Per-suite bound overrides; keys are documented in suite_parameter_keys.
  std::map<std::string, long long> params;

  long long param(const std::string& key, long long fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

// Registered suite names, in the order run_all_suites uses.
std::vector<std::string> suite_names();

// Parameter keys a suite honors, with their default bounds.
std::map<std::string, long long> suite_parameter_keys(const std::string& suite);

// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt);

}  // namespace imbalance

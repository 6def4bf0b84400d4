#pragma once

// Verification reports for torus pairs, numeric guards and their JSON forms.

#include <string>
#include <vector>

#include "json.hpp"

namespace legch {

enum class CheckStatus { kPass, kFail, kFlagged };

std::string to_string(CheckStatus s);
CheckStatus status_from_string(std::string_view s);

struct CheckResult {
  std::string name;
  std::string subject;  // "(p,q)" or a braid description
  CheckStatus status = CheckStatus::kPass;
  std::string details;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportSummary {
  int passed = 0;
  int failed = 0;
  int flagged = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  ReportSummary summary() const;
  bool failed() const { return summary().failed > 0; }
  void append(const VerificationReport& other);
  /// Orders by subject, then name.
  void sort();

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
/// Inverse of to_json; rejects unknown statuses and inconsistent summaries.
VerificationReport report_from_json(const nlohmann::json& j);

/// Size limits for exhaustive oracles and symbolic computation.
struct Guards {
  int max_enumeration_n = 6;   // enumerate_D
  int max_oracle_word = 14;    // enumerate_paths_oracle
  int symbolic_limit = 5;      // chain-level identities when p, q <= this
  int symbolic_iteration_limit = 4;  // symbolic mu cross-check when p, q <= this
  int workers = 0;             // 0: hardware concurrency

  friend bool operator==(const Guards&, const Guards&) = default;
};

/// Overrides defaults with the keys present in `j`; unknown keys throw Error.
Guards guards_from_json(const nlohmann::json& j);
Guards load_guards(const std::string& path);
nlohmann::ordered_json to_json(const Guards& g);

/// Every check for one coprime pair with p, q >= 2. Throws Error otherwise.
VerificationReport certify_pair(int p, int q, const Guards& guards = {});

/// All coprime pairs with 2 <= p, q <= n, run in parallel and sorted.
VerificationReport certify_range(int n, const Guards& guards = {});

}  // namespace legch

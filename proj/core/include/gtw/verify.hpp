#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gtw {

enum class CheckStatus { Pass, Fail, Evidence };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Evidence: return "evidence";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  std::vector<std::pair<std::string, long long>> numbers;
  std::string detail;  // failure witness or short note
  double runtime_seconds = 0.0;

  bool failed() const { return status == CheckStatus::Fail; }
};

struct VerifyProfile {
  std::string name;
  int max_length;  // fixed-subgroup approximation length bound
  int depth;       // composition depth for catalogues / searches
};

/// quick (L=8, depth 3), default (L=12, depth 4), deep (L=16, depth 5).
VerifyProfile profile_from_name(const std::string& name);

std::vector<std::string> all_check_ids();

/// Runs the named checks (all when selection is empty) in canonical order.
/// Unknown ids raise std::invalid_argument.
std::vector<CheckResult> run_checks(const VerifyProfile& profile,
                                    const std::vector<std::string>& selection = {});

}  // namespace gtw

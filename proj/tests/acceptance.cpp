// Runs the whole verification suite and prints one line per check.

#include <cstdio>

#include "gtw/verify.hpp"

int main() {
  auto results = gtw::run_checks(gtw::profile_from_name("default"));
  bool any_fail = false;
  for (const auto& r : results) {
    const char* tag = r.failed() ? "FAIL" : "PASS";
    std::printf("[%s] %-28s %6.2fs", tag, r.id.c_str(), r.runtime_seconds);
    if (r.status == gtw::CheckStatus::Evidence) std::printf("  (evidence)");
    if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
    std::printf("\n");
    any_fail = any_fail || r.failed();
  }
  return any_fail ? 1 : 0;
}

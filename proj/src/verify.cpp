#include "ck6/verify.hpp"

namespace ck6 {

bool glob_match(const std::string& pattern, const std::string& text) {
  // iterative '*' backtracking
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  for (const auto& c : builtin_catalog()) ids.push_back(c.id);
  for (const auto& c : calibration_checks()) ids.push_back(c.id);
  return ids;
}

std::vector<CheckResult> run_verify(const std::string& selection) {
  const bool all = selection == "all";
  auto selected = [&](const std::string& id) { return all || glob_match(selection, id); };

  std::vector<CheckResult> results;
  for (const auto& check : builtin_catalog())
    if (selected(check.id)) results.push_back(run_check(check));
  for (const auto& cal : calibration_checks())
    if (selected(cal.id)) results.push_back(cal.run());
  if (results.empty())
    throw std::invalid_argument("verify: no check matches '" + selection + "'");
  return results;
}

bool all_as_expected(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.as_expected()) return false;
  return true;
}

}  // namespace ck6

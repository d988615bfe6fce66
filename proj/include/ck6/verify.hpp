#pragma once

#include <string>
#include <vector>

#include "ck6/identity.hpp"
#include "ck6/rep.hpp"

namespace ck6 {

// glob with '*' (any run) and '?' (any one char)
bool glob_match(const std::string& pattern, const std::string& text);

// ids of every runnable check, in report order: the identity catalog followed
// by the CAL-* calibration checks
std::vector<std::string> verify_ids();

// Runs the checks selected by the glob ("all" selects everything), in
// catalog order. Throws std::invalid_argument when the glob selects nothing.
std::vector<CheckResult> run_verify(const std::string& selection);

// true when every result matches its expected verdict (asWritten variants of
// documented slips are expected to FAIL)
bool all_as_expected(const std::vector<CheckResult>& results);

}  // namespace ck6

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace artri {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // counts, or the first failing case
};

/// Fixture directory baked in at build time.
std::string default_fixture_dir();

/// Runs the nine acceptance checks against the shipped fixtures. `report`
/// is called after each criterion so callers can stream output.
std::vector<CriterionResult> run_acceptance(const std::string& fixture_dir,
                                            const std::function<void(const CriterionResult&)>& report = {});

}  // namespace artri

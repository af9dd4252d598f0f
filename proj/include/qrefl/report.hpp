#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qrefl/solution_set.hpp"

namespace qrefl {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of solving or verifying one entry (or one claim).
struct Report {
  std::string id;
  std::string kind;  ///< "solve", "orders", "conjugacy", ...
  double tolerance = 1e-9;
  std::optional<std::size_t> order;
  std::optional<std::size_t> expected_order;
  std::optional<std::size_t> reflection_count;
  std::optional<std::size_t> expected_reflection_count;
  std::optional<std::size_t> L_size;
  std::optional<std::size_t> H_size;
  std::optional<SolutionSet> solutions;
  std::optional<SolutionSet> expected_solutions;
  std::vector<std::string> notes;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  void check(std::string name, bool pass, std::string detail = {});
};

nlohmann::json to_json(const SolutionSet& s);
SolutionSet solution_set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Field-by-field equality (doubles compared exactly).
bool operator==(const Report& x, const Report& y);

/// Structured form is indented JSON; text form is a short human summary.
std::string print_report(const Report& r, bool structured);
std::string print_reports(const std::vector<Report>& rs, bool structured);
/// Throws Error(Parse) on malformed input.
Report parse_report(std::string_view text);
std::vector<Report> parse_reports(std::string_view text);

}  // namespace qrefl

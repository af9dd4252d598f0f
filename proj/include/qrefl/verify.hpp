#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrefl/catalog.hpp"
#include "qrefl/group.hpp"
#include "qrefl/report.hpp"

namespace qrefl {

struct VerifyOptions {
  int n_lo = 2;
  int n_hi = 12;
  double tolerance = 1e-9;
  std::size_t cap = kDefaultClosureCap;
  /// Samples per component that must pass is_system, and random q off every
  /// component that must fail it.
  std::size_t inside_samples = 100;
  std::size_t outside_samples = 1000;
  std::uint64_t seed = 2024;
  bool parallel = true;
};

/// Closure, reflection inventory, solve, comparison with the catalog's
/// expected values, and the sampling oracle for one entry.
Report solve_report(const CatalogEntry& entry, const VerifyOptions& opts = {});

/// The verification tables: "real", "complex", "quaternionic", "orders",
/// "conjugacies", "inclusions". Throws Error(BadParameter) for other names.
std::vector<Report> verify_table(std::string_view table, const VerifyOptions& opts = {});
const std::vector<std::string>& verify_table_names();

/// Primitive complex groups G_4..G_22 that contain G_4, G_8 or G_16 along the
/// inclusion edges, each with the chain that certifies it.
struct InclusionCertificate {
  int group;
  std::vector<int> chain;  ///< from an empty constructed group up to `group`
};
std::vector<InclusionCertificate> certify_by_inclusion(const std::vector<int>& empty_groups);

}  // namespace qrefl

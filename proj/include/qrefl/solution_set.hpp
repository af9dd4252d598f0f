#pragma once

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "qrefl/quaternion.hpp"

namespace qrefl {

// Each (1,q) with q != 0 names the orthogonal system {(1,q), (-conj q, 1)}.
// Systems are counted once: |q| <= 1, and q ~ -q when |q| = 1.

/// Representative of the system (1,q) with |q| <= 1: q -> -q/|q|^2 when
/// |q| > 1, sign-normalized when |q| = 1. Throws Error(ZeroInput) for q = 0.
Quaternion canonicalize(const Quaternion& q, double eps = tolerance());

struct PointComponent {
  Quaternion q;
};

/// {alpha u : lo < alpha < hi (or <= hi), alpha != 0 if exclude_zero}.
struct SegmentComponent {
  Quaternion u;
  double lo = -1.0;
  double hi = 1.0;
  bool hi_closed = false;
  bool exclude_zero = true;
};

/// {cos t u + sin t v}, u and v orthonormal.
struct CircleComponent {
  Quaternion u, v;
};

/// {x u + y v : 0 < x^2 + y^2 <= 1}.
struct DiskComponent {
  Quaternion u, v;
};

/// {center + radius p : p pure unit}.
struct SphereComponent {
  double center = 0.0;
  double radius = 1.0;
};

using ComponentShape =
    std::variant<PointComponent, SegmentComponent, CircleComponent, DiskComponent, SphereComponent>;

enum class ComponentKind { point, segment, circle, disk, sphere };
const char* to_string(ComponentKind kind);
std::optional<ComponentKind> component_kind_from_string(const std::string& s);

struct SolutionComponent {
  ComponentShape shape;
  std::string provenance;

  ComponentKind kind() const { return static_cast<ComponentKind>(shape.index()); }

  /// Membership of an already canonical q (see canonicalize).
  bool contains(const Quaternion& q, double eps) const;

  /// `count` members: both ends or special points first, then uniform draws.
  std::vector<Quaternion> sample(std::size_t count, std::mt19937_64& rng) const;

  std::string render() const;
};

bool approx_equal(const SolutionComponent& x, const SolutionComponent& y, double eps);

struct SolutionSet {
  bool includes_standard = false;
  /// False when the solver could only sample (never a claimed negative).
  bool determined = true;
  std::vector<SolutionComponent> components;
  std::string note;

  /// Whether (1,q) is a member; q = 0 is the standard system.
  bool contains(const Quaternion& q, double eps = tolerance()) const;

  /// Number of systems when all components are points, else nullopt.
  std::optional<std::size_t> finite_count() const;

  void add_point(const Quaternion& q, std::string provenance, double eps = tolerance());

  /// Drops points already covered by a continuous component.
  void remove_covered_points(double eps = tolerance());

  /// One line, e.g. "(1,0); (1,zj), z in C, |z|=1". A segment and the point
  /// at its unit end are rendered together as "-1<alpha<=1".
  std::string render() const;
};

/// Same standard flag, same determination, and a one-to-one matching of
/// components within eps.
bool approx_equal(const SolutionSet& x, const SolutionSet& y, double eps);

// Builders used by the catalog's expected values and by the solver.
SolutionComponent make_point(const Quaternion& q, std::string provenance = {});
SolutionComponent make_segment(const Quaternion& u, std::string provenance = {});
SolutionComponent make_circle(const Quaternion& u, const Quaternion& v, std::string provenance = {});
SolutionComponent make_disk(const Quaternion& u, const Quaternion& v, std::string provenance = {});
SolutionComponent make_sphere(double center, double radius, std::string provenance = {});

/// Canonical orthonormal basis of span(x, y): Gram-Schmidt over the
/// projections of 1, i, j, k in that order, so span(j,k) gives (j, k).
std::pair<Quaternion, Quaternion> plane_basis(const Quaternion& x, const Quaternion& y);

}  // namespace qrefl

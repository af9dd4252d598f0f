#include "qrefl/solution_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qrefl/error.hpp"

namespace qrefl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Quaternion project_to_plane(const Quaternion& q, const Quaternion& u, const Quaternion& v) {
  return dot(q, u) * u + dot(q, v) * v;
}

bool in_plane(const Quaternion& q, const Quaternion& u, const Quaternion& v, double eps) {
  return distance(q, project_to_plane(q, u, v)) <= eps;
}

bool same_plane(const Quaternion& u1, const Quaternion& v1, const Quaternion& u2,
                const Quaternion& v2, double eps) {
  return in_plane(u2, u1, v1, eps) && in_plane(v2, u1, v1, eps);
}

bool same_up_to_sign(const Quaternion& p, const Quaternion& q, double eps) {
  return approx_eq(p, q, eps) || approx_eq(p, -q, eps);
}

bool is_plane_jk(const Quaternion& u, const Quaternion& v, double eps) {
  return same_plane(u, v, Quaternion::j(), Quaternion::k(), eps);
}

}  // namespace

Quaternion canonicalize(const Quaternion& q, double eps) {
  const double n = q.norm();
  if (n <= eps) throw Error(ErrorKind::ZeroInput, "canonicalize(0)");
  if (std::abs(n - 1.0) <= eps) return sign_normalize(q / n, eps);
  if (n > 1.0) return -q / (n * n);
  return q;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::point: return "point";
    case ComponentKind::segment: return "segment";
    case ComponentKind::circle: return "circle";
    case ComponentKind::disk: return "disk";
    case ComponentKind::sphere: return "sphere";
  }
  return "point";
}

std::optional<ComponentKind> component_kind_from_string(const std::string& s) {
  for (auto k : {ComponentKind::point, ComponentKind::segment, ComponentKind::circle,
                 ComponentKind::disk, ComponentKind::sphere}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

bool SolutionComponent::contains(const Quaternion& q, double eps) const {
  return std::visit(
      overloaded{
          [&](const PointComponent& p) {
            return std::abs(q.norm() - 1.0) <= eps ? same_up_to_sign(p.q, q, eps)
                                                   : approx_eq(p.q, q, eps);
          },
          [&](const SegmentComponent& s) {
            const double alpha = dot(q, s.u);
            if (distance(q, alpha * s.u) > eps) return false;
            auto in_range = [&](double x) {
              if (s.exclude_zero && std::abs(x) <= eps) return false;
              const bool upper = s.hi_closed ? x <= s.hi + eps : x < s.hi - eps;
              return x > s.lo + eps && upper;
            };
            // -q names the same system on the unit sphere
            return in_range(alpha) || (std::abs(q.norm() - 1.0) <= eps && in_range(-alpha));
          },
          [&](const CircleComponent& c) {
            return in_plane(q, c.u, c.v, eps) && std::abs(q.norm() - 1.0) <= eps;
          },
          [&](const DiskComponent& d) {
            return in_plane(q, d.u, d.v, eps) && q.norm() > eps && q.norm() <= 1.0 + eps;
          },
          [&](const SphereComponent& s) {
            if (std::abs(q.pure().norm() - s.radius) <= eps && std::abs(q.re() - s.center) <= eps) {
              return true;
            }
            return std::abs(q.norm() - 1.0) <= eps && std::abs(q.pure().norm() - s.radius) <= eps &&
                   std::abs(-q.re() - s.center) <= eps;
          },
      },
      shape);
}

std::vector<Quaternion> SolutionComponent::sample(std::size_t count, std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Quaternion> out;
  out.reserve(count);
  std::visit(
      overloaded{
          [&](const PointComponent& p) { out.assign(count, p.q); },
          [&](const SegmentComponent& s) {
            // Near both ends, then the interior; 0 itself is excluded.
            const double shrink = 1e-6;
            out.push_back((s.lo + shrink) * s.u);
            out.push_back((s.hi_closed ? s.hi : s.hi - shrink) * s.u);
            while (out.size() < count) {
              double alpha = s.lo + (s.hi - s.lo) * unit(rng);
              if (std::abs(alpha) > 1e-6 && alpha > s.lo) out.push_back(alpha * s.u);
            }
          },
          [&](const CircleComponent& c) {
            for (std::size_t n = 0; n < count; ++n) {
              const double t = 2 * constants::pi * unit(rng);
              out.push_back(std::cos(t) * c.u + std::sin(t) * c.v);
            }
          },
          [&](const DiskComponent& d) {
            out.push_back(d.u);
            out.push_back(1e-6 * d.v);
            while (out.size() < count) {
              const double t = 2 * constants::pi * unit(rng);
              const double r = std::sqrt(unit(rng));
              if (r > 1e-9) out.push_back(r * (std::cos(t) * d.u + std::sin(t) * d.v));
            }
          },
          [&](const SphereComponent& s) {
            for (std::size_t n = 0; n < count; ++n) {
              Quaternion p{0, gauss(rng), gauss(rng), gauss(rng)};
              out.push_back(Quaternion(s.center) + (s.radius / p.norm()) * p);
            }
          },
      },
      shape);
  out.resize(count);
  return out;
}

std::string SolutionComponent::render() const {
  const double eps = 1e-9;
  return std::visit(
      overloaded{
          [&](const PointComponent& p) { return "(1," + format(p.q) + ")"; },
          [&](const SegmentComponent& s) {
            std::ostringstream os;
            os << "(1,alpha*(" << format(s.u) << ")), " << s.lo << "<alpha" << (s.hi_closed ? "<=" : "<")
               << s.hi << (s.exclude_zero ? " (alpha!=0)" : "");
            return os.str();
          },
          [&](const CircleComponent& c) -> std::string {
            if (is_plane_jk(c.u, c.v, eps)) return "(1,zj), z in C, |z|=1";
            return "(1,cos(t)*(" + format(c.u) + ")+sin(t)*(" + format(c.v) + "))";
          },
          [&](const DiskComponent& d) -> std::string {
            if (is_plane_jk(d.u, d.v, eps)) return "(1,zj), z in C, 0<|z|<=1";
            return "(1,x*(" + format(d.u) + ")+y*(" + format(d.v) + ")), 0<x^2+y^2<=1";
          },
          [&](const SphereComponent& s) -> std::string {
            if (std::abs(s.center) <= eps && std::abs(s.radius - 1.0) <= eps) {
              return "(1,q), |q|=1, Re(q)=0";
            }
            std::ostringstream os;
            os << "(1,q), Re(q)=" << s.center << ", |Im(q)|=" << s.radius;
            return os.str();
          },
      },
      shape);
}

bool approx_equal(const SolutionComponent& x, const SolutionComponent& y, double eps) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case ComponentKind::point: {
      const auto& p = std::get<PointComponent>(x.shape).q;
      const auto& q = std::get<PointComponent>(y.shape).q;
      return std::abs(p.norm() - 1.0) <= eps ? same_up_to_sign(p, q, eps) : approx_eq(p, q, eps);
    }
    case ComponentKind::segment: {
      const auto& s = std::get<SegmentComponent>(x.shape);
      const auto& t = std::get<SegmentComponent>(y.shape);
      return same_up_to_sign(s.u, t.u, eps) && std::abs(s.lo - t.lo) <= eps &&
             std::abs(s.hi - t.hi) <= eps && s.hi_closed == t.hi_closed &&
             s.exclude_zero == t.exclude_zero;
    }
    case ComponentKind::circle: {
      const auto& c = std::get<CircleComponent>(x.shape);
      const auto& d = std::get<CircleComponent>(y.shape);
      return same_plane(c.u, c.v, d.u, d.v, eps);
    }
    case ComponentKind::disk: {
      const auto& c = std::get<DiskComponent>(x.shape);
      const auto& d = std::get<DiskComponent>(y.shape);
      return same_plane(c.u, c.v, d.u, d.v, eps);
    }
    case ComponentKind::sphere: {
      const auto& s = std::get<SphereComponent>(x.shape);
      const auto& t = std::get<SphereComponent>(y.shape);
      return std::abs(s.center - t.center) <= eps && std::abs(s.radius - t.radius) <= eps;
    }
  }
  return false;
}

bool SolutionSet::contains(const Quaternion& q, double eps) const {
  if (q.norm() <= eps) return includes_standard;
  const Quaternion c = canonicalize(q, eps);
  return std::any_of(components.begin(), components.end(),
                     [&](const SolutionComponent& comp) { return comp.contains(c, eps); });
}

std::optional<std::size_t> SolutionSet::finite_count() const {
  for (const auto& c : components) {
    if (c.kind() != ComponentKind::point) return std::nullopt;
  }
  return components.size() + (includes_standard ? 1 : 0);
}

void SolutionSet::add_point(const Quaternion& q, std::string provenance, double eps) {
  const Quaternion c = canonicalize(q, eps);
  for (const auto& comp : components) {
    if (comp.contains(c, eps)) return;
  }
  components.push_back(make_point(c, std::move(provenance)));
}

void SolutionSet::remove_covered_points(double eps) {
  std::vector<SolutionComponent> kept;
  for (const auto& comp : components) {
    if (comp.kind() == ComponentKind::point) {
      const auto& q = std::get<PointComponent>(comp.shape).q;
      const bool covered = std::any_of(components.begin(), components.end(), [&](const auto& other) {
        return other.kind() != ComponentKind::point && other.contains(q, eps);
      });
      if (covered) continue;
    }
    kept.push_back(comp);
  }
  components = std::move(kept);
}

std::string SolutionSet::render() const {
  const double eps = 1e-9;
  std::vector<std::string> parts;
  if (!determined) parts.push_back("undetermined");
  if (includes_standard) parts.push_back("(1,0)");
  std::vector<bool> merged(components.size(), false);
  for (std::size_t s = 0; s < components.size(); ++s) {
    if (components[s].kind() != ComponentKind::segment) continue;
    const auto& seg = std::get<SegmentComponent>(components[s].shape);
    for (std::size_t p = 0; p < components.size(); ++p) {
      if (merged[p] || components[p].kind() != ComponentKind::point) continue;
      const auto& q = std::get<PointComponent>(components[p].shape).q;
      if (!seg.hi_closed && std::abs(seg.hi - 1.0) <= eps && same_up_to_sign(q, seg.u, eps)) {
        SegmentComponent closed = seg;
        closed.hi_closed = true;
        parts.push_back(SolutionComponent{closed, {}}.render());
        merged[s] = merged[p] = true;
        break;
      }
    }
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!merged[c]) parts.push_back(components[c].render());
  }
  if (parts.empty()) return "none";
  std::string out = parts.front();
  for (std::size_t n = 1; n < parts.size(); ++n) out += "; " + parts[n];
  return out;
}

bool approx_equal(const SolutionSet& x, const SolutionSet& y, double eps) {
  if (x.includes_standard != y.includes_standard || x.determined != y.determined) return false;
  if (x.components.size() != y.components.size()) return false;
  std::vector<bool> used(y.components.size(), false);
  for (const auto& cx : x.components) {
    bool found = false;
    for (std::size_t n = 0; n < y.components.size() && !found; ++n) {
      if (!used[n] && approx_equal(cx, y.components[n], eps)) used[n] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

SolutionComponent make_point(const Quaternion& q, std::string provenance) {
  return {PointComponent{canonicalize(q)}, std::move(provenance)};
}

SolutionComponent make_segment(const Quaternion& u, std::string provenance) {
  return {SegmentComponent{sign_normalize(u / u.norm(), 1e-9)}, std::move(provenance)};
}

std::pair<Quaternion, Quaternion> plane_basis(const Quaternion& x, const Quaternion& y) {
  // Orthonormalize the spanning pair first, then project the unit basis.
  const Quaternion e1 = x / x.norm();
  Quaternion f = y - dot(y, e1) * e1;
  const Quaternion e2 = f / f.norm();
  std::vector<Quaternion> basis;
  for (const Quaternion& unit : {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
    Quaternion p = project_to_plane(unit, e1, e2);
    for (const auto& b : basis) p -= dot(p, b) * b;
    if (p.norm() > 1e-6) basis.push_back(p / p.norm());
    if (basis.size() == 2) break;
  }
  return {basis[0], basis[1]};
}

SolutionComponent make_circle(const Quaternion& u, const Quaternion& v, std::string provenance) {
  auto [p, q] = plane_basis(u, v);
  return {CircleComponent{p, q}, std::move(provenance)};
}

SolutionComponent make_disk(const Quaternion& u, const Quaternion& v, std::string provenance) {
  auto [p, q] = plane_basis(u, v);
  return {DiskComponent{p, q}, std::move(provenance)};
}

SolutionComponent make_sphere(double center, double radius, std::string provenance) {
  return {SphereComponent{center, radius}, std::move(provenance)};
}

}  // namespace qrefl

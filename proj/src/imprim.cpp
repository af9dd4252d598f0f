#include "qrefl/imprim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <random>

#include "qrefl/error.hpp"

namespace qrefl {

namespace {

double system_tolerance(const Quaternion& q, double eps) {
  return 8 * eps * std::max(1.0, q.norm2());
}

bool generator_fixes_system(const Mat2& g, const Quaternion& q, double eps) {
  const double tol = system_tolerance(q, eps);
  const Quaternion qc = q.conj();
  const Quaternion e1 = g.a + g.b * q + qc * g.c + qc * g.d * q;
  if (e1.norm() <= tol) return true;
  const Quaternion e2 = q * g.a + q * g.b * q - g.c - g.d * q;
  return e2.norm() <= tol;
}

// Orthonormal basis of the subspace of R^4 orthogonal to every normal.
std::vector<Quaternion> common_kernel(const std::vector<Quaternion>& normals, double eps) {
  std::vector<Quaternion> rows;
  for (const auto& n : normals) {
    Quaternion r = n;
    for (const auto& b : rows) r -= dot(r, b) * b;
    if (r.norm() > 16 * eps) rows.push_back(r / r.norm());
  }
  std::vector<Quaternion> kernel;
  for (const Quaternion& e : {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
    Quaternion r = e;
    for (const auto& b : rows) r -= dot(r, b) * b;
    for (const auto& b : kernel) r -= dot(r, b) * b;
    if (r.norm() > 1e-6) kernel.push_back(r / r.norm());
  }
  return kernel;
}

bool is_real(const Mat2& g, double eps) {
  for (const Quaternion* e : {&g.a, &g.b, &g.c, &g.d}) {
    if (e->pure().norm() > eps) return false;
  }
  return true;
}

bool is_complex(const Mat2& g, double eps) {
  for (const Quaternion* e : {&g.a, &g.b, &g.c, &g.d}) {
    if (std::hypot(e->c, e->d) > eps) return false;
  }
  return true;
}

// ---- real generators ------------------------------------------------------

using cplx = std::complex<double>;

// A (x^2 + y^2) + B x + C = 0, or the real axis y = 0.
struct Curve {
  bool real_axis = false;
  double A = 0, B = 0, C = 0;
};

bool same_curve(const Curve& p, const Curve& q, double tol) {
  if (p.real_axis || q.real_axis) return p.real_axis == q.real_axis;
  const std::array<double, 3> cross{p.B * q.C - p.C * q.B, p.C * q.A - p.A * q.C,
                                    p.A * q.B - p.B * q.A};
  return std::hypot(cross[0], cross[1], cross[2]) <= tol;
}

Curve normalized(Curve c) {
  const double n = std::hypot(c.A, c.B, c.C);
  c.A /= n;
  c.B /= n;
  c.C /= n;
  return c;
}

struct LocalSet {
  bool everything = false;
  std::vector<cplx> points;
  std::vector<Curve> curves;
};

void real_roots(double a, double b, double c, double tol, std::vector<cplx>& out) {
  if (std::abs(a) > tol) {
    const double disc = b * b - 4 * a * c;
    if (disc < -tol) return;
    const double s = std::sqrt(std::max(0.0, disc));
    out.emplace_back((-b + s) / (2 * a), 0.0);
    out.emplace_back((-b - s) / (2 * a), 0.0);
  } else if (std::abs(b) > tol) {
    out.emplace_back(-c / b, 0.0);
  }
}

LocalSet local_set(const Mat2& g, double tol) {
  const double a = g.a.a, b = g.b.a, c = g.c.a, d = g.d.a;
  LocalSet s;
  // First condition: a + (b+c)x + d(x^2+y^2) + (b-c) y u = 0.
  if (std::abs(b - c) > tol) {
    if (std::abs(a) <= tol && std::abs(b + c) <= tol && std::abs(d) <= tol) {
      s.curves.push_back({true});
    } else {
      real_roots(d, b + c, a, tol, s.points);
    }
  } else if (std::abs(d) > tol || std::abs(b + c) > tol) {
    s.curves.push_back(normalized({false, d, b + c, a}));
  } else if (std::abs(a) <= tol) {
    s.everything = true;
  }
  // Second condition: b z^2 + (a-d) z - c = 0.
  if (std::abs(b) > tol) {
    const cplx disc = std::sqrt(cplx((a - d) * (a - d) + 4 * b * c, 0.0));
    s.points.push_back((-(a - d) + disc) / (2 * b));
    s.points.push_back((-(a - d) - disc) / (2 * b));
  } else if (std::abs(a - d) > tol) {
    s.points.emplace_back(c / (a - d), 0.0);
  } else if (std::abs(c) <= tol) {
    s.everything = true;
  }
  return s;
}

void intersect(const Curve& p, const Curve& q, double tol, std::vector<cplx>& out) {
  if (same_curve(p, q, tol)) return;
  if (p.real_axis || q.real_axis) {
    const Curve& f = p.real_axis ? q : p;
    real_roots(f.A, f.B, f.C, tol, out);
    return;
  }
  // Linear in s = x^2 + y^2 and x.
  const double det = p.A * q.B - q.A * p.B;
  if (std::abs(det) <= tol) return;
  const double s = (p.B * q.C - q.B * p.C) / det;
  const double x = (q.A * p.C - p.A * q.C) / det;
  const double y2 = s - x * x;
  if (y2 < -tol) return;
  out.emplace_back(x, std::sqrt(std::max(0.0, y2)));
}

void add_sphere(SolutionSet& set, double x, double y, double eps) {
  const double s = x * x + y * y;
  double center = x, radius = y;
  if (std::abs(s - 1.0) <= 8 * eps) {
    center = std::abs(x);
  } else if (s > 1.0) {
    center = -x / s;
    radius = y / s;
  }
  const auto sphere = make_sphere(center, radius, "complex root lifted to q = x + y u");
  for (const auto& comp : set.components) {
    if (approx_equal(comp, sphere, 8 * eps)) return;
  }
  set.components.push_back(sphere);
}

bool passes_complex_criterion(const Mat2& g, double eps) {
  const double tol = 8 * eps;
  const bool first = approx_eq(g.a, -g.d.conj(), tol) && approx_eq(g.b, g.c.conj(), tol);
  const bool second = approx_eq(g.a, g.d.conj(), tol) && approx_eq(g.b, -g.c.conj(), tol);
  return first || second;
}

}  // namespace

bool is_system(const std::vector<Mat2>& gens, const Quaternion& q, double eps) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Mat2& g) { return generator_fixes_system(g, q, eps); });
}

bool is_system_by_conjugation(const std::vector<Mat2>& gens, const Quaternion& q, double eps) {
  const Mat2 u = basis_change(q);
  const double tol = system_tolerance(q, eps);
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Mat2& g) { return is_monomial(conjugate_by(u, g, eps), tol); });
}

SolutionSet solve_monomial(const std::vector<Quaternion>& L_gens,
                           const std::vector<Quaternion>& H_gens, double eps) {
  SolutionSet out;
  out.includes_standard = true;
  const double tol = 8 * eps;

  bool unit_only = false;
  for (const auto& h : H_gens) {
    if (approx_eq(h, 1.0, tol)) continue;
    if (!approx_eq(h, -1.0, tol)) {
      out.note = "a diagonal reflection of order > 2 leaves only the standard system";
      return out;
    }
    unit_only = true;
  }

  // Re(beta q) = <conj(beta), q>, so the hyperplane normal is conj(beta).
  std::vector<Quaternion> normals;
  for (const auto& b : L_gens) normals.push_back(b.conj());

  auto satisfies_all = [&](const Quaternion& q) {
    for (const auto& b : L_gens) {
      const bool linear = std::abs(re_of_product(b, q)) <= tol;
      const bool point = approx_eq(q, b.conj(), tol) || approx_eq(q, -b.conj(), tol);
      if (!linear && !point) return false;
    }
    return true;
  };
  for (const auto& b : L_gens) {
    const Quaternion q = b.conj() / b.norm();
    if (satisfies_all(q)) out.add_point(q, "q = +-conj(beta)", eps);
  }

  const auto kernel = common_kernel(normals, eps);
  switch (kernel.size()) {
    case 0:
      break;
    case 1:
      out.add_point(kernel[0], "unit vector of the common kernel", eps);
      if (!unit_only) out.components.push_back(make_segment(kernel[0], "common kernel, 0<|q|<1"));
      break;
    case 2:
      out.components.push_back(unit_only ? make_circle(kernel[0], kernel[1], "common kernel, |q|=1")
                                         : make_disk(kernel[0], kernel[1], "common kernel"));
      break;
    case 3:
      if (unit_only && std::abs(kernel[0].re()) <= tol && std::abs(kernel[1].re()) <= tol &&
          std::abs(kernel[2].re()) <= tol) {
        out.components.push_back(make_sphere(0.0, 1.0, "pure unit q"));
        break;
      }
      [[fallthrough]];
    default:
      throw Error(ErrorKind::Unsupported,
                  "solve_monomial: " + std::to_string(kernel.size()) + "-dimensional kernel");
  }
  out.remove_covered_points(tol);
  return out;
}

SolutionSet solve_real(const std::vector<Mat2>& gens, double eps) {
  const double tol = 16 * eps;
  std::vector<LocalSet> sets;
  for (const auto& g : gens) {
    if (!is_real(g, eps)) throw Error(ErrorKind::BadParameter, "solve_real: non-real generator");
    LocalSet s = local_set(g, tol);
    if (!s.everything) sets.push_back(std::move(s));
  }
  if (sets.empty()) throw Error(ErrorKind::Unsupported, "solve_real: every q is a system");

  for (const auto& c : sets.front().curves) {
    const bool shared = std::all_of(sets.begin() + 1, sets.end(), [&](const LocalSet& s) {
      return std::any_of(s.curves.begin(), s.curves.end(),
                         [&](const Curve& d) { return same_curve(c, d, tol); });
    });
    if (shared) throw Error(ErrorKind::Unsupported, "solve_real: a whole curve of solutions");
  }

  std::vector<cplx> candidates;
  std::vector<Curve> curves;
  for (const auto& s : sets) {
    candidates.insert(candidates.end(), s.points.begin(), s.points.end());
    curves.insert(curves.end(), s.curves.begin(), s.curves.end());
  }
  for (std::size_t m = 0; m < curves.size(); ++m) {
    for (std::size_t n = m + 1; n < curves.size(); ++n) intersect(curves[m], curves[n], tol, candidates);
  }

  SolutionSet out;
  for (const cplx& z : candidates) {
    const double x = z.real(), y = std::abs(z.imag());
    if (!is_system(gens, Quaternion(x, y, 0, 0), eps)) continue;
    if (std::hypot(x, y) <= tol) {
      out.includes_standard = true;
    } else if (y <= tol) {
      out.add_point(x, "real root", eps);
    } else {
      add_sphere(out, x, y, eps);
    }
  }
  out.remove_covered_points(8 * eps);
  return out;
}

SolutionSet solve_complex_primitive(const std::vector<Mat2>& gens, double eps, std::size_t cap) {
  for (const auto& g : gens) {
    if (!is_complex(g, eps)) {
      throw Error(ErrorKind::PreconditionFailed, "solve_complex_primitive: non-complex generator");
    }
  }
  const FiniteGroup group = closure(gens, cap, eps);
  const Quaternion i = Quaternion::i();
  if (!group.contains(Mat2::diag(i, -i)) || !group.contains(Mat2::antidiag(i, i))) {
    throw Error(ErrorKind::PreconditionFailed,
                "closure lacks diag(i,-i) or [[0,i],[i,0]]");
  }
  SolutionSet out;
  out.includes_standard = is_system(gens, 0.0, eps);
  for (const Quaternion& q : {Quaternion(1.0), i}) {
    if (is_system(gens, q, eps)) out.add_point(q, "system of the common subgroup", eps);
  }
  if (std::all_of(gens.begin(), gens.end(), [&](const Mat2& g) { return passes_complex_criterion(g, eps); })) {
    out.components.push_back(make_circle(Quaternion::j(), Quaternion::k(), "q = zj, |z| = 1"));
  }
  out.remove_covered_points(8 * eps);
  return out;
}

SolutionSet sample_systems(const std::vector<Mat2>& gens, std::uint64_t seed, std::size_t samples,
                           double eps) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t passed = 0;
  const std::size_t on_circle = samples / 4;
  for (std::size_t n = 0; n < samples; ++n) {
    Quaternion q;
    if (n < on_circle) {
      const double t = 2 * constants::pi * static_cast<double>(n) / static_cast<double>(on_circle);
      q = Quaternion(0, 0, std::cos(t), std::sin(t));
    } else {
      q = Quaternion(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
      q = q / q.norm();
      if (n % 2 == 0) q = std::cbrt(unit(rng)) * q;
    }
    if (is_system(gens, q, eps)) ++passed;
  }
  SolutionSet out;
  out.determined = false;
  out.includes_standard = is_system(gens, 0.0, eps);
  out.note = "undetermined: " + std::to_string(passed) + " of " + std::to_string(samples) +
             " sampled q passed";
  return out;
}

SolutionSet solve(const std::vector<Mat2>& gens, double eps) {
  const double tol = 8 * eps;
  std::vector<Quaternion> L, H;
  bool reflection_form = true;
  for (const auto& g : gens) {
    if (is_antidiagonal(g, tol) && approx_eq(g.c, g.b.conj(), tol)) {
      L.push_back(g.b);
    } else if (is_diagonal(g, tol) && approx_eq(g.d, 1.0, tol)) {
      H.push_back(g.a);
    } else if (is_diagonal(g, tol) && approx_eq(g.a, 1.0, tol)) {
      H.push_back(g.d);
    } else {
      reflection_form = false;
      break;
    }
  }
  if (reflection_form) return solve_monomial(L, H, eps);
  if (std::all_of(gens.begin(), gens.end(), [&](const Mat2& g) { return is_real(g, eps); })) {
    return solve_real(gens, eps);
  }
  if (std::all_of(gens.begin(), gens.end(), [&](const Mat2& g) { return is_complex(g, eps); })) {
    try {
      return solve_complex_primitive(gens, eps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
      return sample_systems(gens, 7, 2000, eps);
    }
  }
  throw Error(ErrorKind::Unsupported, "non-monomial quaternionic generators");
}

Monomialized monomialize(const std::vector<Mat2>& gens, const Quaternion& q, double eps,
                         std::size_t cap) {
  if (!is_system(gens, q, eps)) throw Error(ErrorKind::NotASystem, "(1," + format(q) + ")");
  const Mat2 u = basis_change(q);
  Monomialized out{{}, {QuaternionSet(eps), QuaternionSet(eps)}};
  for (const auto& g : gens) out.generators.push_back(conjugate_by(u, g, eps));
  out.data = extract_LH(closure(out.generators, cap, eps));
  return out;
}

int quaternion_order(const Quaternion& q, double eps, int cap) {
  Quaternion p = q;
  for (int m = 1; m <= cap; ++m) {
    if (approx_eq(p, 1.0, 8 * eps)) return m;
    p = p * q;
  }
  throw Error(ErrorKind::NotFiniteOrder, format(q));
}

SystemSignature identify_system(const QuaternionSet& L, double eps) {
  if (L.empty() || !is_circ_closed(L, eps)) throw Error(ErrorKind::NotClosed, "reflection system");
  const Quaternion shift = L[0].inverse(eps);
  std::vector<Quaternion> normalized;
  for (const auto& l : L) normalized.push_back(shift * l);
  const QuaternionSet K = quaternion_closure(normalized, 4096, eps);

  SystemSignature sig{L.size(), K.size(), "unknown"};
  int max_order = 1;
  for (const auto& k : K) max_order = std::max(max_order, quaternion_order(k, eps, 8192));
  const std::size_t order = K.size();

  if (static_cast<std::size_t>(max_order) == order) {
    sig.label = "L(" + std::to_string(L.size()) + ")^C" + std::to_string(order);
    return sig;
  }
  if (order % 4 == 0 && static_cast<std::size_t>(max_order) * 2 == order) {
    const int n = static_cast<int>(order / 4);
    // L meets the cyclic part <w> of the dicyclic group in 2n/a elements and
    // its complement in 2n/b elements.
    Quaternion generator = 1.0;
    for (const auto& k : K) {
      if (quaternion_order(k, eps, 8192) == 2 * n) {
        generator = k;
        break;
      }
    }
    QuaternionSet cyclic = quaternion_closure({generator}, 4096, eps);
    std::size_t inside = 0;
    for (const auto& l : normalized) inside += cyclic.contains(l) ? 1 : 0;
    const std::size_t outside = normalized.size() - inside;
    if (inside > 0 && outside > 0 && (2 * n) % inside == 0 && (2 * n) % outside == 0) {
      std::size_t a = 2 * n / inside, b = 2 * n / outside;
      if (a > b) std::swap(a, b);
      sig.label = "L(" + std::to_string(a) + "," + std::to_string(b) + ")^(" + std::to_string(n) + ")";
    }
    return sig;
  }
  struct Known {
    std::size_t size, order;
    const char* label;
  };
  static const Known table[] = {
      {24, 24, "T"},       {12, 24, "L12^T"},  {48, 48, "O"},       {32, 48, "L32^O"},
      {20, 48, "L20^O"},   {18, 48, "L18^O"},  {14, 48, "L14^O"},   {120, 120, "I"},
      {32, 120, "L32^I"},  {30, 120, "L30^I"}, {20, 120, "L20^I"}};
  for (const auto& k : table) {
    if (k.size == sig.size && k.order == order) sig.label = k.label;
  }
  return sig;
}

}  // namespace qrefl

#include "qrefl/group.hpp"

#include <sstream>

#include "qrefl/error.hpp"

namespace qrefl {

QuaternionSet::QuaternionSet(std::initializer_list<Quaternion> items, double eps) : eps_(eps) {
  for (const auto& q : items) insert(q);
}

std::size_t QuaternionSet::find(const Quaternion& q) const {
  return index_.find(q.coeffs(), [&](std::size_t id) { return approx_eq(items_[id], q, eps_); });
}

bool QuaternionSet::insert(const Quaternion& q) {
  if (contains(q)) return false;
  index_.insert(q.coeffs(), items_.size());
  items_.push_back(q);
  return true;
}

bool QuaternionSet::same_as(const QuaternionSet& other) const {
  if (size() != other.size()) return false;
  for (const auto& q : items_) {
    if (!other.contains(q)) return false;
  }
  return true;
}

bool FiniteGroup::contains(const Mat2& g) const { return index_of(g) != GridIndex<16>::npos; }

std::size_t FiniteGroup::index_of(const Mat2& g) const {
  return index_.find(g.coeffs(), [&](std::size_t id) { return approx_eq(elements_[id], g, eps_); });
}

bool FiniteGroup::insert(const Mat2& g) {
  if (contains(g)) return false;
  index_.insert(g.coeffs(), elements_.size());
  elements_.push_back(g);
  return true;
}

std::string FiniteGroup::serialize() const {
  std::ostringstream os;
  os << "# generators " << generators_.size() << '\n';
  for (const auto& g : generators_) os << format(g) << '\n';
  os << "# elements " << elements_.size() << '\n';
  for (const auto& g : elements_) os << format(g) << '\n';
  return os.str();
}

FiniteGroup closure(const std::vector<Mat2>& gens, std::size_t cap, double eps) {
  if (cap < 1) throw Error(ErrorKind::BadParameter, "closure cap must be >= 1");
  for (const auto& g : gens) {
    if (!is_unitary(g, eps)) throw Error(ErrorKind::NotUnitary, "generator " + format(g));
  }
  FiniteGroup group;
  group.eps_ = eps;
  group.generators_ = gens;
  group.insert(Mat2::identity());
  // Right multiplication by generators from I reaches every word; finiteness
  // makes the generated monoid a group.
  for (std::size_t next = 0; next < group.elements_.size(); ++next) {
    for (const auto& g : gens) {
      Mat2 product = group.elements_[next] * g;
      if (group.insert(product) && group.elements_.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "closure exceeded " + std::to_string(cap) + " elements");
      }
    }
  }
  return group;
}

FiniteGroup deserialize_group(std::string_view text, std::size_t cap) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<Mat2> gens;
  bool in_gens = false;
  while (std::getline(is, line)) {
    if (line.rfind("# generators", 0) == 0) {
      in_gens = true;
      continue;
    }
    if (line.rfind("# elements", 0) == 0) break;
    if (in_gens && !line.empty()) gens.push_back(parse_mat2(line));
  }
  return closure(gens, cap);
}

QuaternionSet quaternion_closure(const std::vector<Quaternion>& gens, std::size_t cap, double eps) {
  QuaternionSet out(eps);
  out.insert(1.0);
  for (std::size_t next = 0; next < out.size(); ++next) {
    for (const auto& g : gens) {
      if (out.insert(out[next] * g) && out.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "quaternion closure exceeded " + std::to_string(cap) + " elements");
      }
    }
  }
  return out;
}

std::vector<Mat2> reflections(const FiniteGroup& g) {
  std::vector<Mat2> out;
  for (const auto& m : g.elements()) {
    if (reflection_info(m, g.tolerance()).is_reflection) out.push_back(m);
  }
  return out;
}

ReflectionData extract_LH(const FiniteGroup& g) {
  const double eps = g.tolerance();
  ReflectionData data{QuaternionSet(eps), QuaternionSet(eps)};
  data.H.insert(1.0);
  for (const auto& m : reflections(g)) {
    if (is_antidiagonal(m, eps)) {
      data.L.insert(m.b);
      ++data.swap_count;
    } else if (is_diagonal(m, eps)) {
      data.H.insert(approx_eq(m.d, 1.0, eps) ? m.a : m.d);
      ++data.diagonal_count;
    } else {
      throw Error(ErrorKind::NotMonomialForm, "reflection " + format(m));
    }
  }
  return data;
}

Quaternion circ(const Quaternion& a, const Quaternion& b, double eps) {
  return a * b.inverse(eps) * a;
}

QuaternionSet close_refsystem(const std::vector<Quaternion>& s, std::size_t cap, double eps) {
  QuaternionSet out(eps);
  for (const auto& q : s) out.insert(q);
  // Each new element is combined with every earlier one in both orders.
  for (std::size_t next = 0; next < out.size(); ++next) {
    for (std::size_t other = 0; other <= next; ++other) {
      const Quaternion x = out[next];
      const Quaternion y = out[other];
      for (const Quaternion& q : {circ(x, y, eps), circ(y, x, eps)}) {
        if (out.insert(q) && out.size() > cap) {
          throw Error(ErrorKind::CapExceeded,
                      "reflection system exceeded " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  return out;
}

bool is_circ_closed(const QuaternionSet& l, double eps) {
  for (const auto& x : l) {
    for (const auto& y : l) {
      if (!l.contains(circ(x, y, eps))) return false;
    }
  }
  return true;
}

const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

std::optional<Equivalence> systems_equivalent(const QuaternionSet& l1, const QuaternionSet& l2,
                                              double eps) {
  if (l1.size() != l2.size() || l1.empty()) return std::nullopt;
  const Quaternion anchor_inv = l1[0].inverse(eps);
  auto matches = [&](const Quaternion& x, Side side) {
    for (const auto& l : l1) {
      if (!l2.contains(side == Side::left ? x * l : l * x)) return false;
    }
    return true;
  };
  for (Side side : {Side::left, Side::right}) {
    for (const auto& target : l2) {
      const Quaternion x = side == Side::left ? target * anchor_inv : anchor_inv * target;
      if (matches(x, side)) return Equivalence{x, side};
    }
  }
  return std::nullopt;
}

bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g) {
  if (h.order() > g.order() || g.order() % h.order() != 0) return false;
  for (const auto& m : h.elements()) {
    if (!g.contains(m)) return false;
  }
  return true;
}

bool conjugate_equal(const FiniteGroup& g1, const FiniteGroup& g2, const Mat2& u) {
  if (g1.order() != g2.order()) return false;
  const double eps = g2.tolerance();
  for (const auto& m : g1.elements()) {
    if (!g2.contains(conjugate_by(u, m, eps))) return false;
  }
  return true;
}

}  // namespace qrefl

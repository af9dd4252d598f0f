#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrefl/grid_index.hpp"
#include "qrefl/mat2.hpp"

namespace qrefl {

inline constexpr std::size_t kDefaultClosureCap = 65536;

/// Insertion-ordered set of quaternions with tolerance-aware membership.
class QuaternionSet {
 public:
  explicit QuaternionSet(double eps = tolerance()) : eps_(eps) {}
  QuaternionSet(std::initializer_list<Quaternion> items, double eps = tolerance());

  /// Returns true if q was new.
  bool insert(const Quaternion& q);
  bool contains(const Quaternion& q) const { return find(q) != npos; }
  std::size_t find(const Quaternion& q) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Quaternion>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Quaternion& operator[](std::size_t i) const { return items_[i]; }

  /// Same size and mutual containment.
  bool same_as(const QuaternionSet& other) const;

  static constexpr std::size_t npos = GridIndex<4>::npos;

 private:
  double eps_;
  std::vector<Quaternion> items_;
  GridIndex<4> index_;
};

/// Closed set of unitary 2x2 matrices with its generators. Immutable after
/// construction through closure().
class FiniteGroup {
 public:
  const std::vector<Mat2>& elements() const { return elements_; }
  const std::vector<Mat2>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  double tolerance() const { return eps_; }

  bool contains(const Mat2& g) const;
  std::size_t index_of(const Mat2& g) const;

  /// One matrix per line in format(Mat2) syntax; generators first as
  /// "# generators" block, then "# elements".
  std::string serialize() const;

  friend FiniteGroup closure(const std::vector<Mat2>& gens, std::size_t cap, double eps);

 private:
  double eps_ = 1e-9;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;
  GridIndex<16> index_;

  bool insert(const Mat2& g);
};

/// Breadth-first saturation under right multiplication by the generators,
/// starting from I. Deterministic insertion order. Throws Error(CapExceeded)
/// past `cap` elements and Error(NotUnitary) for a non-unitary generator.
FiniteGroup closure(const std::vector<Mat2>& gens, std::size_t cap, double eps);
inline FiniteGroup closure(const std::vector<Mat2>& gens, std::size_t cap = kDefaultClosureCap) {
  return closure(gens, cap, tolerance());
}

/// Parses the serialize() format back into a group by re-closing its generators.
FiniteGroup deserialize_group(std::string_view text, std::size_t cap = kDefaultClosureCap);

/// Multiplicative closure of a set of unit quaternions.
QuaternionSet quaternion_closure(const std::vector<Quaternion>& gens, std::size_t cap = 4096,
                                 double eps = tolerance());

std::vector<Mat2> reflections(const FiniteGroup& g);

struct ReflectionData {
  QuaternionSet L;  ///< b of each antidiagonal reflection [[0,b],[conj b,0]]
  QuaternionSet H;  ///< h of each diagonal reflection diag(h,1) or diag(1,h), plus 1
  std::size_t swap_count = 0;
  std::size_t diagonal_count = 0;

  std::size_t reflection_count() const { return swap_count + diagonal_count; }
  /// |L| + 2(|H| - 1)
  std::size_t predicted_count() const { return L.size() + 2 * (H.size() - 1); }
};

/// Throws Error(NotMonomialForm) if some reflection is not monomial.
ReflectionData extract_LH(const FiniteGroup& g);

/// a b^{-1} a. Throws Error(ZeroDivision) for |b| <= eps.
Quaternion circ(const Quaternion& a, const Quaternion& b, double eps = tolerance());

/// Closure of `s` under circ. Throws Error(CapExceeded).
QuaternionSet close_refsystem(const std::vector<Quaternion>& s, std::size_t cap = 4096,
                              double eps = tolerance());
bool is_circ_closed(const QuaternionSet& l, double eps = tolerance());

enum class Side { left, right };
const char* to_string(Side side);

struct Equivalence {
  Quaternion x;
  Side side;
};

/// A unit x with x L1 = L2 (left, tried first) or L1 x = L2.
std::optional<Equivalence> systems_equivalent(const QuaternionSet& l1, const QuaternionSet& l2,
                                              double eps = tolerance());

bool is_subgroup(const FiniteGroup& h, const FiniteGroup& g);

/// {U* g U : g in G1} == G2 as sets. Throws Error(NotUnitary).
bool conjugate_equal(const FiniteGroup& g1, const FiniteGroup& g2, const Mat2& u);

}  // namespace qrefl

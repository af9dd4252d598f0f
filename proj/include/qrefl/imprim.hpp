#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrefl/catalog.hpp"
#include "qrefl/group.hpp"
#include "qrefl/solution_set.hpp"

namespace qrefl {

/// Whether (1,q) spans one line of a system of imprimitivity for the group
/// generated by `gens`: for every generator [[a,b],[c,d]] one of
/// a + bq + conj(q)c + conj(q)dq or qa + qbq - c - dq vanishes within
/// 8 eps max(1, |q|^2).
bool is_system(const std::vector<Mat2>& gens, const Quaternion& q, double eps);
inline bool is_system(const std::vector<Mat2>& gens, const Quaternion& q) {
  return is_system(gens, q, tolerance());
}

/// The same question asked through the change of basis: every
/// U* g U with U = basis_change(q) is monomial.
bool is_system_by_conjugation(const std::vector<Mat2>& gens, const Quaternion& q, double eps);

/// Systems of G(K,L,H) from the generating sets of its reflection system and
/// diagonal part. Exact: candidate points q = +-conj(beta), plus the common
/// kernel of the hyperplanes Re(beta q) = 0 cut down by h = -|q|^2.
SolutionSet solve_monomial(const std::vector<Quaternion>& L_gens,
                           const std::vector<Quaternion>& H_gens, double eps = tolerance());

/// Groups with real generators. Writing q = x + y u (u pure unit) reduces both
/// conditions to complex polynomial equations in z = x + iy; every complex
/// root with y != 0 lifts to a 2-sphere of quaternionic solutions.
SolutionSet solve_real(const std::vector<Mat2>& gens, double eps = tolerance());

/// Groups with complex generators whose closure contains diag(i,-i) and
/// [[0,i],[i,0]]. Throws Error(PreconditionFailed) otherwise.
SolutionSet solve_complex_primitive(const std::vector<Mat2>& gens, double eps = tolerance(),
                                    std::size_t cap = kDefaultClosureCap);

/// Sampling-only check used when no exact method applies. Never asserts a
/// negative: the result has determined = false.
SolutionSet sample_systems(const std::vector<Mat2>& gens, std::uint64_t seed = 7,
                           std::size_t samples = 2000, double eps = tolerance());

/// Dispatches on the generator shapes: reflection-form monomial, real,
/// complex (falling back to sampling when the complex precondition fails).
/// Throws Error(Unsupported) for non-monomial quaternionic generators.
SolutionSet solve(const std::vector<Mat2>& gens, double eps = tolerance());
inline SolutionSet solve(const CatalogEntry& entry, double eps = tolerance()) {
  return solve(entry.generators, eps);
}

struct Monomialized {
  std::vector<Mat2> generators;
  ReflectionData data;
};
/// Conjugates every generator by basis_change(q) and takes the reflection
/// inventory of the resulting monomial group. Throws Error(NotASystem).
Monomialized monomialize(const std::vector<Mat2>& gens, const Quaternion& q,
                         double eps = tolerance(), std::size_t cap = kDefaultClosureCap);

struct SystemSignature {
  std::size_t size = 0;        ///< |L|
  std::size_t group_order = 0;  ///< |K|, K generated by L after normalizing 1 into L
  std::string label;            ///< e.g. "L12^T", "L(1,2)^(3)", "unknown"
};
/// Names a reflection system by its (|L|, |K|) signature. Throws
/// Error(NotClosed) if L is not closed under circ.
SystemSignature identify_system(const QuaternionSet& L, double eps = tolerance());

/// Orders of a finite unit quaternion under repeated multiplication, up to cap.
int quaternion_order(const Quaternion& q, double eps, int cap = 240);

}  // namespace qrefl

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qrefl/quaternion.hpp"

namespace qrefl {

/// 2x2 quaternionic matrix [[a, b], [c, d]], acting on the left of column
/// vectors in the right vector space H^2.
struct Mat2 {
  Quaternion a, b, c, d;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(const Quaternion& x, const Quaternion& y) { return {x, 0.0, 0.0, y}; }
  static Mat2 antidiag(const Quaternion& x, const Quaternion& y) { return {0.0, x, y, 0.0}; }

  std::array<double, 16> coeffs() const;
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 operator*(const Quaternion& s, const Mat2& m);  // left scalar multiple of every entry
Mat2 operator+(const Mat2& m, const Mat2& n);
Mat2 operator-(const Mat2& m, const Mat2& n);

inline Mat2 mat_mul(const Mat2& m, const Mat2& n) { return m * n; }

/// Conjugate transpose.
Mat2 adjoint(const Mat2& m);

/// Largest entrywise quaternion distance.
double max_entry_distance(const Mat2& m, const Mat2& n);

bool approx_eq(const Mat2& m, const Mat2& n, double eps);

/// M* M = I within 8 eps.
bool is_unitary(const Mat2& m, double eps);
inline bool is_unitary(const Mat2& m) { return is_unitary(m, tolerance()); }

/// Exactly one of {a,d both zero} or {b,c both zero}.
bool is_monomial(const Mat2& m, double eps);
inline bool is_monomial(const Mat2& m) { return is_monomial(m, tolerance()); }

bool is_diagonal(const Mat2& m, double eps);
bool is_antidiagonal(const Mat2& m, double eps);

/// U = (1/sqrt(1+|q|^2)) [[1, conj(q)], [q, -1]]; unitary with U^2 = I.
Mat2 basis_change(const Quaternion& q);

/// U* g U. Throws Error(NotUnitary) if U fails is_unitary.
Mat2 conjugate_by(const Mat2& u, const Mat2& g, double eps);
inline Mat2 conjugate_by(const Mat2& u, const Mat2& g) { return conjugate_by(u, g, tolerance()); }

/// Quaternionic dimension of {v : M v = 0}, via pivoted elimination with a
/// 16 eps rank threshold.
int kernel_dimension(const Mat2& m, double eps);

/// Least m in [1, cap] with g^m = I; throws Error(NotFiniteOrder) otherwise.
int element_order(const Mat2& g, double eps, int cap = 120);

enum class ReflectionKind { swap, diagonal, other };
const char* to_string(ReflectionKind kind);

struct ReflectionInfo {
  bool is_reflection = false;
  int order = 1;
  ReflectionKind kind = ReflectionKind::other;
};

/// Reflection test (g != I fixing a quaternionic line pointwise), order, and
/// monomial type.
ReflectionInfo reflection_info(const Mat2& g, double eps, int order_cap = 120);
inline ReflectionInfo reflection_info(const Mat2& g) { return reflection_info(g, tolerance()); }

/// Row-major, entries comma-separated, rows semicolon-separated:
/// "a, b; c, d" with quaternion entries in parse_quaternion syntax.
std::string format(const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat2& m);
Mat2 parse_mat2(std::string_view text);

}  // namespace qrefl

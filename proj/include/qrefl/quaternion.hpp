#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qrefl {

/// Global comparison tolerance (default 1e-9). Every `eps` parameter in the
/// library defaults to this value.
double tolerance() noexcept;
void set_tolerance(double eps);

/// RAII override of the global tolerance.
class ScopedTolerance {
 public:
  explicit ScopedTolerance(double eps) : saved_(tolerance()) { set_tolerance(eps); }
  ~ScopedTolerance() { set_tolerance(saved_); }
  ScopedTolerance(const ScopedTolerance&) = delete;
  ScopedTolerance& operator=(const ScopedTolerance&) = delete;

 private:
  double saved_;
};

/// q = a + b i + c j + d k over doubles.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : a(re) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// e^{i theta}
  static Quaternion from_angle(double theta) { return {std::cos(theta), std::sin(theta), 0, 0}; }

  constexpr std::array<double, 4> coeffs() const { return {a, b, c, d}; }

  constexpr double re() const { return a; }
  constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
  constexpr Quaternion pure() const { return {0, b, c, d}; }
  constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
  double norm() const { return std::sqrt(norm2()); }

  /// Throws Error(ZeroDivision) when norm() <= eps.
  Quaternion inverse(double eps) const;
  Quaternion inverse() const { return inverse(tolerance()); }

  constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    a *= s; b *= s; c *= s; d *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator*(Quaternion p, double s) { return p *= s; }
constexpr Quaternion operator*(double s, Quaternion p) { return p *= s; }
constexpr Quaternion operator/(Quaternion p, double s) { return p *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

struct QuaternionParts {
  double re;
  Quaternion conj;
  double norm;
};

inline QuaternionParts parts(const Quaternion& q) { return {q.re(), q.conj(), q.norm()}; }

inline double distance(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

/// True iff |p - q| <= eps.
inline bool approx_eq(const Quaternion& p, const Quaternion& q, double eps) {
  return distance(p, q) <= eps;
}
inline bool approx_eq(const Quaternion& p, const Quaternion& q) {
  return approx_eq(p, q, tolerance());
}

inline bool is_zero(const Quaternion& q, double eps) { return q.norm() <= eps; }

/// Real part of the product, Re(p q), without forming the full product.
constexpr double re_of_product(const Quaternion& p, const Quaternion& q) {
  return p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d;
}

/// Real-linear dot product of coefficient vectors.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
}

/// Sign-normalizes a unit quaternion so the first coefficient of magnitude
/// above eps is positive. Non-unit inputs are returned unchanged.
Quaternion sign_normalize(const Quaternion& q, double eps);

/// "a+bi+cj+dk", each coefficient at 12 significant digits.
std::string format(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Parses arithmetic over the tokens: decimal literals, i, j, k, r2 (sqrt 2),
/// r3 (sqrt 3), r5 (sqrt 5), tau, sigma, w(n) = e^{pi i/n}, with + - * /,
/// parentheses and juxtaposition (e.g. "2i", "w(3)j", "(1+i+j+k)/2").
/// Throws Error(Parse).
Quaternion parse_quaternion(std::string_view text);

namespace constants {
inline const double sqrt2 = std::sqrt(2.0);
inline const double sqrt3 = std::sqrt(3.0);
inline const double sqrt5 = std::sqrt(5.0);
inline const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double sigma = 1.0 - tau;
inline const double pi = 3.14159265358979323846;
}  // namespace constants

/// e^{pi i/n}, a primitive 2n-th root of unity.
inline Quaternion omega_half(int n) { return Quaternion::from_angle(constants::pi / n); }
/// e^{2 pi i/n}, a primitive n-th root of unity.
inline Quaternion omega_full(int n) { return Quaternion::from_angle(2.0 * constants::pi / n); }

/// Integer power by repeated multiplication; negative powers use inverse().
Quaternion pow(const Quaternion& q, int m);

}  // namespace qrefl

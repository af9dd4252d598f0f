#pragma once

// Independent reference computations. Quaternions go through the faithful
// representation a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]] in M_2(C),
// so products here never touch the library's Hamilton formula.

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "qrefl/mat2.hpp"

namespace oracle {

using cplx = std::complex<double>;
using C2 = std::array<cplx, 4>;  // row-major 2x2 complex

inline C2 embed(const qrefl::Quaternion& q) {
  return {cplx(q.a, q.b), cplx(q.c, q.d), cplx(-q.c, q.d), cplx(q.a, -q.b)};
}

inline qrefl::Quaternion unembed(const C2& m) {
  return {m[0].real(), m[0].imag(), m[1].real(), m[1].imag()};
}

inline C2 mul(const C2& x, const C2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline qrefl::Quaternion product(const qrefl::Quaternion& p, const qrefl::Quaternion& q) {
  return unembed(mul(embed(p), embed(q)));
}

/// |q|^2 as the determinant of the embedding.
inline double norm2(const qrefl::Quaternion& q) {
  const C2 m = embed(q);
  return (m[0] * m[3] - m[1] * m[2]).real();
}

/// 2x2 quaternionic matrix as a 4x4 complex matrix (blocks of embeddings).
using C4 = std::array<std::array<cplx, 4>, 4>;

inline C4 embed(const qrefl::Mat2& m) {
  C4 out{};
  const qrefl::Quaternion* e[2][2] = {{&m.a, &m.b}, {&m.c, &m.d}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const C2 b = embed(*e[r][c]);
      out[2 * r][2 * c] = b[0];
      out[2 * r][2 * c + 1] = b[1];
      out[2 * r + 1][2 * c] = b[2];
      out[2 * r + 1][2 * c + 1] = b[3];
    }
  }
  return out;
}

inline C4 mul(const C4& x, const C4& y) {
  C4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) out[r][c] += x[r][k] * y[k][c];
  return out;
}

inline qrefl::Mat2 unembed(const C4& m) {
  auto block = [&](int r, int c) {
    return unembed(C2{m[2 * r][2 * c], m[2 * r][2 * c + 1], m[2 * r + 1][2 * c], m[2 * r + 1][2 * c + 1]});
  };
  return {block(0, 0), block(0, 1), block(1, 0), block(1, 1)};
}

inline qrefl::Mat2 product(const qrefl::Mat2& x, const qrefl::Mat2& y) {
  return unembed(mul(embed(x), embed(y)));
}

inline double entry_distance(const qrefl::Mat2& x, const qrefl::Mat2& y) {
  double d = 0;
  for (int n = 0; n < 16; ++n) d = std::max(d, std::abs(x.coeffs()[n] - y.coeffs()[n]));
  return d;
}

/// Quadratic-time closure: plain list scan, no hashing.
inline std::vector<qrefl::Mat2> naive_closure(const std::vector<qrefl::Mat2>& gens, double eps = 1e-8,
                                              std::size_t cap = 5000) {
  std::vector<qrefl::Mat2> elems{qrefl::Mat2::identity()};
  auto known = [&](const qrefl::Mat2& m) {
    for (const auto& e : elems)
      if (entry_distance(e, m) <= eps) return true;
    return false;
  };
  for (std::size_t n = 0; n < elems.size() && elems.size() <= cap; ++n) {
    for (const auto& g : gens) {
      const qrefl::Mat2 p = product(elems[n], g);
      if (!known(p)) elems.push_back(p);
    }
  }
  return elems;
}

inline std::vector<qrefl::Quaternion> naive_quaternion_closure(const std::vector<qrefl::Quaternion>& gens,
                                                               double eps = 1e-8) {
  std::vector<qrefl::Quaternion> elems{qrefl::Quaternion(1.0)};
  for (std::size_t n = 0; n < elems.size() && elems.size() < 10000; ++n) {
    for (const auto& g : gens) {
      const qrefl::Quaternion p = product(elems[n], g);
      bool found = false;
      for (const auto& e : elems) found = found || (e - p).norm() <= eps;
      if (!found) elems.push_back(p);
    }
  }
  return elems;
}

/// Whether {(1,q), (-conj q, 1)} is permuted by g, checked directly: g maps
/// each basis line to a right multiple of one of the two lines.
inline bool system_by_lines(const qrefl::Mat2& g, const qrefl::Quaternion& q, double eps = 1e-7) {
  using qrefl::Quaternion;
  const Quaternion v1[2] = {1.0, q};
  const Quaternion v2[2] = {-q.conj(), 1.0};
  auto apply = [&](const Quaternion* v) {
    return std::array<Quaternion, 2>{product(g.a, v[0]) + product(g.b, v[1]),
                                     product(g.c, v[0]) + product(g.d, v[1])};
  };
  // w lies on the line v*H iff its component orthogonal to v vanishes:
  // w - v (|v|^-2 <v, w>) with <v, w> = conj(v0) w0 + conj(v1) w1.
  auto on_line = [&](const std::array<Quaternion, 2>& w, const Quaternion* v) {
    const double n2 = norm2(v[0]) + norm2(v[1]);
    const Quaternion inner = product(v[0].conj(), w[0]) + product(v[1].conj(), w[1]);
    const Quaternion s = inner / n2;
    return ((w[0] - product(v[0], s)).norm() + (w[1] - product(v[1], s)).norm()) <= eps;
  };
  const auto w1 = apply(v1);
  const auto w2 = apply(v2);
  return (on_line(w1, v1) && on_line(w2, v2)) || (on_line(w1, v2) && on_line(w2, v1));
}

inline bool system_by_lines(const std::vector<qrefl::Mat2>& gens, const qrefl::Quaternion& q,
                            double eps = 1e-7) {
  for (const auto& g : gens)
    if (!system_by_lines(g, q, eps)) return false;
  return true;
}

inline qrefl::Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  return {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
}

inline qrefl::Quaternion random_unit(std::mt19937_64& rng) {
  const auto q = random_quaternion(rng);
  return q / q.norm();
}

inline int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }

inline int divisors(long long m) {
  int c = 0;
  for (long long d = 1; d <= m; ++d) c += (m % d == 0);
  return c;
}

}  // namespace oracle

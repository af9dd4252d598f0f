#include "qrefl/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "qrefl/error.hpp"

namespace qrefl {

std::array<double, 16> Mat2::coeffs() const {
  std::array<double, 16> out{};
  const Quaternion* entries[4] = {&a, &b, &c, &d};
  for (int e = 0; e < 4; ++e) {
    auto q = entries[e]->coeffs();
    std::copy(q.begin(), q.end(), out.begin() + 4 * e);
  }
  return out;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

Mat2 operator*(const Quaternion& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Mat2 operator+(const Mat2& m, const Mat2& n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }

Mat2 operator-(const Mat2& m, const Mat2& n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }

Mat2 adjoint(const Mat2& m) { return {m.a.conj(), m.c.conj(), m.b.conj(), m.d.conj()}; }

double max_entry_distance(const Mat2& m, const Mat2& n) {
  return std::max({distance(m.a, n.a), distance(m.b, n.b), distance(m.c, n.c), distance(m.d, n.d)});
}

bool approx_eq(const Mat2& m, const Mat2& n, double eps) { return max_entry_distance(m, n) <= eps; }

bool is_unitary(const Mat2& m, double eps) {
  return approx_eq(adjoint(m) * m, Mat2::identity(), 8 * eps);
}

bool is_diagonal(const Mat2& m, double eps) { return is_zero(m.b, eps) && is_zero(m.c, eps); }

bool is_antidiagonal(const Mat2& m, double eps) { return is_zero(m.a, eps) && is_zero(m.d, eps); }

bool is_monomial(const Mat2& m, double eps) { return is_diagonal(m, eps) != is_antidiagonal(m, eps); }

Mat2 basis_change(const Quaternion& q) {
  const double s = 1.0 / std::sqrt(1.0 + q.norm2());
  return {s, s * q.conj(), s * q, -s};
}

Mat2 conjugate_by(const Mat2& u, const Mat2& g, double eps) {
  if (!is_unitary(u, eps)) throw Error(ErrorKind::NotUnitary, "change of basis " + format(u));
  return adjoint(u) * g * u;
}

int kernel_dimension(const Mat2& m, double eps) {
  const double tol = 16 * eps;
  const Quaternion* rows[2][2] = {{&m.a, &m.b}, {&m.c, &m.d}};
  int pr = 0, pc = 0;
  double best = -1.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      double n = rows[r][c]->norm();
      if (n > best) {
        best = n;
        pr = r;
        pc = c;
      }
    }
  }
  if (best <= tol) return 2;
  // Row operations are left multiplications: other -= (m[o][pc] m[pr][pc]^{-1}) row_pr.
  const int o = 1 - pr, oc = 1 - pc;
  const Quaternion factor = *rows[o][pc] * rows[pr][pc]->inverse(0.0);
  const Quaternion residual = *rows[o][oc] - factor * *rows[pr][oc];
  return residual.norm() <= tol ? 1 : 0;
}

int element_order(const Mat2& g, double eps, int cap) {
  Mat2 power = g;
  for (int m = 1; m <= cap; ++m) {
    if (approx_eq(power, Mat2::identity(), 8 * eps)) return m;
    power = power * g;
  }
  throw Error(ErrorKind::NotFiniteOrder, "no m <= " + std::to_string(cap) + " with g^m = I");
}

const char* to_string(ReflectionKind kind) {
  switch (kind) {
    case ReflectionKind::swap: return "swap";
    case ReflectionKind::diagonal: return "diagonal";
    case ReflectionKind::other: return "other";
  }
  return "other";
}

ReflectionInfo reflection_info(const Mat2& g, double eps, int order_cap) {
  ReflectionInfo info;
  info.order = element_order(g, eps, order_cap);
  if (info.order == 1) return info;
  info.is_reflection = kernel_dimension(g - Mat2::identity(), eps) == 1;
  if (is_antidiagonal(g, eps) && !is_diagonal(g, eps)) {
    info.kind = ReflectionKind::swap;
  } else if (is_diagonal(g, eps)) {
    info.kind = ReflectionKind::diagonal;
  }
  if (!info.is_reflection) info.kind = ReflectionKind::other;
  return info;
}

std::string format(const Mat2& m) {
  return format(m.a) + ", " + format(m.b) + "; " + format(m.c) + ", " + format(m.d);
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << format(m); }

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t p = 0; p <= s.size(); ++p) {
    if (p == s.size() || s[p] == sep) {
      out.push_back(s.substr(start, p - start));
      start = p + 1;
    }
  }
  return out;
}

}  // namespace

Mat2 parse_mat2(std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) throw Error(ErrorKind::Parse, "matrix needs 2 rows: " + std::string(text));
  Quaternion e[4];
  for (int r = 0; r < 2; ++r) {
    auto cols = split(rows[r], ',');
    if (cols.size() != 2) {
      throw Error(ErrorKind::Parse, "matrix row needs 2 entries: " + std::string(rows[r]));
    }
    e[2 * r] = parse_quaternion(cols[0]);
    e[2 * r + 1] = parse_quaternion(cols[1]);
  }
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace qrefl

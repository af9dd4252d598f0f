#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qrefl/catalog.hpp"
#include "qrefl/error.hpp"
#include "qrefl/mat2.hpp"

using namespace qrefl;

namespace {

const double eps = 1e-9;
const double h = 1 / std::sqrt(2.0);
const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();

void check_close(const Mat2& m, const Mat2& n, double tol = 1e-12) {
  INFO(format(m), " vs ", format(n));
  CHECK(max_entry_distance(m, n) <= tol);
}

Mat2 random_unitary(std::mt19937_64& rng) {
  // diag(u1,u2) * basis_change(q) * diag(u3,1) is unitary for unit u's.
  const auto q = oracle::random_quaternion(rng);
  return Mat2::diag(oracle::random_unit(rng), oracle::random_unit(rng)) * basis_change(q) *
         Mat2::diag(oracle::random_unit(rng), 1.0);
}

}  // namespace

TEST_CASE("products against the complex 4x4 representation") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 2000; ++n) {
    const Mat2 x{oracle::random_quaternion(rng), oracle::random_quaternion(rng), oracle::random_quaternion(rng),
                 oracle::random_quaternion(rng)};
    const Mat2 y = random_unitary(rng);
    REQUIRE(oracle::entry_distance(x * y, oracle::product(x, y)) <= 1e-12 * 16);
  }
}

TEST_CASE("mat_mul examples") {
  const Mat2 S = Mat2::diag(1.0, -1.0);
  check_close(mat_mul(S, S), Mat2::identity());
  const Mat2 F{h, h, h, -h};
  check_close(F * F, Mat2::identity(), 1e-15);
  const Mat2 R = Mat2::diag(1.0, -i);
  check_close(R * R, S);
  check_close(R * R * R * R, Mat2::identity());
}

TEST_CASE("adjoint") {
  const Mat2 m{0.0, j, -j, 0.0};
  check_close(adjoint(m), m);
  const Quaternion q{0.2, -0.3, 0.5, 0.1};
  check_close(adjoint(basis_change(q)), basis_change(q));
  check_close(adjoint(Mat2::identity()), Mat2::identity());
  std::mt19937_64 rng(22);
  for (int n = 0; n < 100; ++n) {
    const Mat2 x = random_unitary(rng);
    check_close(adjoint(adjoint(x)), x);
  }
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(Mat2::diag(1.0, -i)));
  CHECK_FALSE(is_unitary(Mat2{1.0, 1.0, 0.0, 1.0}));
  const Quaternion z = Quaternion::from_angle(0.7);
  CHECK(is_unitary(Mat2{h, h * z * j, h * z * j, h}));
}

TEST_CASE("is_monomial") {
  const Quaternion w = omega_full(5);
  CHECK(is_monomial(Mat2::antidiag(w, w.conj())));
  CHECK_FALSE(is_monomial(Mat2{h, h, h, -h}));
  CHECK_FALSE(is_monomial(Mat2{0.0, 0.0, 0.0, 0.0}));
  CHECK(is_monomial(Mat2::diag(i, j)));
  CHECK(is_diagonal(Mat2::diag(i, j), eps));
  CHECK(is_antidiagonal(Mat2::antidiag(i, j), eps));
}

TEST_CASE("basis_change") {
  check_close(basis_change(0.0), Mat2::diag(1.0, -1.0));
  check_close(basis_change(i), Mat2{h, -h * i, h * i, -h});
  const Quaternion z = Quaternion::from_angle(1.1);
  const Quaternion zj = z * j;
  check_close(basis_change(zj), Mat2{h, -h * zj, h * zj, -h});
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 50; ++n) {
      const Quaternion q = r * oracle::random_unit(rng);
      const Mat2 u = basis_change(q);
      REQUIRE(is_unitary(u));
      check_close(adjoint(u), u);
      check_close(u * u, Mat2::identity(), 1e-14);
    }
  }
}

TEST_CASE("conjugate_by") {
  const Mat2 S = Mat2::diag(1.0, -1.0);
  check_close(conjugate_by(basis_change(i), S), Mat2{0.0, -i, i, 0.0}, 1e-15);
  check_close(conjugate_by(basis_change(j), Mat2{0.0, j, -j, 0.0}), Mat2::diag(-1.0, 1.0), 1e-15);
  const Mat2 g{h, h, h, -h};
  check_close(conjugate_by(Mat2::identity(), g), g);
  CHECK_THROWS_AS(conjugate_by(Mat2{1.0, 1.0, 0.0, 1.0}, g), Error);
}

TEST_CASE("conjugation preserves unitarity, order and reflections") {
  std::mt19937_64 rng(24);
  const auto& b = primitive_blocks();
  const std::vector<Mat2> samples = {b.F, b.R, b.Z, b.M, b.A, Mat2::antidiag(j, -j),
                                     diagonal_reflection(omega_half(4) * omega_half(4))};
  for (const auto& g : samples) {
    const auto info = reflection_info(g);
    for (int n = 0; n < 20; ++n) {
      const Mat2 u = random_unitary(rng);
      const Mat2 c = conjugate_by(u, g);
      REQUIRE(is_unitary(c));
      const auto ci = reflection_info(c);
      REQUIRE(ci.is_reflection == info.is_reflection);
      REQUIRE(ci.order == info.order);
    }
  }
  // q = 0 is the standard basis up to a sign on the second vector.
  for (const auto& g : samples) {
    CHECK(is_monomial(conjugate_by(basis_change(0.0), g), 8 * eps) == is_monomial(g, 8 * eps));
  }
}

TEST_CASE("kernel_dimension") {
  CHECK(kernel_dimension(Mat2{0.0, 0.0, 0.0, 0.0}, eps) == 2);
  CHECK(kernel_dimension(Mat2::identity(), eps) == 0);
  CHECK(kernel_dimension(Mat2::diag(0.0, 1.0), eps) == 1);
  // rank one with non-commuting entries: rows (1, j) and (i, ij)
  CHECK(kernel_dimension(Mat2{1.0, j, i, i * j}, eps) == 1);
  // (1, j) and (i, ji) are independent over H acting on the left
  CHECK(kernel_dimension(Mat2{1.0, j, i, j * i}, eps) == 0);
}

TEST_CASE("element_order") {
  CHECK(element_order(Mat2::identity(), eps) == 1);
  CHECK(element_order(Mat2::diag(1.0, -i), eps) == 4);
  CHECK(element_order(primitive_blocks().M, eps) == 5);
  CHECK_THROWS_AS(element_order(Mat2::diag(Quaternion::from_angle(1.0), 1.0), eps, 120), Error);
}

TEST_CASE("reflection_info") {
  const Quaternion b = Quaternion(h, h, 0, 0);
  auto info = reflection_info(Mat2::antidiag(b, b.conj()));
  CHECK(info.is_reflection);
  CHECK(info.order == 2);
  CHECK(info.kind == ReflectionKind::swap);

  const Quaternion w = omega_half(4);
  info = reflection_info(Mat2::diag(w * w, 1.0));
  CHECK(info.is_reflection);
  CHECK(info.order == 4);
  CHECK(info.kind == ReflectionKind::diagonal);

  info = reflection_info(Mat2::diag(1.0, -i));
  CHECK(info.is_reflection);
  CHECK(info.order == 4);
  CHECK(info.kind == ReflectionKind::diagonal);

  CHECK_FALSE(reflection_info(Mat2::identity()).is_reflection);
  CHECK_FALSE(reflection_info(Mat2::diag(-1.0, -1.0)).is_reflection);
  info = reflection_info(Mat2{h, h, h, -h});
  CHECK(info.is_reflection);
  CHECK(info.kind == ReflectionKind::other);
  CHECK(std::string(to_string(ReflectionKind::swap)) == "swap");
}

TEST_CASE("matrix text format round trip") {
  std::mt19937_64 rng(25);
  for (int n = 0; n < 200; ++n) {
    const Mat2 m = random_unitary(rng);
    REQUIRE(max_entry_distance(parse_mat2(format(m)), m) <= 1e-10);
  }
  check_close(parse_mat2("0, j; -j, 0"), Mat2{0.0, j, -j, 0.0});
  check_close(parse_mat2("(1+i)/r2, 0; 0, 1"), Mat2::diag(Quaternion(h, h, 0, 0), 1.0), 1e-15);
  CHECK_THROWS_AS(parse_mat2("1, 0; 0"), Error);
  CHECK_THROWS_AS(parse_mat2("1, 0, 0, 1"), Error);
}

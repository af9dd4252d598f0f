#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qrefl/error.hpp"
#include "qrefl/quaternion.hpp"
#include "qrefl/solution_set.hpp"

using namespace qrefl;

namespace {

const double eps = 1e-9;

void check_close(const Quaternion& p, const Quaternion& q, double tol = 1e-12) {
  INFO(format(p), " vs ", format(q));
  CHECK(distance(p, q) <= tol);
}

}  // namespace

TEST_CASE("products against the complex-matrix representation") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 10000; ++n) {
    const auto p = oracle::random_quaternion(rng, 2.0);
    const auto q = oracle::random_quaternion(rng, 2.0);
    REQUIRE(distance(p * q, oracle::product(p, q)) <= 1e-12 * (1 + p.norm() * q.norm()));
    REQUIRE(std::abs(q.norm2() - oracle::norm2(q)) <= 1e-12 * (1 + q.norm2()));
  }
}

TEST_CASE("basis multiplication table") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  check_close(i * j, k);
  check_close(j * k, i);
  check_close(k * i, j);
  check_close(j * i, -k);
  check_close(i * i, -1.0);
  check_close(i * j * k, -1.0);
}

TEST_CASE("mul examples") {
  const Quaternion t{0.5, 0.5, 0.5, 0.5};
  check_close(mul(t, t), Quaternion(-0.5, 0.5, 0.5, 0.5));
  const Quaternion w = omega_half(3);
  check_close(w * Quaternion::j(), Quaternion::j() * w.conj());
}

TEST_CASE("parts") {
  auto p = parts(Quaternion(0, 0, 1, -1));
  CHECK(p.re == 0.0);
  check_close(p.conj, Quaternion(0, 0, -1, 1));
  CHECK(p.norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  p = parts(Quaternion(0.5, 0.5, 0.5, 0.5));
  CHECK(p.re == 0.5);
  check_close(p.conj, Quaternion(0.5, -0.5, -0.5, -0.5));
  CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-15));

  p = parts(Quaternion());
  CHECK(p.re == 0.0);
  CHECK(p.norm == 0.0);
  check_close(p.conj, Quaternion());
}

TEST_CASE("inverse") {
  check_close(Quaternion::i().inverse(), -Quaternion::i());
  const double h = 1 / std::sqrt(2.0);
  check_close(Quaternion(h, h, 0, 0).inverse(), Quaternion(h, -h, 0, 0));
  const Quaternion two_j{0, 0, 2, 0};
  check_close(two_j.inverse(), Quaternion(0, 0, -0.5, 0));
  check_close(two_j * two_j.inverse(), 1.0);

  try {
    (void)Quaternion(0, 1e-10, 0, 0).inverse(eps);
    FAIL("expected ZeroDivision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDivision);
  }
}

TEST_CASE("approx_eq") {
  CHECK(approx_eq(1.0, 1.0 + 1e-12, eps));
  CHECK_FALSE(approx_eq(Quaternion::j(), Quaternion::k(), eps));
  const Quaternion w = omega_half(3);
  CHECK(approx_eq(w * w * w, -1.0, eps));
}

TEST_CASE("algebraic identities on random samples") {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 10000; ++n) {
    const auto p = oracle::random_unit(rng);
    const auto q = oracle::random_unit(rng);
    const auto r = oracle::random_unit(rng);
    REQUIRE(std::abs((p * q).norm() - 1.0) <= 8 * eps);
    REQUIRE(distance((p * q) * r, p * (q * r)) <= 8 * eps);
    REQUIRE(distance((p * q).conj(), q.conj() * p.conj()) <= 8 * eps);
    REQUIRE(std::abs((p * q).re() - (q * p).re()) <= 4 * eps);
    REQUIRE(std::abs(re_of_product(p, q) - (p * q).re()) <= 4 * eps);
    REQUIRE(distance(p.inverse(), p.conj()) <= 4 * eps);
    REQUIRE(distance(p * p.inverse(), 1.0) <= 4 * eps);
    REQUIRE(distance(p.conj().conj(), p) == 0.0);

    const auto x = oracle::random_quaternion(rng, 3.0);
    const auto y = oracle::random_quaternion(rng, 3.0);
    REQUIRE(std::abs((x * y).norm() - x.norm() * y.norm()) <= 4 * eps * (1 + x.norm() * y.norm()));
  }
}

TEST_CASE("format and parse round trip") {
  CHECK(format(Quaternion(1, -2, 0.5, 0)) == "1-2i+0.5j+0k");
  CHECK(format(Quaternion(-0.0, 0, 0, -0.0)) == "0+0i+0j+0k");
  std::mt19937_64 rng(13);
  for (int n = 0; n < 1000; ++n) {
    const auto q = oracle::random_quaternion(rng, 5.0);
    REQUIRE(distance(parse_quaternion(format(q)), q) <= 1e-10 * (1 + q.norm()));
  }
  std::ostringstream os;
  os << Quaternion::k();
  CHECK(os.str() == "0+0i+0j+1k");
}

TEST_CASE("parser tokens") {
  check_close(parse_quaternion("(1+i+j+k)/2"), Quaternion(0.5, 0.5, 0.5, 0.5));
  check_close(parse_quaternion("(1+i)/r2"), Quaternion(1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0, 0));
  check_close(parse_quaternion("w(3)j"), omega_half(3) * Quaternion::j());
  check_close(parse_quaternion("2i"), Quaternion(0, 2, 0, 0));
  check_close(parse_quaternion("-j"), -Quaternion::j());
  const double tau = (1 + std::sqrt(5.0)) / 2;
  check_close(parse_quaternion("(tau+sigma i-j)/2"), Quaternion(tau / 2, (1 - tau) / 2, -0.5, 0));
  check_close(parse_quaternion("r3*r3"), 3.0, 1e-12);
  for (const char* bad : {"", "1+", "(1", "q", "w(0)", "1/0"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_quaternion(bad), Error);
  }
}

TEST_CASE("integer powers") {
  const Quaternion w = omega_full(5);
  check_close(pow(w, 5), 1.0, 1e-12);
  check_close(pow(w, -1), w.conj(), 1e-12);
  check_close(pow(w, 0), 1.0);
}

TEST_CASE("tolerance override") {
  CHECK(tolerance() == 1e-9);
  {
    ScopedTolerance t(1e-6);
    CHECK(tolerance() == 1e-6);
    CHECK(approx_eq(1.0, 1.0 + 1e-7));
  }
  CHECK(tolerance() == 1e-9);
  CHECK_FALSE(approx_eq(1.0, 1.0 + 1e-7));
}

TEST_CASE("sign normalization") {
  check_close(sign_normalize(-Quaternion::k(), eps), Quaternion::k());
  check_close(sign_normalize(Quaternion(0, 0, -0.6, 0.8), eps), Quaternion(0, 0, 0.6, -0.8));
  check_close(sign_normalize(Quaternion(0, 0, -1.2, 0), eps), Quaternion(0, 0, -1.2, 0));
}

TEST_CASE("canonicalize") {
  check_close(canonicalize(Quaternion(0, 0, 2, 0)), Quaternion(0, 0, -0.5, 0));
  check_close(canonicalize(-Quaternion::k()), Quaternion::k());
  check_close(canonicalize(Quaternion::j()), Quaternion::j());
  check_close(canonicalize(Quaternion(0, 0.3, 0, 0)), Quaternion(0, 0.3, 0, 0));
  CHECK_THROWS_AS(canonicalize(Quaternion()), Error);

  // q and -q/|q|^2 name the same system.
  std::mt19937_64 rng(14);
  for (int n = 0; n < 1000; ++n) {
    const auto q = oracle::random_quaternion(rng, 2.0);
    if (q.norm() < 1e-3) continue;
    const Quaternion partner = -q / q.norm2();
    REQUIRE(distance(canonicalize(q), canonicalize(partner)) <= 1e-9);
    REQUIRE(canonicalize(q).norm() <= 1.0 + 1e-12);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qrefl/catalog.hpp"
#include "qrefl/error.hpp"
#include "qrefl/group.hpp"

using namespace qrefl;

namespace {

const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
const double h = 1 / std::sqrt(2.0);

void check_close(const Mat2& m, const Mat2& n, double tol = 1e-12) {
  INFO(format(m), " vs ", format(n));
  CHECK(max_entry_distance(m, n) <= tol);
}

// Lambda_n straight from its definition, with its own divisor and gcd helpers.
std::set<Index4> lambda_oracle(int n) {
  std::set<Index4> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      if (n % a || n % b || oracle::gcd(a, b) != 1) continue;
      out.insert({n, a, b, n / (a * b)});
      if ((a * b) % 2) out.insert({n, a, b, 2 * n / (a * b)});
    }
  return out;
}

}  // namespace

TEST_CASE("dihedral") {
  const auto d4 = dihedral(4);
  CHECK(d4.expected_order == 8);
  CHECK(closure(d4.generators).order() == 8);
  CHECK(d4.expected_solutions.includes_standard);
  CHECK(closure(dihedral(3).generators).order() == 6);
  CHECK_FALSE(dihedral(5).expected_solutions.includes_standard);
  CHECK_THROWS_AS(dihedral(2), Error);
}

TEST_CASE("complex_imprimitive") {
  const auto e = complex_imprimitive(4, 2);
  CHECK(e.expected_order == 16);
  CHECK(e.expected_solutions.contains(1.0));
  CHECK(e.expected_solutions.contains(i));
  CHECK(e.expected_solutions.contains(0.0));
  CHECK(e.omega == OmegaConvention::full);
  CHECK(complex_imprimitive(6, 3).expected_solutions.contains(j));
  CHECK_FALSE(complex_imprimitive(6, 2).expected_solutions.contains(j));
  CHECK(complex_imprimitive(6, 6).expected_solutions.contains(0.5 * j));
  CHECK_THROWS_AS(complex_imprimitive(6, 4), Error);
  for (int n = 3; n <= 12; ++n)
    for (int p = 1; p <= n; ++p) {
      if (n % p) continue;
      const auto g = closure(complex_imprimitive(n, p).generators);
      REQUIRE(g.order() == static_cast<std::size_t>(2 * n * (n / p)));
    }
}

TEST_CASE("primitive building blocks match the printed conjugates") {
  const auto& b = primitive_blocks();
  const double tau = (1 + std::sqrt(5.0)) / 2, sigma = 1 - tau;
  check_close(conjugate_power(b.F, b.Z), Mat2{h, h * i, -h * i, -h});
  check_close(conjugate_power(b.F, b.Z * b.Z), Mat2{0.0, h * (1.0 + i), h * (1.0 - i), 0.0});
  check_close(conjugate_power(b.A, b.Z), Mat2{0.0, i, -i, 0.0});
  check_close(conjugate_power(b.A, b.M),
              Mat2{tau / 2, Quaternion(-0.5, -sigma / 2, 0, 0), Quaternion(-0.5, sigma / 2, 0, 0), -tau / 2});
  const double s3 = std::sqrt(3.0);
  const Quaternion c{(1 + s3) / 4, (s3 - 1) / 4, 0, 0};
  check_close(b.Z, c * Mat2{1.0, 1.0, -i, i});
  for (const Mat2* m : {&b.F, &b.R, &b.Z, &b.A, &b.M, &b.S}) CHECK(is_unitary(*m));
}

TEST_CASE("primitive_complex") {
  const std::pair<int, std::size_t> orders[] = {{4, 24}, {8, 96}, {12, 48}, {13, 96}, {16, 600}, {22, 240}};
  for (auto [kk, order] : orders) {
    const auto e = primitive_complex(kk);
    CHECK(e.expected_order == order);
    CHECK(closure(e.generators).order() == order);
  }
  CHECK(primitive_complex(12).expected_solutions.components.size() == 1);
  CHECK(primitive_complex(8).expected_solutions.components.empty());
  try {
    primitive_complex(5);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("index sets") {
  const auto s2 = index_sets(2);
  CHECK(s2.omega == std::vector<Index2>{{1, 1}, {1, 2}});
  CHECK(std::set<Index4>(s2.lambda.begin(), s2.lambda.end()) ==
        std::set<Index4>{{2, 1, 1, 2}, {2, 1, 1, 4}, {2, 1, 2, 1}});
  // [2,1,2,2] would need ab = 2 odd; it is not in the set.
  CHECK(std::find(s2.lambda.begin(), s2.lambda.end(), Index4{2, 1, 2, 2}) == s2.lambda.end());
  CHECK(s2.lambda_star.size() == 2);
  CHECK(index_sets(6).lambda_star.size() == 6);
  CHECK(oracle::divisors(72) == 12);

  for (int n = 2; n <= 40; ++n) {
    INFO(n);
    const auto s = index_sets(n);
    REQUIRE(std::set<Index4>(s.lambda.begin(), s.lambda.end()) == lambda_oracle(n));
    REQUIRE(s.lambda_star.size() * 2 == static_cast<std::size_t>(oracle::divisors(2LL * n * n)));
    REQUIRE(divisor_count(2LL * n * n) == oracle::divisors(2LL * n * n));
    for (auto [a, b] : s.omega) REQUIRE(n % (a * b) == 0);
    for (const auto& idx : s.lambda) {
      const int rab = idx[3] * idx[1] * idx[2];
      REQUIRE((rab == n || rab == 2 * n));
    }
    // [n,1,n,2] is present exactly for odd n
    const bool has = std::find(s.lambda.begin(), s.lambda.end(), Index4{n, 1, n, 2}) != s.lambda.end();
    REQUIRE(has == (n % 2 == 1));
  }
  CHECK_THROWS_AS(index_sets(1), Error);
}

TEST_CASE("g_nabr") {
  const auto e = g_nabr(2, 1, 1, 2);
  CHECK(e.expected_order == 32);
  CHECK(e.expected_reflection_count == 10);
  CHECK(e.expected_solutions.finite_count() == 5u);
  CHECK(g_nabr(12, 3, 4, 1).expected_solutions.finite_count() == 1u);
  CHECK(g_nabr(12, 2, 3, 2).expected_solutions.finite_count() == 1u);
  CHECK(g_nabr(4, 1, 2, 2).expected_solutions.finite_count() == 3u);
  CHECK(g_nabr(3, 1, 3, 1).notes.size() == 1);
  CHECK_THROWS_AS(g_nabr(2, 1, 2, 2), Error);
  CHECK(e.omega == OmegaConvention::half);
}

TEST_CASE("catalog orders and reflection formula for G(n,a,b,r)") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& idx : index_sets(n).lambda) {
      const auto e = g_nabr(idx[0], idx[1], idx[2], idx[3]);
      INFO(e.id.str());
      const auto g = closure(e.generators);
      REQUIRE(g.order() == static_cast<std::size_t>(8 * n * idx[3]));
      REQUIRE(reflections(g).size() ==
              static_cast<std::size_t>(2 * n / idx[1] + 2 * n / idx[2] + 2 * (idx[3] - 1)));
    }
  }
}

TEST_CASE("gklh rows") {
  const std::vector<std::size_t> orders = {1152, 384, 96, 48, 4608, 2304, 768, 192, 96, 96, 28800, 480, 240, 480, 240};
  const std::vector<std::size_t> l_sizes = {24, 24, 12, 12, 48, 48, 32, 20, 18, 14, 120, 32, 30, 20, 20};
  REQUIRE(toi_rows().size() == 15);
  for (std::size_t n = 0; n < 15; ++n) {
    const auto e = gklh(toi_rows()[n]);
    CHECK(e.expected_order == orders[n]);
    CHECK(*e.expected_L_size == l_sizes[n]);
  }
  const auto t = gklh("GT(L12,C2)");
  CHECK(t.L_gens.size() == 3);
  CHECK(approx_eq(t.H_gens.at(0), -1.0));
  CHECK(closure(t.generators).order() == 96);
  CHECK(gklh("DDD", 2).expected_order == 128);
  CHECK(gklh("DDD2", 4).expected_order == 256);
  CHECK_THROWS_AS(gklh("DDD2", 3), Error);
  try {
    gklh("GX(L1,1)");
    FAIL("expected UnknownRow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownRow);
  }
}

TEST_CASE("dicyclic rows for n = 2..8") {
  for (int n = 2; n <= 8; ++n) {
    const auto e = gklh("DDD", n);
    REQUIRE(closure(e.generators).order() == static_cast<std::size_t>(32 * n * n));
    if (n % 2 == 0 && n >= 4) {
      REQUIRE(closure(gklh("DDD2", n).generators).order() == static_cast<std::size_t>(16 * n * n));
    }
  }
}

TEST_CASE("group ids") {
  for (const char* s : {"D(7)", "G(4,2,2)", "ST12", "G(6,2,3,1)", "GT(L12,C2)", "G(D4,D4,D4)", "G(D4,D4,D2)"}) {
    INFO(s);
    CHECK(parse_group_id(s).str() == s);
    CHECK(make_entry(s).id.str() == s);
  }
  CHECK(parse_group_id("G(D6,D6,D3)").row == "DDD2");
  CHECK_THROWS_AS(parse_group_id("G(1,2)"), Error);
  CHECK_THROWS_AS(parse_group_id("G(D6,D6,D2)"), Error);
  CHECK(family_from_string("ST") == Family::GST);
  CHECK(family_from_string("GST") == Family::GST);
  CHECK_FALSE(family_from_string("XY").has_value());
}

TEST_CASE("catalog listing counts") {
  CHECK(catalog(Family::Gnabr, {6, 6, 4}).size() == 6);
  CHECK(catalog(Family::GKLH).size() == 17);
  CHECK(catalog(Family::GST).size() == 6);
  CHECK(catalog(Family::Dn).size() == 10);
}

TEST_CASE("taylor_index") {
  auto t = taylor_index(2, 2, 1);
  CHECK(t.a == 1);
  CHECK(t.b == 1);
  t = taylor_index(6, 1, 5);
  CHECK(t.nu == 3);
  CHECK(t.kappa == 2);
  CHECK(t.a == 2);
  CHECK(t.b == 3);
  CHECK_FALSE(t.kappa_gt_nu);
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= 2 * n; ++r) {
      if ((2 * n) % r) continue;
      const int m = 2 * n / r;
      const auto c1 = taylor_index(n, r, 1);
      REQUIRE(c1.kappa == m / oracle::gcd(m, 2));
    }
  CHECK_THROWS_AS(taylor_index(6, 1, 4), Error);
}

TEST_CASE("taylor standard copy matches G(n,a,b,r) up to diag(1,j)") {
  const Mat2 dj = Mat2::diag(1.0, j);
  int checked = 0;
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= 2 * n; ++r) {
      if ((2 * n) % r) continue;
      for (int c = 1; c <= std::max(1, n / r); ++c) {
        TaylorIndex t;
        try {
          t = taylor_index(n, r, c);
        } catch (const Error&) {
          continue;
        }
        const auto sets = index_sets(n);
        const Index4 idx{n, t.a, t.b, r};
        if (std::find(sets.lambda.begin(), sets.lambda.end(), idx) == sets.lambda.end()) continue;
        INFO(n, " ", r, " ", c);
        const auto copy = closure(taylor_standard_copy(n, r, c));
        const auto target = closure(g_nabr(n, t.a, t.b, r).generators);
        REQUIRE(copy.order() == target.order());
        const Mat2 u = t.kappa_gt_nu ? dj : Mat2::identity();
        REQUIRE((conjugate_equal(copy, target, u) || conjugate_equal(copy, target, adjoint(u))));
        ++checked;
      }
    }
  CHECK(checked > 20);
}

TEST_CASE("inclusion lattice edges") {
  const auto& edges = primitive_inclusion_edges();
  CHECK(edges.size() == 27);
  for (auto [a, b] : edges) {
    CHECK(a >= 4);
    CHECK(b <= 22);
  }
  CHECK(toi_inclusion_edges().size() == 12);
}

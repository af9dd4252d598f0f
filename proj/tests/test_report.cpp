#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrefl/catalog.hpp"
#include "qrefl/error.hpp"
#include "qrefl/report.hpp"
#include "qrefl/verify.hpp"

using namespace qrefl;

namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.n_lo = 2;
  o.n_hi = 4;
  o.inside_samples = 10;
  o.outside_samples = 50;
  return o;
}

}  // namespace

TEST_CASE("report text and structured round trip") {
  const auto opts = small_options();
  for (const auto& e : {dihedral(5), g_nabr(2, 1, 1, 2), primitive_complex(12), gklh("GT(L12,1)"),
                        complex_imprimitive(4, 2)}) {
    INFO(e.id.str());
    const auto r = solve_report(e, opts);
    CHECK(r.passed());
    const auto back = parse_report(print_report(r, true));
    CHECK(back == r);
    CHECK(back.solutions.has_value());
    CHECK(approx_equal(*back.solutions, *r.solutions, 0.0));
    CHECK(print_report(r, false).find(e.id.str()) != std::string::npos);
  }
}

TEST_CASE("report lists round trip") {
  const auto rs = verify_table("conjugacies", small_options());
  CHECK_FALSE(rs.empty());
  const auto back = parse_reports(print_reports(rs, true));
  REQUIRE(back.size() == rs.size());
  for (std::size_t n = 0; n < rs.size(); ++n) CHECK(back[n] == rs[n]);
}

TEST_CASE("malformed reports are rejected") {
  for (const char* bad : {"", "{", "[1,2]", "{\"id\": 3}"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_report(bad), Error);
  }
}

TEST_CASE("failing checks make the report fail") {
  Report r;
  r.id = "x";
  r.check("first", true);
  CHECK(r.passed());
  r.check("second", false, "mismatch");
  CHECK_FALSE(r.passed());
  CHECK(parse_report(print_report(r, true)) == r);
}

TEST_CASE("verify tables are deterministic and order stable") {
  auto opts = small_options();
  opts.parallel = true;
  const auto a = verify_table("real", opts);
  opts.parallel = false;
  const auto b = verify_table("real", opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    CHECK(a[n].id == b[n].id);
    CHECK(a[n].passed() == b[n].passed());
    CHECK(to_json(*a[n].solutions) == to_json(*b[n].solutions));
  }
  CHECK_THROWS_AS(verify_table("octonionic", opts), Error);
  CHECK(verify_table_names().size() == 6);
}

TEST_CASE("inclusion certificate") {
  const auto certs = certify_by_inclusion({4, 8, 16});
  CHECK(certs.size() == 13);
  for (const auto& c : certs) {
    REQUIRE_FALSE(c.chain.empty());
    CHECK(c.chain.back() == c.group);
  }
}

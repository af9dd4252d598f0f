#include "qrefl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>
#include <string>

#include "qrefl/error.hpp"
#include "qrefl/group.hpp"

namespace qrefl {

namespace {

using constants::sigma;
using constants::sqrt2;
using constants::tau;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadParameter, what); }

Quaternion q(std::string_view text) { return parse_quaternion(text); }

std::vector<Quaternion> qs(std::initializer_list<std::string_view> texts) {
  std::vector<Quaternion> out;
  for (auto t : texts) out.push_back(q(t));
  return out;
}

std::vector<Mat2> monomial_generators(const std::vector<Quaternion>& l_gens,
                                      const std::vector<Quaternion>& h_gens) {
  std::vector<Mat2> gens;
  for (const auto& b : l_gens) gens.push_back(swap_reflection(b));
  for (const auto& h : h_gens) gens.push_back(diagonal_reflection(h));
  return gens;
}

SolutionSet standard_only() {
  SolutionSet s;
  s.includes_standard = true;
  return s;
}

const Quaternion kJminusK = Quaternion(0, 0, 1, -1) / sqrt2;
const Quaternion kIcosaDirection = Quaternion(0, -tau, 1, -sigma) / 2.0;  // (j - tau i - sigma k)/2

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::Dn: return "Dn";
    case Family::Gnp2: return "Gnp2";
    case Family::GST: return "ST";
    case Family::Gnabr: return "Gnabr";
    case Family::GKLH: return "GKLH";
  }
  return "Dn";
}

std::optional<Family> family_from_string(std::string_view s) {
  for (auto f : {Family::Dn, Family::Gnp2, Family::GST, Family::Gnabr, Family::GKLH}) {
    if (s == to_string(f)) return f;
  }
  if (s == "GST") return Family::GST;
  return std::nullopt;
}

std::string GroupId::str() const {
  auto p = [&](std::size_t n) { return std::to_string(params.at(n)); };
  switch (family) {
    case Family::Dn: return "D(" + p(0) + ")";
    case Family::Gnp2: return "G(" + p(0) + "," + p(1) + ",2)";
    case Family::GST: return "ST" + p(0);
    case Family::Gnabr: return "G(" + p(0) + "," + p(1) + "," + p(2) + "," + p(3) + ")";
    case Family::GKLH:
      if (row == "DDD") return "G(D" + p(0) + ",D" + p(0) + ",D" + p(0) + ")";
      if (row == "DDD2") return "G(D" + p(0) + ",D" + p(0) + ",D" + std::to_string(params.at(0) / 2) + ")";
      return row;
  }
  return row;
}

GroupId parse_group_id(std::string_view text) {
  const std::string s(text);
  std::smatch m;
  static const std::regex dn(R"(D\((\d+)\))");
  static const std::regex st(R"(ST(\d+))");
  static const std::regex gnp2(R"(G\((\d+),(\d+),2\))");
  static const std::regex gnabr(R"(G\((\d+),(\d+),(\d+),(\d+)\))");
  static const std::regex ddd(R"(G\(D(\d+),D(\d+),D(\d+)\))");
  auto num = [&](int g) { return std::stoi(m[g].str()); };
  if (std::regex_match(s, m, dn)) return {Family::Dn, {num(1)}, {}};
  if (std::regex_match(s, m, st)) return {Family::GST, {num(1)}, {}};
  if (std::regex_match(s, m, gnp2)) return {Family::Gnp2, {num(1), num(2)}, {}};
  if (std::regex_match(s, m, gnabr)) return {Family::Gnabr, {num(1), num(2), num(3), num(4)}, {}};
  if (std::regex_match(s, m, ddd)) {
    const int n = num(1);
    if (num(2) != n) bad("dicyclic row needs K = L: " + s);
    if (num(3) == n) return {Family::GKLH, {n}, "DDD"};
    if (2 * num(3) == n) return {Family::GKLH, {n}, "DDD2"};
    bad("dicyclic row needs H = D_n or D_{n/2}: " + s);
  }
  const auto& rows = toi_rows();
  if (std::find(rows.begin(), rows.end(), s) != rows.end()) return {Family::GKLH, {}, s};
  bad("unrecognized group id '" + s + "'");
}

Mat2 swap_reflection(const Quaternion& b) { return Mat2::antidiag(b, b.conj()); }

Mat2 diagonal_reflection(const Quaternion& h) { return Mat2::diag(h, 1.0); }

Mat2 conjugate_power(const Mat2& g, const Mat2& h) { return h * g * adjoint(h); }

CatalogEntry dihedral(int n) {
  if (n < 3) bad("D_n needs n >= 3, got " + std::to_string(n));
  const double t = 2 * constants::pi / n;
  CatalogEntry e;
  e.id = {Family::Dn, {n}, {}};
  const Mat2 rot{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
  e.generators = {rot, Mat2::diag(1.0, -1.0)};
  e.expected_order = 2 * static_cast<std::size_t>(n);
  e.expected_reflection_count = static_cast<std::size_t>(n);
  SolutionSet s;
  s.includes_standard = (n == 4);
  if (n == 4) s.components.push_back(make_point(1.0, "real system"));
  s.components.push_back(make_sphere(0.0, 1.0, "q^2 = -1"));
  e.expected_solutions = s;
  e.notes.push_back(n == 4 ? "imprimitive over R; conjugate over C to G(4,4,2)"
                           : "primitive over R; conjugate over C to G(" + std::to_string(n) + "," +
                                 std::to_string(n) + ",2)");
  return e;
}

CatalogEntry complex_imprimitive(int n, int p) {
  if (n < 3 || p < 1 || n % p != 0) {
    bad("G(n,p,2) needs n >= 3 and p | n, got (" + std::to_string(n) + "," + std::to_string(p) + ")");
  }
  CatalogEntry e;
  e.id = {Family::Gnp2, {n, p}, {}};
  e.omega = OmegaConvention::full;
  const Quaternion w = omega_full(n);
  e.L_gens = {1.0, w};
  if (p != n) e.H_gens = {pow(w, p)};
  e.generators = monomial_generators(e.L_gens, e.H_gens);
  const std::size_t m = static_cast<std::size_t>(n / p);
  e.expected_order = 2 * static_cast<std::size_t>(n) * m;
  e.expected_reflection_count = static_cast<std::size_t>(n) + 2 * (m - 1);
  e.expected_L_size = static_cast<std::size_t>(n);
  e.expected_H_size = m;

  SolutionSet s = standard_only();
  if (n == 4 && (p == 4 || p == 2)) {
    s.components.push_back(make_point(1.0, "q = +-1"));
    s.components.push_back(make_point(Quaternion::i(), "q = +-conj(w)"));
  }
  if (p == n) s.components.push_back(make_disk(Quaternion::j(), Quaternion::k(), "Re(q)=Re(wq)=0"));
  if (2 * p == n) s.components.push_back(make_circle(Quaternion::j(), Quaternion::k(), "Re(q)=Re(wq)=0, |q|=1"));
  e.expected_solutions = s;
  if (n == 4 && p == 4) e.notes.push_back("conjugate over C to the real group D_4 = G(2,1,2)");
  if (n == 4 && p == 2) e.notes.push_back("conjugate over H to G(2,1,2,1)");
  if (2 * p == n && n != 4) {
    e.notes.push_back("conjugate over H to G(" + std::to_string(p) + ",1," + std::to_string(p) + ",1)");
  }
  return e;
}

const PrimitiveBlocks& primitive_blocks() {
  static const PrimitiveBlocks blocks = [] {
    PrimitiveBlocks b;
    const double h = 1.0 / sqrt2;
    b.F = {h, h, h, -h};
    b.R = Mat2::diag(1.0, -Quaternion::i());
    b.Z = Quaternion::from_angle(2 * constants::pi / 24) * (b.R * b.F);
    b.A = b.R * b.R;
    const Quaternion scale{-tau / 4, std::sqrt(1 - tau * tau / 4) / 2, 0, 0};
    b.M = scale * Mat2{Quaternion(-tau, 1, 0, 0), sigma, -sigma, Quaternion(-tau, -1, 0, 0)};
    b.S = Mat2::diag(1.0, -1.0);
    return b;
  }();
  return blocks;
}

CatalogEntry primitive_complex(int k) {
  const auto& b = primitive_blocks();
  CatalogEntry e;
  e.id = {Family::GST, {k}, {}};
  SolutionSet circle;
  circle.components.push_back(make_circle(Quaternion::j(), Quaternion::k(), "q = zj, |z| = 1"));
  switch (k) {
    case 4:
      e.generators = {b.Z, conjugate_power(b.Z, b.S)};
      e.expected_order = 24;
      e.expected_reflection_count = 8;
      break;
    case 8:
      e.generators = {b.R, conjugate_power(b.R, b.F)};
      e.expected_order = 96;
      e.expected_reflection_count = 18;
      break;
    case 12:
      e.generators = {b.F, conjugate_power(b.F, b.Z), conjugate_power(b.F, b.Z * b.Z)};
      e.expected_order = 48;
      e.expected_reflection_count = 12;
      e.expected_solutions = circle;
      e.notes.push_back("conjugate over H to GT(L12,1)");
      break;
    case 13:
      e.generators = {b.F, conjugate_power(b.F, b.Z), b.R * b.R};
      e.expected_order = 96;
      e.expected_reflection_count = 18;
      e.expected_solutions = circle;
      e.notes.push_back("conjugate over H to GO(L18,1)");
      break;
    case 16:
      e.generators = {b.M, conjugate_power(b.M, b.A)};
      e.expected_order = 600;
      e.expected_reflection_count = 48;
      break;
    case 22:
      e.generators = {b.A, conjugate_power(b.A, b.Z), conjugate_power(b.A, b.M)};
      e.expected_order = 240;
      e.expected_reflection_count = 30;
      e.expected_solutions = circle;
      e.notes.push_back("conjugate over H to GI(L30,1)");
      break;
    default:
      throw Error(ErrorKind::Unsupported,
                  "ST" + std::to_string(k) + " has no explicit generators; covered by inclusions");
  }
  if (e.expected_solutions.components.empty()) e.notes.push_back("no quaternionic systems");
  return e;
}

int divisor_count(long long m) {
  int count = 0;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d == 0) count += (d * d == m) ? 1 : 2;
  }
  return count;
}

IndexSets index_sets(int n) {
  if (n < 2) bad("index sets need n >= 2");
  IndexSets out;
  for (int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    for (int b = a; b <= n; ++b) {
      if (n % b == 0 && std::gcd(a, b) == 1) out.omega.push_back({a, b});
    }
  }
  for (auto [a, b] : out.omega) {
    out.lambda.push_back({n, a, b, n / (a * b)});
    if ((a * b) % 2 == 1) out.lambda.push_back({n, a, b, 2 * n / (a * b)});
  }
  for (const auto& idx : out.lambda) {
    if (!(idx[1] == 1 && idx[2] == n && idx[3] == 1)) out.lambda_star.push_back(idx);
  }
  return out;
}

namespace {

bool three_system_index(int n, int a, int b, int r) {
  if (a == 1 && b == n && r == 1) return true;
  if (n % 2 == 1 && a == 1 && b == n && r == 2) return true;
  if (n % 2 == 0 && a == 1 && b == n / 2 && r == 2) return true;
  if (n % 2 == 0 && (n / 2) % 2 == 1 && a == 2 && b == n / 2 && r == 1) return true;
  return false;
}

}  // namespace

CatalogEntry g_nabr(int n, int a, int b, int r) {
  if (n < 2) bad("G(n,a,b,r) needs n >= 2");
  const auto sets = index_sets(n);
  const Index4 idx{n, a, b, r};
  if (std::find(sets.lambda.begin(), sets.lambda.end(), idx) == sets.lambda.end()) {
    bad("[" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
        std::to_string(r) + "] is not in Lambda_n");
  }
  CatalogEntry e;
  e.id = {Family::Gnabr, {n, a, b, r}, {}};
  e.omega = OmegaConvention::half;
  const Quaternion w = omega_half(n);
  e.L_gens = {1.0, pow(w, a), Quaternion::j(), pow(w, b) * Quaternion::j()};
  if (r > 1) e.H_gens = {pow(w, 2 * n / r)};
  e.generators = monomial_generators(e.L_gens, e.H_gens);
  e.expected_order = 8 * static_cast<std::size_t>(n) * r;
  const std::size_t l_size = static_cast<std::size_t>(2 * n / a + 2 * n / b);
  e.expected_L_size = l_size;
  e.expected_H_size = static_cast<std::size_t>(r);
  e.expected_reflection_count = l_size + 2 * static_cast<std::size_t>(r - 1);

  SolutionSet s = standard_only();
  if (three_system_index(n, a, b, r)) {
    s.components.push_back(make_point(Quaternion::j(), "q = +-j"));
    s.components.push_back(make_point(Quaternion::k(), "q = +-k"));
  }
  if (n == 2 && a == 1 && ((b == 2 && r == 1) || (b == 1 && r == 2))) {
    s.components.push_back(make_point(1.0, "q = +-1"));
    s.components.push_back(make_point(Quaternion::i(), "q = +-i"));
  }
  if (a == 1 && b == n && r == 1) {
    s.components.push_back(make_segment(Quaternion::k(), "Re(beta q) = 0 for all beta"));
    e.notes.push_back("conjugate over H to the complex group G(" + std::to_string(2 * n) + "," +
                      std::to_string(n) + ",2); counted as complex");
  }
  e.expected_solutions = s;
  return e;
}

const std::vector<std::string>& toi_rows() {
  static const std::vector<std::string> rows = {
      "GT(T,T)",   "GT(T,Q8)",   "GT(L12,C2)", "GT(L12,1)", "GO(O,O)",
      "GO(O,T)",   "GO(L32,Q8)", "GO(L20,C2)", "GO(L18,1)", "GO(L14,1)",
      "GI(I,I)",   "GI(L32,C2)", "GI(L30,1)",  "GI(L20,C2)", "GI(L20,1)"};
  return rows;
}

namespace {

struct ToiRow {
  std::string label;
  std::size_t order;
  std::size_t l_size;
  std::size_t h_size;
  std::vector<std::string_view> l_gens;
  std::vector<std::string_view> h_gens;
};

const std::vector<ToiRow>& toi_table() {
  static const std::vector<ToiRow> table = {
      {"GT(T,T)", 1152, 24, 24, {"1", "i"}, {"(1+i+j+k)/2"}},
      {"GT(T,Q8)", 384, 24, 8, {"1", "i", "j", "(1+i+j+k)/2"}, {}},
      {"GT(L12,C2)", 96, 12, 2, {"1", "i", "(1+i+j+k)/2"}, {"-1"}},
      {"GT(L12,1)", 48, 12, 1, {"1", "i", "(1+i+j+k)/2"}, {}},
      {"GO(O,O)", 4608, 48, 48, {"1", "(1+i+j+k)/2"}, {"(1+i)/r2"}},
      {"GO(O,T)", 2304, 48, 24, {"1", "(1+i)/r2", "(1+j)/r2", "(1+i+j+k)/2"}, {}},
      {"GO(L32,Q8)", 768, 32, 8, {"1", "(1+i)/r2", "j", "(1+i+j+k)/2"}, {}},
      {"GO(L20,C2)", 192, 20, 2, {"1", "(1+i)/r2", "(1+i+j+k)/2", "(j-k)/r2"}, {}},
      {"GO(L18,1)", 96, 18, 1, {"1", "(1+i)/r2", "(1+i+j+k)/2"}, {}},
      {"GO(L14,1)", 96, 14, 1, {"1", "i", "(1+i+j+k)/2", "(j-k)/r2"}, {}},
      {"GI(I,I)", 28800, 120, 120, {"1", "i", "(1+i+j+k)/2", "(tau+sigma i-j)/2"}, {}},
      {"GI(L32,C2)", 480, 32, 2, {"1", "(1+i+j+k)/2", "(tau+sigma i-j)/2", "(j-tau i-sigma k)/2"}, {}},
      {"GI(L30,1)", 240, 30, 1, {"1", "(1+i+j+k)/2", "(tau+sigma i-j)/2"}, {}},
      {"GI(L20,C2)", 480, 20, 2, {"1", "i", "(1+i+j+k)/2", "(i+sigma j+tau k)/2"}, {"-1"}},
      {"GI(L20,1)", 240, 20, 1, {"1", "i", "(1+i+j+k)/2", "(i+sigma j+tau k)/2"}, {}},
  };
  return table;
}

SolutionSet toi_expected(const std::string& label) {
  SolutionSet s = standard_only();
  if (label == "GT(L12,C2)" || label == "GO(L14,1)" || label == "GO(L20,C2)") {
    s.components.push_back(make_point(kJminusK, "isolated (j-k)/sqrt2"));
  } else if (label == "GI(L32,C2)") {
    s.components.push_back(make_point(kIcosaDirection, "isolated (j-tau i-sigma k)/2"));
  } else if (label == "GT(L12,1)" || label == "GO(L18,1)") {
    s.components.push_back(make_segment(kJminusK, "family alpha (j-k)/sqrt2"));
    s.components.push_back(make_point(kJminusK, "family endpoint"));
  } else if (label == "GI(L30,1)") {
    s.components.push_back(make_segment(kIcosaDirection, "family alpha (j-tau i-sigma k)/2"));
    s.components.push_back(make_point(kIcosaDirection, "family endpoint"));
  }
  return s;
}

}  // namespace

CatalogEntry gklh(std::string_view row, int n) {
  CatalogEntry e;
  const std::string label(row);
  if (label == "DDD" || label == "DDD2") {
    if (n < 2) bad("dicyclic rows need n >= 2");
    if (label == "DDD2" && (n % 2 != 0 || n < 4)) bad("G(Dn,Dn,Dn/2) needs n even >= 4");
    e.id = {Family::GKLH, {n}, label};
    e.omega = OmegaConvention::half;
    const Quaternion w = omega_half(n);
    e.L_gens = {1.0, w, Quaternion::j(), w * Quaternion::j()};
    if (label == "DDD") {
      e.H_gens = {w, Quaternion::j()};
    } else {
      e.H_gens = {Quaternion::j()};
    }
    e.generators = monomial_generators(e.L_gens, e.H_gens);
    const std::size_t nn = static_cast<std::size_t>(n);
    e.expected_order = (label == "DDD" ? 32 : 16) * nn * nn;
    e.expected_L_size = 4 * nn;
    e.expected_H_size = label == "DDD" ? 4 * nn : 2 * nn;
    e.expected_reflection_count = *e.expected_L_size + 2 * (*e.expected_H_size - 1);
    e.expected_solutions = standard_only();
    return e;
  }
  const auto& table = toi_table();
  auto it = std::find_if(table.begin(), table.end(), [&](const ToiRow& r) { return r.label == label; });
  if (it == table.end()) throw Error(ErrorKind::UnknownRow, "polyhedral row '" + label + "'");
  e.id = {Family::GKLH, {}, label};
  for (auto t : it->l_gens) e.L_gens.push_back(q(t));
  for (auto t : it->h_gens) e.H_gens.push_back(q(t));
  e.generators = monomial_generators(e.L_gens, e.H_gens);
  e.expected_order = it->order;
  e.expected_L_size = it->l_size;
  e.expected_H_size = it->h_size;
  e.expected_reflection_count = it->l_size + 2 * (it->h_size - 1);
  e.expected_solutions = toi_expected(label);
  if (label == "GT(L12,C2)") e.notes.push_back("conjugate over H to GO(L14,1)");
  if (label == "GO(L14,1)") e.notes.push_back("conjugate over H to GT(L12,C2)");
  if (label == "GT(L12,1)") e.notes.push_back("conjugate over H to ST12");
  if (label == "GO(L18,1)") e.notes.push_back("conjugate over H to ST13");
  if (label == "GI(L30,1)") e.notes.push_back("conjugate over H to ST22");
  return e;
}

CatalogEntry make_entry(const GroupId& id) {
  auto need = [&](std::size_t count) {
    if (id.params.size() != count) bad("wrong parameter count for " + std::string(to_string(id.family)));
  };
  switch (id.family) {
    case Family::Dn: need(1); return dihedral(id.params[0]);
    case Family::Gnp2: need(2); return complex_imprimitive(id.params[0], id.params[1]);
    case Family::GST: need(1); return primitive_complex(id.params[0]);
    case Family::Gnabr:
      need(4);
      return g_nabr(id.params[0], id.params[1], id.params[2], id.params[3]);
    case Family::GKLH: return gklh(id.row, id.params.empty() ? 0 : id.params[0]);
  }
  bad("unknown family");
}

std::vector<Quaternion> binary_group_generators(BinaryGroup k, int n) {
  switch (k) {
    case BinaryGroup::T: return qs({"i", "j", "(1+i+j+k)/2"});
    case BinaryGroup::O: return qs({"(1+i)/r2", "(1+j)/r2", "(1+i+j+k)/2"});
    // i replaces (1+i)/sqrt2, which has order 8 and cannot lie in a group of order 120.
    case BinaryGroup::I: return qs({"i", "(1+i+j+k)/2", "(tau+sigma i-j)/2"});
    case BinaryGroup::Dn:
      if (n < 2) bad("D_n needs n >= 2");
      return {omega_half(n), Quaternion::j()};
  }
  bad("unknown binary group");
}

std::vector<Quaternion> binary_group(BinaryGroup k, int n) {
  return quaternion_closure(binary_group_generators(k, n), 4096).items();
}

TaylorIndex taylor_index(int n, int r, int c) {
  if (n < 2 || r < 1 || (2 * n) % r != 0) bad("taylor_index needs r | 2n");
  const int m = 2 * n / r;
  if (!(c == 1 || (c > 1 && c <= n / r && std::gcd(c, m) == 1))) {
    bad("taylor_index: inadmissible c = " + std::to_string(c));
  }
  TaylorIndex t;
  t.nu = m / std::gcd(m, c - 1);
  t.kappa = m / std::gcd(m, c + 1);
  if (std::gcd(t.nu, t.kappa) != 1) bad("taylor_index: gcd(nu, kappa) != 1");
  t.a = std::min(t.nu, t.kappa);
  t.b = std::max(t.nu, t.kappa);
  t.kappa_gt_nu = t.kappa > t.nu;
  return t;
}

std::vector<Mat2> taylor_standard_copy(int n, int r, int c) {
  const Quaternion w = omega_half(n);
  return {swap_reflection(1.0), swap_reflection(Quaternion::j()),
          diagonal_reflection(pow(w, 2 * n / r)), Mat2::diag(w, pow(w, c))};
}

std::vector<CatalogEntry> catalog(std::optional<Family> filter, const CatalogOptions& opts) {
  std::vector<CatalogEntry> out;
  auto want = [&](Family f) { return !filter || *filter == f; };
  if (want(Family::Dn)) {
    for (int n = std::max(3, opts.n_lo); n <= opts.n_hi; ++n) out.push_back(dihedral(n));
  }
  if (want(Family::Gnp2)) {
    for (int n = std::max(3, opts.n_lo); n <= opts.n_hi; ++n) {
      for (int p = 1; p <= n; ++p) {
        if (n % p == 0) out.push_back(complex_imprimitive(n, p));
      }
    }
  }
  if (want(Family::GST)) {
    for (int k : {4, 8, 12, 13, 16, 22}) out.push_back(primitive_complex(k));
  }
  if (want(Family::Gnabr)) {
    for (int n = std::max(2, opts.n_lo); n <= opts.n_hi; ++n) {
      for (const auto& idx : index_sets(n).lambda_star) {
        out.push_back(g_nabr(idx[0], idx[1], idx[2], idx[3]));
      }
    }
  }
  if (want(Family::GKLH)) {
    for (const auto& row : toi_rows()) out.push_back(gklh(row));
    const int n = opts.dicyclic_n;
    if (n >= 2) out.push_back(gklh("DDD", n));
    if (n >= 4 && n % 2 == 0) out.push_back(gklh("DDD2", n));
  }
  return out;
}

const std::vector<std::pair<int, int>>& primitive_inclusion_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {15, 11}, {9, 11},  {10, 11}, {14, 15}, {13, 15}, {13, 9},  {8, 9},
      {8, 10},  {7, 10},  {7, 15},  {12, 14}, {12, 13}, {5, 14}, {5, 7},
      {6, 7},   {4, 5},   {4, 6},   {21, 19}, {17, 19}, {18, 19}, {22, 21},
      {20, 21}, {22, 17}, {16, 17}, {20, 18}, {16, 18}, {4, 20}};
  return edges;
}

const std::vector<std::pair<std::string, std::string>>& toi_inclusion_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges = {
      {"GT(T,Q8)", "GT(T,T)"},     {"GT(L12,C2)", "GT(T,Q8)"},   {"GT(L12,1)", "GT(L12,C2)"},
      {"GO(O,T)", "GO(O,O)"},      {"GO(L32,Q8)", "GO(O,T)"},    {"GO(L20,C2)", "GO(L32,Q8)"},
      {"GO(L18,1)", "GO(L20,C2)"}, {"GO(L14,1)", "GO(L20,C2)"},  {"GI(L32,C2)", "GI(I,I)"},
      {"GI(L20,C2)", "GI(I,I)"},   {"GI(L30,1)", "GI(L32,C2)"},  {"GI(L20,1)", "GI(L20,C2)"}};
  return edges;
}

}  // namespace qrefl

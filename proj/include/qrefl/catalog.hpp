#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrefl/mat2.hpp"
#include "qrefl/solution_set.hpp"

namespace qrefl {

enum class Family { Dn, Gnp2, GST, Gnabr, GKLH };
const char* to_string(Family family);
std::optional<Family> family_from_string(std::string_view s);

/// Which root of unity a family's "omega" denotes.
enum class OmegaConvention {
  none,
  full,  ///< e^{2 pi i/n} (complex imprimitive groups)
  half,  ///< e^{pi i/n}, a primitive 2n-th root (dicyclic family)
};

struct GroupId {
  Family family = Family::Dn;
  /// Dn: {n}; Gnp2: {n,p}; GST: {k}; Gnabr: {n,a,b,r}; GKLH: {} or {n} for
  /// the dicyclic rows.
  std::vector<int> params;
  /// GKLH only: polyhedral row label such as "GT(L12,C2)" or "DDD" / "DDD2".
  std::string row;

  /// Printable id: "D(7)", "G(4,2,2)", "ST12", "G(6,2,3,1)", "GT(L12,C2)",
  /// "G(D4,D4,D4)", "G(D4,D4,D2)".
  std::string str() const;
  bool operator==(const GroupId&) const = default;
};

/// Throws Error(BadParameter) on unrecognized text.
GroupId parse_group_id(std::string_view text);

struct CatalogEntry {
  GroupId id;
  std::vector<Mat2> generators;
  /// Generating sets for the monomial presentation G(L-gens, H-gens), when
  /// the entry is built that way.
  std::vector<Quaternion> L_gens;
  std::vector<Quaternion> H_gens;
  std::size_t expected_order = 0;
  std::size_t expected_reflection_count = 0;
  /// Expected |L| and |H| of the reflection inventory (monomial entries).
  std::optional<std::size_t> expected_L_size;
  std::optional<std::size_t> expected_H_size;
  SolutionSet expected_solutions;
  std::vector<std::string> notes;
  OmegaConvention omega = OmegaConvention::none;
};

/// Reflection a la G(K,L,H): [[0, b], [conj b, 0]].
Mat2 swap_reflection(const Quaternion& b);
/// diag(h, 1).
Mat2 diagonal_reflection(const Quaternion& h);

CatalogEntry dihedral(int n);
CatalogEntry complex_imprimitive(int n, int p);
CatalogEntry primitive_complex(int k);
CatalogEntry g_nabr(int n, int a, int b, int r);
/// Polyhedral rows by label ("GT(T,T)", ..., "GI(L20,1)") and the dicyclic
/// rows "DDD" (needs n >= 2) and "DDD2" (needs n even >= 4).
CatalogEntry gklh(std::string_view row, int n = 0);
CatalogEntry make_entry(const GroupId& id);
inline CatalogEntry make_entry(std::string_view id) { return make_entry(parse_group_id(id)); }

/// The fifteen T/O/I labels in catalog order.
const std::vector<std::string>& toi_rows();

/// The named primitive complex groups' building blocks.
struct PrimitiveBlocks {
  Mat2 F, R, Z, A, M, S;
};
const PrimitiveBlocks& primitive_blocks();
/// g^h = h g h^{-1}.
Mat2 conjugate_power(const Mat2& g, const Mat2& h);

enum class BinaryGroup { T, O, I, Dn };
/// Elements of the binary polyhedral or dicyclic group by multiplicative closure.
std::vector<Quaternion> binary_group(BinaryGroup k, int n = 0);
std::vector<Quaternion> binary_group_generators(BinaryGroup k, int n = 0);

using Index2 = std::array<int, 2>;
using Index4 = std::array<int, 4>;
struct IndexSets {
  std::vector<Index2> omega;        ///< (a,b)
  std::vector<Index4> lambda;       ///< [n,a,b,r]
  std::vector<Index4> lambda_star;  ///< lambda minus [n,1,n,1]
};
IndexSets index_sets(int n);
int divisor_count(long long m);

struct TaylorIndex {
  int a = 0;
  int b = 0;
  int nu = 0;
  int kappa = 0;
  /// kappa > nu: the standard copy is conjugate to G(n,a,b,r) by diag(1,j).
  bool kappa_gt_nu = false;
};
TaylorIndex taylor_index(int n, int r, int c);
/// Generators of the standard copy indexed by (n,r,c); the fourth is diag(w, w^{c}).
std::vector<Mat2> taylor_standard_copy(int n, int r, int c);

struct CatalogOptions {
  int n_lo = 2;
  int n_hi = 12;
  /// Parameter of the dicyclic rows when listing GKLH.
  int dicyclic_n = 4;
};

/// Entries of one family (or all when nullopt) over the n-range.
std::vector<CatalogEntry> catalog(std::optional<Family> filter, const CatalogOptions& opts = {});

/// Inclusions G_small ⊂ G_large among the primitive complex groups G_4..G_22.
const std::vector<std::pair<int, int>>& primitive_inclusion_edges();
/// Inclusion lattice edges among the T/O/I rows (small, large).
const std::vector<std::pair<std::string, std::string>>& toi_inclusion_edges();

}  // namespace qrefl

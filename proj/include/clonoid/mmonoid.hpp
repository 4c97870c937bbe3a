#pragma once

#include <optional>
#include <string>

#include "clonoid/merge.hpp"

namespace clonoid {

enum class Flavor { Plain, CM, AM, AMStrong };
const char* flavor_name(Flavor f);

/// Merge algebra + monoid with right distributivity (L1). The flavor is a
/// claim set by constructors; the checker re-derives it from the suites.
struct MMonoid {
  std::string name;
  PointedMergeAlgebra pm;
  std::function<Element(const Element&, const Element&)> mul;
  Flavor claimed = Flavor::Plain;
  bool claimed_extensional = false;
  /// constructor-certified witness of collapsing coordinates (x != y with
  /// equal coordinate maps), when the construction provides one
  std::function<std::optional<std::pair<Element, Element>>()> collapse_witness;
  /// exact decision for the D/D_omega predicates where the instance admits
  /// one (essential-arity characterization on the endofunction fragment)
  std::function<bool(const Element& a, size_t n, size_t m)> dim_exact;
};

MMonoid left_zero(const std::string& name, PointedMergeAlgebra pm);

struct NamedMonoid {
  std::string id;
  std::vector<Element> carrier;
  Element unit;
  std::function<Element(const Element&, const Element&)> op;
};
/// z2_add, z2_mul, b_or, b_and, z3_add
NamedMonoid builtin_monoid(const std::string& id);

/// monoid viewed as a degenerate m-monoid (trivial merge structure)
MMonoid degenerate_mmonoid(const std::string& name, const NamedMonoid& mo);

/// Product m-monoid of a family sharing one carrier: a finite prefix of
/// monoids followed by `tail` repeated. Componentwise product over the
/// canonical merge algebra Seq(M).
MMonoid product_mmonoid(const std::string& name, std::vector<NamedMonoid> prefix,
                        NamedMonoid tail, size_t support_bound);

/// Multiplicative monoid of positive naturals with prime-exponent splicing;
/// strong am-monoid. value_cap bounds the enumeration stream only.
MMonoid arith_am(uint64_t value_cap = 10000);

/// M (+) M on carrier M x {0,1}; preserves cm/am, never extensional.
MMonoid oplus(const MMonoid& m);

/// Endofunction cm-monoid of a finite merge algebra (composition monoid,
/// pointwise merge structure). Guarded at |A| <= 4.
MMonoid endofunction_cm(const std::string& name, const MergeAlgebra& a);

/// Finite-dimensional fragment of the endofunctions of A^omega: sequences
/// over the base k -> e_k^A whose overrides are top extensions of tables
/// with essential arity <= arity_bound; multiplication is composition.
MMonoid fdim_endo_cm(uint8_t domain, uint8_t arity_bound, size_t support_bound);

struct ExtVerdict {
  enum class Kind { Pass, Fail, Unknown } kind = Kind::Unknown;
  enum class Cert { Canonical, Exhausted, Sampled, RankCert, Constructor, Degenerate };
  Cert cert = Cert::Sampled;
  std::optional<std::pair<Element, Element>> witness;
  std::string note;
};
ExtVerdict is_extensional(const MMonoid& m, const TestDomain& dom);

struct TypeVerdict {
  int type = 0;  // 1..4; 0 = Unknown
  bool certified = false;
  std::string evidence;
  std::optional<Element> witness;
};
TypeVerdict classify_type(const PointedMergeAlgebra& p, const TestDomain& dom);
TypeVerdict classify_type(const MMonoid& m, const TestDomain& dom);

/// x,y with x*y != y*x; searches sigma-bar(1) pairs first (type-2 path)
std::optional<std::pair<Element, Element>> noncomm_witness(const MMonoid& m,
                                                           const TestDomain& dom);

struct DimVerdict {
  bool holds = false;
  bool exhaustive = false;
  std::string witness;  // set when !holds
};
/// D(a,n,m) (with k <= index_bound) or D_omega(a,n,m), quantified over the
/// enumerated fragment
DimVerdict dim_predicate(const MMonoid& m, const Element& a, size_t n, size_t mm,
                         bool omega_mode, const TestDomain& dom);

struct DimSetsEntry {
  Element a;
  bool omega_fin = false;
  bool fin = false;
  size_t witness_m = 0;
};
struct DimSetsReport {
  std::vector<DimSetsEntry> entries;
  bool inclusion_ok = true;  // M_omegaFin subset of M_Fin on the sample
  std::string violation;
};
DimSetsReport dimension_sets(const MMonoid& m, const TestDomain& dom);

}  // namespace clonoid

#pragma once

#include <optional>
#include <string>

#include "clonoid/domain.hpp"
#include "clonoid/seq.hpp"

namespace clonoid {

enum class MergeTag { Canonical, Degenerate, Derived };

struct CanonicalInfo {
  BaseSeqPtr base;
  CarrierTag seq_tag;            // carrier tag of the boxed sequences
  std::vector<Element> pool;     // override value pool used for enumeration
  size_t support_bound = 0;
};

/// A merge algebra: splice operations star_n and finite-permutation actions.
/// Operations are total on representations; `stream` is the enumerated
/// carrier fragment used for quantification.
struct MergeAlgebra {
  std::string name;
  MergeTag tag = MergeTag::Derived;
  Stream stream;
  std::function<Element(size_t, const Element&, const Element&)> star;
  std::function<Element(const FinPerm&, const Element&)> perm;
  std::optional<CanonicalInfo> canonical;
};

struct PointedMergeAlgebra {
  MergeAlgebra alg;
  Element one;
};

/// Seq(A) restricted to overrides at indices < support_bound with values in
/// `pool`; star/perm act by splicing and index pullback.
MergeAlgebra canonical_merge(const std::string& name, BaseSeqPtr base,
                             std::vector<Element> pool, size_t support_bound);
PointedMergeAlgebra pointed_canonical(const std::string& name, BaseSeqPtr base,
                                      std::vector<Element> pool, size_t support_bound);

MergeAlgebra degenerate_merge(const std::string& name, std::vector<Element> carrier);

Element restrict_lt(const PointedMergeAlgebra& p, const Element& x, size_t n);
Element restrict_ge(const PointedMergeAlgebra& p, const Element& x, size_t n);

/// least n <= bound with x_{<n} = x, else nullopt (Unknown)
std::optional<size_t> rank_of(const PointedMergeAlgebra& p, const Element& x, size_t bound);

/// a[n] = tau^n_0-bar(a)_{<1}
Element coordinate(const PointedMergeAlgebra& p, const Element& x, size_t n);

struct CoordBase {
  BaseSeqPtr base;   // rule k -> 1[k]
  CarrierTag tag;    // carrier tag for boxed coordinate sequences
};
CoordBase coord_base(const PointedMergeAlgebra& p, const std::string& name);

/// x_[] as a finitely represented sequence; requires rank(x) <= bound
/// (throws NotRepresentable when the rank search is exhausted)
OmegaSeq coord_map(const PointedMergeAlgebra& p, const CoordBase& cb, const Element& x,
                   size_t bound);

/// witness n <= bound with y *_n x = y, else nullopt (Unknown)
std::optional<size_t> abstract_trace_equiv(const MergeAlgebra& m, const Element& x,
                                           const Element& y, size_t bound);

struct DegeneracyVerdict {
  bool pass = false;
  bool exhaustive = false;  // element stream was exhaustive
  std::string witness;      // set on fail
};
DegeneracyVerdict is_degenerate(const MergeAlgebra& m, const TestDomain& dom);

}  // namespace clonoid

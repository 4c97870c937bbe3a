#include "clonoid/merge.hpp"

#include <algorithm>

namespace clonoid {

Stream finite_stream(std::vector<Element> all) {
  auto shared = std::make_shared<std::vector<Element>>(std::move(all));
  return [shared](size_t budget, uint64_t) -> StreamResult {
    StreamResult r;
    r.exhaustive = shared->size() <= budget;
    size_t n = std::min(budget, shared->size());
    r.elems.assign(shared->begin(), shared->begin() + n);
    return r;
  };
}

MergeAlgebra canonical_merge(const std::string& name, BaseSeqPtr base,
                             std::vector<Element> pool, size_t support_bound) {
  for (const Element& e : pool)
    if (e.tag() != base->value_tag())
      throw Error(Errc::CarrierMismatch,
                  "pool element " + e.repr() + " outside base carrier");
  MergeAlgebra m;
  m.name = name;
  m.tag = MergeTag::Canonical;
  CarrierTag tag = carrier_tag("seq(" + base->id() + ")");
  m.canonical = CanonicalInfo{base, tag, pool, support_bound};
  std::vector<Element> elems;
  for (OmegaSeq& s : enumerate_seqs(base, pool, support_bound))
    elems.push_back(Element::seq(std::move(s), tag));
  m.stream = finite_stream(std::move(elems));
  m.star = [tag](size_t n, const Element& x, const Element& y) {
    return Element::seq(x.as_seq().spliced(n, y.as_seq()), tag);
  };
  m.perm = [tag](const FinPerm& sigma, const Element& x) {
    return Element::seq(x.as_seq().permuted(sigma), tag);
  };
  return m;
}

PointedMergeAlgebra pointed_canonical(const std::string& name, BaseSeqPtr base,
                                      std::vector<Element> pool, size_t support_bound) {
  MergeAlgebra m = canonical_merge(name, base, std::move(pool), support_bound);
  Element one = Element::seq(OmegaSeq(base), m.canonical->seq_tag);
  return PointedMergeAlgebra{std::move(m), std::move(one)};
}

MergeAlgebra degenerate_merge(const std::string& name, std::vector<Element> carrier) {
  MergeAlgebra m;
  m.name = name;
  m.tag = MergeTag::Degenerate;
  m.stream = finite_stream(std::move(carrier));
  m.star = [](size_t, const Element&, const Element& y) { return y; };
  m.perm = [](const FinPerm&, const Element& x) { return x; };
  return m;
}

Element restrict_lt(const PointedMergeAlgebra& p, const Element& x, size_t n) {
  return p.alg.star(n, x, p.one);
}

Element restrict_ge(const PointedMergeAlgebra& p, const Element& x, size_t n) {
  return p.alg.star(n, p.one, x);
}

std::optional<size_t> rank_of(const PointedMergeAlgebra& p, const Element& x, size_t bound) {
  for (size_t n = 0; n <= bound; ++n)
    if (restrict_lt(p, x, n) == x) return n;
  return std::nullopt;
}

Element coordinate(const PointedMergeAlgebra& p, const Element& x, size_t n) {
  Element moved = n == 0 ? x : p.alg.perm(FinPerm::transposition(n, 0), x);
  return restrict_lt(p, moved, 1);
}

CoordBase coord_base(const PointedMergeAlgebra& p, const std::string& name) {
  CarrierTag rank1_tag = carrier_tag("rank1(" + name + ")");
  // capture by value: the base rule outlives this call
  PointedMergeAlgebra copy = p;
  bool constant = false, injective = false;
  if (p.alg.tag == MergeTag::Degenerate) constant = true;
  if (p.alg.canonical) {
    const auto& info = *p.alg.canonical;
    const OmegaSeq& one = p.one.as_seq();
    if (one.overrides().empty()) {
      constant = info.base->is_constant();
      injective = info.base->injective();
    }
  }
  auto rule = [copy, rank1_tag](size_t k) {
    Element c = coordinate(copy, copy.one, k);
    // coordinates live in the rank<=1 carrier of the algebra
    return c;
  };
  BaseSeqPtr base;
  if (constant) {
    base = BaseSeq::constant(rule(0));
  } else {
    base = BaseSeq::indexed("coord(" + name + ")", rule(0).tag(), rule, injective);
  }
  (void)rank1_tag;
  CarrierTag tag = carrier_tag("seq(" + base->id() + ")");
  return CoordBase{base, tag};
}

OmegaSeq coord_map(const PointedMergeAlgebra& p, const CoordBase& cb, const Element& x,
                   size_t bound) {
  auto r = rank_of(p, x, bound);
  if (!r)
    throw Error(Errc::NotRepresentable,
                "rank of " + x.repr() + " unknown at bound " + std::to_string(bound));
  std::vector<std::pair<size_t, Element>> ov;
  for (size_t k = 0; k < *r; ++k) ov.emplace_back(k, coordinate(p, x, k));
  return OmegaSeq(cb.base, std::move(ov));
}

std::optional<size_t> abstract_trace_equiv(const MergeAlgebra& m, const Element& x,
                                           const Element& y, size_t bound) {
  for (size_t n = 0; n <= bound; ++n)
    if (m.star(n, y, x) == y) return n;
  return std::nullopt;
}

DegeneracyVerdict is_degenerate(const MergeAlgebra& m, const TestDomain& dom) {
  DegeneracyVerdict v;
  StreamResult sr = m.stream(dom.element_budget, dom.seed);
  v.exhaustive = sr.exhaustive;
  auto perms = perms_upto(std::min<size_t>(dom.perm_bound, 4));
  for (const Element& x : sr.elems) {
    for (const FinPerm& sigma : perms) {
      if (!(m.perm(sigma, x) == x)) {
        v.pass = false;
        v.witness = "perm " + sigma.repr() + " moves " + x.repr();
        return v;
      }
    }
    for (size_t n = 0; n <= dom.index_bound; ++n) {
      for (const Element& y : sr.elems) {
        if (!(m.star(n, x, y) == y)) {
          v.pass = false;
          v.witness = x.repr() + " *_" + std::to_string(n) + " " + y.repr() +
                      " != " + y.repr();
          return v;
        }
      }
    }
  }
  v.pass = true;
  return v;
}

}  // namespace clonoid

#include "clonoid/translate.hpp"

#include <algorithm>
#include <unordered_set>

#include "clonoid/checker.hpp"

namespace clonoid {

namespace {

BaseSeqPtr e_base_of(const CloneAlgebra& c) {
  auto e = c.e;
  return BaseSeq::indexed("e(" + c.name + ")", c.tag, [e](size_t k) { return e(k); },
                          true);
}

std::vector<Element> rank1_elements(const MMonoid& m, const TestDomain& dom,
                                    bool* exhaustive) {
  if (m.pm.alg.canonical) {
    // rank<=1 canonical sequences are exactly the single-entry overrides at 0
    const auto& info = *m.pm.alg.canonical;
    std::vector<Element> out;
    std::unordered_set<Element, ElementHash> seen;
    Element one = m.pm.one;
    if (one.as_seq().overrides().empty()) {
      out.push_back(one);
      seen.insert(one);
      for (const Element& v : info.pool) {
        Element s = Element::seq(OmegaSeq(info.base, {{0, v}}), info.seq_tag);
        if (seen.insert(s).second) out.push_back(s);
      }
      if (exhaustive) *exhaustive = true;
      return out;
    }
  }
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  if (exhaustive) *exhaustive = sr.exhaustive;
  std::vector<Element> out;
  for (const Element& x : sr.elems)
    if (restrict_lt(m.pm, x, 1) == x) out.push_back(x);
  return out;
}

}  // namespace

MMonoid ca_to_cm(const CloneAlgebra& c, size_t support_bound, size_t value_budget) {
  auto C = std::make_shared<CloneAlgebra>(c);
  BaseSeqPtr base = e_base_of(c);
  StreamResult pool = c.stream(value_budget, 0xB00Cull);

  MMonoid m;
  m.name = c.name + "^cm";
  m.pm = pointed_canonical(m.name, base, pool.elems, support_bound);
  CarrierTag tag = m.pm.alg.canonical->seq_tag;
  m.mul = [C, tag](const Element& xb, const Element& xa) {
    const OmegaSeq& b = xb.as_seq();
    const OmegaSeq& a = xa.as_seq();
    size_t k = a.support_bound();
    std::vector<Element> prefix;
    prefix.reserve(k);
    for (size_t i = 0; i < k; ++i) prefix.push_back(a.at(i));
    std::vector<std::pair<size_t, Element>> ov;
    size_t bound = std::max(k, b.support_bound());
    for (size_t i = 0; i < bound; ++i) ov.emplace_back(i, C->q(b.at(i), prefix));
    return Element::seq(OmegaSeq(b.base(), std::move(ov)), tag);
  };
  m.claimed = Flavor::CM;
  m.claimed_extensional = true;
  return m;
}

Element hat(const MMonoid& m, std::span<const Element> bs) {
  const auto& star = m.pm.alg.star;
  const auto& perm = m.pm.alg.perm;
  for (const Element& b : bs)
    if (!(restrict_lt(m.pm, b, 1) == b))
      throw Error(Errc::RankViolation, "hat input " + b.repr() + " has rank > 1");
  if (bs.empty()) return m.pm.one;
  Element acc = bs[0];
  for (size_t i = 1; i < bs.size(); ++i)
    acc = star(i, acc, perm(FinPerm::transposition(i, 0), bs[i]));
  return acc;
}

CloneAlgebra cm_to_ca(const MMonoid& m, bool presume_cm, size_t gate_budget) {
  if (!presume_cm) {
    TestDomain gate;
    gate.element_budget = gate_budget;
    gate.index_bound = 2;
    gate.perm_bound = 3;
    gate.assignment_budget = 4000;
    Structure s = m;
    for (auto id : {checker::SuiteId::MONOID, checker::SuiteId::MMON_L1,
                    checker::SuiteId::CM_L2}) {
      checker::Report rep = checker::check(s, id, gate);
      if (rep.any_fail())
        throw Error(Errc::FlavorViolation,
                    "cm gate failed on " + m.name + " in suite " +
                        checker::suite_name(id));
    }
  }
  auto M = std::make_shared<MMonoid>(m);
  CloneAlgebra c;
  c.name = m.name + "^ca";
  c.e = [M](size_t n) { return coordinate(M->pm, M->pm.one, n); };
  c.tag = c.e(0).tag();
  c.q = [M](const Element& a, std::span<const Element> bs) {
    std::vector<Element> v(bs.begin(), bs.end());
    return restrict_lt(M->pm, M->mul(a, hat(*M, v)), 1);
  };
  auto Mcopy = M;
  c.stream = [Mcopy](size_t budget, uint64_t seed) {
    TestDomain d;
    d.element_budget = budget;
    d.seed = seed;
    bool ex = false;
    std::vector<Element> elems = rank1_elements(*Mcopy, d, &ex);
    StreamResult r;
    r.exhaustive = ex && elems.size() <= budget;
    if (elems.size() > budget) elems.resize(budget);
    r.elems = std::move(elems);
    return r;
  };
  return c;
}

RoundtripVerdict roundtrip_ca(const CloneAlgebra& c, const TestDomain& dom,
                              Morphism* out) {
  RoundtripVerdict v;
  MMonoid m = ca_to_cm(c, std::max<size_t>(dom.index_bound, 3), dom.element_budget);
  CloneAlgebra t = cm_to_ca(m, /*presume_cm=*/true);
  BaseSeqPtr base = m.pm.alg.canonical->base;
  CarrierTag tag = m.pm.alg.canonical->seq_tag;
  auto embed = [base, tag](const Element& a) {
    return Element::seq(OmegaSeq(base, {{0, a}}), tag);
  };
  if (out) *out = Morphism{c.name, t.name, embed};

  StreamResult sr = c.stream(dom.element_budget, dom.seed);
  v.e_preserved = true;
  for (size_t n = 0; n <= dom.index_bound + 1; ++n)
    if (!(embed(c.e(n)) == t.e(n))) {
      v.e_preserved = false;
      v.note = "e_" + std::to_string(n) + " not preserved";
      break;
    }

  v.q_preserved = true;
  SplitMix rng(dom.seed ^ 0x5151);
  size_t samples = 0;
  for (size_t n = 0; n <= dom.index_bound && v.q_preserved; ++n) {
    size_t tuples = 1;
    for (size_t i = 0; i < n + 1; ++i) tuples *= std::max<size_t>(sr.elems.size(), 1);
    size_t cap = std::min<size_t>(tuples, 2000);
    for (size_t tcase = 0; tcase < cap; ++tcase) {
      const Element& a = sr.elems[rng.below(sr.elems.size())];
      std::vector<Element> bs, ebs;
      for (size_t i = 0; i < n; ++i) {
        const Element& b = sr.elems[rng.below(sr.elems.size())];
        bs.push_back(b);
        ebs.push_back(embed(b));
      }
      ++samples;
      if (!(embed(c.q(a, bs)) == t.q(embed(a), ebs))) {
        v.q_preserved = false;
        v.note = "q_" + std::to_string(n) + " not preserved at " + a.repr();
        break;
      }
    }
  }
  v.checked = samples;

  // injectivity: distinct override payloads give distinct sequences
  v.injective = true;
  std::unordered_set<Element, ElementHash> images;
  for (const Element& a : sr.elems)
    if (!images.insert(embed(a)).second) {
      v.injective = false;
      v.note = "embedding collapsed " + a.repr();
      break;
    }
  // surjectivity onto the enumerated rank<=1 fragment
  v.surjective = true;
  StreamResult ts = t.stream(dom.element_budget, dom.seed);
  for (const Element& z : ts.elems)
    if (!images.count(z)) {
      v.surjective = false;
      v.note = "target element " + z.repr() + " not hit";
      break;
    }
  v.pass = v.e_preserved && v.q_preserved && v.injective && v.surjective;
  return v;
}

RoundtripVerdict roundtrip_cm(const MMonoid& m, const TestDomain& dom, Morphism* out) {
  RoundtripVerdict v;
  CloneAlgebra a = cm_to_ca(m, /*presume_cm=*/true);
  MMonoid n = ca_to_cm(a, std::max<size_t>(dom.index_bound, 3), dom.element_budget);
  BaseSeqPtr nbase = n.pm.alg.canonical->base;
  CarrierTag ntag = n.pm.alg.canonical->seq_tag;
  size_t rank_bound = std::max<size_t>(dom.index_bound, 6);
  auto pmm = m.pm;
  auto f = [pmm, nbase, ntag, rank_bound](const Element& x) {
    auto r = rank_of(pmm, x, rank_bound);
    if (!r)
      throw Error(Errc::NotRepresentable, "element " + x.repr() + " has unknown rank");
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t k = 0; k < *r; ++k) ov.emplace_back(k, coordinate(pmm, x, k));
    return Element::seq(OmegaSeq(nbase, std::move(ov)), ntag);
  };
  if (out) *out = Morphism{m.name, n.name, f};

  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  auto perms = perms_upto(std::min<size_t>(dom.perm_bound, 4));
  v.e_preserved = f(m.pm.one) == n.pm.one;
  if (!v.e_preserved) v.note = "unit not preserved";

  v.q_preserved = true;
  size_t checked = 0;
  for (size_t i = 0; i < sr.elems.size() && v.q_preserved; ++i) {
    for (size_t j = 0; j < sr.elems.size() && v.q_preserved; ++j) {
      const Element &x = sr.elems[i], &y = sr.elems[j];
      for (size_t k = 0; k <= dom.index_bound; ++k) {
        ++checked;
        if (!(f(m.pm.alg.star(k, x, y)) == n.pm.alg.star(k, f(x), f(y)))) {
          v.q_preserved = false;
          v.note = "star_" + std::to_string(k) + " not preserved";
          break;
        }
      }
      ++checked;
      if (v.q_preserved && !(f(m.mul(x, y)) == n.mul(f(x), f(y)))) {
        v.q_preserved = false;
        v.note = "product not preserved at " + x.repr() + ", " + y.repr();
      }
    }
    for (const FinPerm& sg : perms) {
      ++checked;
      if (!(f(m.pm.alg.perm(sg, sr.elems[i])) == n.pm.alg.perm(sg, f(sr.elems[i])))) {
        v.q_preserved = false;
        v.note = "perm action not preserved";
        break;
      }
    }
  }
  v.checked = checked;

  v.injective = true;
  std::unordered_set<Element, ElementHash> images;
  for (const Element& x : sr.elems)
    if (!images.insert(f(x)).second) {
      v.injective = false;
      v.note = "coordinate map collapsed " + x.repr();
      break;
    }
  v.surjective = true;
  StreamResult ts = n.pm.alg.stream(dom.element_budget, dom.seed);
  for (const Element& z : ts.elems) {
    const OmegaSeq& zs = z.as_seq();
    size_t r = zs.support_bound();
    std::vector<Element> prefix;
    for (size_t k = 0; k < r; ++k) prefix.push_back(zs.at(k));
    Element g = hat(m, prefix);
    if (!(f(g) == z)) {
      v.surjective = false;
      v.note = "no preimage for " + z.repr();
      break;
    }
  }
  v.pass = v.e_preserved && v.q_preserved && v.injective && v.surjective;
  return v;
}

TriVerdict triangular_ca_cm(const CloneAlgebra& c, const TestDomain& dom) {
  TriVerdict v;
  MMonoid m = ca_to_cm(c, std::max<size_t>(dom.index_bound, 3), dom.element_budget);
  CloneAlgebra b = cm_to_ca(m, /*presume_cm=*/true);
  BaseSeqPtr mbase = m.pm.alg.canonical->base;
  CarrierTag mtag = m.pm.alg.canonical->seq_tag;

  // triangle on M = C^cm: x in M_{|1} embeds as <x> into (M^ca)^cm and the
  // counit (hat of the prefix) must return x
  StreamResult rank1 = b.stream(dom.element_budget, dom.seed);
  for (const Element& x : rank1.elems) {
    ++v.checked;
    Element back = hat(m, std::vector<Element>{x});
    if (!(back == x)) {
      v.note = "counit(unit(x)) != x at " + x.repr();
      return v;
    }
    // the unit <x> agrees with the coordinate sequence of x
    for (size_t k = 0; k <= dom.index_bound; ++k) {
      Element ck = coordinate(m.pm, x, k);
      Element ek = k == 0 ? x : b.e(k);
      if (!(ck == ek)) {
        v.note = "coordinates of rank<=1 element disagree with <x> at k=" +
                 std::to_string(k);
        return v;
      }
    }
  }

  // triangle on A = C: a in C^cm maps entrywise through <_> and the counit
  // must restore it
  BaseSeqPtr bbase = e_base_of(b);
  StreamResult ms = m.pm.alg.stream(dom.element_budget, dom.seed);
  for (const Element& a : ms.elems) {
    ++v.checked;
    const OmegaSeq& as = a.as_seq();
    size_t r = as.support_bound();
    std::vector<Element> lifted;
    for (size_t i = 0; i < r; ++i)
      lifted.push_back(Element::seq(OmegaSeq(mbase, {{0, as.at(i)}}), mtag));
    Element back = hat(m, lifted);
    if (!(back == a)) {
      v.note = "counit((<_>)^cm(a)) != a at " + a.repr();
      return v;
    }
  }
  (void)bbase;
  v.pass = true;
  return v;
}

TriVerdict triangular_ac_ca(const AbstractClone& b, const TestDomain& dom) {
  TriVerdict v;
  size_t bound = std::min(b.max_sort, std::max<size_t>(dom.index_bound, 3));
  CloneAlgebra ca = ac_to_ca(b, bound);
  AbstractClone r = ca_to_ac(ca, bound);

  // unit eta_B: per-sort bijection and q-homomorphism onto R_{B^ac-ca}
  StreamResult classes = ca.stream(dom.element_budget, dom.seed);
  for (size_t sort = 0; sort <= bound; ++sort) {
    StreamResult bs = b.sort_stream(sort, dom.element_budget, dom.seed);
    std::unordered_set<Element, ElementHash> eta_images;
    for (const Element& x : bs.elems) {
      ++v.checked;
      auto [s, rep] = ac_class_of(b, x, sort);
      Element cls = Element::pair(Element::integer(static_cast<int64_t>(s), carrier_tag("nat")),
                                  rep, ca.tag);
      if (!eta_images.insert(cls).second) {
        v.note = "eta not injective on sort " + std::to_string(sort);
        return v;
      }
    }
    // surjectivity onto R-sort = classes of dimension <= sort
    StreamResult rs = r.sort_stream(sort, dom.element_budget, dom.seed);
    for (const Element& cls : rs.elems) {
      if (!eta_images.count(cls)) {
        // classes of strictly smaller arity come from lifted B-elements
        size_t arity = static_cast<size_t>(cls.as_pair().first.as_int());
        Element lifted = lift_plus(b, cls.as_pair().second, arity, sort - arity);
        auto [s2, rep2] = ac_class_of(b, lifted, sort);
        Element cls2 = Element::pair(
            Element::integer(static_cast<int64_t>(s2), carrier_tag("nat")), rep2, ca.tag);
        if (!(cls2 == cls)) {
          v.note = "eta not surjective on sort " + std::to_string(sort);
          return v;
        }
      }
    }
  }

  // eta homomorphism on sampled composites, and both triangles elementwise
  SplitMix rng(dom.seed ^ 0xACCA);
  for (size_t n = 0; n <= bound; ++n) {
    StreamResult sn = b.sort_stream(n, dom.element_budget, dom.seed);
    if (sn.elems.empty()) continue;
    for (size_t k = 0; k <= bound; ++k) {
      StreamResult sk = b.sort_stream(k, dom.element_budget, dom.seed);
      if (sk.elems.empty() && n > 0) continue;
      for (size_t trial = 0; trial < 24; ++trial) {
        const Element& x = sn.elems[rng.below(sn.elems.size())];
        std::vector<Element> ys, cys;
        for (size_t i = 0; i < n; ++i) {
          const Element& y = sk.elems[rng.below(sk.elems.size())];
          ys.push_back(y);
          auto [sy, ry] = ac_class_of(b, y, k);
          cys.push_back(Element::pair(
              Element::integer(static_cast<int64_t>(sy), carrier_tag("nat")), ry, ca.tag));
        }
        ++v.checked;
        Element lhs_elem = b.q(n, k, x, ys);
        auto [sl, rl] = ac_class_of(b, lhs_elem, k);
        Element lhs = Element::pair(
            Element::integer(static_cast<int64_t>(sl), carrier_tag("nat")), rl, ca.tag);
        auto [sx, rx] = ac_class_of(b, x, n);
        Element cx = Element::pair(
            Element::integer(static_cast<int64_t>(sx), carrier_tag("nat")), rx, ca.tag);
        Element rhs = ca.q(cx, cys);
        if (!(lhs == rhs)) {
          v.note = "eta does not commute with q at sorts (" + std::to_string(n) + "," +
                   std::to_string(k) + ")";
          return v;
        }
      }
    }
  }

  // triangle 1 on R_C: unlifting the class of a sort-k element recovers it
  for (size_t sort = 0; sort <= bound; ++sort) {
    StreamResult rs = r.sort_stream(sort, dom.element_budget, dom.seed);
    for (const Element& a : rs.elems) {
      ++v.checked;
      auto [s, rep] = ac_class_of(r, a, sort);
      if (!(rep == a)) {
        v.note = "triangle 1 fails at sort " + std::to_string(sort);
        return v;
      }
    }
  }
  // triangle 2 on B^ac-ca: epsilon(eta^ac-ca(class)) = class
  for (const Element& cls : classes.elems) {
    ++v.checked;
    size_t s = static_cast<size_t>(cls.as_pair().first.as_int());
    const Element& rep = cls.as_pair().second;
    auto [s2, rep2] = ac_class_of(b, rep, s);
    if (!(s2 == s && rep2 == rep)) {
      v.note = "triangle 2 fails at class " + cls.repr();
      return v;
    }
  }
  v.pass = true;
  return v;
}

MMonoid pica_to_ecm(const Pica& p, size_t support_bound, size_t value_budget) {
  auto P = std::make_shared<Pica>(p);
  StreamResult pool = p.stream(value_budget, 0xECEull);
  MMonoid m;
  m.name = p.name + "^ecm";
  m.pm = pointed_canonical(m.name, p.domain_base, pool.elems, support_bound);
  CarrierTag tag = m.pm.alg.canonical->seq_tag;
  m.mul = [P, tag](const Element& xb, const Element& xa) {
    const OmegaSeq& b = xb.as_seq();
    const OmegaSeq& a = xa.as_seq();
    size_t bound = std::max(b.support_bound(), a.support_bound());
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t i = 0; i < bound; ++i) ov.emplace_back(i, P->q(b.at(i), a));
    return Element::seq(OmegaSeq(b.base(), std::move(ov)), tag);
  };
  m.claimed = Flavor::CM;
  m.claimed_extensional = true;
  return m;
}

Pica ecm_to_pica(const MMonoid& m, const TestDomain& dom, size_t support_bound) {
  ExtVerdict ext = is_extensional(m, dom);
  if (ext.kind != ExtVerdict::Kind::Pass)
    throw Error(Errc::NotExtensional,
                m.name + " failed the extensionality gate: " + ext.note);
  auto M = std::make_shared<MMonoid>(m);
  CoordBase cb = coord_base(m.pm, m.name);
  Pica p;
  p.name = m.name + "^pica";
  p.domain_base = cb.base;
  p.dom_tag = cb.tag;
  p.e = [M](size_t k) { return coordinate(M->pm, M->pm.one, k); };
  p.tag = p.e(0).tag();
  auto Mc = M;
  p.stream = [Mc](size_t budget, uint64_t seed) {
    TestDomain d;
    d.element_budget = budget;
    d.seed = seed;
    bool ex = false;
    std::vector<Element> elems = rank1_elements(*Mc, d, &ex);
    StreamResult r;
    r.exhaustive = ex && elems.size() <= budget;
    if (elems.size() > budget) elems.resize(budget);
    r.elems = std::move(elems);
    return r;
  };
  BaseSeqPtr dbase = p.domain_base;
  CarrierTag dom_tag = p.dom_tag;
  Stream carrier_stream = p.stream;
  p.domain_stream = [carrier_stream, dbase, dom_tag, support_bound](size_t budget,
                                                                    uint64_t seed) {
    StreamResult pool = carrier_stream(budget, seed);
    StreamResult r;
    std::vector<OmegaSeq> seqs = enumerate_seqs(dbase, pool.elems, support_bound);
    r.exhaustive = pool.exhaustive && seqs.size() <= budget;
    for (size_t i = 0; i < std::min(budget, seqs.size()); ++i)
      r.elems.push_back(Element::seq(std::move(seqs[i]), dom_tag));
    return r;
  };
  p.q = [M](const Element& a, const OmegaSeq& z) {
    size_t r = z.support_bound();
    std::vector<Element> prefix;
    prefix.reserve(r);
    for (size_t i = 0; i < r; ++i) prefix.push_back(z.at(i));
    return restrict_lt(M->pm, M->mul(a, hat(*M, prefix)), 1);
  };
  p.full_domain = false;
  return p;
}

bool check_clone_hom(const CloneAlgebra& src, const CloneAlgebra& dst, const Morphism& f,
                     const TestDomain& dom, std::string* why) {
  for (size_t n = 0; n <= dom.index_bound + 1; ++n)
    if (!(f.map(src.e(n)) == dst.e(n))) {
      if (why) *why = "e_" + std::to_string(n);
      return false;
    }
  StreamResult sr = src.stream(dom.element_budget, dom.seed);
  SplitMix rng(dom.seed ^ 0xF00D);
  for (size_t n = 0; n <= dom.index_bound; ++n) {
    if (sr.elems.empty()) break;
    for (size_t trial = 0; trial < 200; ++trial) {
      const Element& a = sr.elems[rng.below(sr.elems.size())];
      std::vector<Element> bs, fbs;
      for (size_t i = 0; i < n; ++i) {
        const Element& v = sr.elems[rng.below(sr.elems.size())];
        bs.push_back(v);
        fbs.push_back(f.map(v));
      }
      if (!(f.map(src.q(a, bs)) == dst.q(f.map(a), fbs))) {
        if (why) *why = "q_" + std::to_string(n) + " at " + a.repr();
        return false;
      }
    }
  }
  return true;
}

bool check_cm_hom(const MMonoid& src, const MMonoid& dst, const Morphism& f,
                  const TestDomain& dom, std::string* why) {
  if (!(f.map(src.pm.one) == dst.pm.one)) {
    if (why) *why = "unit";
    return false;
  }
  StreamResult sr = src.pm.alg.stream(dom.element_budget, dom.seed);
  auto perms = perms_upto(std::min<size_t>(dom.perm_bound, 4));
  for (size_t i = 0; i < sr.elems.size(); ++i) {
    const Element& x = sr.elems[i];
    for (const FinPerm& sg : perms)
      if (!(f.map(src.pm.alg.perm(sg, x)) == dst.pm.alg.perm(sg, f.map(x)))) {
        if (why) *why = "perm at " + x.repr();
        return false;
      }
    for (size_t j = 0; j < sr.elems.size(); ++j) {
      const Element& y = sr.elems[j];
      for (size_t n = 0; n <= dom.index_bound; ++n)
        if (!(f.map(src.pm.alg.star(n, x, y)) == dst.pm.alg.star(n, f.map(x), f.map(y)))) {
          if (why) *why = "star_" + std::to_string(n);
          return false;
        }
      if (!(f.map(src.mul(x, y)) == dst.mul(f.map(x), f.map(y)))) {
        if (why) *why = "product at " + x.repr() + "," + y.repr();
        return false;
      }
    }
  }
  return true;
}

bool check_pica_hom(const Pica& src, const Pica& dst, const Morphism& f,
                    const TestDomain& dom, std::string* why) {
  StreamResult as = src.stream(dom.element_budget, dom.seed);
  StreamResult ds = src.domain_stream(dom.element_budget, dom.seed);
  for (size_t n = 0; n <= dom.index_bound; ++n)
    if (!(f.map(src.e(n)) == dst.e(n))) {
      if (why) *why = "e_" + std::to_string(n);
      return false;
    }
  for (const Element& a : as.elems) {
    for (const Element& zel : ds.elems) {
      const OmegaSeq& z = zel.as_seq();
      // f^omega maps the domain sequence entrywise onto dst's domain base
      std::vector<std::pair<size_t, Element>> ov;
      for (size_t i = 0; i < z.support_bound(); ++i) ov.emplace_back(i, f.map(z.at(i)));
      OmegaSeq fz(dst.domain_base, std::move(ov));
      if (!(f.map(src.q(a, z)) == dst.q(f.map(a), fz))) {
        if (why) *why = "q at " + a.repr();
        return false;
      }
    }
  }
  return true;
}

}  // namespace clonoid

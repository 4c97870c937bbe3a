#include <doctest.h>

#include "clonoid/checker.hpp"
#include "clonoid/clonealg.hpp"
#include "clonoid/mmonoid.hpp"
#include "clonoid/translate.hpp"

using namespace clonoid;

namespace {

TestDomain dom_of(size_t budget, size_t index_bound = 4, size_t perm_bound = 3) {
  TestDomain d;
  d.element_budget = budget;
  d.index_bound = index_bound;
  d.perm_bound = perm_bound;
  return d;
}

bool suite_passes(const MMonoid& m, checker::SuiteId id, const TestDomain& d) {
  Structure s = m;
  return !checker::check(s, id, d).any_fail();
}

MMonoid projcm() { return ca_to_cm(projection_algebra(9), 3, 4); }

Element big(const MMonoid& m, uint64_t v) { return Element::big(BigInt(v), m.pm.one.tag()); }

}  // namespace

TEST_CASE("left-zero multiplication") {
  auto p = pointed_canonical("s2", BaseSeq::constant(Element::integer(0, carrier_tag("fin2"))),
                             {Element::integer(0, carrier_tag("fin2")),
                              Element::integer(1, carrier_tag("fin2"))},
                             2);
  MMonoid m = left_zero("lz", p);
  StreamResult sr = m.pm.alg.stream(16, 0);
  for (const Element& a : sr.elems) {
    CHECK(m.mul(a, m.pm.one) == a);
    for (const Element& b : sr.elems)
      if (!(b == m.pm.one)) CHECK(m.mul(a, b) == b);
  }
  TestDomain d = dom_of(16);
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  // constant coordinator fixes the unit, so the left-zero monoid is am
  CHECK(m.claimed == Flavor::AM);
  CHECK(suite_passes(m, checker::SuiteId::AM_L3, d));
  // but over a two-valued carrier it is not degenerate, hence not cm
  CHECK(!suite_passes(m, checker::SuiteId::CM_L2, d));
}

TEST_CASE("left-zero over a degenerate algebra is a cm-monoid") {
  MergeAlgebra alg = degenerate_merge("deg", {Element::integer(0, carrier_tag("fin3")),
                                              Element::integer(1, carrier_tag("fin3")),
                                              Element::integer(2, carrier_tag("fin3"))});
  MMonoid m = left_zero("lzdeg", {alg, Element::integer(0, carrier_tag("fin3"))});
  CHECK(m.claimed == Flavor::CM);
  TestDomain d = dom_of(16);
  CHECK(suite_passes(m, checker::SuiteId::CM_L2, d));
  CHECK(suite_passes(m, checker::SuiteId::AM_L3, d));
}

TEST_CASE("a plain left-zero m-monoid exists") {
  // coordinator (0,1,1,...) is moved by tau^1_0, so neither cm nor am
  CarrierTag f2 = carrier_tag("fin2");
  auto p = pointed_canonical("s2", BaseSeq::constant(Element::integer(1, f2)),
                             {Element::integer(0, f2), Element::integer(1, f2)}, 3);
  p.one = Element::seq(OmegaSeq(p.alg.canonical->base, {{0, Element::integer(0, f2)}}),
                       p.alg.canonical->seq_tag);
  MMonoid m = left_zero("lzplain", p);
  CHECK(m.claimed == Flavor::Plain);
  TestDomain d = dom_of(16);
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(!suite_passes(m, checker::SuiteId::CM_L2, d));
  CHECK(!suite_passes(m, checker::SuiteId::AM_L3, d));
}

TEST_CASE("product m-monoid of (Z2,+)") {
  MMonoid m = product_mmonoid("prodz2", {}, builtin_monoid("z2_add"), 3);
  CHECK(m.claimed == Flavor::AMStrong);
  TestDomain d = dom_of(64);
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(suite_passes(m, checker::SuiteId::AM_L3, d));
  CHECK(suite_passes(m, checker::SuiteId::AM_L4, d));

  // never a cm-monoid: the checker finds a transposition witness
  Structure s = m;
  checker::Report rep = checker::check(s, checker::SuiteId::CM_L2, d);
  CHECK(rep.any_fail());
  for (const auto& l : rep.laws)
    if (l.verdict == checker::VerdictKind::Fail)
      CHECK(l.witness.at("instance").dump().find("->") != std::string::npos);
  // tau^1_0 itself violates L2, as in the impossibility argument
  FinPerm t10 = FinPerm::transposition(1, 0);
  bool t10_fails = false;
  StreamResult sm = m.pm.alg.stream(16, 0);
  for (const Element& x : sm.elems)
    for (const Element& y : sm.elems)
      if (!(m.mul(m.pm.alg.perm(t10, x), y) == m.pm.alg.perm(t10, m.mul(x, y))))
        t10_fails = true;
  CHECK(t10_fails);

  // left distributivity holds on product m-monoids
  StreamResult sr = m.pm.alg.stream(64, 0);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems)
      for (const Element& z : sr.elems)
        for (size_t n = 0; n <= 3; ++n)
          CHECK(m.mul(x, m.pm.alg.star(n, y, z)) ==
                m.pm.alg.star(n, m.mul(x, y), m.mul(x, z)));
}

TEST_CASE("mixed product families are plain") {
  MMonoid m = product_mmonoid("mix", {builtin_monoid("b_or")}, builtin_monoid("z2_add"), 3);
  CHECK(m.claimed == Flavor::Plain);
  TestDomain d = dom_of(64);
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(!suite_passes(m, checker::SuiteId::AM_L3, d));
}

TEST_CASE("arithmetic am-monoid splices prime exponents") {
  MMonoid m = arith_am(1000);
  // 12 = 2^2 3, 18 = 2 3^2; merge at 1 keeps 2^2 and takes 3^2
  CHECK(m.pm.alg.star(1, big(m, 12), big(m, 18)) == big(m, 36));
  CHECK(m.pm.alg.perm(FinPerm::transposition(1, 0), big(m, 12)) == big(m, 18));
  for (const FinPerm& sg : perms_upto(4))
    CHECK(m.pm.alg.perm(sg, m.pm.one) == m.pm.one);

  TestDomain d = dom_of(48);
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(suite_passes(m, checker::SuiteId::AM_L3, d));
  CHECK(suite_passes(m, checker::SuiteId::AM_L4, d));
  CHECK(!suite_passes(m, checker::SuiteId::CM_L2, d));
  CHECK(suite_passes(m, checker::SuiteId::MERGE_B, d));

  CHECK_THROWS_AS(m.pm.alg.star(1, Element::big(BigInt(0), m.pm.one.tag()), big(m, 2)),
                  Error);
}

TEST_CASE("am laws for coordinates on the arithmetic instance") {
  MMonoid m = arith_am(200);
  StreamResult sr = m.pm.alg.stream(16, 7);
  FinPerm t10 = FinPerm::transposition(1, 0);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems) {
      Element xy = m.mul(x, y);
      for (size_t n = 0; n <= 3; ++n) {
        FinPerm tn0 = FinPerm::transposition(n, 0);
        Element lhs = coordinate(m.pm, xy, n);
        Element mid = restrict_lt(
            m.pm, m.mul(coordinate(m.pm, x, n), m.pm.alg.perm(tn0, y)), 1);
        Element strong = m.mul(coordinate(m.pm, x, n), coordinate(m.pm, y, n));
        CHECK(lhs == mid);
        CHECK(lhs == strong);  // (L4) instances are strong
      }
    }
  (void)t10;
}

TEST_CASE("oplus doubles the carrier and kills extensionality") {
  MMonoid base = projcm();
  MMonoid m = oplus(base);
  CHECK(m.claimed == base.claimed);
  // unit is forced to (1,0)
  CHECK(m.pm.one.as_pair().second.as_int() == 0);
  StreamResult sr = m.pm.alg.stream(32, 0);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems) {
      int64_t i = x.as_pair().second.as_int(), j = y.as_pair().second.as_int();
      CHECK(m.mul(x, y).as_pair().second.as_int() == (i + j) % 2);
    }
  TestDomain d = dom_of(32, 3, 3);
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(suite_passes(m, checker::SuiteId::CM_L2, d));

  ExtVerdict ext = is_extensional(m, d);
  CHECK(ext.kind == ExtVerdict::Kind::Fail);
  REQUIRE(ext.witness.has_value());
  // the witness pair differs only in the parity bit
  CHECK(ext.witness->first.as_pair().first == ext.witness->second.as_pair().first);
  CHECK(ext.witness->first.as_pair().second.as_int() !=
        ext.witness->second.as_pair().second.as_int());
  // and the coordinates really agree
  for (size_t k = 0; k <= 4; ++k)
    CHECK(coordinate(m.pm, ext.witness->first, k) ==
          coordinate(m.pm, ext.witness->second, k));
}

TEST_CASE("endofunction cm-monoid") {
  CarrierTag f2 = carrier_tag("fin2");
  MergeAlgebra a =
      canonical_merge("s1", BaseSeq::constant(Element::integer(0, f2)),
                      {Element::integer(0, f2), Element::integer(1, f2)}, 1);
  MMonoid m = endofunction_cm("endo", a);
  StreamResult sr = m.pm.alg.stream(64, 0);
  CHECK(sr.exhaustive);
  CHECK(sr.elems.size() == 4);  // |A|^|A| with |A| = 2

  for (const Element& f : sr.elems) CHECK(m.mul(m.pm.one, f) == f);

  // (f *_n g)(x) = f(x) *_n g(x) pointwise
  StreamResult pts = a.stream(8, 0);
  for (const Element& f : sr.elems)
    for (const Element& g : sr.elems)
      for (size_t n = 0; n <= 3; ++n) {
        Element fg = m.pm.alg.star(n, f, g);
        for (size_t i = 0; i < pts.elems.size(); ++i)
          CHECK(fg.as_vec()[i] == a.star(n, f.as_vec()[i], g.as_vec()[i]));
      }

  TestDomain d = dom_of(64, 3, 3);
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(suite_passes(m, checker::SuiteId::CM_L2, d));
  CHECK(suite_passes(m, checker::SuiteId::MERGE_B, d));

  CHECK_THROWS_AS(endofunction_cm("big", degenerate_merge("d9", [] {
                                    std::vector<Element> v;
                                    for (int i = 0; i < 9; ++i)
                                      v.push_back(Element::integer(i, carrier_tag("fin9")));
                                    return v;
                                  }())),
                  Error);
}

TEST_CASE("finite-dimensional endofunction fragment") {
  MMonoid m = fdim_endo_cm(2, 2, 2);
  // the unit is the identity sequence (e_0, e_1, ...)
  CHECK(m.pm.one.as_seq().overrides().empty());

  TestDomain d = dom_of(64, 3, 3);
  d.assignment_budget = 30000;
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(suite_passes(m, checker::SuiteId::CM_L2, d));

  // phi[n] holds the n-th entry in first position
  StreamResult sr = m.pm.alg.stream(24, 0);
  for (const Element& phi : sr.elems)
    for (size_t n = 0; n <= 3; ++n) {
      Element c = coordinate(m.pm, phi, n);
      CHECK(c.as_seq().at(0) == phi.as_seq().at(n));
      for (size_t k = 1; k <= 3; ++k)
        CHECK(c.as_seq().at(k) == m.pm.one.as_seq().at(k));
    }

  ExtVerdict ext = is_extensional(m, d);
  CHECK(ext.kind == ExtVerdict::Kind::Pass);
}

TEST_CASE("extensionality verdicts") {
  TestDomain d = dom_of(32);
  // nontrivial degenerate instances collapse all coordinates
  MMonoid dm = degenerate_mmonoid("z3deg", builtin_monoid("z3_add"));
  ExtVerdict ev = is_extensional(dm, d);
  CHECK(ev.kind == ExtVerdict::Kind::Fail);
  // canonical instances are extensional by construction
  ExtVerdict pv = is_extensional(projcm(), d);
  CHECK(pv.kind == ExtVerdict::Kind::Pass);
}

TEST_CASE("type classification battery") {
  TestDomain d = dom_of(64);
  // degenerate -> type 1
  TypeVerdict t1 = classify_type(degenerate_mmonoid("z2deg", builtin_monoid("z2_add")), d);
  CHECK(t1.type == 1);
  CHECK(t1.certified);

  // ca_to_cm(projection) -> type 2, certified through the injective e-base
  TypeVerdict t2 = classify_type(projcm(), d);
  CHECK(t2.type == 2);
  CHECK(t2.certified);

  // product of (Z2,+) -> type 3
  TypeVerdict t3 =
      classify_type(product_mmonoid("prodz2", {}, builtin_monoid("z2_add"), 3), d);
  CHECK(t3.type == 3);
  CHECK(t3.certified);

  // left-zero over the canonical algebra pointed at (0,1,1,...) -> type 4
  CarrierTag f2 = carrier_tag("fin2");
  auto p = pointed_canonical("s2", BaseSeq::constant(Element::integer(1, f2)),
                             {Element::integer(0, f2), Element::integer(1, f2)}, 3);
  p.one = Element::seq(OmegaSeq(p.alg.canonical->base, {{0, Element::integer(0, f2)}}),
                       p.alg.canonical->seq_tag);
  TypeVerdict t4 = classify_type(left_zero("lz4", p), d);
  CHECK(t4.type == 4);
  CHECK(t4.certified);

  // arithmetic am-monoid -> type 3 via the am certificate
  TypeVerdict ta = classify_type(arith_am(100), d);
  CHECK(ta.type == 3);
  CHECK(ta.certified);
}

TEST_CASE("noncommutativity witnesses") {
  TestDomain d = dom_of(64);
  MMonoid pc = projcm();
  auto w = noncomm_witness(pc, d);
  REQUIRE(w.has_value());
  CHECK(!(pc.mul(w->first, w->second) == pc.mul(w->second, w->first)));

  CHECK(!noncomm_witness(degenerate_mmonoid("z2deg", builtin_monoid("z2_add")), d)
             .has_value());

  MMonoid fd = fdim_endo_cm(2, 2, 2);
  auto wf = noncomm_witness(fd, d);
  REQUIRE(wf.has_value());
  CHECK(!(fd.mul(wf->first, wf->second) == fd.mul(wf->second, wf->first)));
}

TEST_CASE("cm coordinate laws") {
  MMonoid m = projcm();
  StreamResult sr = m.pm.alg.stream(32, 3);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems)
      for (size_t n = 0; n <= 3; ++n) {
        // x[n] = (1[n] x)_{<1}
        CHECK(coordinate(m.pm, x, n) ==
              restrict_lt(m.pm, m.mul(coordinate(m.pm, m.pm.one, n), x), 1));
        // (x y)[n] = (x[n] y)_{<1}
        CHECK(coordinate(m.pm, m.mul(x, y), n) ==
              restrict_lt(m.pm, m.mul(coordinate(m.pm, x, n), y), 1));
      }
  // sigma-bar(x) = sigma-bar(1) . x
  for (const FinPerm& sg : perms_upto(3))
    for (const Element& x : sr.elems)
      CHECK(m.pm.alg.perm(sg, x) == m.mul(m.pm.alg.perm(sg, m.pm.one), x));
  // {sigma-bar(1)} is a group under the product
  std::vector<Element> bar;
  for (const FinPerm& sg : perms_upto(3)) bar.push_back(m.pm.alg.perm(sg, m.pm.one));
  for (const Element& a : bar)
    for (const Element& b : bar) {
      Element ab = m.mul(a, b);
      CHECK(std::find(bar.begin(), bar.end(), ab) != bar.end());
    }
  for (const FinPerm& sg : perms_upto(3)) {
    Element inv = m.pm.alg.perm(sg.inverse(), m.pm.one);
    CHECK(m.mul(m.pm.alg.perm(sg, m.pm.one), inv) == m.pm.one);
  }
}

TEST_CASE("restriction laws interact with the product") {
  MMonoid m = projcm();
  StreamResult sr = m.pm.alg.stream(32, 5);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems)
      for (size_t n = 0; n <= 3; ++n) {
        CHECK(restrict_lt(m.pm, m.mul(x, y), n) ==
              restrict_lt(m.pm, m.mul(restrict_lt(m.pm, x, n), y), n));
        CHECK(restrict_lt(m.pm, m.mul(x, restrict_lt(m.pm, y, n)), n) ==
              m.mul(restrict_lt(m.pm, x, n), restrict_lt(m.pm, y, n)));
      }
  // x ~ y implies xz ~ yz
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems)
      if (abstract_trace_equiv(m.pm.alg, x, y, 6))
        for (const Element& z : sr.elems)
          CHECK(abstract_trace_equiv(m.pm.alg, m.mul(x, z), m.mul(y, z), 8).has_value());
}

TEST_CASE("extensional cm-monoids satisfy the coordinate transport condition") {
  MMonoid m = projcm();
  StreamResult sr = m.pm.alg.stream(24, 3);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems)
      for (size_t i = 0; i <= 2; ++i)
        for (size_t j = 0; j <= 2; ++j) {
          if (!(coordinate(m.pm, x, i) == coordinate(m.pm, y, j))) continue;
          for (const Element& z : sr.elems)
            CHECK(coordinate(m.pm, m.mul(x, z), i) == coordinate(m.pm, m.mul(y, z), j));
        }
}

TEST_CASE("cm and am together force degeneracy") {
  TestDomain d = dom_of(32);
  // positive: a degenerate instance passes both and the degeneracy test
  MMonoid dm = degenerate_mmonoid("z2deg", builtin_monoid("z2_add"));
  CHECK(suite_passes(dm, checker::SuiteId::CM_L2, d));
  CHECK(suite_passes(dm, checker::SuiteId::AM_L3, d));
  CHECK(is_degenerate(dm.pm.alg, d).pass);
  // contrapositive samples: non-degenerate instances fail one of the two
  MMonoid pc = projcm();
  CHECK(!is_degenerate(pc.pm.alg, d).pass);
  CHECK(suite_passes(pc, checker::SuiteId::CM_L2, d) !=
        suite_passes(pc, checker::SuiteId::AM_L3, d));
  MMonoid ar = arith_am(100);
  CHECK(!is_degenerate(ar.pm.alg, d).pass);
  CHECK(suite_passes(ar, checker::SuiteId::CM_L2, d) !=
        suite_passes(ar, checker::SuiteId::AM_L3, d));
}

TEST_CASE("types of cm instances stay in {1,2} and am instances in {1,3}") {
  TestDomain d = dom_of(48);
  for (int which = 0; which < 2; ++which) {
    MMonoid m = which == 0 ? projcm() : ca_to_cm(fca(2, 1), 2, 12);
    TypeVerdict t = classify_type(m, d);
    CHECK((t.type == 1 || t.type == 2));
  }
  for (int which = 0; which < 2; ++which) {
    MMonoid m = which == 0 ? arith_am(100)
                           : product_mmonoid("pz", {}, builtin_monoid("z2_add"), 3);
    TypeVerdict t = classify_type(m, d);
    CHECK((t.type == 1 || t.type == 3));
  }
}

TEST_CASE("monoids round-trip through degenerate m-monoids") {
  NamedMonoid z3 = builtin_monoid("z3_add");
  MMonoid m = degenerate_mmonoid("z3deg", z3);
  TestDomain d = dom_of(16);
  CHECK(suite_passes(m, checker::SuiteId::MONOID, d));
  CHECK(suite_passes(m, checker::SuiteId::MMON_L1, d));
  CHECK(is_degenerate(m.pm.alg, d).pass);
  // extracting the multiplicative reduct returns the original tables
  for (const Element& a : z3.carrier)
    for (const Element& b : z3.carrier) CHECK(m.mul(a, b) == z3.op(a, b));
  CHECK(m.pm.one == z3.unit);
}

TEST_CASE("dimension predicates") {
  TestDomain d = dom_of(32);
  MMonoid pc = projcm();
  // D_omega(1, n, n) always holds
  for (size_t n = 0; n <= 3; ++n)
    CHECK(dim_predicate(pc, pc.pm.one, n, n, true, d).holds);

  MMonoid fd = fdim_endo_cm(2, 2, 2);
  for (size_t n = 0; n <= 3; ++n)
    CHECK(dim_predicate(fd, fd.pm.one, n, n, true, d).holds);

  // essential-arity characterization on the endofunction fragment
  StreamResult sr = fd.pm.alg.stream(40, 0);
  for (const Element& phi : sr.elems)
    for (size_t n = 0; n <= 2; ++n)
      for (size_t mm = 0; mm <= 3; ++mm) {
        bool expect = true;
        for (size_t i = 0; i < n; ++i)
          if (phi.as_seq().at(i).as_op().essential_arity() > mm) expect = false;
        CHECK(dim_predicate(fd, phi, n, mm, true, d).holds == expect);
        CHECK(dim_predicate(fd, phi, n, mm, false, d).holds == expect);
      }

  // monotonicity: D(a,n,m) implies D(a,n',m) for n' <= n and D(a,n,m') for m' >= m
  StreamResult ps = pc.pm.alg.stream(12, 5);
  for (const Element& a : ps.elems)
    for (size_t n = 0; n <= 3; ++n)
      for (size_t mm = 0; mm <= 3; ++mm) {
        if (!dim_predicate(pc, a, n, mm, false, d).holds) continue;
        for (size_t np = 0; np <= n; ++np)
          CHECK(dim_predicate(pc, a, np, mm, false, d).holds);
        CHECK(dim_predicate(pc, a, n, mm + 1, false, d).holds);
      }
}

TEST_CASE("dimension sets") {
  TestDomain d = dom_of(24, 3);
  MMonoid pc = projcm();
  DimSetsReport rep = dimension_sets(pc, d);
  CHECK(rep.inclusion_ok);
  bool unit_seen = false;
  for (const auto& e : rep.entries) {
    if (e.a == pc.pm.one) {
      unit_seen = true;
      CHECK(e.omega_fin);
    }
    // finitely ranked instance: the two notions agree on the sample
    CHECK(e.omega_fin == e.fin);
  }
  CHECK(unit_seen);

  // coordinates of omega-finite-dimensional elements stay omega-finite
  for (const auto& e : rep.entries)
    if (e.omega_fin)
      for (size_t i = 0; i <= 2; ++i) {
        Element c = coordinate(pc.pm, e.a, i);
        CHECK(dim_predicate(pc, c, d.index_bound, d.index_bound, true, d).holds);
      }

  DimSetsReport fr = dimension_sets(fdim_endo_cm(2, 2, 2), d);
  CHECK(fr.inclusion_ok);
}

#include <doctest.h>

#include "clonoid/checker.hpp"
#include "clonoid/clonealg.hpp"
#include "clonoid/translate.hpp"

using namespace clonoid;

namespace {

Element pe(const CloneAlgebra& c, int64_t v) { return Element::integer(v, c.tag); }

std::vector<Element> elems(std::initializer_list<Element> xs) { return xs; }

TestDomain dom_of(size_t budget, size_t index_bound) {
  TestDomain d;
  d.element_budget = budget;
  d.index_bound = index_bound;
  return d;
}

}  // namespace

TEST_CASE("projection algebra formula") {
  CloneAlgebra p = projection_algebra(9);
  CHECK(p.q(pe(p, 1), elems({pe(p, 5), pe(p, 7)})) == pe(p, 7));
  CHECK(p.q(pe(p, 4), elems({pe(p, 5), pe(p, 7)})) == pe(p, 4));
  CHECK(p.q(pe(p, 3), {}) == pe(p, 3));
  CHECK(p.e(5) == pe(p, 5));
}

TEST_CASE("CA_C passes exhaustively on the projection window") {
  Structure s = projection_algebra(9);
  checker::Report rep = checker::check(s, checker::SuiteId::CA_C, dom_of(64, 4));
  CHECK(!rep.any_fail());
  CHECK(rep.elements_exhaustive);
}

TEST_CASE("the unbounded projection algebra reports sampled passes") {
  Structure s = projection_algebra();
  TestDomain d = dom_of(24, 3);
  checker::Report rep = checker::check(s, checker::SuiteId::CA_C, d);
  CHECK(!rep.any_fail());
  CHECK(!rep.elements_exhaustive);
  for (const auto& l : rep.laws) CHECK(l.verdict == checker::VerdictKind::PassSampled);
}

TEST_CASE("fca units and composition") {
  CloneAlgebra f = fca(2, 2);
  FinOp andop = builtin_finop("and", 2);
  FinOp orop = builtin_finop("or", 2);
  FinOp xorop = builtin_finop("xor", 2);
  Element ea = Element::op(andop, f.tag);
  Element eo = Element::op(orop, f.tag);
  Element ex = Element::op(xorop, f.tag);

  // q_n(e_i, b) = b_i and q_n(a, e_0..e_{n-1}) = a
  CHECK(f.q(f.e(0), elems({ea, eo})) == ea);
  CHECK(f.q(f.e(1), elems({ea, eo})) == eo);
  CHECK(f.q(ea, elems({f.e(0), f.e(1)})) == ea);

  // brute-force oracle over {0,1}^2 for AND(OR(x,y), XOR(x,y))
  Element got = f.q(ea, elems({eo, ex}));
  FinOp expect{2, 2, {0, 0, 0, 0}};
  for (uint8_t x = 0; x < 2; ++x)
    for (uint8_t y = 0; y < 2; ++y) {
      std::vector<uint8_t> args{x, y};
      uint8_t o = orop.eval(args), xr = xorop.eval(args);
      std::vector<uint8_t> mid{o, xr};
      expect.table[2 * x + y] = andop.eval(mid);
    }
  CHECK(got == Element::op(expect.normalized(), f.tag));
}

TEST_CASE("CA_C passes exhaustively on fca({0,1},2)") {
  Structure s = fca(2, 2);
  TestDomain d = dom_of(64, 3);
  d.assignment_budget = 60000;
  checker::Report rep = checker::check(s, checker::SuiteId::CA_C, d);
  CHECK(!rep.any_fail());
  CHECK(rep.elements_exhaustive);
}

TEST_CASE("term clone algebra substitutes") {
  Signature sig{{{"f", 2}, {"g", 1}}};
  CloneAlgebra t = term_clone_algebra(sig);
  Element v0 = t.e(0), v1 = t.e(1);
  Element f01 = Element::term(
      TermNode::make_app("f", {v0.as_term(), v1.as_term()}), t.tag);
  // q_n(v_i, u) = u_i
  CHECK(t.q(v0, elems({f01, v1})) == f01);
  // q_2(f(v0,v1), v1, v0) = f(v1, v0)
  Element f10 = Element::term(
      TermNode::make_app("f", {v1.as_term(), v0.as_term()}), t.tag);
  CHECK(t.q(f01, elems({v1, v0})) == f10);
  // identity substitution
  CHECK(t.q(f01, elems({v0, v1})) == f01);
  // substitution oracle: nested case g(f(v0,v1))[v0 := g(v1)]
  Element gf = Element::term(TermNode::make_app("g", {f01.as_term()}), t.tag);
  Element gv1 = Element::term(TermNode::make_app("g", {v1.as_term()}), t.tag);
  Element expect = Element::term(
      TermNode::make_app(
          "g", {TermNode::make_app("f", {gv1.as_term(), v1.as_term()})}),
      t.tag);
  CHECK(t.q(gf, elems({gv1, v1})) == expect);
}

TEST_CASE("CA_C passes on the term algebra sample") {
  Signature sig{{{"f", 2}, {"c", 0}}};
  Structure s = term_clone_algebra(sig);
  TestDomain d = dom_of(20, 2);
  d.assignment_budget = 20000;
  checker::Report rep = checker::check(s, checker::SuiteId::CA_C, d);
  CHECK(!rep.any_fail());
}

TEST_CASE("independence matches the defining equation") {
  CloneAlgebra p = projection_algebra(9);
  for (int64_t i = 0; i < 6; ++i)
    for (size_t n = 0; n < 6; ++n)
      CHECK(independent(p, pe(p, i), n) == (static_cast<size_t>(i) != n));

  CloneAlgebra f = fca(2, 2);
  StreamResult sr = f.stream(64, 0);
  for (const Element& a : sr.elems)
    for (size_t n = 0; n < 4; ++n)
      CHECK(independent(f, a, n) == !a.as_op().depends_on(static_cast<uint8_t>(n)));
}

TEST_CASE("independence collapse across padded arguments") {
  CloneAlgebra p = projection_algebra(9);
  // independent of e_2, e_3 lets q_4 collapse onto q_2
  Element a = pe(p, 1);
  std::vector<Element> b2{pe(p, 5), pe(p, 6)};
  std::vector<Element> b4{pe(p, 5), pe(p, 6), pe(p, 7), pe(p, 8)};
  CHECK(independent(p, a, 2));
  CHECK(independent(p, a, 3));
  CHECK(p.q(a, b4) == p.q(a, b2));
}

TEST_CASE("dimension certificates") {
  CloneAlgebra p = projection_algebra(9);
  for (int64_t i = 0; i < 5; ++i) {
    Dimension d = dimension_ca(p, pe(p, i), 8);
    CHECK(d.kind == Dimension::Kind::Exact);
    CHECK(d.value == static_cast<size_t>(i) + 1);
  }

  CloneAlgebra f = fca(2, 2);
  Dimension dc = dimension_ca(f, Element::op(FinOp::constant(2, 0, 1), f.tag), 8);
  CHECK(dc.kind == Dimension::Kind::Exact);
  CHECK(dc.value == 0);
  Dimension da = dimension_ca(f, Element::op(builtin_finop("and", 2), f.tag), 8);
  CHECK(da.value == 2);
  Dimension de = dimension_ca(f, f.e(0), 8);
  CHECK(de.value == 1);
  // dim(e_n) = n + 1 on every instance with certificates
  Signature sig{{{"f", 2}}};
  CloneAlgebra t = term_clone_algebra(sig);
  for (size_t n = 0; n < 4; ++n) {
    CHECK(dimension_ca(p, p.e(n), 8).value == n + 1);
    CHECK(dimension_ca(f, f.e(n), 8).value == n + 1);
    CHECK(dimension_ca(t, t.e(n), 8).value == n + 1);
  }
}

TEST_CASE("bounded dimension scan without certificates") {
  CloneAlgebra p = projection_algebra(9);
  p.dim_cert = nullptr;
  Dimension d = dimension_ca(p, pe(p, 2), 6);
  CHECK(d.kind == Dimension::Kind::Bounded);
  CHECK(d.value == 3);
  Dimension u = dimension_ca(p, pe(p, 8), 6);
  CHECK(u.kind == Dimension::Kind::Unknown);
}

TEST_CASE("fin_subalgebra keeps certified elements") {
  CloneAlgebra p = projection_algebra(9);
  CloneAlgebra fp = fin_subalgebra(p, 16);
  StreamResult a = p.stream(64, 0), b = fp.stream(64, 0);
  CHECK(a.elems == b.elems);

  CloneAlgebra f = fca(2, 2);
  CloneAlgebra ff = fin_subalgebra(f, 16);
  CHECK(f.stream(64, 0).elems.size() == ff.stream(64, 0).elems.size());

  // closure spot check: q of certified elements keeps a certificate
  StreamResult sr = ff.stream(16, 0);
  for (const Element& x : sr.elems)
    for (const Element& y : sr.elems) {
      Element z = ff.q(x, elems({y, y}));
      CHECK(ff.dim_cert(z).has_value());
    }
}

TEST_CASE("clone algebra homomorphism checker") {
  CloneAlgebra p = projection_algebra(7);
  CloneAlgebra f = fca(2, 2);
  // n -> e_n is forced on the projection algebra and lands in the fca
  Morphism emap{p.name, f.name,
                [&f](const Element& x) { return f.e(static_cast<size_t>(x.as_int())); }};
  TestDomain d = dom_of(7, 3);
  std::string why;
  CHECK(check_clone_hom(p, f, emap, d, &why));

  // a broken map is rejected
  Morphism bad{p.name, f.name, [&f](const Element&) { return f.e(0); }};
  CHECK(!check_clone_hom(p, f, bad, d, &why));
}

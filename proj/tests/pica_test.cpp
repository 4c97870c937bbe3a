#include <doctest.h>

#include "clonoid/checker.hpp"
#include "clonoid/pica.hpp"
#include "clonoid/translate.hpp"

using namespace clonoid;

namespace {

TestDomain dom_of(size_t budget, size_t index_bound = 4) {
  TestDomain d;
  d.element_budget = budget;
  d.index_bound = index_bound;
  return d;
}

// raw matrix oracle over the boolean quantale: m[i][j] = entry at row i, col j
using Mat = std::vector<std::vector<int>>;

Element mat_to_elem(const Pica& p, const Mat& m) {
  // columns are sequences over the constant-bottom base
  const auto& unit_col0 = p.domain_base->at(0).as_seq();
  BaseSeqPtr colbase = unit_col0.base();
  CarrierTag coltag = p.domain_base->at(0).tag();
  CarrierTag qtag = unit_col0.at(0).tag();
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<std::pair<size_t, Element>> colov;
  for (size_t j = 0; j < cols; ++j) {
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t i = 0; i < rows; ++i)
      ov.emplace_back(i, Element::integer(m[i][j], qtag));
    colov.emplace_back(j, Element::seq(OmegaSeq(colbase, std::move(ov)), coltag));
  }
  return Element::seq(OmegaSeq(p.domain_base, std::move(colov)), p.dom_tag);
}

int mat_entry(const Element& matrix, size_t row, size_t col) {
  return static_cast<int>(matrix.as_seq().at(col).as_seq().at(row).as_int());
}

}  // namespace

TEST_CASE("pica_q projections, unit, and domain guard") {
  CloneAlgebra c = projection_algebra(9);
  Pica p = pica_from_ca(c, 3, 8);
  StreamResult ds = p.domain_stream(2048, 0);
  REQUIRE(!ds.elems.empty());
  for (size_t i = 0; i <= 4; ++i)
    for (const Element& zel : ds.elems) {
      const OmegaSeq& z = zel.as_seq();
      CHECK(pica_q(p, p.e(i), z) == z.at(i));
    }
  StreamResult as = p.stream(9, 0);
  OmegaSeq unit(p.domain_base);
  for (const Element& a : as.elems) CHECK(pica_q(p, a, unit) == a);

  OmegaSeq alien(BaseSeq::constant(Element::integer(0, carrier_tag("nat"))));
  CHECK_THROWS_AS(pica_q(p, as.elems[0], alien), Error);
}

TEST_CASE("pica_from_ca is padding-invariant in the support cut") {
  CloneAlgebra c = projection_algebra(9);
  Pica p = pica_from_ca(c, 3, 8);
  StreamResult as = p.stream(9, 0);
  StreamResult ds = p.domain_stream(512, 0);
  for (const Element& a : as.elems)
    for (size_t t = 0; t < std::min<size_t>(ds.elems.size(), 24); ++t) {
      const OmegaSeq& z = ds.elems[t].as_seq();
      size_t k = z.support_bound();
      // evaluating with any larger prefix gives the same answer (C4)
      for (size_t kp = k; kp <= k + 2; ++kp) {
        std::vector<Element> prefix;
        for (size_t i = 0; i < kp; ++i) prefix.push_back(z.at(i));
        CHECK(p.q(a, z) == c.q(a, prefix));
      }
    }
}

TEST_CASE("PICA suite passes exhaustively on pica_from_ca(projection)") {
  Structure s = pica_from_ca(projection_algebra(6), 2, 6);
  TestDomain d = dom_of(64, 4);
  d.assignment_budget = 100000;
  checker::Report rep = checker::check(s, checker::SuiteId::PICA, d);
  CHECK(!rep.any_fail());
  CHECK(rep.elements_exhaustive);
}

TEST_CASE("quantale validation rejects broken tables") {
  Quantale bad = boolean_quantale();
  bad.dot = {0, 1, 1, 1};  // 0 no longer annihilates
  CHECK_THROWS_AS(quantale_pica(bad, 2), Error);
  Quantale bad2 = boolean_quantale();
  bad2.join = {0, 1, 0, 1};  // not commutative
  CHECK_THROWS_AS(quantale_pica(bad2, 2), Error);
}

TEST_CASE("PICA and NEUMANN_N suites on the boolean quantale matrices") {
  Structure s = quantale_pica(boolean_quantale(), 3);
  TestDomain d = dom_of(600, 3);
  d.assignment_budget = 20000;
  checker::Report rep = checker::check(s, checker::SuiteId::PICA, d);
  CHECK(!rep.any_fail());
  CHECK(rep.elements_exhaustive);
  checker::Report nrep = checker::check(s, checker::SuiteId::NEUMANN_N, d);
  CHECK(!nrep.any_fail());

  // pica_from_ca domains are proper traces, not the full A^omega fragment
  Structure t = pica_from_ca(projection_algebra(6), 2, 6);
  checker::Report frep = checker::check(t, checker::SuiteId::NEUMANN_N, dom_of(32, 3));
  CHECK(frep.any_fail());
}

TEST_CASE("quantale ecm: permutations of the unit move columns and rows") {
  Pica p = quantale_pica(boolean_quantale(), 3);
  MMonoid ecm = pica_to_ecm(p, 3, 64);
  CHECK(ecm.pm.one.as_seq().overrides().empty());  // the identity matrix

  // all 3x3-supported boolean matrices, all perms with dom in {0,1,2}
  auto perms = perms_upto(3);
  for (int bits = 0; bits < 512; ++bits) {
    Mat m(3, std::vector<int>(3, 0));
    for (int i = 0; i < 9; ++i) m[i / 3][i % 3] = (bits >> i) & 1;
    Element M = mat_to_elem(p, m);
    for (const FinPerm& sg : perms) {
      Element left = ecm.mul(ecm.pm.alg.perm(sg, ecm.pm.one), M);
      Element right = ecm.mul(M, ecm.pm.alg.perm(sg, ecm.pm.one));
      FinPerm inv = sg.inverse();
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
          // column permutation: (sigma-bar(1) M)^j = M^{sigma_j}
          size_t sj = sg.apply(j);
          int expect_col = (i < 3 && sj < 3) ? m[i][sj] : (i == sj ? 1 : 0);
          CHECK(mat_entry(left, i, j) == expect_col);
          // row permutation: (M sigma-bar(1))_i = M_{sigma^{-1}(i)}
          size_t si = inv.apply(i);
          int expect_row = (si < 3 && j < 3) ? m[si][j] : (si == j ? 1 : 0);
          CHECK(mat_entry(right, i, j) == expect_row);
        }
    }
  }
}

TEST_CASE("omega-finite dimensionality searches") {
  CloneAlgebra c = fca(2, 2);
  Pica p = pica_from_ca(c, 3, 16);
  TestDomain d = dom_of(256, 3);
  // projections e_i are witnessed at n = i + 1
  for (size_t i = 0; i <= 2; ++i) {
    OmegaFinDimVerdict v = omega_findim_pica(p, p.e(i), 5, d);
    CHECK(v.holds);
    CHECK(v.witness_n == i + 1);
  }
  // a top extension of essential arity m is witnessed exactly at m
  Element andtop = Element::op(builtin_finop("and", 2), c.tag);
  OmegaFinDimVerdict v = omega_findim_pica(p, andtop, 5, d);
  CHECK(v.holds);
  CHECK(v.witness_n == 2);
  Element c1 = Element::op(FinOp::constant(2, 0, 1), c.tag);
  OmegaFinDimVerdict vc = omega_findim_pica(p, c1, 5, d);
  CHECK(vc.holds);
  CHECK(vc.witness_n == 0);
}

TEST_CASE("identity is a pica homomorphism") {
  Pica p = quantale_pica(boolean_quantale(), 2);
  Morphism id{p.name, p.name, [](const Element& x) { return x; }};
  TestDomain d = dom_of(64, 3);
  std::string why;
  CHECK(check_pica_hom(p, p, id, d, &why));
}

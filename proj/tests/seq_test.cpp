#include <doctest.h>

#include "clonoid/seq.hpp"

using namespace clonoid;

namespace {

CarrierTag nat() { return carrier_tag("nat"); }

Element iv(int64_t v) { return Element::integer(v, nat()); }

BaseSeqPtr const0() { return BaseSeq::constant(iv(0)); }

BaseSeqPtr nat_base() {
  return BaseSeq::indexed("nat", nat(), [](size_t k) { return iv(static_cast<int64_t>(k)); },
                          true);
}

// pointwise oracle: evaluate a permuted sequence index by index
std::vector<int64_t> perm_oracle(const FinPerm& sigma, const OmegaSeq& s, size_t upto) {
  std::vector<int64_t> out;
  for (size_t i = 0; i < upto; ++i) out.push_back(s.at(sigma.apply(i)).as_int());
  return out;
}

std::vector<int64_t> entries(const OmegaSeq& s, size_t upto) {
  std::vector<int64_t> out;
  for (size_t i = 0; i < upto; ++i) out.push_back(s.at(i).as_int());
  return out;
}

}  // namespace

TEST_CASE("seq_entry reads overrides, base rule, and fallthrough") {
  OmegaSeq s(const0(), {{2, iv(1)}});
  CHECK(seq_entry(s, 2) == iv(1));
  CHECK(seq_entry(s, 5) == iv(0));
  OmegaSeq t(nat_base());
  CHECK(seq_entry(t, 7) == iv(7));
}

TEST_CASE("seq_update replaces a prefix and normalizes") {
  OmegaSeq zero(const0());
  std::vector<Element> pre{iv(1), iv(1)};
  OmegaSeq u = seq_update(zero, pre);
  CHECK(entries(u, 4) == std::vector<int64_t>{1, 1, 0, 0});

  OmegaSeq same = seq_update(u, std::vector<Element>{});
  CHECK(same == u);

  OmegaSeq nats(nat_base());
  OmegaSeq v = seq_update(nats, std::vector<Element>{iv(5)});
  CHECK(entries(v, 3) == std::vector<int64_t>{5, 1, 2});
  CHECK(v.support_bound() == 1);

  // updating with the base values leaves no overrides behind
  OmegaSeq w = seq_update(nats, std::vector<Element>{iv(0), iv(1)});
  CHECK(w == nats);
  CHECK(w.overrides().empty());
}

TEST_CASE("seq_update rejects foreign carriers") {
  OmegaSeq zero(const0());
  Element alien = Element::integer(0, carrier_tag("fin7"));
  CHECK_THROWS_AS(seq_update(zero, std::vector<Element>{alien}), Error);
}

TEST_CASE("perm_apply identity, transposition, and pointwise oracle") {
  OmegaSeq s(const0(), {{0, iv(4)}, {1, iv(5)}});
  CHECK(perm_apply(FinPerm::identity(), s) == s);

  OmegaSeq swapped = perm_apply(FinPerm::transposition(1, 0), s);
  CHECK(entries(swapped, 3) == std::vector<int64_t>{5, 4, 0});

  OmegaSeq nats(nat_base());
  FinPerm t20 = FinPerm::transposition(2, 0);
  OmegaSeq moved = perm_apply(t20, nats);
  CHECK(entries(moved, 5) == perm_oracle(t20, nats, 5));
  CHECK(entries(moved, 5) == std::vector<int64_t>{2, 1, 0, 3, 4});
}

TEST_CASE("perm composition and transpositions") {
  FinPerm t10 = FinPerm::transposition(1, 0);
  FinPerm t20 = FinPerm::transposition(2, 0);
  CHECK(perm_compose(t10, FinPerm::identity()) == t10);
  CHECK(perm_compose(t10, t10) == FinPerm::identity());

  FinPerm ab = perm_compose(t20, t10);
  FinPerm ba = perm_compose(t10, t20);
  CHECK(!(ab == ba));
  // evaluate both on 0,1,2: (t20 o t10)(0) = t20(1) = 1
  CHECK(ab.apply(0) == 1);
  CHECK(ab.apply(1) == 2);
  CHECK(ab.apply(2) == 0);
  CHECK(ba.apply(0) == 2);
}

TEST_CASE("disjoint permutations commute") {
  FinPerm a = FinPerm::transposition(1, 0);
  FinPerm b = FinPerm::transposition(3, 2);
  CHECK(perm_compose(a, b) == perm_compose(b, a));
}

TEST_CASE("perms_upto sizes and determinism") {
  CHECK(perms_upto(0).size() == 1);
  CHECK(perms_upto(1).size() == 1);
  auto p2 = perms_upto(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == FinPerm::identity());
  CHECK(p2[1] == FinPerm::transposition(1, 0));
  CHECK(perms_upto(3).size() == 6);
  CHECK(perms_upto(4).size() == 24);
  CHECK_THROWS_AS(perms_upto(9), Error);
}

TEST_CASE("equiv is total within one base and rejects foreign bases") {
  OmegaSeq a(const0());
  OmegaSeq b(const0(), {{0, iv(1)}, {1, iv(1)}, {2, iv(1)}});
  CHECK(equiv(a, a));
  CHECK(equiv(a, b));

  BaseSeqPtr one = BaseSeq::constant(iv(1));
  OmegaSeq c(one);
  CHECK_THROWS_AS(equiv(a, c), Error);
}

TEST_CASE("mixed bases rebase onto their tail for comparison") {
  BaseSeqPtr mixed = BaseSeq::mixed({iv(7), iv(8)}, const0());
  OmegaSeq m(mixed);
  OmegaSeq plain(const0(), {{0, iv(7)}, {1, iv(8)}});
  CHECK(equiv(m, plain));
  CHECK(m == plain);
  CHECK(m.hash() == plain.hash());
}

TEST_CASE("update prefix leaves the tail untouched") {
  // for all s, prefix p of length n: update(s,p)(i) = s(i) for i >= n
  std::vector<Element> pool{iv(0), iv(1), iv(2)};
  for (const OmegaSeq& s : enumerate_seqs(const0(), pool, 3)) {
    for (size_t n = 0; n <= 3; ++n) {
      std::vector<Element> prefix(n, iv(2));
      OmegaSeq u = seq_update(s, prefix);
      for (size_t i = n; i < 6; ++i) CHECK(u.at(i) == s.at(i));
      for (size_t i = 0; i < n; ++i) CHECK(u.at(i) == iv(2));
    }
  }
}

TEST_CASE("perm_apply respects composition contravariantly") {
  std::vector<Element> pool{iv(0), iv(1)};
  auto perms = perms_upto(3);
  for (const OmegaSeq& s : enumerate_seqs(const0(), pool, 3))
    for (const FinPerm& sg : perms)
      for (const FinPerm& tu : perms) {
        OmegaSeq lhs = perm_apply(sg, perm_apply(tu, s));
        OmegaSeq rhs = perm_apply(perm_compose(tu, sg), s);
        for (size_t i = 0; i < 8; ++i) CHECK(lhs.at(i) == rhs.at(i));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("equiv is an equivalence on a fixed base") {
  std::vector<Element> pool{iv(0), iv(1)};
  auto seqs = enumerate_seqs(const0(), pool, 4);
  for (const OmegaSeq& s : seqs) CHECK(equiv(s, s));
  for (const OmegaSeq& s : seqs)
    for (const OmegaSeq& r : seqs) {
      CHECK(equiv(s, r) == equiv(r, s));
      for (const OmegaSeq& t : seqs)
        if (equiv(s, r) && equiv(r, t)) CHECK(equiv(s, t));
    }
}

TEST_CASE("enumerate_seqs counting oracle") {
  std::vector<Element> pool{iv(0), iv(1)};
  CHECK(enumerate_seqs(const0(), pool, 2).size() == 4);  // |A|^L
  CHECK(enumerate_seqs(const0(), pool, 3).size() == 8);
  std::vector<Element> pool3{iv(0), iv(1), iv(2)};
  CHECK(enumerate_seqs(const0(), pool3, 2).size() == 9);
  // all distinct
  auto seqs = enumerate_seqs(const0(), pool, 3);
  for (size_t i = 0; i < seqs.size(); ++i)
    for (size_t j = i + 1; j < seqs.size(); ++j) CHECK(!(seqs[i] == seqs[j]));
}

TEST_CASE("splice keeps finite support") {
  OmegaSeq s(nat_base(), {{0, iv(9)}});
  OmegaSeq u(nat_base(), {{4, iv(7)}});
  OmegaSeq spliced = s.spliced(2, u);
  CHECK(entries(spliced, 6) == std::vector<int64_t>{9, 1, 2, 3, 7, 5});
  CHECK(spliced.support_bound() <= 5);
}

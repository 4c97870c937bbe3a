#include "clonoid/pica.hpp"

#include <algorithm>

namespace clonoid {

Element pica_q(const Pica& a, const Element& x, const OmegaSeq& z) {
  if (z.base()->id() != a.domain_base->id())
    throw Error(Errc::OutsideDomain,
                "sequence over base " + z.base()->id() + " is outside D");
  return a.q(x, z);
}

Pica pica_from_ca(const CloneAlgebra& c, size_t support_bound, size_t value_budget) {
  auto C = std::make_shared<CloneAlgebra>(c);
  Pica p;
  p.name = c.name + "^pica";
  p.tag = c.tag;
  auto e = c.e;
  p.domain_base = BaseSeq::indexed("e(" + c.name + ")", c.tag,
                                   [e](size_t k) { return e(k); }, true);
  p.dom_tag = carrier_tag("seq(" + p.domain_base->id() + ")");
  p.stream = c.stream;
  p.e = c.e;
  BaseSeqPtr base = p.domain_base;
  CarrierTag dom_tag = p.dom_tag;
  p.domain_stream = [C, base, dom_tag, support_bound, value_budget](size_t budget,
                                                                    uint64_t seed) {
    StreamResult pool = C->stream(value_budget, seed);
    StreamResult r;
    std::vector<OmegaSeq> seqs = enumerate_seqs(base, pool.elems, support_bound);
    r.exhaustive = pool.exhaustive && seqs.size() <= budget;
    for (size_t i = 0; i < std::min(budget, seqs.size()); ++i)
      r.elems.push_back(Element::seq(std::move(seqs[i]), dom_tag));
    return r;
  };
  p.q = [C](const Element& a, const OmegaSeq& z) {
    size_t k = z.support_bound();
    std::vector<Element> args;
    args.reserve(k);
    for (size_t i = 0; i < k; ++i) args.push_back(z.at(i));
    return C->q(a, args);
  };
  p.full_domain = false;
  return p;
}

Quantale boolean_quantale() {
  return Quantale{"bool", 2, {0, 1, 1, 1}, {0, 0, 0, 1}, 1, 0};
}

namespace {

void validate_quantale(const Quantale& q) {
  size_t n = q.size;
  auto jn = [&](uint8_t a, uint8_t b) { return q.join[a * n + b]; };
  auto dt = [&](uint8_t a, uint8_t b) { return q.dot[a * n + b]; };
  if (q.join.size() != n * n || q.dot.size() != n * n)
    throw Error(Errc::NotAQuantale, "tables must be size x size");
  for (uint8_t a = 0; a < n; ++a) {
    if (jn(a, a) != a) throw Error(Errc::NotAQuantale, "join not idempotent");
    if (jn(a, q.bottom) != a) throw Error(Errc::NotAQuantale, "bottom not neutral for join");
    if (dt(a, q.unit) != a || dt(q.unit, a) != a)
      throw Error(Errc::NotAQuantale, "unit not neutral for dot");
    if (dt(a, q.bottom) != q.bottom || dt(q.bottom, a) != q.bottom)
      throw Error(Errc::NotAQuantale, "bottom not annihilating");
    for (uint8_t b = 0; b < n; ++b) {
      if (jn(a, b) != jn(b, a)) throw Error(Errc::NotAQuantale, "join not commutative");
      for (uint8_t c = 0; c < n; ++c) {
        if (jn(jn(a, b), c) != jn(a, jn(b, c)))
          throw Error(Errc::NotAQuantale, "join not associative");
        if (dt(dt(a, b), c) != dt(a, dt(b, c)))
          throw Error(Errc::NotAQuantale, "dot not associative");
        if (dt(a, jn(b, c)) != jn(dt(a, b), dt(a, c)))
          throw Error(Errc::NotAQuantale, "dot does not distribute over join (left)");
        if (dt(jn(a, b), c) != jn(dt(a, c), dt(b, c)))
          throw Error(Errc::NotAQuantale, "dot does not distribute over join (right)");
      }
    }
  }
}

}  // namespace

Pica quantale_pica(const Quantale& quant, size_t support_bound) {
  validate_quantale(quant);
  auto Q = std::make_shared<Quantale>(quant);
  size_t n = Q->size;
  CarrierTag qtag = carrier_tag("quantale(" + Q->id + ")");

  // carrier: finitely supported Q-sequences over the constant-bottom base
  BaseSeqPtr colbase = BaseSeq::constant(Element::integer(Q->bottom, qtag));
  CarrierTag coltag = carrier_tag("seq(" + colbase->id() + ")@" + Q->id);

  Pica p;
  p.name = "mat(" + Q->id + ")";
  p.tag = coltag;
  std::vector<Element> qpool;
  for (size_t v = 0; v < n; ++v) qpool.push_back(Element::integer(static_cast<int64_t>(v), qtag));

  auto unit_col = [colbase, coltag, Q, qtag](size_t k) {
    std::vector<std::pair<size_t, Element>> ov;
    ov.emplace_back(k, Element::integer(Q->unit, qtag));
    return Element::seq(OmegaSeq(colbase, std::move(ov)), coltag);
  };
  p.e = unit_col;
  p.domain_base = BaseSeq::indexed("idmat(" + Q->id + ")", coltag, unit_col, true);
  p.dom_tag = carrier_tag("seq(" + p.domain_base->id() + ")");
  p.full_domain = true;  // Neumann fragment: D covers all representable columns

  std::vector<Element> cols;
  for (OmegaSeq& s : enumerate_seqs(colbase, qpool, support_bound))
    cols.push_back(Element::seq(std::move(s), coltag));
  p.stream = finite_stream(cols);

  BaseSeqPtr dbase = p.domain_base;
  CarrierTag dom_tag = p.dom_tag;
  auto colpool = std::make_shared<std::vector<Element>>(cols);
  p.domain_stream = [dbase, dom_tag, colpool, support_bound](size_t budget, uint64_t) {
    StreamResult r;
    std::vector<OmegaSeq> seqs = enumerate_seqs(dbase, *colpool, support_bound);
    r.exhaustive = seqs.size() <= budget;
    for (size_t i = 0; i < std::min(budget, seqs.size()); ++i)
      r.elems.push_back(Element::seq(std::move(seqs[i]), dom_tag));
    return r;
  };

  p.q = [Q, colbase, coltag, qtag, n](const Element& s, const OmegaSeq& M) {
    const OmegaSeq& sv = s.as_seq();
    auto jn = [&](uint8_t a, uint8_t b) { return Q->join[a * n + b]; };
    auto dt = [&](uint8_t a, uint8_t b) { return Q->dot[a * n + b]; };
    // q(s, M)_i = join_k (M_i^k dot s_k); finite joins by finite supports
    size_t kmax = std::max(sv.support_bound(), M.support_bound());
    size_t rows = kmax;  // identity columns k < kmax reach row k
    for (size_t k = 0; k < kmax; ++k)
      rows = std::max(rows, M.at(k).as_seq().support_bound());
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t i = 0; i < rows; ++i) {
      uint8_t acc = Q->bottom;
      for (size_t k = 0; k < kmax; ++k) {
        uint8_t mik = static_cast<uint8_t>(M.at(k).as_seq().at(i).as_int());
        uint8_t sk = static_cast<uint8_t>(sv.at(k).as_int());
        acc = jn(acc, dt(mik, sk));
      }
      ov.emplace_back(i, Element::integer(acc, qtag));
    }
    return Element::seq(OmegaSeq(colbase, std::move(ov)), coltag);
  };
  return p;
}

OmegaFinDimVerdict omega_findim_pica(const Pica& a, const Element& x, size_t bound,
                                     const TestDomain& dom) {
  OmegaFinDimVerdict v;
  StreamResult ds = a.domain_stream(dom.element_budget, dom.seed);
  v.exhaustive = ds.exhaustive;
  for (size_t n = 0; n <= bound; ++n) {
    bool ok = true;
    std::vector<Element> es;
    for (size_t i = 0; i < n; ++i) es.push_back(a.e(i));
    for (const Element& zel : ds.elems) {
      OmegaSeq z = zel.as_seq().updated(es);
      if (!(a.q(x, z) == x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      v.holds = true;
      v.witness_n = n;
      return v;
    }
  }
  v.holds = false;
  return v;
}

}  // namespace clonoid

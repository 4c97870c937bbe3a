#include "clonoid/mmonoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "clonoid/clonealg.hpp"

namespace clonoid {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Plain: return "plain";
    case Flavor::CM: return "cm";
    case Flavor::AM: return "am";
    case Flavor::AMStrong: return "am_strong";
  }
  return "?";
}

MMonoid left_zero(const std::string& name, PointedMergeAlgebra pm) {
  MMonoid m;
  m.name = name;
  Element one = pm.one;
  m.mul = [one](const Element& a, const Element& b) { return b == one ? a : b; };
  // cm iff the merge part is degenerate; am iff sigma-bar fixes the unit
  if (pm.alg.tag == MergeTag::Degenerate) {
    m.claimed = Flavor::CM;
  } else {
    bool unit_fixed = true;
    for (const FinPerm& s : perms_upto(4))
      if (!(pm.alg.perm(s, one) == one)) {
        unit_fixed = false;
        break;
      }
    m.claimed = unit_fixed ? Flavor::AM : Flavor::Plain;
  }
  m.pm = std::move(pm);
  return m;
}

NamedMonoid builtin_monoid(const std::string& id) {
  CarrierTag t2 = carrier_tag("fin2");
  CarrierTag t3 = carrier_tag("fin3");
  auto fin = [](CarrierTag t, int64_t v) { return Element::integer(v, t); };
  if (id == "z2_add")
    return NamedMonoid{id,
                       {fin(t2, 0), fin(t2, 1)},
                       fin(t2, 0),
                       [t2, fin](const Element& a, const Element& b) {
                         return fin(t2, (a.as_int() + b.as_int()) % 2);
                       }};
  if (id == "z2_mul")
    return NamedMonoid{id,
                       {fin(t2, 0), fin(t2, 1)},
                       fin(t2, 1),
                       [t2, fin](const Element& a, const Element& b) {
                         return fin(t2, a.as_int() * b.as_int());
                       }};
  if (id == "b_or")
    return NamedMonoid{id,
                       {fin(t2, 0), fin(t2, 1)},
                       fin(t2, 0),
                       [t2, fin](const Element& a, const Element& b) {
                         return fin(t2, a.as_int() | b.as_int());
                       }};
  if (id == "b_and")
    return NamedMonoid{id,
                       {fin(t2, 0), fin(t2, 1)},
                       fin(t2, 1),
                       [t2, fin](const Element& a, const Element& b) {
                         return fin(t2, a.as_int() & b.as_int());
                       }};
  if (id == "z3_add")
    return NamedMonoid{id,
                       {fin(t3, 0), fin(t3, 1), fin(t3, 2)},
                       fin(t3, 0),
                       [t3, fin](const Element& a, const Element& b) {
                         return fin(t3, (a.as_int() + b.as_int()) % 3);
                       }};
  throw Error(Errc::ParseError, "unknown monoid '" + id + "'");
}

MMonoid degenerate_mmonoid(const std::string& name, const NamedMonoid& mo) {
  MMonoid m;
  m.name = name;
  m.pm = PointedMergeAlgebra{degenerate_merge(name, mo.carrier), mo.unit};
  m.mul = mo.op;
  // degenerate m-monoids satisfy both L2 and L3 trivially
  m.claimed = Flavor::CM;
  m.claimed_extensional = false;
  return m;
}

MMonoid product_mmonoid(const std::string& name, std::vector<NamedMonoid> prefix,
                        NamedMonoid tail, size_t support_bound) {
  for (const auto& mo : prefix)
    if (mo.carrier != tail.carrier)
      throw Error(Errc::CarrierMismatch, "family monoids must share one carrier");
  auto fam = std::make_shared<std::vector<NamedMonoid>>(std::move(prefix));
  auto tl = std::make_shared<NamedMonoid>(std::move(tail));
  auto monoid_at = [fam, tl](size_t i) -> const NamedMonoid& {
    return i < fam->size() ? (*fam)[i] : *tl;
  };

  bool identical = true;
  for (const auto& mo : *fam)
    if (mo.id != tl->id) identical = false;
  bool units_equal = true;
  for (const auto& mo : *fam)
    if (!(mo.unit == tl->unit)) units_equal = false;
  BaseSeqPtr base;
  if (units_equal) {
    base = BaseSeq::constant(tl->unit);
  } else {
    std::vector<Element> pre;
    for (const auto& mo : *fam) pre.push_back(mo.unit);
    base = BaseSeq::mixed(std::move(pre), BaseSeq::constant(tl->unit));
  }

  MMonoid m;
  m.name = name;
  m.pm = pointed_canonical(name, base, tl->carrier, support_bound);
  CarrierTag tag = m.pm.alg.canonical->seq_tag;
  m.mul = [monoid_at, tag](const Element& x, const Element& y) {
    const OmegaSeq& a = x.as_seq();
    const OmegaSeq& b = y.as_seq();
    size_t bound = std::max(a.support_bound(), b.support_bound());
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t i = 0; i < bound; ++i)
      ov.emplace_back(i, monoid_at(i).op(a.at(i), b.at(i)));
    return Element::seq(OmegaSeq(a.base(), std::move(ov)), tag);
  };
  m.claimed = identical ? Flavor::AMStrong : Flavor::Plain;
  m.claimed_extensional = true;
  return m;
}

namespace {

// primes below 10^6; enough to factor any product of two stream values
const std::vector<uint64_t>& prime_table() {
  static std::vector<uint64_t> primes = [] {
    const size_t N = 1000000;
    std::vector<bool> sieve(N + 1, true);
    std::vector<uint64_t> ps;
    for (size_t p = 2; p <= N; ++p) {
      if (!sieve[p]) continue;
      ps.push_back(p);
      for (size_t q = p * p; q <= N; q += p) sieve[q] = false;
    }
    return ps;
  }();
  return primes;
}

struct FactorMemo {
  std::mutex mu;
  std::unordered_map<BigInt, std::vector<uint32_t>, boost::hash<BigInt>> map;
};

std::vector<uint32_t> factor_exponents(FactorMemo& memo, const BigInt& n) {
  if (n == 0) throw Error(Errc::ZeroInput, "0 is not in the carrier");
  if (n < 0) throw Error(Errc::ZeroInput, "negative input");
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.map.find(n);
    if (it != memo.map.end()) return it->second;
  }
  std::vector<uint32_t> exps;
  BigInt rest = n;
  const auto& ps = prime_table();
  for (size_t i = 0; i < ps.size() && rest > 1; ++i) {
    uint32_t e = 0;
    while (rest % ps[i] == 0) {
      rest /= ps[i];
      ++e;
    }
    if (e) {
      exps.resize(i + 1, 0);
      exps[i] = e;
    }
    if (BigInt(ps[i]) * ps[i] > rest) break;
  }
  if (rest > 1) {
    // leftover cofactor must itself be a sieve prime
    if (rest > ps.back()) throw Error(Errc::BudgetExceeded, "factorization beyond sieve");
    auto it = std::lower_bound(ps.begin(), ps.end(), static_cast<uint64_t>(rest));
    size_t i = static_cast<size_t>(it - ps.begin());
    exps.resize(std::max(exps.size(), i + 1), 0);
    exps[i] += 1;
  }
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.map.emplace(n, exps);
  return exps;
}

BigInt from_exponents(FactorMemo& memo, const std::vector<uint32_t>& exps) {
  BigInt n = 1;
  const auto& ps = prime_table();
  for (size_t i = 0; i < exps.size(); ++i)
    for (uint32_t e = 0; e < exps[i]; ++e) n *= ps[i];
  std::vector<uint32_t> trimmed = exps;
  while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.map.emplace(n, trimmed);
  return n;
}

}  // namespace

MMonoid arith_am(uint64_t value_cap) {
  auto memo = std::make_shared<FactorMemo>();
  CarrierTag tag = carrier_tag("nstar");

  MMonoid m;
  m.name = "arith";
  m.pm.one = Element::big(1, tag);
  m.pm.alg.name = "arith";
  m.pm.alg.tag = MergeTag::Derived;
  m.pm.alg.stream = [tag, value_cap](size_t budget, uint64_t seed) {
    StreamResult r;
    r.exhaustive = false;
    std::vector<std::pair<uint64_t, uint64_t>> grades;
    for (uint64_t lo = 1; lo <= value_cap; lo *= 10)
      grades.emplace_back(lo, std::min<uint64_t>(value_cap, lo * 10 - 1));
    // leading decades are emitted whole (seed-shuffled); the rest of the
    // budget is spread evenly as seeded samples over the remaining decades
    size_t g = 0;
    for (; g < grades.size(); ++g) {
      uint64_t span = grades[g].second - grades[g].first + 1;
      if (r.elems.size() + span > budget / 2 + 1) break;
      std::vector<uint64_t> vals;
      for (uint64_t v = grades[g].first; v <= grades[g].second; ++v) vals.push_back(v);
      SplitMix rng(mix64(seed) ^ (0xabcdull + g));
      for (size_t i = vals.size(); i > 1; --i) std::swap(vals[i - 1], vals[rng.below(i)]);
      for (uint64_t v : vals) r.elems.push_back(Element::big(v, tag));
    }
    size_t rest = grades.size() - g;
    if (rest == 0 || r.elems.size() >= budget) return r;
    size_t per = (budget - r.elems.size()) / rest + 1;
    for (; g < grades.size() && r.elems.size() < budget; ++g) {
      uint64_t lo = grades[g].first, span = grades[g].second - lo + 1;
      SplitMix rng(mix64(seed) ^ (0xabcdull + g));
      std::vector<uint64_t> seen;
      for (size_t attempts = 0; seen.size() < per && attempts < per * 4; ++attempts) {
        uint64_t v = lo + rng.below(span);
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
      }
      for (uint64_t v : seen)
        if (r.elems.size() < budget) r.elems.push_back(Element::big(v, tag));
    }
    return r;
  };
  m.pm.alg.star = [memo, tag](size_t k, const Element& x, const Element& y) {
    auto ex = factor_exponents(*memo, x.as_big());
    auto ey = factor_exponents(*memo, y.as_big());
    std::vector<uint32_t> ez(std::max(std::min<size_t>(ex.size(), k), ey.size()), 0);
    for (size_t i = 0; i < ez.size(); ++i) {
      if (i < k)
        ez[i] = i < ex.size() ? ex[i] : 0;
      else
        ez[i] = i < ey.size() ? ey[i] : 0;
    }
    return Element::big(from_exponents(*memo, ez), tag);
  };
  m.pm.alg.perm = [memo, tag](const FinPerm& sigma, const Element& x) {
    auto ex = factor_exponents(*memo, x.as_big());
    size_t bound = std::max(ex.size(), sigma.dom_bound());
    std::vector<uint32_t> ez(bound, 0);
    for (size_t i = 0; i < bound; ++i) {
      size_t j = sigma.apply(i);
      ez[i] = j < ex.size() ? ex[j] : 0;
    }
    return Element::big(from_exponents(*memo, ez), tag);
  };
  m.mul = [memo, tag](const Element& x, const Element& y) {
    const BigInt& a = x.as_big();
    const BigInt& b = y.as_big();
    BigInt c = a * b;
    // propagate known factorizations so permutations of products stay cheap
    std::lock_guard<std::mutex> lock(memo->mu);
    auto ia = memo->map.find(a);
    auto ib = memo->map.find(b);
    if (ia != memo->map.end() && ib != memo->map.end() && !memo->map.count(c)) {
      std::vector<uint32_t> ez(std::max(ia->second.size(), ib->second.size()), 0);
      for (size_t i = 0; i < ez.size(); ++i) {
        if (i < ia->second.size()) ez[i] += ia->second[i];
        if (i < ib->second.size()) ez[i] += ib->second[i];
      }
      memo->map.emplace(c, std::move(ez));
    }
    return Element::big(c, tag);
  };
  m.claimed = Flavor::AMStrong;
  m.claimed_extensional = false;
  return m;
}

MMonoid oplus(const MMonoid& inner) {
  auto in = std::make_shared<MMonoid>(inner);
  CarrierTag tag = carrier_tag("oplus(" + inner.name + ")");
  CarrierTag bit = carrier_tag("bit");
  auto mk = [tag, bit](const Element& x, int64_t i) {
    return Element::pair(x, Element::integer(i, bit), tag);
  };

  MMonoid m;
  m.name = inner.name + "(+)";
  m.pm.one = mk(in->pm.one, 0);
  m.pm.alg.name = m.name;
  m.pm.alg.tag = MergeTag::Derived;
  Stream istream = in->pm.alg.stream;
  m.pm.alg.stream = [istream, mk](size_t budget, uint64_t seed) {
    StreamResult ir = istream(budget, seed);
    StreamResult r;
    r.exhaustive = ir.exhaustive && 2 * ir.elems.size() <= budget;
    for (const Element& x : ir.elems) {
      if (r.elems.size() + 2 > budget) {
        r.exhaustive = false;
        break;
      }
      r.elems.push_back(mk(x, 0));
      r.elems.push_back(mk(x, 1));
    }
    return r;
  };
  m.pm.alg.star = [in, mk](size_t n, const Element& x, const Element& y) {
    const auto& a = x.as_pair();
    const auto& b = y.as_pair();
    return mk(in->pm.alg.star(n, a.first, b.first), b.second.as_int());
  };
  m.pm.alg.perm = [in, mk](const FinPerm& sigma, const Element& x) {
    const auto& a = x.as_pair();
    return mk(in->pm.alg.perm(sigma, a.first), a.second.as_int());
  };
  m.mul = [in, mk](const Element& x, const Element& y) {
    const auto& a = x.as_pair();
    const auto& b = y.as_pair();
    return mk(in->mul(a.first, b.first), (a.second.as_int() + b.second.as_int()) % 2);
  };
  m.claimed = inner.claimed;
  m.claimed_extensional = false;
  Stream istream2 = in->pm.alg.stream;
  m.collapse_witness = [istream2, mk]() -> std::optional<std::pair<Element, Element>> {
    StreamResult ir = istream2(1, 1);
    if (ir.elems.empty()) return std::nullopt;
    return std::make_pair(mk(ir.elems[0], 0), mk(ir.elems[0], 1));
  };
  return m;
}

MMonoid endofunction_cm(const std::string& name, const MergeAlgebra& a) {
  StreamResult sr = a.stream(4096, 0);
  if (!sr.exhaustive || sr.elems.size() > 4)
    throw Error(Errc::BudgetExceeded, "endofunction monoid needs |A| <= 4");
  auto elems = std::make_shared<std::vector<Element>>(sr.elems);
  auto index = std::make_shared<std::unordered_map<Element, size_t, ElementHash>>();
  for (size_t i = 0; i < elems->size(); ++i) index->emplace((*elems)[i], i);
  auto alg = std::make_shared<MergeAlgebra>(a);
  CarrierTag tag = carrier_tag("endo(" + name + ")");
  size_t n = elems->size();

  auto mk = [tag](std::vector<Element> images) {
    return Element::vec(std::move(images), tag);
  };
  std::vector<Element> all;
  std::vector<size_t> idx(n, 0);
  while (true) {
    std::vector<Element> images;
    for (size_t i = 0; i < n; ++i) images.push_back((*elems)[idx[i]]);
    all.push_back(mk(std::move(images)));
    size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }

  MMonoid m;
  m.name = name;
  m.pm.alg.name = name;
  m.pm.alg.tag = MergeTag::Derived;
  m.pm.alg.stream = finite_stream(std::move(all));
  m.pm.alg.star = [alg, mk](size_t k, const Element& f, const Element& g) {
    const auto& fi = f.as_vec();
    const auto& gi = g.as_vec();
    std::vector<Element> images;
    images.reserve(fi.size());
    for (size_t i = 0; i < fi.size(); ++i) images.push_back(alg->star(k, fi[i], gi[i]));
    return mk(std::move(images));
  };
  m.pm.alg.perm = [alg, mk](const FinPerm& sigma, const Element& f) {
    const auto& fi = f.as_vec();
    std::vector<Element> images;
    images.reserve(fi.size());
    for (const Element& x : fi) images.push_back(alg->perm(sigma, x));
    return mk(std::move(images));
  };
  m.mul = [index, mk](const Element& f, const Element& g) {
    const auto& fi = f.as_vec();
    const auto& gi = g.as_vec();
    std::vector<Element> images;
    images.reserve(gi.size());
    for (const Element& x : gi) images.push_back(fi[index->at(x)]);
    return mk(std::move(images));
  };
  std::vector<Element> id_images = *elems;
  m.pm.one = mk(std::move(id_images));
  m.claimed = Flavor::CM;
  m.claimed_extensional = false;
  return m;
}

MMonoid fdim_endo_cm(uint8_t domain, uint8_t arity_bound, size_t support_bound) {
  if (domain > 3 || arity_bound > 3)
    throw Error(Errc::BudgetExceeded, "fdim fragment guarded at |A| <= 3, arity <= 3");
  CarrierTag op_tag = carrier_tag("omegaop(" + std::to_string(domain) + ")");
  // pool: all top extensions with essential arity <= arity_bound
  std::vector<Element> pool;
  for (uint8_t ar = 0; ar <= arity_bound; ++ar) {
    size_t ts = FinOp::table_size(domain, ar);
    std::vector<uint8_t> table(ts, 0);
    while (true) {
      FinOp f{domain, ar, table};
      if (f.essential_arity() == ar) pool.push_back(Element::op(f, op_tag));
      size_t pos = ts;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++table[pos] < domain) {
          done = false;
          break;
        }
        table[pos] = 0;
      }
      if (done) break;
    }
  }
  std::sort(pool.begin(), pool.end());
  BaseSeqPtr base = BaseSeq::indexed(
      "e(" + std::to_string(domain) + ")", op_tag,
      [domain, op_tag](size_t k) {
        return Element::op(
            FinOp::projection(domain, static_cast<uint8_t>(k + 1), static_cast<uint8_t>(k)),
            op_tag);
      },
      true);

  std::string name = "fdimendo(" + std::to_string(domain) + "," +
                     std::to_string(arity_bound) + ")";
  MMonoid m;
  m.pm = pointed_canonical(name, base, pool, support_bound);
  m.name = name;
  CarrierTag tag = m.pm.alg.canonical->seq_tag;
  m.mul = [tag](const Element& x, const Element& y) {
    const OmegaSeq& phi = x.as_seq();
    const OmegaSeq& psi = y.as_seq();
    size_t bound = std::max(phi.support_bound(), psi.support_bound());
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t i = 0; i < bound; ++i) {
      FinOp fi = phi.at(i).as_op();
      std::vector<FinOp> psis;
      psis.reserve(fi.arity);
      for (uint8_t j = 0; j < fi.arity; ++j) psis.push_back(psi.at(j).as_op());
      ov.emplace_back(i, Element::op(omega_op_q(fi, psis), phi.at(i).tag()));
    }
    return Element::seq(OmegaSeq(phi.base(), std::move(ov)), tag);
  };
  m.claimed = Flavor::CM;
  m.claimed_extensional = true;
  // D_omega(phi,n,m) iff every entry below n is a table of essential
  // arity <= m; on this fragment D and D_omega coincide
  m.dim_exact = [](const Element& a, size_t n, size_t mb) {
    const OmegaSeq& phi = a.as_seq();
    for (size_t i = 0; i < n; ++i)
      if (phi.at(i).as_op().essential_arity() > mb) return false;
    return true;
  };
  return m;
}

ExtVerdict is_extensional(const MMonoid& m, const TestDomain& dom) {
  ExtVerdict v;
  if (m.collapse_witness) {
    if (auto w = m.collapse_witness()) {
      v.kind = ExtVerdict::Kind::Fail;
      v.cert = ExtVerdict::Cert::Constructor;
      v.witness = w;
      v.note = "constructor-certified coordinate collapse";
      return v;
    }
  }
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  if (m.pm.alg.tag == MergeTag::Degenerate) {
    for (const Element& x : sr.elems)
      if (!(x == m.pm.one)) {
        v.kind = ExtVerdict::Kind::Fail;
        v.cert = ExtVerdict::Cert::Degenerate;
        v.witness = std::make_pair(x, m.pm.one);
        v.note = "degenerate: all coordinates equal the unit";
        return v;
      }
    v.kind = ExtVerdict::Kind::Pass;
    v.cert = ExtVerdict::Cert::Exhausted;
    v.note = "trivial degenerate carrier";
    return v;
  }
  if (m.pm.alg.tag == MergeTag::Canonical) {
    v.kind = ExtVerdict::Kind::Pass;
    v.cert = ExtVerdict::Cert::Canonical;
    v.note = "canonical: coordinates determine entries";
    return v;
  }
  size_t bound = std::max<size_t>(dom.index_bound, 4);
  std::vector<std::optional<size_t>> ranks(sr.elems.size());
  for (size_t i = 0; i < sr.elems.size(); ++i)
    ranks[i] = rank_of(m.pm, sr.elems[i], bound);
  bool unknown_candidates = false;
  for (size_t i = 0; i < sr.elems.size(); ++i) {
    for (size_t j = i + 1; j < sr.elems.size(); ++j) {
      size_t upto = bound;
      bool certified = ranks[i] && ranks[j];
      if (certified) upto = std::max(*ranks[i], *ranks[j]);
      bool agree = true;
      for (size_t k = 0; k < std::max<size_t>(upto, 1); ++k)
        if (!(coordinate(m.pm, sr.elems[i], k) == coordinate(m.pm, sr.elems[j], k))) {
          agree = false;
          break;
        }
      if (!agree) continue;
      if (certified) {
        v.kind = ExtVerdict::Kind::Fail;
        v.cert = ExtVerdict::Cert::RankCert;
        v.witness = std::make_pair(sr.elems[i], sr.elems[j]);
        v.note = "distinct elements of finite rank with equal coordinates";
        return v;
      }
      unknown_candidates = true;
    }
  }
  if (unknown_candidates) {
    v.kind = ExtVerdict::Kind::Unknown;
    v.note = "coordinates agree up to budget but ranks unknown";
    return v;
  }
  v.kind = ExtVerdict::Kind::Pass;
  v.cert = sr.exhaustive ? ExtVerdict::Cert::Exhausted : ExtVerdict::Cert::Sampled;
  v.note = "no coordinate collapse up to budget";
  return v;
}

namespace {

struct CoordFacts {
  bool all_one_observed = true;
  bool all_one_certified = false;
  bool distinct_observed = true;
  bool distinct_certified = false;
  std::optional<size_t> some_nonone;        // k with 1[k] != 1
  std::optional<std::pair<size_t, size_t>> collision;  // j<k with 1[j]=1[k]
};

CoordFacts coordinator_facts(const PointedMergeAlgebra& p, size_t K) {
  CoordFacts f;
  std::vector<Element> ck;
  for (size_t k = 0; k <= K; ++k) ck.push_back(coordinate(p, p.one, k));
  for (size_t k = 0; k <= K; ++k) {
    if (!(ck[k] == p.one)) {
      f.all_one_observed = false;
      if (!f.some_nonone) f.some_nonone = k;
    }
    for (size_t j = 0; j < k; ++j)
      if (ck[j] == ck[k]) {
        f.distinct_observed = false;
        if (!f.collision) f.collision = std::make_pair(j, k);
      }
  }
  if (p.alg.tag == MergeTag::Degenerate) f.all_one_certified = true;
  if (p.alg.canonical && p.one.as_seq().overrides().empty()) {
    f.all_one_certified = p.alg.canonical->base->is_constant();
    f.distinct_certified = p.alg.canonical->base->injective();
  }
  return f;
}

}  // namespace

TypeVerdict classify_type(const PointedMergeAlgebra& p, const TestDomain& dom) {
  TypeVerdict v;
  size_t K = std::max({dom.index_bound, dom.perm_bound, size_t{4}});
  DegeneracyVerdict deg = is_degenerate(p.alg, dom);
  if (deg.pass) {
    v.type = 1;
    v.certified = deg.exhaustive;
    v.evidence = "degeneracy test passed" + std::string(deg.exhaustive ? " (exhaustive)" : " (sampled)");
    return v;
  }
  CoordFacts f = coordinator_facts(p, K);
  if (f.all_one_observed) {
    // 1[k] = 1 throughout; type 3 needs a witness a[n] != 1
    StreamResult sr = p.alg.stream(dom.element_budget, dom.seed);
    for (const Element& a : sr.elems)
      for (size_t n = 0; n <= K; ++n)
        if (!(coordinate(p, a, n) == p.one)) {
          v.type = 3;
          v.certified = f.all_one_certified;
          v.witness = a;
          v.evidence = "1[k]=1 (" +
                       std::string(f.all_one_certified ? "certified" : "up to budget") +
                       "), witness " + a.repr() + "[" + std::to_string(n) + "] != 1";
          return v;
        }
    v.type = 0;
    v.evidence = "1[k]=1 up to budget, no witness a[n]!=1 found";
    return v;
  }
  if (f.distinct_observed) {
    if (f.distinct_certified) {
      v.type = 2;
      v.certified = true;
      v.evidence = "coordinator entries pairwise distinct (injective base rule)";
    } else {
      v.type = 0;
      v.evidence = "1[k] pairwise distinct up to budget, no structural certificate";
    }
    return v;
  }
  // some 1[k] != 1 and a collision: types 1,2,3 are all refuted
  v.type = 4;
  v.certified = true;
  v.evidence = "1[" + std::to_string(*f.some_nonone) + "] != 1 and 1[" +
               std::to_string(f.collision->first) + "] = 1[" +
               std::to_string(f.collision->second) + "]";
  return v;
}

TypeVerdict classify_type(const MMonoid& m, const TestDomain& dom) {
  TypeVerdict v = classify_type(m.pm, dom);
  if (v.type == 2 && !v.certified) {
    // a cm-monoid is of type 1 or 2; any 1[k] != 1 refutes type 1
    if (m.claimed == Flavor::CM) {
      v.certified = true;
      v.evidence += "; cm law forces type in {1,2} and some 1[k] != 1";
    }
  }
  if (v.type == 0 && (m.claimed == Flavor::CM)) {
    size_t K = std::max({dom.index_bound, dom.perm_bound, size_t{4}});
    CoordFacts f = coordinator_facts(m.pm, K);
    if (f.distinct_observed && !f.all_one_observed) {
      v.type = 2;
      v.certified = true;
      v.evidence = "cm law forces type in {1,2}; 1[k] != 1 observed";
    }
  }
  if (v.type == 3 && !v.certified &&
      (m.claimed == Flavor::AM || m.claimed == Flavor::AMStrong)) {
    v.certified = true;
    v.evidence += "; am law forces sigma-bar(1)=1, hence 1[k]=1 for all k";
  }
  return v;
}

std::optional<std::pair<Element, Element>> noncomm_witness(const MMonoid& m,
                                                           const TestDomain& dom) {
  auto perms = perms_upto(std::min<size_t>(dom.perm_bound, 4));
  std::vector<Element> bar1;
  for (const FinPerm& s : perms) bar1.push_back(m.pm.alg.perm(s, m.pm.one));
  for (size_t i = 0; i < bar1.size(); ++i)
    for (size_t j = 0; j < bar1.size(); ++j) {
      if (i == j) continue;
      if (!(m.mul(bar1[i], bar1[j]) == m.mul(bar1[j], bar1[i])))
        return std::make_pair(bar1[i], bar1[j]);
    }
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  for (size_t i = 0; i < sr.elems.size(); ++i)
    for (size_t j = i + 1; j < sr.elems.size(); ++j)
      if (!(m.mul(sr.elems[i], sr.elems[j]) == m.mul(sr.elems[j], sr.elems[i])))
        return std::make_pair(sr.elems[i], sr.elems[j]);
  return std::nullopt;
}

DimVerdict dim_predicate(const MMonoid& m, const Element& a, size_t n, size_t mm,
                         bool omega_mode, const TestDomain& dom) {
  DimVerdict v;
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  v.exhaustive = sr.exhaustive;
  v.holds = true;
  const Element& one = m.pm.one;
  for (const Element& b : sr.elems) {
    if (omega_mode) {
      Element t = m.pm.alg.star(mm, one, b);
      Element lhs = m.pm.alg.star(n, m.mul(a, t), a);
      if (!(lhs == a)) {
        v.holds = false;
        v.witness = "b = " + b.repr();
        break;
      }
    } else {
      for (size_t k = 0; k <= dom.index_bound && v.holds; ++k) {
        Element t = m.pm.alg.star(mm + k, m.pm.alg.star(mm, one, b), one);
        Element lhs = m.pm.alg.star(n, m.mul(a, t), a);
        if (!(lhs == a)) {
          v.holds = false;
          v.witness = "b = " + b.repr() + ", k = " + std::to_string(k);
        }
      }
      if (!v.holds) break;
    }
  }
  if (m.dim_exact) {
    bool exact = m.dim_exact(a, n, mm);
    if (!exact && v.holds) {
      // scan missed a counterexample below the budget; the certificate decides
      v.holds = false;
      v.witness = "essential-arity certificate";
    }
    v.exhaustive = true;
  }
  return v;
}

DimSetsReport dimension_sets(const MMonoid& m, const TestDomain& dom) {
  DimSetsReport rep;
  TestDomain small = dom;
  small.element_budget = std::min<size_t>(dom.element_budget, 48);
  StreamResult sr = m.pm.alg.stream(small.element_budget, small.seed);
  size_t N = dom.index_bound, Mb = dom.index_bound;
  for (const Element& a : sr.elems) {
    DimSetsEntry e;
    e.a = a;
    // monotone in m and antitone in n, so the corner (N, Mb) decides
    e.omega_fin = dim_predicate(m, a, N, Mb, true, small).holds;
    e.fin = dim_predicate(m, a, N, Mb, false, small).holds;
    e.witness_m = Mb;
    if (e.omega_fin && !e.fin) {
      rep.inclusion_ok = false;
      rep.violation = a.repr();
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace clonoid

#include "clonoid/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace clonoid {

std::string structure_name(const Structure& s) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PointedMergeAlgebra>)
          return x.alg.name;
        else
          return x.name;
      },
      s);
}

namespace checker {

const char* suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::MERGE_B: return "MERGE_B";
    case SuiteId::MONOID: return "MONOID";
    case SuiteId::MMON_L1: return "MMON_L1";
    case SuiteId::CM_L2: return "CM_L2";
    case SuiteId::AM_L3: return "AM_L3";
    case SuiteId::AM_L4: return "AM_L4";
    case SuiteId::CA_C: return "CA_C";
    case SuiteId::ABSCLONE: return "ABSCLONE";
    case SuiteId::PICA: return "PICA";
    case SuiteId::NEUMANN_N: return "NEUMANN_N";
  }
  return "?";
}

std::optional<SuiteId> suite_from_name(const std::string& name) {
  for (SuiteId id : {SuiteId::MERGE_B, SuiteId::MONOID, SuiteId::MMON_L1, SuiteId::CM_L2,
                     SuiteId::AM_L3, SuiteId::AM_L4, SuiteId::CA_C, SuiteId::ABSCLONE,
                     SuiteId::PICA, SuiteId::NEUMANN_N})
    if (name == suite_name(id)) return id;
  return std::nullopt;
}

namespace {

using Pool = std::shared_ptr<const std::vector<Element>>;

struct Instance {
  nlohmann::ordered_json idx;
  std::vector<Pool> pools;
  // returns true when the equation holds on the assignment
  std::function<bool(const std::vector<const Element*>&)> ok;
};

struct Law {
  std::string name;
  std::vector<Instance> instances;
};

struct SuiteData {
  bool elements_exhaustive = true;
  std::vector<Law> laws;
};

struct Coverage {
  size_t checked = 0;
  size_t skipped = 0;
  bool full = true;
  bool failed = false;
  std::vector<size_t> fail_idx;
};

Coverage run_instance(const Instance& inst, size_t cap, uint64_t seed) {
  Coverage cov;
  size_t vars = inst.pools.size();
  std::vector<const Element*> tuple(vars);
  std::vector<size_t> idx(vars, 0);
  auto eval_at = [&]() -> bool {
    for (size_t v = 0; v < vars; ++v) tuple[v] = &(*inst.pools[v])[idx[v]];
    try {
      if (!inst.ok(tuple)) {
        cov.failed = true;
        cov.fail_idx = idx;
        return false;
      }
      ++cov.checked;
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded)
        ++cov.skipped;
      else
        throw;
    }
    return true;
  };

  size_t total = 1;
  bool overflow = false;
  for (const Pool& p : inst.pools) {
    if (p->empty()) return cov;  // nothing to quantify over
    if (total > cap / p->size()) {
      overflow = true;
      break;
    }
    total *= p->size();
  }
  if (!overflow && total <= cap) {
    if (vars == 0) {
      eval_at();
      return cov;
    }
    while (true) {
      if (!eval_at()) return cov;
      size_t pos = vars;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < inst.pools[pos]->size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) return cov;
    }
  }
  cov.full = false;
  SplitMix rng(seed);
  for (size_t t = 0; t < cap; ++t) {
    for (size_t v = 0; v < vars; ++v) idx[v] = rng.below(inst.pools[v]->size());
    if (!eval_at()) return cov;
  }
  return cov;
}

LawResult run_law(const Law& law, bool elements_exhaustive, const TestDomain& dom,
                  uint64_t law_salt) {
  LawResult r;
  r.name = law.name;
  for (size_t i = 0; i < law.instances.size(); ++i) {
    uint64_t seed = mix64(dom.seed ^ mix64(law_salt) ^ i);
    Coverage cov = run_instance(law.instances[i], dom.assignment_budget, seed);
    r.checked += cov.checked;
    r.skipped += cov.skipped;
    if (!cov.full) r.full_product = false;
    if (cov.failed) {
      r.verdict = VerdictKind::Fail;
      nlohmann::ordered_json w;
      w["law"] = law.name;
      w["instance"] = law.instances[i].idx;
      w["element_indices"] = cov.fail_idx;
      nlohmann::ordered_json reprs = nlohmann::ordered_json::array();
      for (size_t v = 0; v < cov.fail_idx.size(); ++v)
        reprs.push_back((*law.instances[i].pools[v])[cov.fail_idx[v]].repr());
      w["elements"] = reprs;
      r.witness = w;
      return r;
    }
  }
  r.verdict = elements_exhaustive ? VerdictKind::PassExhaustive : VerdictKind::PassSampled;
  return r;
}

// ---- suite builders ------------------------------------------------------

Pool make_pool(std::vector<Element> v) {
  return std::make_shared<const std::vector<Element>>(std::move(v));
}

const MergeAlgebra& merge_part(const Structure& s) {
  if (const auto* p = std::get_if<PointedMergeAlgebra>(&s)) return p->alg;
  if (const auto* m = std::get_if<MMonoid>(&s)) return m->pm.alg;
  throw Error(Errc::SignatureMismatch, "suite needs a merge algebra");
}

const MMonoid& mmon_part(const Structure& s) {
  if (const auto* m = std::get_if<MMonoid>(&s)) return *m;
  throw Error(Errc::SignatureMismatch, "suite needs an m-monoid");
}

void build_merge_b(SuiteData& sd, const MergeAlgebra& alg, const TestDomain& dom) {
  StreamResult sr = alg.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto star = alg.star;
  auto perm = alg.perm;
  auto perms = perms_upto(std::min<size_t>(dom.perm_bound, 6));
  size_t N = dom.index_bound;

  Law b1a{"B1_assoc", {}};
  Law b1b{"B1_idem", {}};
  for (size_t n = 0; n <= N; ++n) {
    b1a.instances.push_back(
        {{{"n", n}}, {E, E, E}, [star, n](const std::vector<const Element*>& t) {
           return star(n, star(n, *t[0], *t[1]), *t[2]) ==
                  star(n, *t[0], star(n, *t[1], *t[2]));
         }});
    b1b.instances.push_back({{{"n", n}}, {E}, [star, n](const std::vector<const Element*>& t) {
                               return star(n, *t[0], *t[0]) == *t[0];
                             }});
  }
  sd.laws.push_back(std::move(b1a));
  sd.laws.push_back(std::move(b1b));

  Law b2{"B2", {}};
  b2.instances.push_back({nlohmann::ordered_json::object(),
                          {E, E},
                          [star](const std::vector<const Element*>& t) {
                            return star(0, *t[0], *t[1]) == *t[1];
                          }});
  sd.laws.push_back(std::move(b2));

  Law b3a{"B3_outer", {}};
  Law b3b{"B3_inner", {}};
  Law b4{"B4", {}};
  for (size_t n = 0; n <= N; ++n)
    for (size_t k = 0; k <= N; ++k) {
      if (k >= n) {
        b3a.instances.push_back({{{"n", n}, {"k", k}},
                                 {E, E, E},
                                 [star, n, k](const std::vector<const Element*>& t) {
                                   return star(n, star(k, *t[0], *t[1]), *t[2]) ==
                                          star(n, *t[0], *t[2]);
                                 }});
        b3b.instances.push_back({{{"n", n}, {"k", k}},
                                 {E, E, E},
                                 [star, n, k](const std::vector<const Element*>& t) {
                                   return star(k, *t[0], star(n, *t[1], *t[2])) ==
                                          star(k, *t[0], *t[2]);
                                 }});
      } else {
        b4.instances.push_back({{{"k", k}, {"n", n}},
                                {E, E, E},
                                [star, n, k](const std::vector<const Element*>& t) {
                                  return star(n, star(k, *t[0], *t[1]), *t[2]) ==
                                         star(k, *t[0], star(n, *t[1], *t[2]));
                                }});
      }
    }
  sd.laws.push_back(std::move(b3a));
  sd.laws.push_back(std::move(b3b));
  sd.laws.push_back(std::move(b4));

  Law b5{"B5_antihom", {}};
  for (size_t si = 0; si < perms.size(); ++si)
    for (size_t ti = 0; ti < perms.size(); ++ti) {
      FinPerm sg = perms[si], tu = perms[ti];
      FinPerm comp = tu.after(sg);
      b5.instances.push_back({{{"sigma", sg.repr()}, {"tau", tu.repr()}},
                              {E},
                              [perm, sg, tu, comp](const std::vector<const Element*>& t) {
                                return perm(sg, perm(tu, *t[0])) == perm(comp, *t[0]);
                              }});
    }
  sd.laws.push_back(std::move(b5));

  Law b5i{"B5_identity", {}};
  b5i.instances.push_back({nlohmann::ordered_json::object(),
                           {E},
                           [perm](const std::vector<const Element*>& t) {
                             return perm(FinPerm::identity(), *t[0]) == *t[0];
                           }});
  sd.laws.push_back(std::move(b5i));

  Law b6{"B6", {}};
  for (size_t k = 0; k <= N; ++k)
    for (size_t n = 0; n <= k; ++n)
      for (const FinPerm& sg : perms) {
        if (sg.dom_bound() > k) continue;
        b6.instances.push_back(
            {{{"n", n}, {"k", k}, {"sigma", sg.repr()}},
             {E, E},
             [star, perm, sg, n, k](const std::vector<const Element*>& t) {
               const Element &x = *t[0], &y = *t[1];
               Element lhs = perm(sg, star(n, x, y));
               if (k == 0) return lhs == y;  // empty fold evaluates to y
               Element acc = perm(sg, sg.apply(0) < n ? x : y);
               for (size_t i = 1; i < k; ++i)
                 acc = star(i, acc, perm(sg, sg.apply(i) < n ? x : y));
               return lhs == star(k, acc, y);
             }});
      }
  sd.laws.push_back(std::move(b6));

  Law b7{"B7", {}};
  for (size_t m = 0; m <= N; ++m)
    for (size_t n = m; n <= N; ++n)
      for (size_t si = 0; si < perms.size(); ++si)
        for (size_t ti = 0; ti < perms.size(); ++ti) {
          if (si == ti) continue;
          const FinPerm &sg = perms[si], &tu = perms[ti];
          bool band_equal = true;
          for (size_t i = m; i < n; ++i)
            if (sg.apply(i) != tu.apply(i)) band_equal = false;
          if (!band_equal) continue;
          b7.instances.push_back(
              {{{"m", m}, {"n", n}, {"sigma", sg.repr()}, {"tau", tu.repr()}},
               {E, E, E},
               [star, perm, sg, tu, m, n](const std::vector<const Element*>& t) {
                 const Element &z = *t[0], &x = *t[1], &y = *t[2];
                 return star(n, star(m, z, perm(sg, x)), y) ==
                        star(n, star(m, z, perm(tu, x)), y);
               }});
        }
  sd.laws.push_back(std::move(b7));
}

void build_monoid(SuiteData& sd, const MMonoid& m, const TestDomain& dom) {
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto mul = m.mul;
  Element one = m.pm.one;
  Law assoc{"MON_assoc", {}};
  assoc.instances.push_back({nlohmann::ordered_json::object(),
                             {E, E, E},
                             [mul](const std::vector<const Element*>& t) {
                               return mul(mul(*t[0], *t[1]), *t[2]) ==
                                      mul(*t[0], mul(*t[1], *t[2]));
                             }});
  Law ul{"MON_unit_left", {}};
  ul.instances.push_back({nlohmann::ordered_json::object(),
                          {E},
                          [mul, one](const std::vector<const Element*>& t) {
                            return mul(one, *t[0]) == *t[0];
                          }});
  Law ur{"MON_unit_right", {}};
  ur.instances.push_back({nlohmann::ordered_json::object(),
                          {E},
                          [mul, one](const std::vector<const Element*>& t) {
                            return mul(*t[0], one) == *t[0];
                          }});
  sd.laws.push_back(std::move(assoc));
  sd.laws.push_back(std::move(ul));
  sd.laws.push_back(std::move(ur));
}

void build_l1(SuiteData& sd, const MMonoid& m, const TestDomain& dom) {
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto mul = m.mul;
  auto star = m.pm.alg.star;
  Law l1{"L1_right_distributivity", {}};
  for (size_t n = 0; n <= dom.index_bound; ++n)
    l1.instances.push_back({{{"n", n}},
                            {E, E, E},
                            [mul, star, n](const std::vector<const Element*>& t) {
                              return mul(star(n, *t[0], *t[1]), *t[2]) ==
                                     star(n, mul(*t[0], *t[2]), mul(*t[1], *t[2]));
                            }});
  sd.laws.push_back(std::move(l1));
}

void build_l2(SuiteData& sd, const MMonoid& m, const TestDomain& dom) {
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto mul = m.mul;
  auto perm = m.pm.alg.perm;
  Law l2{"L2_perm_left", {}};
  for (const FinPerm& sg : perms_upto(std::min<size_t>(dom.perm_bound, 6)))
    l2.instances.push_back({{{"sigma", sg.repr()}},
                            {E, E},
                            [mul, perm, sg](const std::vector<const Element*>& t) {
                              return mul(perm(sg, *t[0]), *t[1]) ==
                                     perm(sg, mul(*t[0], *t[1]));
                            }});
  sd.laws.push_back(std::move(l2));
}

void build_l3(SuiteData& sd, const MMonoid& m, const TestDomain& dom) {
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto mul = m.mul;
  auto perm = m.pm.alg.perm;
  Law l3{"L3_perm_multiplicative", {}};
  for (const FinPerm& sg : perms_upto(std::min<size_t>(dom.perm_bound, 6)))
    l3.instances.push_back({{{"sigma", sg.repr()}},
                            {E, E},
                            [mul, perm, sg](const std::vector<const Element*>& t) {
                              return perm(sg, mul(*t[0], *t[1])) ==
                                     mul(perm(sg, *t[0]), perm(sg, *t[1]));
                            }});
  sd.laws.push_back(std::move(l3));
}

void build_l4(SuiteData& sd, const MMonoid& m, const TestDomain& dom) {
  StreamResult sr = m.pm.alg.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto mul = m.mul;
  auto star = m.pm.alg.star;
  Element one = m.pm.one;
  Law l4{"L4_strong", {}};
  for (size_t n = 0; n <= dom.index_bound; ++n)
    l4.instances.push_back({{{"n", n}},
                            {E, E},
                            [mul, star, one, n](const std::vector<const Element*>& t) {
                              return star(n, mul(*t[0], *t[1]), one) ==
                                     mul(star(n, *t[0], one), star(n, *t[1], one));
                            }});
  sd.laws.push_back(std::move(l4));
}

void build_ca(SuiteData& sd, const CloneAlgebra& c, const TestDomain& dom) {
  StreamResult sr = c.stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = sr.exhaustive;
  Pool E = make_pool(std::move(sr.elems));
  auto q = c.q;
  auto e = c.e;
  size_t N = dom.index_bound;

  Law c1{"C1", {}};
  for (size_t n = 1; n <= N; ++n)
    for (size_t i = 0; i < n; ++i)
      c1.instances.push_back({{{"n", n}, {"i", i}},
                              std::vector<Pool>(n, E),
                              [q, e, i](const std::vector<const Element*>& t) {
                                std::vector<Element> xs;
                                xs.reserve(t.size());
                                for (auto* p : t) xs.push_back(*p);
                                return q(e(i), xs) == xs[i];
                              }});
  sd.laws.push_back(std::move(c1));

  Law c2{"C2", {}};
  for (size_t n = 0; n <= N; ++n)
    for (size_t j = n; j <= N + 2; ++j)
      c2.instances.push_back({{{"n", n}, {"j", j}},
                              std::vector<Pool>(n, E),
                              [q, e, j](const std::vector<const Element*>& t) {
                                std::vector<Element> xs;
                                xs.reserve(t.size());
                                for (auto* p : t) xs.push_back(*p);
                                return q(e(j), xs) == e(j);
                              }});
  sd.laws.push_back(std::move(c2));

  Law c3{"C3", {}};
  for (size_t n = 0; n <= N; ++n)
    c3.instances.push_back({{{"n", n}},
                            {E},
                            [q, e, n](const std::vector<const Element*>& t) {
                              std::vector<Element> es;
                              es.reserve(n);
                              for (size_t i = 0; i < n; ++i) es.push_back(e(i));
                              return q(*t[0], es) == *t[0];
                            }});
  sd.laws.push_back(std::move(c3));

  Law c4{"C4_padding", {}};
  for (size_t n = 0; n <= N; ++n)
    for (size_t k = n + 1; k <= N + 1; ++k) {
      std::vector<Pool> pools(1 + n, E);
      c4.instances.push_back({{{"n", n}, {"k", k}},
                              pools,
                              [q, e, n, k](const std::vector<const Element*>& t) {
                                std::vector<Element> ys;
                                ys.reserve(k);
                                for (size_t i = 1; i <= n; ++i) ys.push_back(*t[i]);
                                Element lhs = q(*t[0], ys);
                                for (size_t i = n; i < k; ++i) ys.push_back(e(i));
                                return lhs == q(*t[0], ys);
                              }});
    }
  sd.laws.push_back(std::move(c4));

  Law c5{"C5", {}};
  for (size_t n = 0; n <= N; ++n) {
    std::vector<Pool> pools(1 + 2 * n, E);
    c5.instances.push_back({{{"n", n}},
                            pools,
                            [q, n](const std::vector<const Element*>& t) {
                              std::vector<Element> ys, zs;
                              ys.reserve(n);
                              zs.reserve(n);
                              for (size_t i = 0; i < n; ++i) ys.push_back(*t[1 + i]);
                              for (size_t i = 0; i < n; ++i) zs.push_back(*t[1 + n + i]);
                              Element lhs = q(q(*t[0], ys), zs);
                              std::vector<Element> mids;
                              mids.reserve(n);
                              for (size_t i = 0; i < n; ++i) mids.push_back(q(ys[i], zs));
                              return lhs == q(*t[0], mids);
                            }});
  }
  sd.laws.push_back(std::move(c5));
}

void build_absclone(SuiteData& sd, const AbstractClone& b, const TestDomain& dom) {
  size_t S = std::min(b.max_sort, dom.index_bound);
  std::vector<Pool> sorts;
  for (size_t s = 0; s <= S; ++s) {
    StreamResult sr = b.sort_stream(s, dom.element_budget, dom.seed);
    if (!sr.exhaustive) sd.elements_exhaustive = false;
    sorts.push_back(make_pool(std::move(sr.elems)));
  }
  auto q = b.q;
  auto e = b.e;

  Law assoc{"AC_assoc", {}};
  for (size_t m = 0; m <= S; ++m)
    for (size_t n = 0; n <= S; ++n)
      for (size_t k = 0; k <= S; ++k) {
        std::vector<Pool> pools;
        pools.push_back(sorts[m]);
        for (size_t i = 0; i < m; ++i) pools.push_back(sorts[n]);
        for (size_t i = 0; i < n; ++i) pools.push_back(sorts[k]);
        assoc.instances.push_back(
            {{{"m", m}, {"n", n}, {"k", k}},
             pools,
             [q, m, n, k](const std::vector<const Element*>& t) {
               std::vector<Element> ys, zs;
               for (size_t i = 0; i < m; ++i) ys.push_back(*t[1 + i]);
               for (size_t i = 0; i < n; ++i) zs.push_back(*t[1 + m + i]);
               Element lhs = q(n, k, q(m, n, *t[0], ys), zs);
               std::vector<Element> mids;
               for (size_t i = 0; i < m; ++i) mids.push_back(q(n, k, ys[i], zs));
               return lhs == q(m, k, *t[0], mids);
             }});
      }
  sd.laws.push_back(std::move(assoc));

  Law runit{"AC_right_unit", {}};
  for (size_t n = 0; n <= S; ++n)
    runit.instances.push_back({{{"n", n}},
                               {sorts[n]},
                               [q, e, n](const std::vector<const Element*>& t) {
                                 std::vector<Element> es;
                                 for (size_t i = 0; i < n; ++i) es.push_back(e(n, i));
                                 return q(n, n, *t[0], es) == *t[0];
                               }});
  sd.laws.push_back(std::move(runit));

  Law lunit{"AC_left_unit", {}};
  for (size_t n = 1; n <= S; ++n)
    for (size_t k = 0; k <= S; ++k)
      for (size_t i = 0; i < n; ++i)
        lunit.instances.push_back(
            {{{"n", n}, {"k", k}, {"i", i}},
             std::vector<Pool>(n, sorts[k]),
             [q, e, n, k, i](const std::vector<const Element*>& t) {
               std::vector<Element> ys;
               for (auto* p : t) ys.push_back(*p);
               return q(n, k, e(n, i), ys) == ys[i];
             }});
  sd.laws.push_back(std::move(lunit));
}

void build_pica(SuiteData& sd, const Pica& p, const TestDomain& dom, bool neumann) {
  StreamResult asr = p.stream(dom.element_budget, dom.seed);
  StreamResult dsr = p.domain_stream(dom.element_budget, dom.seed);
  sd.elements_exhaustive = asr.exhaustive && dsr.exhaustive;
  Pool A = make_pool(std::move(asr.elems));
  Pool D = make_pool(std::move(dsr.elems));
  auto q = p.q;
  auto e = p.e;
  BaseSeqPtr dbase = p.domain_base;
  CarrierTag dom_tag = p.dom_tag;

  Law i1{"I1_projection", {}};
  for (size_t i = 0; i <= dom.index_bound; ++i)
    i1.instances.push_back({{{"i", i}},
                            {D},
                            [q, e, i](const std::vector<const Element*>& t) {
                              const OmegaSeq& z = t[0]->as_seq();
                              return q(e(i), z) == z.at(i);
                            }});
  sd.laws.push_back(std::move(i1));

  Law i2{"I2_unit", {}};
  i2.instances.push_back({nlohmann::ordered_json::object(),
                          {A},
                          [q, dbase](const std::vector<const Element*>& t) {
                            return q(*t[0], OmegaSeq(dbase)) == *t[0];
                          }});
  sd.laws.push_back(std::move(i2));

  Law i3{"I3_associativity", {}};
  i3.instances.push_back(
      {nlohmann::ordered_json::object(),
       {A, D, D},
       [q, dbase, dom_tag](const std::vector<const Element*>& t) {
         const OmegaSeq& y = t[1]->as_seq();
         const OmegaSeq& z = t[2]->as_seq();
         Element lhs = q(q(*t[0], y), z);
         size_t bound = std::max(y.support_bound(), z.support_bound());
         std::vector<std::pair<size_t, Element>> ov;
         for (size_t i = 0; i < bound; ++i) ov.emplace_back(i, q(y.at(i), z));
         OmegaSeq image(dbase, std::move(ov));
         (void)dom_tag;
         return lhs == q(*t[0], image);
       }});
  sd.laws.push_back(std::move(i3));

  Law p3{"P3_tail", {}};
  p3.instances.push_back(
      {nlohmann::ordered_json::object(),
       {D, D},
       [q, dbase](const std::vector<const Element*>& t) {
         const OmegaSeq& y = t[0]->as_seq();
         const OmegaSeq& z = t[1]->as_seq();
         size_t bound = std::max(y.support_bound(), z.support_bound());
         // beyond both supports the componentwise image must settle onto the
         // domain base, keeping the image finitely supported
         return q(y.at(bound), z) == dbase->at(bound);
       }});
  sd.laws.push_back(std::move(p3));

  Law p4{"P4_unit_in_domain", {}};
  p4.instances.push_back({nlohmann::ordered_json::object(),
                          {},
                          [dbase](const std::vector<const Element*>&) {
                            OmegaSeq unit(dbase);
                            return unit.base()->id() == dbase->id();
                          }});
  sd.laws.push_back(std::move(p4));

  if (neumann) {
    bool full = p.full_domain;
    Law nfull{"N_full_domain", {}};
    nfull.instances.push_back({nlohmann::ordered_json::object(),
                               {},
                               [full](const std::vector<const Element*>&) { return full; }});
    sd.laws.push_back(std::move(nfull));
  }
}

SuiteData build_suite(const Structure& s, SuiteId suite, const TestDomain& dom) {
  SuiteData sd;
  switch (suite) {
    case SuiteId::MERGE_B:
      build_merge_b(sd, merge_part(s), dom);
      break;
    case SuiteId::MONOID:
      build_monoid(sd, mmon_part(s), dom);
      break;
    case SuiteId::MMON_L1:
      build_l1(sd, mmon_part(s), dom);
      break;
    case SuiteId::CM_L2:
      build_l2(sd, mmon_part(s), dom);
      break;
    case SuiteId::AM_L3:
      build_l3(sd, mmon_part(s), dom);
      break;
    case SuiteId::AM_L4:
      build_l4(sd, mmon_part(s), dom);
      break;
    case SuiteId::CA_C:
      if (const auto* c = std::get_if<CloneAlgebra>(&s))
        build_ca(sd, *c, dom);
      else
        throw Error(Errc::SignatureMismatch, "CA_C needs a clone algebra");
      break;
    case SuiteId::ABSCLONE:
      if (const auto* b = std::get_if<AbstractClone>(&s))
        build_absclone(sd, *b, dom);
      else
        throw Error(Errc::SignatureMismatch, "ABSCLONE needs an abstract clone");
      break;
    case SuiteId::PICA:
    case SuiteId::NEUMANN_N:
      if (const auto* p = std::get_if<Pica>(&s))
        build_pica(sd, *p, dom, suite == SuiteId::NEUMANN_N);
      else
        throw Error(Errc::SignatureMismatch, "PICA needs a partial infinitary clone algebra");
      break;
  }
  return sd;
}

size_t thread_cap() {
  size_t hw = std::max<unsigned>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CLONOID_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) hw = std::min<size_t>(hw, static_cast<size_t>(v));
  }
  return hw;
}

}  // namespace

bool Report::any_fail() const {
  for (const LawResult& l : laws)
    if (l.verdict == VerdictKind::Fail) return true;
  return false;
}

nlohmann::ordered_json Report::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["structure"] = structure;
  j["suite"] = suite_name(suite);
  j["domain"] = {{"element_budget", domain.element_budget},
                 {"index_bound", domain.index_bound},
                 {"perm_bound", domain.perm_bound},
                 {"assignment_budget", domain.assignment_budget},
                 {"seed", domain.seed}};
  j["elements_exhaustive"] = elements_exhaustive;
  nlohmann::ordered_json laws_j = nlohmann::ordered_json::array();
  for (const LawResult& l : laws) {
    nlohmann::ordered_json lj;
    lj["name"] = l.name;
    switch (l.verdict) {
      case VerdictKind::PassExhaustive: lj["verdict"] = "pass_exhaustive"; break;
      case VerdictKind::PassSampled: lj["verdict"] = "pass_sampled"; break;
      case VerdictKind::Fail: lj["verdict"] = "fail"; break;
    }
    lj["checked"] = l.checked;
    if (l.skipped) lj["skipped"] = l.skipped;
    lj["coverage"] = l.full_product ? "full" : "sampled";
    if (l.verdict == VerdictKind::Fail) lj["witness"] = l.witness;
    laws_j.push_back(std::move(lj));
  }
  j["laws"] = std::move(laws_j);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fingerprint));
  j["fingerprint"] = std::string(buf);
  if (include_timings) j["wall_ms"] = wall_ms;
  return j;
}

Report check(const Structure& s, SuiteId suite, const TestDomain& dom) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteData sd = build_suite(s, suite, dom);
  Report rep;
  rep.structure = structure_name(s);
  rep.suite = suite;
  rep.domain = dom;
  rep.elements_exhaustive = sd.elements_exhaustive;
  rep.fingerprint = fnv1a(rep.structure + "|" + suite_name(suite));
  rep.laws.resize(sd.laws.size());

  size_t threads = std::min(thread_cap(), std::max<size_t>(sd.laws.size(), 1));
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= sd.laws.size()) return;
      try {
        rep.laws[i] = run_law(sd.laws[i], sd.elements_exhaustive, dom, fnv1a(sd.laws[i].name));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

bool replay(const Structure& s, SuiteId suite, const TestDomain& dom,
            const nlohmann::ordered_json& witness) {
  SuiteData sd = build_suite(s, suite, dom);
  std::string law_name = witness.at("law").get<std::string>();
  for (const Law& law : sd.laws) {
    if (law.name != law_name) continue;
    for (const Instance& inst : law.instances) {
      if (inst.idx != witness.at("instance")) continue;
      std::vector<size_t> idx = witness.at("element_indices").get<std::vector<size_t>>();
      if (idx.size() != inst.pools.size()) return false;
      std::vector<const Element*> tuple(idx.size());
      for (size_t v = 0; v < idx.size(); ++v) {
        if (idx[v] >= inst.pools[v]->size()) return false;
        tuple[v] = &(*inst.pools[v])[idx[v]];
      }
      return !inst.ok(tuple);
    }
  }
  return false;
}

StreamResult enumerate_structure(const Structure& s, const TestDomain& dom) {
  return std::visit(
      [&](const auto& x) -> StreamResult {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PointedMergeAlgebra>)
          return x.alg.stream(dom.element_budget, dom.seed);
        else if constexpr (std::is_same_v<T, MMonoid>)
          return x.pm.alg.stream(dom.element_budget, dom.seed);
        else if constexpr (std::is_same_v<T, AbstractClone>) {
          StreamResult all;
          all.exhaustive = true;
          for (size_t sort = 0; sort <= x.max_sort; ++sort) {
            StreamResult sr = x.sort_stream(sort, dom.element_budget, dom.seed);
            if (!sr.exhaustive) all.exhaustive = false;
            for (Element& e : sr.elems) {
              if (all.elems.size() >= dom.element_budget) break;
              all.elems.push_back(std::move(e));
            }
          }
          return all;
        } else
          return x.stream(dom.element_budget, dom.seed);
      },
      s);
}

}  // namespace checker
}  // namespace clonoid

#include "clonoid/absclone.hpp"

#include <algorithm>
#include <unordered_set>

namespace clonoid {

ConcreteClone clone_generate(uint8_t domain, std::vector<FinOp> gens, size_t max_arity,
                             size_t op_guard) {
  ConcreteClone cc;
  cc.domain = domain;
  cc.max_arity = max_arity;
  std::vector<std::unordered_set<FinOp, FinOpHash>> sets(max_arity + 1);
  size_t total = 0;
  auto insert = [&](const FinOp& f) {
    if (f.arity > max_arity) return false;
    if (sets[f.arity].insert(f).second) {
      if (++total > op_guard) throw Error(Errc::BudgetExceeded, "clone closure op guard hit");
      return true;
    }
    return false;
  };
  for (size_t n = 1; n <= max_arity; ++n)
    for (size_t i = 0; i < n; ++i)
      insert(FinOp::projection(domain, static_cast<uint8_t>(n), static_cast<uint8_t>(i)));
  for (const FinOp& g : gens) {
    if (g.domain != domain) throw Error(Errc::CarrierMismatch, "generator over wrong domain");
    insert(g);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // snapshot to iterate while inserting
    std::vector<FinOp> outer;
    for (const auto& s : sets) outer.insert(outer.end(), s.begin(), s.end());
    for (const FinOp& f : outer) {
      if (f.arity == 0) {
        // f()_k is the constant of arity k
        for (size_t k = 0; k <= max_arity; ++k)
          if (insert(FinOp::constant(domain, static_cast<uint8_t>(k), f.table[0])))
            changed = true;
        continue;
      }
      for (size_t k = 0; k <= max_arity; ++k) {
        std::vector<FinOp> inner(sets[k].begin(), sets[k].end());
        if (inner.empty()) continue;
        std::vector<size_t> idx(f.arity, 0);
        while (true) {
          std::vector<FinOp> gs;
          gs.reserve(f.arity);
          for (size_t j = 0; j < f.arity; ++j) gs.push_back(inner[idx[j]]);
          if (insert(compose(f, gs))) changed = true;
          size_t pos = f.arity;
          bool done = true;
          while (pos > 0) {
            --pos;
            if (++idx[pos] < inner.size()) {
              done = false;
              break;
            }
            idx[pos] = 0;
          }
          if (done) break;
        }
      }
    }
  }

  cc.ops.resize(max_arity + 1);
  for (size_t k = 0; k <= max_arity; ++k) {
    cc.ops[k].assign(sets[k].begin(), sets[k].end());
    std::sort(cc.ops[k].begin(), cc.ops[k].end(),
              [](const FinOp& a, const FinOp& b) { return a.compare(b) < 0; });
  }
  return cc;
}

namespace {

FinOp concrete_q(size_t n, size_t k, const FinOp& x, std::span<const Element> ys) {
  if (x.arity != n) throw Error(Errc::ArityMismatch, "element not of sort n");
  if (n == 0) return FinOp::constant(x.domain, static_cast<uint8_t>(k), x.table.at(0));
  std::vector<FinOp> gs;
  gs.reserve(n);
  for (const Element& y : ys) gs.push_back(y.as_op());
  return compose(x, gs);
}

}  // namespace

AbstractClone as_abstract(const ConcreteClone& cc) {
  AbstractClone b;
  b.name = "clone(" + std::to_string(cc.domain) + ")";
  b.max_sort = cc.max_arity;
  CarrierTag tag = carrier_tag("op(" + std::to_string(cc.domain) + ")");
  auto ops = std::make_shared<ConcreteClone>(cc);
  b.sort_stream = [ops, tag](size_t sort, size_t budget, uint64_t) {
    StreamResult r;
    if (sort >= ops->ops.size()) {
      r.exhaustive = true;
      return r;
    }
    const auto& v = ops->ops[sort];
    r.exhaustive = v.size() <= budget;
    for (size_t i = 0; i < std::min(budget, v.size()); ++i)
      r.elems.push_back(Element::op(v[i], tag));
    return r;
  };
  uint8_t domain = cc.domain;
  b.q = [tag](size_t n, size_t k, const Element& x, std::span<const Element> ys) {
    if (ys.size() != n) throw Error(Errc::ArityMismatch, "q_n^k needs n inner elements");
    return Element::op(concrete_q(n, k, x.as_op(), ys), tag);
  };
  b.e = [domain, tag](size_t n, size_t i) {
    return Element::op(FinOp::projection(domain, static_cast<uint8_t>(n), static_cast<uint8_t>(i)), tag);
  };
  b.unlift = [tag](size_t n, const Element& x) -> std::optional<Element> {
    const FinOp& f = x.as_op();
    if (n == 0 || f.arity != n) return std::nullopt;
    if (f.depends_on(static_cast<uint8_t>(n - 1))) return std::nullopt;
    FinOp g = f;
    --g.arity;
    g.table.resize(FinOp::table_size(f.domain, g.arity));
    std::vector<uint8_t> args(g.arity, 0);
    for (size_t idx = 0; idx < g.table.size(); ++idx) {
      size_t rem = idx;
      for (int i = g.arity - 1; i >= 0; --i) {
        args[i] = static_cast<uint8_t>(rem % g.domain);
        rem /= g.domain;
      }
      std::vector<uint8_t> full(args.begin(), args.end());
      full.push_back(0);
      g.table[idx] = f.eval(full);
    }
    return Element::op(g, tag);
  };
  return b;
}

Element lift_plus(const AbstractClone& b, const Element& x, size_t n, size_t k) {
  if (k == 0) return x;
  std::vector<Element> es;
  es.reserve(n);
  for (size_t i = 0; i < n; ++i) es.push_back(b.e(n + k, i));
  return b.q(n, n + k, x, es);
}

bool approx_equiv(const AbstractClone& b, const Element& x, size_t n, const Element& y,
                  size_t m) {
  if (n == m) return x == y;
  if (n < m) return lift_plus(b, x, n, m - n) == y;
  return lift_plus(b, y, m, n - m) == x;
}

std::pair<size_t, Element> ac_class_of(const AbstractClone& b, const Element& x, size_t n) {
  size_t sort = n;
  Element rep = x;
  while (sort > 0 && b.unlift) {
    auto y = b.unlift(sort, rep);
    if (!y) break;
    rep = *y;
    --sort;
  }
  return {sort, rep};
}

CloneAlgebra ac_to_ca(const AbstractClone& b, size_t sort_bound) {
  CloneAlgebra c;
  c.name = b.name + "^ac-ca";
  c.tag = carrier_tag("acca(" + b.name + ")");
  CarrierTag tag = c.tag;
  auto B = std::make_shared<AbstractClone>(b);

  auto to_class = [B, tag](const Element& x, size_t sort) {
    auto [s, rep] = ac_class_of(*B, x, sort);
    return Element::pair(Element::integer(static_cast<int64_t>(s), carrier_tag("nat")), rep, tag);
  };

  c.stream = [B, sort_bound, to_class](size_t budget, uint64_t seed) {
    StreamResult r;
    r.exhaustive = true;
    std::unordered_set<Element, ElementHash> seen;
    for (size_t s = 0; s <= sort_bound; ++s) {
      StreamResult sr = B->sort_stream(s, budget, seed);
      if (!sr.exhaustive) r.exhaustive = false;
      for (const Element& x : sr.elems) {
        Element cls = to_class(x, s);
        if (seen.insert(cls).second) r.elems.push_back(cls);
        if (r.elems.size() >= budget) {
          r.exhaustive = false;
          return r;
        }
      }
    }
    return r;
  };

  c.e = [B, to_class, sort_bound](size_t n) {
    if (n + 1 > B->max_sort)
      throw Error(Errc::BudgetExceeded, "e_" + std::to_string(n) + " beyond sort bound");
    (void)sort_bound;
    return to_class(B->e(n + 1, n), n + 1);
  };

  c.q = [B, to_class](const Element& a, std::span<const Element> bs) {
    size_t n = bs.size();
    size_t k = std::max<size_t>(n, 1);
    const auto& ap = a.as_pair();
    size_t asort = static_cast<size_t>(ap.first.as_int());
    k = std::max(k, asort);
    for (const Element& bel : bs)
      k = std::max(k, static_cast<size_t>(bel.as_pair().first.as_int()));
    if (k > B->max_sort)
      throw Error(Errc::BudgetExceeded, "composite needs sort beyond bound");
    // lift everything to sort k, apply q_k^k padded with e_n..e_{k-1}
    Element x = lift_plus(*B, ap.second, asort, k - asort);
    std::vector<Element> args;
    args.reserve(k);
    for (const Element& bel : bs) {
      const auto& bp = bel.as_pair();
      size_t bsort = static_cast<size_t>(bp.first.as_int());
      args.push_back(lift_plus(*B, bp.second, bsort, k - bsort));
    }
    for (size_t i = n; i < k; ++i) args.push_back(B->e(k, i));
    Element res = B->q(k, k, x, args);
    return to_class(res, k);
  };

  c.dim_cert = [](const Element& a) -> std::optional<size_t> {
    return static_cast<size_t>(a.as_pair().first.as_int());
  };
  return c;
}

AbstractClone ca_to_ac(const CloneAlgebra& c, size_t arity_bound) {
  AbstractClone b;
  b.name = "R(" + c.name + ")";
  b.max_sort = arity_bound;
  auto C = std::make_shared<CloneAlgebra>(c);
  b.sort_stream = [C](size_t sort, size_t budget, uint64_t seed) {
    StreamResult r = C->stream(budget, seed);
    std::vector<Element> keep;
    for (Element& e : r.elems) {
      std::optional<size_t> d;
      if (C->dim_cert) d = C->dim_cert(e);
      if (d && *d <= sort) keep.push_back(std::move(e));
    }
    r.elems = std::move(keep);
    return r;
  };
  b.q = [C](size_t n, size_t k, const Element& x, std::span<const Element> ys) {
    if (ys.size() != n) throw Error(Errc::ArityMismatch, "q_n^k needs n inner elements");
    (void)k;
    return C->q(x, ys);
  };
  b.e = [C](size_t n, size_t i) {
    if (i >= n) throw Error(Errc::ArityMismatch, "e_i^n needs i < n");
    return C->e(i);
  };
  b.unlift = [C](size_t n, const Element& x) -> std::optional<Element> {
    std::optional<size_t> d;
    if (C->dim_cert) d = C->dim_cert(x);
    if (d && *d + 1 <= n) return x;
    return std::nullopt;
  };
  return b;
}

}  // namespace clonoid

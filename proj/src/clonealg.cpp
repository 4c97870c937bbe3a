#include "clonoid/clonealg.hpp"

#include <algorithm>

namespace clonoid {

CloneAlgebra projection_algebra(std::optional<size_t> window) {
  CloneAlgebra c;
  c.name = window ? "proj[" + std::to_string(*window) + "]" : "proj";
  c.tag = carrier_tag("nat");
  CarrierTag tag = c.tag;
  if (window) {
    std::vector<Element> all;
    for (size_t i = 0; i < *window; ++i)
      all.push_back(Element::integer(static_cast<int64_t>(i), tag));
    c.stream = finite_stream(std::move(all));
  } else {
    c.stream = [tag](size_t budget, uint64_t) {
      StreamResult r;
      for (size_t i = 0; i < budget; ++i)
        r.elems.push_back(Element::integer(static_cast<int64_t>(i), tag));
      r.exhaustive = false;
      return r;
    };
  }
  c.e = [tag](size_t n) { return Element::integer(static_cast<int64_t>(n), tag); };
  c.q = [](const Element& a, std::span<const Element> bs) {
    int64_t i = a.as_int();
    if (i >= 0 && static_cast<size_t>(i) < bs.size()) return bs[static_cast<size_t>(i)];
    return a;
  };
  c.dim_cert = [](const Element& a) -> std::optional<size_t> {
    return static_cast<size_t>(a.as_int()) + 1;
  };
  return c;
}

CloneAlgebra fca(uint8_t domain, uint8_t arity_bound, size_t e_cap) {
  CloneAlgebra c;
  c.name = "fca(" + std::to_string(domain) + "," + std::to_string(arity_bound) + ")";
  c.tag = carrier_tag("omegaop(" + std::to_string(domain) + ")");
  CarrierTag tag = c.tag;

  std::vector<Element> all;
  for (uint8_t ar = 0; ar <= arity_bound; ++ar) {
    size_t ts = FinOp::table_size(domain, ar);
    std::vector<uint8_t> table(ts, 0);
    while (true) {
      FinOp f{domain, ar, table};
      if (f.essential_arity() == ar) all.push_back(Element::op(f, tag));
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
  // signature constants e_n beyond the table block (normalized arity n+1)
  for (size_t n = arity_bound; n <= e_cap; ++n)
    all.push_back(Element::op(
        FinOp::projection(domain, static_cast<uint8_t>(n + 1), static_cast<uint8_t>(n)),
        tag));
  std::sort(all.begin(), all.end());
  c.stream = finite_stream(std::move(all));

  c.e = [domain, tag](size_t n) {
    return Element::op(
        FinOp::projection(domain, static_cast<uint8_t>(n + 1), static_cast<uint8_t>(n)),
        tag);
  };
  c.q = [tag](const Element& a, std::span<const Element> bs) {
    std::vector<FinOp> psis;
    psis.reserve(bs.size());
    for (const Element& b : bs) psis.push_back(b.as_op());
    return Element::op(omega_op_q(a.as_op(), psis), tag);
  };
  c.dim_cert = [](const Element& a) -> std::optional<size_t> {
    return a.as_op().essential_arity();
  };
  return c;
}

namespace {

TermPtr substitute(const TermPtr& t, std::span<const TermPtr> subs) {
  if (t->var >= 0) {
    if (static_cast<size_t>(t->var) < subs.size()) return subs[static_cast<size_t>(t->var)];
    return t;
  }
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (const auto& k : t->kids) kids.push_back(substitute(k, subs));
  return TermNode::make_app(t->sym, std::move(kids));
}

size_t max_var_index(const TermPtr& t) {
  if (t->var >= 0) return static_cast<size_t>(t->var) + 1;
  size_t m = 0;
  for (const auto& k : t->kids) m = std::max(m, max_var_index(k));
  return m;
}

void terms_of_size(const Signature& sig, size_t size, size_t var_budget,
                   std::vector<TermPtr>& out) {
  if (size == 0) return;
  if (size == 1) {
    for (size_t i = 0; i < var_budget; ++i) out.push_back(TermNode::make_var(static_cast<int32_t>(i)));
    for (const auto& [sym, ar] : sig.ops)
      if (ar == 0) out.push_back(TermNode::make_app(sym, {}));
    return;
  }
  for (const auto& [sym, ar] : sig.ops) {
    if (ar == 0) continue;
    std::function<void(size_t, size_t, std::vector<TermPtr>&)> rec =
        [&](size_t child, size_t remaining, std::vector<TermPtr>& acc) {
          if (child == ar) {
            if (remaining == 0) out.push_back(TermNode::make_app(sym, acc));
            return;
          }
          size_t left = ar - child - 1;
          for (size_t s = 1; s + left <= remaining; ++s) {
            std::vector<TermPtr> sub;
            terms_of_size(sig, s, var_budget, sub);
            for (auto& t : sub) {
              acc.push_back(t);
              rec(child + 1, remaining - s, acc);
              acc.pop_back();
            }
          }
        };
    std::vector<TermPtr> acc;
    rec(0, size - 1, acc);
  }
}

}  // namespace

CloneAlgebra term_clone_algebra(const Signature& sig, size_t var_budget) {
  CloneAlgebra c;
  std::string signame;
  for (const auto& [sym, ar] : sig.ops) signame += sym + ":" + std::to_string(ar) + ",";
  c.name = "term(" + signame + ")";
  c.tag = carrier_tag(c.name);
  CarrierTag tag = c.tag;
  Signature s = sig;
  c.stream = [s, var_budget, tag](size_t budget, uint64_t) {
    StreamResult r;
    r.exhaustive = false;
    for (size_t size = 1; r.elems.size() < budget && size <= 6; ++size) {
      std::vector<TermPtr> ts;
      terms_of_size(s, size, var_budget, ts);
      for (auto& t : ts) {
        if (r.elems.size() >= budget) break;
        r.elems.push_back(Element::term(std::move(t), tag));
      }
    }
    return r;
  };
  c.e = [tag](size_t n) {
    return Element::term(TermNode::make_var(static_cast<int32_t>(n)), tag);
  };
  c.q = [tag](const Element& a, std::span<const Element> bs) {
    std::vector<TermPtr> subs;
    subs.reserve(bs.size());
    for (const Element& b : bs) subs.push_back(b.as_term());
    return Element::term(substitute(a.as_term(), subs), tag);
  };
  c.dim_cert = [](const Element& a) -> std::optional<size_t> {
    return max_var_index(a.as_term());
  };
  return c;
}

FinOp omega_op_q(const FinOp& f, std::span<const FinOp> psis) {
  size_t n = psis.size();
  uint8_t k = f.arity;
  for (const FinOp& p : psis) {
    if (p.domain != f.domain) throw Error(Errc::ArityMismatch, "mixed domains in q");
    k = std::max(k, p.arity);
  }
  k = std::max<uint8_t>(k, static_cast<uint8_t>(n));
  FinOp fp = f.padded(k);
  std::vector<FinOp> gs;
  gs.reserve(n);
  for (const FinOp& p : psis) gs.push_back(p.padded(k));
  FinOp h{f.domain, k, std::vector<uint8_t>(FinOp::table_size(f.domain, k), 0)};
  std::vector<uint8_t> args(k, 0), mid(k, 0);
  for (size_t idx = 0; idx < h.table.size(); ++idx) {
    size_t rem = idx;
    for (int i = k - 1; i >= 0; --i) {
      args[i] = static_cast<uint8_t>(rem % f.domain);
      rem /= f.domain;
    }
    for (size_t i = 0; i < k; ++i) mid[i] = i < n ? gs[i].eval(args) : args[i];
    h.table[idx] = fp.eval(mid);
  }
  return h.normalized();
}

bool independent(const CloneAlgebra& c, const Element& a, size_t n) {
  std::vector<Element> args;
  args.reserve(n + 1);
  for (size_t i = 0; i < n; ++i) args.push_back(c.e(i));
  args.push_back(c.e(n + 1));
  return c.q(a, args) == a;
}

std::string Dimension::to_string() const {
  switch (kind) {
    case Kind::Exact: return std::to_string(value);
    case Kind::Bounded: return std::to_string(value) + " (scan up to bound)";
    case Kind::Omega: return "omega";
    case Kind::Unknown: return "unknown(bound " + std::to_string(value) + ")";
  }
  return "?";
}

Dimension dimension_ca(const CloneAlgebra& c, const Element& a, size_t bound) {
  if (c.dim_cert) {
    if (auto d = c.dim_cert(a)) return Dimension{Dimension::Kind::Exact, *d};
  }
  // scan for the highest dependence below the bound; without one there is
  // no anchor separating dimension 0 from dimension beyond the bound
  for (size_t k = bound + 1; k-- > 0;) {
    if (!independent(c, a, k)) {
      if (k + 1 > bound) return Dimension{Dimension::Kind::Unknown, bound};
      return Dimension{Dimension::Kind::Bounded, k + 1};
    }
  }
  return Dimension{Dimension::Kind::Unknown, bound};
}

CloneAlgebra fin_subalgebra(const CloneAlgebra& c, size_t bound) {
  CloneAlgebra f = c;
  f.name = c.name + "|fin";
  Stream inner = c.stream;
  auto cert = c.dim_cert;
  f.stream = [inner, cert, bound](size_t budget, uint64_t seed) {
    StreamResult r = inner(budget, seed);
    std::vector<Element> keep;
    for (Element& e : r.elems) {
      std::optional<size_t> d;
      if (cert) d = cert(e);
      if (d && *d <= bound) keep.push_back(std::move(e));
    }
    r.elems = std::move(keep);
    return r;
  };
  return f;
}

}  // namespace clonoid

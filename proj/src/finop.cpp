#include "clonoid/finop.hpp"

#include <algorithm>
#include <sstream>

namespace clonoid {

size_t FinOp::table_size(uint8_t domain, uint8_t arity) {
  size_t n = 1;
  for (uint8_t i = 0; i < arity; ++i) n *= domain;
  return n;
}

FinOp FinOp::projection(uint8_t domain, uint8_t arity, uint8_t i) {
  if (i >= arity) throw Error(Errc::ArityMismatch, "projection index out of range");
  FinOp f{domain, arity, std::vector<uint8_t>(table_size(domain, arity), 0)};
  size_t block = 1;
  for (uint8_t j = static_cast<uint8_t>(arity - 1); j > i; --j) block *= domain;
  for (size_t idx = 0; idx < f.table.size(); ++idx)
    f.table[idx] = static_cast<uint8_t>((idx / block) % domain);
  return f;
}

FinOp FinOp::constant(uint8_t domain, uint8_t arity, uint8_t v) {
  return FinOp{domain, arity, std::vector<uint8_t>(table_size(domain, arity), v)};
}

uint8_t FinOp::eval(std::span<const uint8_t> args) const {
  if (args.size() < arity) throw Error(Errc::ArityMismatch, "too few arguments");
  size_t idx = 0;
  for (uint8_t i = 0; i < arity; ++i) idx = idx * domain + args[i];
  return table[idx];
}

bool FinOp::depends_on(uint8_t coord) const {
  if (coord >= arity) return false;
  size_t block = 1;
  for (uint8_t j = static_cast<uint8_t>(arity - 1); j > coord; --j) block *= domain;
  // iterate tuples with coordinate `coord` = 0 and compare against variants
  for (size_t idx = 0; idx < table.size(); ++idx) {
    if ((idx / block) % domain != 0) continue;
    for (uint8_t v = 1; v < domain; ++v)
      if (table[idx] != table[idx + block * v]) return true;
  }
  return false;
}

uint8_t FinOp::essential_arity() const {
  for (int i = arity - 1; i >= 0; --i)
    if (depends_on(static_cast<uint8_t>(i))) return static_cast<uint8_t>(i + 1);
  return 0;
}

FinOp FinOp::normalized() const {
  uint8_t ea = essential_arity();
  if (ea == arity) return *this;
  FinOp g{domain, ea, std::vector<uint8_t>(table_size(domain, ea), 0)};
  std::vector<uint8_t> args(arity, 0);
  for (size_t idx = 0; idx < g.table.size(); ++idx) {
    size_t rem = idx;
    for (int i = ea - 1; i >= 0; --i) {
      args[i] = static_cast<uint8_t>(rem % domain);
      rem /= domain;
    }
    g.table[idx] = eval(args);
  }
  return g;
}

FinOp FinOp::padded(uint8_t new_arity) const {
  if (new_arity < arity) throw Error(Errc::ArityMismatch, "cannot shrink by padding");
  if (new_arity == arity) return *this;
  FinOp g{domain, new_arity, std::vector<uint8_t>(table_size(domain, new_arity), 0)};
  std::vector<uint8_t> args(new_arity, 0);
  for (size_t idx = 0; idx < g.table.size(); ++idx) {
    size_t rem = idx;
    for (int i = new_arity - 1; i >= 0; --i) {
      args[i] = static_cast<uint8_t>(rem % domain);
      rem /= domain;
    }
    g.table[idx] = eval(args);
  }
  return g;
}

int FinOp::compare(const FinOp& o) const {
  if (domain != o.domain) return domain < o.domain ? -1 : 1;
  if (arity != o.arity) return arity < o.arity ? -1 : 1;
  if (table != o.table) return table < o.table ? -1 : 1;
  return 0;
}

size_t FinOp::hash() const {
  size_t h = hash_combine(domain, arity);
  for (uint8_t v : table) h = hash_combine(h, v + 0x9e);
  return h;
}

std::string FinOp::repr() const {
  std::ostringstream os;
  os << "op/" << int(arity) << ":[";
  for (size_t i = 0; i < table.size(); ++i) {
    if (i) os << ",";
    os << int(table[i]);
  }
  os << "]";
  return os.str();
}

FinOp compose(const FinOp& f, std::span<const FinOp> gs) {
  if (gs.size() != f.arity) throw Error(Errc::ArityMismatch, "composition needs arity(f) inner ops");
  uint8_t k = gs.empty() ? 0 : gs[0].arity;
  for (const FinOp& g : gs) {
    if (g.domain != f.domain) throw Error(Errc::ArityMismatch, "mixed domains in composition");
    if (g.arity != k) throw Error(Errc::ArityMismatch, "inner ops must share arity");
  }
  FinOp h{f.domain, k, std::vector<uint8_t>(FinOp::table_size(f.domain, k), 0)};
  std::vector<uint8_t> args(k, 0), mid(f.arity, 0);
  for (size_t idx = 0; idx < h.table.size(); ++idx) {
    size_t rem = idx;
    for (int i = k - 1; i >= 0; --i) {
      args[i] = static_cast<uint8_t>(rem % f.domain);
      rem /= f.domain;
    }
    for (uint8_t j = 0; j < f.arity; ++j) mid[j] = gs[j].eval(args);
    h.table[idx] = f.eval(mid);
  }
  return h;
}

FinOp builtin_finop(const std::string& name, uint8_t domain) {
  if (domain == 2) {
    if (name == "and") return FinOp{2, 2, {0, 0, 0, 1}};
    if (name == "or") return FinOp{2, 2, {0, 1, 1, 1}};
    if (name == "xor") return FinOp{2, 2, {0, 1, 1, 0}};
    if (name == "nand") return FinOp{2, 2, {1, 1, 1, 0}};
    if (name == "not") return FinOp{2, 1, {1, 0}};
    if (name == "maj") return FinOp{2, 3, {0, 0, 0, 1, 0, 1, 1, 1}};
  }
  if (name == "id") return FinOp::projection(domain, 1, 0);
  if (name.size() > 1 && name[0] == 'c') {
    int v = std::stoi(name.substr(1));
    if (v >= 0 && v < domain) return FinOp::constant(domain, 0, static_cast<uint8_t>(v));
  }
  throw Error(Errc::ParseError, "unknown operation name '" + name + "'");
}

}  // namespace clonoid

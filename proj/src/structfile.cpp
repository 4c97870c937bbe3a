#include "clonoid/structfile.hpp"

#include <algorithm>
#include <sstream>

#include "clonoid/translate.hpp"

namespace clonoid {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

size_t get_num(const StructBlock& b, const std::string& key, size_t dflt) {
  auto it = b.fields.find(key);
  if (it == b.fields.end()) return dflt;
  try {
    return static_cast<size_t>(std::stoull(it->second));
  } catch (...) {
    fail(b.line, "field '" + key + "' must be a number, got '" + it->second + "'");
  }
}

std::string get_str(const StructBlock& b, const std::string& key,
                    const std::string& dflt = "") {
  auto it = b.fields.find(key);
  return it == b.fields.end() ? dflt : it->second;
}

std::string require(const StructBlock& b, const std::string& key) {
  auto it = b.fields.find(key);
  if (it == b.fields.end()) fail(b.line, "missing required field '" + key + "'");
  return it->second;
}

FinOp parse_finop(const std::string& text, uint8_t domain, size_t line) {
  // `op arity=2 table=[0,0,0,1]`
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head != "op") fail(line, "operation literal must start with 'op'");
  int arity = -1;
  std::vector<uint8_t> table;
  std::string tok;
  while (is >> tok) {
    if (tok.rfind("arity=", 0) == 0) {
      arity = std::stoi(tok.substr(6));
    } else if (tok.rfind("table=[", 0) == 0) {
      std::string body = tok.substr(7);
      if (!body.empty() && body.back() == ']') body.pop_back();
      for (const std::string& v : split(body, ','))
        if (!v.empty()) table.push_back(static_cast<uint8_t>(std::stoi(v)));
    } else {
      fail(line, "unknown token '" + tok + "' in operation literal");
    }
  }
  if (arity < 0) fail(line, "operation literal needs arity=");
  FinOp f{domain, static_cast<uint8_t>(arity), table};
  if (f.table.size() != FinOp::table_size(domain, f.arity))
    fail(line, "table length must be domain^arity");
  for (uint8_t v : f.table)
    if (v >= domain) fail(line, "table value out of domain");
  return f;
}

Element parse_scalar(const std::string& tok, CarrierTag tag, size_t line) {
  try {
    return Element::integer(std::stoll(tok), tag);
  } catch (...) {
    fail(line, "expected an integer element, got '" + tok + "'");
  }
}

// `[a0,a1 | const:X]` or `[a0,a1 | indexed:NAME]`; indexed bases resolve to
// the structure's own canonical base
Element parse_seq_literal(const std::string& text, const CanonicalInfo& info,
                          size_t line) {
  CarrierTag value_tag = info.base->value_tag();
  std::string body = trim(text);
  if (body.empty() || body.front() != '[' || body.back() != ']')
    fail(line, "sequence literal must be [entries | base]");
  body = body.substr(1, body.size() - 2);
  size_t bar = body.rfind('|');
  if (bar == std::string::npos) fail(line, "sequence literal needs '| base'");
  std::string entries = trim(body.substr(0, bar));
  std::string basespec = trim(body.substr(bar + 1));
  BaseSeqPtr base;
  if (basespec.rfind("const:", 0) == 0) {
    base = BaseSeq::constant(parse_scalar(basespec.substr(6), value_tag, line));
    if (base->id() != info.base->id())
      fail(line, "literal base " + base->id() + " does not match the structure base " +
                     info.base->id());
  } else if (basespec.rfind("indexed:", 0) == 0) {
    if (info.base->kind() == BaseSeq::Kind::Constant)
      fail(line, "structure base is constant, literal says indexed");
    base = info.base;
  } else {
    fail(line, "base must be const:X or indexed:NAME");
  }
  std::vector<std::pair<size_t, Element>> ov;
  if (!entries.empty()) {
    auto toks = split(entries, ',');
    for (size_t i = 0; i < toks.size(); ++i)
      ov.emplace_back(i, parse_scalar(toks[i], value_tag, line));
  }
  return Element::seq(OmegaSeq(base, std::move(ov)), info.seq_tag);
}

Structure build_block(const StructFile& file, const StructBlock& b,
                      std::vector<std::string>& chain);

Structure build_input(const StructFile& file, const StructBlock& b,
                      std::vector<std::string>& chain) {
  std::string input = require(b, "input");
  const StructBlock* ib = file.find(input);
  if (!ib) fail(b.line, "unknown input structure '" + input + "'");
  if (std::find(chain.begin(), chain.end(), input) != chain.end())
    fail(b.line, "cyclic input reference through '" + input + "'");
  chain.push_back(input);
  Structure s = build_block(file, *ib, chain);
  chain.pop_back();
  return s;
}

Structure build_block(const StructFile& file, const StructBlock& b,
                      std::vector<std::string>& chain) {
  std::string kind = require(b, "kind");
  std::string ctor = require(b, "constructor");

  if (kind == "merge") {
    size_t carrier = get_num(b, "carrier", 2);
    CarrierTag vt = carrier_tag("fin" + std::to_string(carrier));
    std::vector<Element> pool;
    for (size_t v = 0; v < carrier; ++v)
      pool.push_back(Element::integer(static_cast<int64_t>(v), vt));
    if (ctor == "degenerate") return PointedMergeAlgebra{degenerate_merge(b.name, pool), pool.at(0)};
    if (ctor == "canonical") {
      std::string basespec = get_str(b, "base", "const:0");
      size_t sb = get_num(b, "support_bound", 3);
      BaseSeqPtr base;
      if (basespec.rfind("const:", 0) == 0) {
        int64_t v = std::stoll(basespec.substr(6));
        if (v < 0 || static_cast<size_t>(v) >= carrier) fail(b.line, "base value outside carrier");
        base = BaseSeq::constant(Element::integer(v, vt));
      } else {
        fail(b.line, "canonical merge base must be const:X");
      }
      PointedMergeAlgebra p = pointed_canonical(b.name, base, pool, sb);
      if (auto it = b.fields.find("one"); it != b.fields.end())
        p.one = parse_seq_literal(it->second, *p.alg.canonical, b.line);
      return p;
    }
    fail(b.line, "unknown merge constructor '" + ctor + "'");
  }

  if (kind == "clonealg") {
    if (ctor == "projection") {
      size_t window = get_num(b, "window", 0);
      return window ? projection_algebra(window) : projection_algebra();
    }
    if (ctor == "fca") {
      size_t domain = get_num(b, "domain", 2);
      size_t bound = get_num(b, "arity_bound", 2);
      size_t ecap = get_num(b, "e_cap", 6);
      return fca(static_cast<uint8_t>(domain), static_cast<uint8_t>(bound), ecap);
    }
    if (ctor == "term") {
      Signature sig;
      for (const std::string& spec : split(require(b, "signature"), ',')) {
        size_t colon = spec.find(':');
        if (colon == std::string::npos) fail(b.line, "signature entries are name:arity");
        sig.ops.emplace_back(trim(spec.substr(0, colon)),
                             static_cast<uint32_t>(std::stoul(spec.substr(colon + 1))));
      }
      return term_clone_algebra(sig, get_num(b, "var_budget", 4));
    }
    if (ctor == "cm_to_ca") {
      Structure in = build_input(file, b, chain);
      const MMonoid* m = std::get_if<MMonoid>(&in);
      if (!m) fail(b.line, "cm_to_ca needs an mmonoid input");
      return cm_to_ca(*m, get_num(b, "presume_cm", 0) != 0);
    }
    if (ctor == "ac_to_ca") {
      Structure in = build_input(file, b, chain);
      const AbstractClone* a = std::get_if<AbstractClone>(&in);
      if (!a) fail(b.line, "ac_to_ca needs an absclone input");
      return ac_to_ca(*a, get_num(b, "sort_bound", 3));
    }
    fail(b.line, "unknown clonealg constructor '" + ctor + "'");
  }

  if (kind == "mmonoid") {
    if (ctor == "ca_to_cm") {
      Structure in = build_input(file, b, chain);
      const CloneAlgebra* c = std::get_if<CloneAlgebra>(&in);
      if (!c) fail(b.line, "ca_to_cm needs a clonealg input");
      return ca_to_cm(*c, get_num(b, "support_bound", 3), get_num(b, "value_budget", 4));
    }
    if (ctor == "left_zero") {
      Structure in = build_input(file, b, chain);
      const PointedMergeAlgebra* p = std::get_if<PointedMergeAlgebra>(&in);
      if (!p) fail(b.line, "left_zero needs a merge input");
      return left_zero(b.name, *p);
    }
    if (ctor == "product") {
      NamedMonoid tail = builtin_monoid(require(b, "monoid"));
      std::vector<NamedMonoid> prefix;
      for (const std::string& id : split(get_str(b, "prefix"), ','))
        if (!id.empty()) prefix.push_back(builtin_monoid(id));
      return product_mmonoid(b.name, std::move(prefix), std::move(tail),
                             get_num(b, "support_bound", 3));
    }
    if (ctor == "arith") return arith_am(get_num(b, "value_cap", 10000));
    if (ctor == "degenerate")
      return degenerate_mmonoid(b.name, builtin_monoid(require(b, "monoid")));
    if (ctor == "oplus") {
      Structure in = build_input(file, b, chain);
      const MMonoid* m = std::get_if<MMonoid>(&in);
      if (!m) fail(b.line, "oplus needs an mmonoid input");
      return oplus(*m);
    }
    if (ctor == "endofunction") {
      Structure in = build_input(file, b, chain);
      const PointedMergeAlgebra* p = std::get_if<PointedMergeAlgebra>(&in);
      if (!p) fail(b.line, "endofunction needs a merge input");
      return endofunction_cm(b.name, p->alg);
    }
    if (ctor == "fdim_endo")
      return fdim_endo_cm(static_cast<uint8_t>(get_num(b, "domain", 2)),
                          static_cast<uint8_t>(get_num(b, "arity_bound", 2)),
                          get_num(b, "support_bound", 2));
    if (ctor == "pica_to_ecm") {
      Structure in = build_input(file, b, chain);
      const Pica* p = std::get_if<Pica>(&in);
      if (!p) fail(b.line, "pica_to_ecm needs a pica input");
      return pica_to_ecm(*p, get_num(b, "support_bound", 3), get_num(b, "value_budget", 64));
    }
    fail(b.line, "unknown mmonoid constructor '" + ctor + "'");
  }

  if (kind == "absclone") {
    if (ctor == "clone_gen") {
      size_t domain = get_num(b, "domain", 2);
      std::vector<FinOp> gens;
      for (const std::string& g : split(get_str(b, "gens"), ','))
        if (!g.empty()) gens.push_back(builtin_finop(g, static_cast<uint8_t>(domain)));
      for (const auto& [k, v] : b.fields)
        if (k.rfind("gen", 0) == 0 && k != "gens")
          gens.push_back(parse_finop(v, static_cast<uint8_t>(domain), b.line));
      return as_abstract(clone_generate(static_cast<uint8_t>(domain), gens,
                                        get_num(b, "max_arity", 3)));
    }
    if (ctor == "ca_to_ac") {
      Structure in = build_input(file, b, chain);
      const CloneAlgebra* c = std::get_if<CloneAlgebra>(&in);
      if (!c) fail(b.line, "ca_to_ac needs a clonealg input");
      return ca_to_ac(*c, get_num(b, "arity_bound", 3));
    }
    fail(b.line, "unknown absclone constructor '" + ctor + "'");
  }

  if (kind == "pica") {
    if (ctor == "pica_from_ca") {
      Structure in = build_input(file, b, chain);
      const CloneAlgebra* c = std::get_if<CloneAlgebra>(&in);
      if (!c) fail(b.line, "pica_from_ca needs a clonealg input");
      return pica_from_ca(*c, get_num(b, "support_bound", 3), get_num(b, "value_budget", 8));
    }
    if (ctor == "quantale") {
      std::string id = get_str(b, "quantale", "bool");
      Quantale q;
      if (id == "bool") {
        q = boolean_quantale();
      } else if (id == "inline") {
        q.id = b.name;
        q.size = static_cast<uint8_t>(get_num(b, "elements", 2));
        q.unit = static_cast<uint8_t>(get_num(b, "unit", 1));
        q.bottom = static_cast<uint8_t>(get_num(b, "bottom", 0));
        for (const std::string& v : split(require(b, "join"), ','))
          q.join.push_back(static_cast<uint8_t>(std::stoi(v)));
        for (const std::string& v : split(require(b, "dot"), ','))
          q.dot.push_back(static_cast<uint8_t>(std::stoi(v)));
      } else {
        fail(b.line, "quantale must be 'bool' or 'inline'");
      }
      return quantale_pica(q, get_num(b, "support_bound", 3));
    }
    if (ctor == "ecm_to_pica") {
      Structure in = build_input(file, b, chain);
      const MMonoid* m = std::get_if<MMonoid>(&in);
      if (!m) fail(b.line, "ecm_to_pica needs an mmonoid input");
      TestDomain dom;
      dom.element_budget = get_num(b, "gate_budget", 48);
      return ecm_to_pica(*m, dom, get_num(b, "support_bound", 3));
    }
    fail(b.line, "unknown pica constructor '" + ctor + "'");
  }

  fail(b.line, "unknown kind '" + kind + "'");
}

}  // namespace

const StructBlock* StructFile::find(const std::string& name) const {
  for (const StructBlock& b : blocks)
    if (b.name == name) return &b;
  return nullptr;
}

StructFile parse_struct_file(const std::string& text) {
  StructFile out;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  StructBlock* cur = nullptr;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "[structure]") {
      out.blocks.push_back(StructBlock{});
      out.blocks.back().line = lineno;
      cur = &out.blocks.back();
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    if (!cur) fail(lineno, "field outside a [structure] block");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key.empty()) fail(lineno, "empty key");
    if (key == "name")
      cur->name = val;
    else
      cur->fields[key] = val;
  }
  if (out.blocks.empty()) fail(lineno ? lineno : 1, "no [structure] block found");
  for (const StructBlock& b : out.blocks)
    if (b.name.empty()) fail(b.line, "block has no name");
  return out;
}

Structure build_structure(const StructFile& file, const std::string& name) {
  const StructBlock* b = name.empty() ? &file.blocks.front() : file.find(name);
  if (!b) throw Error(Errc::ParseError, "no structure named '" + name + "'");
  std::vector<std::string> chain{b->name};
  return build_block(file, *b, chain);
}

Element parse_element(const Structure& s, const std::string& literal) {
  std::string t = trim(literal);
  if (t.rfind("op ", 0) == 0) {
    uint8_t domain = 2;
    if (const auto* c = std::get_if<CloneAlgebra>(&s)) {
      // domain from the carrier of e_0 when it is a table
      Element e0 = c->e(0);
      if (e0.kind() == Element::Kind::Op) domain = e0.as_op().domain;
      return Element::op(parse_finop(t, domain, 0).normalized(), e0.tag());
    }
    return Element::op(parse_finop(t, domain, 0).normalized(), carrier_tag("op(2)"));
  }
  if (!t.empty() && t.front() == '[') {
    const MMonoid* m = std::get_if<MMonoid>(&s);
    const PointedMergeAlgebra* p = std::get_if<PointedMergeAlgebra>(&s);
    const CanonicalInfo* info = nullptr;
    if (m && m->pm.alg.canonical) info = &*m->pm.alg.canonical;
    if (p && p->alg.canonical) info = &*p->alg.canonical;
    if (!info) throw Error(Errc::ParseError, "sequence literal needs a canonical structure");
    return parse_seq_literal(t, *info, 0);
  }
  // plain integer against the structure's element carrier
  int64_t v = 0;
  try {
    v = std::stoll(t);
  } catch (...) {
    throw Error(Errc::ParseError, "cannot parse element literal '" + t + "'");
  }
  if (const auto* c = std::get_if<CloneAlgebra>(&s)) return Element::integer(v, c->tag);
  if (const auto* m = std::get_if<MMonoid>(&s)) {
    if (m->pm.one.kind() == Element::Kind::Big) return Element::big(BigInt(v), m->pm.one.tag());
    return Element::integer(v, m->pm.one.tag());
  }
  if (const auto* pica = std::get_if<Pica>(&s)) return Element::integer(v, pica->tag);
  return Element::integer(v, carrier_tag("nat"));
}

std::string write_struct_file(const StructFile& file) {
  std::ostringstream os;
  for (const StructBlock& b : file.blocks) {
    os << "[structure]\n";
    os << "name = " << b.name << "\n";
    for (const auto& [k, v] : b.fields) os << k << " = " << v << "\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace clonoid

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "clonoid/checker.hpp"
#include "clonoid/structfile.hpp"
#include "clonoid/translate.hpp"

using namespace clonoid;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const ordered_json& j, const std::string& out_path, bool pretty) {
  std::string text = pretty ? j.dump(2) : j.dump();
  text += "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

std::string pretty_table(const checker::Report& rep) {
  std::ostringstream os;
  os << "structure: " << rep.structure << "\n";
  os << "suite:     " << checker::suite_name(rep.suite) << "\n";
  os << "elements:  " << (rep.elements_exhaustive ? "exhaustive" : "sampled") << "\n";
  for (const auto& l : rep.laws) {
    const char* v = l.verdict == checker::VerdictKind::Fail ? "FAIL"
                    : l.verdict == checker::VerdictKind::PassExhaustive ? "pass_exhaustive"
                                                                        : "pass_sampled";
    os << "  " << l.name;
    for (size_t i = l.name.size(); i < 28; ++i) os << ' ';
    os << v << "  checked=" << l.checked
       << (l.full_product ? "" : " (sampled tuples)") << "\n";
    if (l.verdict == checker::VerdictKind::Fail)
      os << "    witness: " << l.witness.dump() << "\n";
  }
  return os.str();
}

struct CommonOpts {
  std::string file;
  std::string name;
  std::string out;
  bool pretty = false;
  TestDomain dom;
};

void add_domain_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget", o.dom.element_budget, "element budget");
  cmd->add_option("--index-bound", o.dom.index_bound, "bound for n,k,m indices");
  cmd->add_option("--perm-bound", o.dom.perm_bound, "permutation domain bound");
  cmd->add_option("--seed", o.dom.seed, "assignment stream seed");
  cmd->add_option("--assignment-budget", o.dom.assignment_budget,
                  "per-law-instance tuple cap");
  cmd->add_option("--out", o.out, "write output to a file");
  cmd->add_flag("--pretty", o.pretty, "human-readable output");
  cmd->add_option("--name", o.name, "structure block to build (default: first)");
}

Structure load(const CommonOpts& o) {
  StructFile f = parse_struct_file(slurp(o.file));
  return build_structure(f, o.name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clonoid: bounded equational workbench for clone-like structures"};
  app.require_subcommand(1);

  CommonOpts check_o;
  std::string suite_name_s = "MERGE_B";
  bool timings = false;
  auto* check_cmd = app.add_subcommand("check", "run an axiom suite over a structure file");
  check_cmd->add_option("file", check_o.file, "structure file")->required();
  check_cmd->add_option("--suite", suite_name_s, "suite id")->required();
  check_cmd->add_flag("--timings", timings, "include wall_ms in the report");
  add_domain_flags(check_cmd, check_o);

  CommonOpts tr_o;
  std::string tr_from = "ca", tr_to = "cm";
  auto* tr_cmd = app.add_subcommand("translate", "apply a construction and emit a structure file");
  tr_cmd->add_option("--from", tr_from, "source kind: ca|cm|pica|ecm|ac")->required();
  tr_cmd->add_option("--to", tr_to, "target kind: cm|ca|ecm|pica|ca_from_ac")->required();
  tr_cmd->add_option("--input", tr_o.file, "structure file")->required();
  add_domain_flags(tr_cmd, tr_o);

  CommonOpts rt_o;
  std::string rt_kind = "ca_cm";
  auto* rt_cmd = app.add_subcommand("roundtrip", "verify round-trip isomorphisms and triangular identities");
  rt_cmd->add_option("--kind", rt_kind, "ca_cm | cm_ca | ac_ca")->required();
  rt_cmd->add_option("--input", rt_o.file, "structure file")->required();
  add_domain_flags(rt_cmd, rt_o);

  CommonOpts cl_o;
  auto* cl_cmd = app.add_subcommand("classify", "type classification of a pointed merge algebra / m-monoid");
  cl_cmd->add_option("file", cl_o.file, "structure file")->required();
  add_domain_flags(cl_cmd, cl_o);

  CommonOpts dim_o;
  std::string dim_element;
  std::string dim_mode = "ca";
  size_t dim_n = 2, dim_m = 2;
  auto* dim_cmd = app.add_subcommand("dim", "dimension of an element (clone algebra) or D/D_omega predicate (m-monoid)");
  dim_cmd->add_option("file", dim_o.file, "structure file")->required();
  dim_cmd->add_option("--element", dim_element, "element literal")->required();
  dim_cmd->add_option("--mode", dim_mode, "ca | D | Domega");
  dim_cmd->add_option("--n", dim_n, "n for D/Domega");
  dim_cmd->add_option("--m", dim_m, "m for D/Domega");
  add_domain_flags(dim_cmd, dim_o);

  CommonOpts rank_o;
  std::string rank_element;
  size_t rank_bound = 8;
  auto* rank_cmd = app.add_subcommand("rank", "least n with x_{<n} = x, bounded search");
  rank_cmd->add_option("file", rank_o.file, "structure file")->required();
  rank_cmd->add_option("--element", rank_element, "element literal")->required();
  rank_cmd->add_option("--bound", rank_bound, "search bound");
  add_domain_flags(rank_cmd, rank_o);

  auto* clone_cmd = app.add_subcommand("clone", "concrete clone utilities");
  clone_cmd->require_subcommand(1);
  size_t cg_domain = 2, cg_max_arity = 3;
  std::string cg_gens;
  std::string cg_out;
  bool cg_pretty = false, cg_dump = false;
  auto* cg_cmd = clone_cmd->add_subcommand("gen", "generate a clone and report per-arity counts");
  cg_cmd->add_option("--domain", cg_domain, "carrier size");
  cg_cmd->add_option("--gens", cg_gens, "comma-separated generator names")->required();
  cg_cmd->add_option("--max-arity", cg_max_arity, "arity bound");
  cg_cmd->add_option("--out", cg_out, "write output to a file");
  cg_cmd->add_flag("--pretty", cg_pretty, "human-readable output");
  cg_cmd->add_flag("--dump", cg_dump, "include operation tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_cmd) {
      auto suite = checker::suite_from_name(suite_name_s);
      if (!suite) {
        std::cerr << "unknown suite '" << suite_name_s << "'\n";
        return 2;
      }
      Structure s = load(check_o);
      checker::Report rep = checker::check(s, *suite, check_o.dom);
      if (check_o.pretty) {
        std::string text = pretty_table(rep);
        if (check_o.out.empty())
          std::cout << text;
        else
          std::ofstream(check_o.out) << text;
      } else {
        emit(rep.to_json(timings), check_o.out, false);
      }
      return rep.any_fail() ? 1 : 0;
    }

    if (*tr_cmd) {
      StructFile f = parse_struct_file(slurp(tr_o.file));
      const std::string subject = tr_o.name.empty() ? f.blocks.front().name : tr_o.name;
      std::string ctor;
      std::string kind;
      if (tr_from == "ca" && tr_to == "cm") {
        ctor = "ca_to_cm";
        kind = "mmonoid";
      } else if (tr_from == "cm" && tr_to == "ca") {
        ctor = "cm_to_ca";
        kind = "clonealg";
      } else if (tr_from == "pica" && tr_to == "ecm") {
        ctor = "pica_to_ecm";
        kind = "mmonoid";
      } else if (tr_from == "ecm" && tr_to == "pica") {
        ctor = "ecm_to_pica";
        kind = "pica";
      } else if (tr_from == "ca" && tr_to == "ac") {
        ctor = "ca_to_ac";
        kind = "absclone";
      } else if (tr_from == "ac" && tr_to == "ca") {
        ctor = "ac_to_ca";
        kind = "clonealg";
      } else {
        std::cerr << "unsupported translation " << tr_from << " -> " << tr_to << "\n";
        return 2;
      }
      StructBlock head;
      head.name = subject + "_" + ctor;
      head.fields["kind"] = kind;
      head.fields["constructor"] = ctor;
      head.fields["input"] = subject;
      StructFile out;
      out.blocks.push_back(head);
      for (const StructBlock& b : f.blocks) out.blocks.push_back(b);
      // validate by building the derived structure
      build_structure(out, head.name);
      std::string text = write_struct_file(out);
      if (tr_o.out.empty())
        std::cout << text;
      else
        std::ofstream(tr_o.out) << text;
      return 0;
    }

    if (*rt_cmd) {
      Structure s = load(rt_o);
      ordered_json j;
      bool pass = false;
      if (rt_kind == "ca_cm" || rt_kind == "cm_ca") {
        RoundtripVerdict v;
        TriVerdict t;
        if (rt_kind == "ca_cm") {
          const auto* c = std::get_if<CloneAlgebra>(&s);
          if (!c) throw Error(Errc::SignatureMismatch, "ca_cm roundtrip needs a clonealg");
          v = roundtrip_ca(*c, rt_o.dom);
          t = triangular_ca_cm(*c, rt_o.dom);
        } else {
          const auto* m = std::get_if<MMonoid>(&s);
          if (!m) throw Error(Errc::SignatureMismatch, "cm_ca roundtrip needs an mmonoid");
          v = roundtrip_cm(*m, rt_o.dom);
          t.pass = true;
          t.note = "triangular identities are checked from the clone-algebra side";
        }
        pass = v.pass && t.pass;
        j["kind"] = rt_kind;
        j["roundtrip"] = {{"pass", v.pass},
                          {"e_preserved", v.e_preserved},
                          {"q_preserved", v.q_preserved},
                          {"injective", v.injective},
                          {"surjective", v.surjective},
                          {"checked", v.checked},
                          {"note", v.note}};
        j["triangular"] = {{"pass", t.pass}, {"checked", t.checked}, {"note", t.note}};
      } else if (rt_kind == "ac_ca") {
        const auto* b = std::get_if<AbstractClone>(&s);
        if (!b) throw Error(Errc::SignatureMismatch, "ac_ca roundtrip needs an absclone");
        TriVerdict t = triangular_ac_ca(*b, rt_o.dom);
        pass = t.pass;
        j["kind"] = rt_kind;
        j["triangular"] = {{"pass", t.pass}, {"checked", t.checked}, {"note", t.note}};
      } else {
        std::cerr << "unknown roundtrip kind '" << rt_kind << "'\n";
        return 2;
      }
      emit(j, rt_o.out, rt_o.pretty);
      return pass ? 0 : 1;
    }

    if (*cl_cmd) {
      Structure s = load(cl_o);
      TypeVerdict v;
      if (const auto* m = std::get_if<MMonoid>(&s))
        v = classify_type(*m, cl_o.dom);
      else if (const auto* p = std::get_if<PointedMergeAlgebra>(&s))
        v = classify_type(*p, cl_o.dom);
      else
        throw Error(Errc::SignatureMismatch, "classify needs a merge algebra or m-monoid");
      ordered_json j;
      j["structure"] = structure_name(s);
      if (v.type == 0)
        j["type"] = "Unknown";
      else
        j["type"] = v.type;
      j["certified"] = v.certified;
      j["evidence"] = v.evidence;
      if (v.witness) j["witness"] = v.witness->repr();
      if (const auto* m = std::get_if<MMonoid>(&s)) {
        if (v.type == 2) {
          if (auto w = noncomm_witness(*m, cl_o.dom))
            j["noncommutativity_witness"] = {w->first.repr(), w->second.repr()};
        }
      }
      emit(j, cl_o.out, cl_o.pretty);
      return 0;
    }

    if (*dim_cmd) {
      Structure s = load(dim_o);
      ordered_json j;
      if (dim_mode == "ca") {
        const auto* c = std::get_if<CloneAlgebra>(&s);
        if (!c) throw Error(Errc::SignatureMismatch, "--mode ca needs a clone algebra");
        Element a = parse_element(s, dim_element);
        Dimension d = dimension_ca(*c, a, dim_o.dom.index_bound + 4);
        j["element"] = a.repr();
        j["dimension"] = d.to_string();
      } else {
        const auto* m = std::get_if<MMonoid>(&s);
        if (!m) throw Error(Errc::SignatureMismatch, "--mode D/Domega needs an m-monoid");
        Element a = parse_element(s, dim_element);
        DimVerdict v = dim_predicate(*m, a, dim_n, dim_m, dim_mode == "Domega", dim_o.dom);
        j["element"] = a.repr();
        j["predicate"] = dim_mode;
        j["n"] = dim_n;
        j["m"] = dim_m;
        j["holds"] = v.holds;
        j["quantifier"] = v.exhaustive ? "exhaustive" : "sampled";
        if (!v.holds) j["witness"] = v.witness;
      }
      emit(j, dim_o.out, dim_o.pretty);
      return 0;
    }

    if (*rank_cmd) {
      Structure s = load(rank_o);
      const PointedMergeAlgebra* p = nullptr;
      if (const auto* m = std::get_if<MMonoid>(&s)) p = &m->pm;
      if (const auto* pm = std::get_if<PointedMergeAlgebra>(&s)) p = pm;
      if (!p) throw Error(Errc::SignatureMismatch, "rank needs a merge algebra or m-monoid");
      Element x = parse_element(s, rank_element);
      auto r = rank_of(*p, x, rank_bound);
      ordered_json j;
      j["element"] = x.repr();
      if (r)
        j["rank"] = *r;
      else
        j["rank"] = "Unknown(bound " + std::to_string(rank_bound) + ")";
      emit(j, rank_o.out, rank_o.pretty);
      return 0;
    }

    if (*cg_cmd) {
      std::vector<FinOp> gens;
      for (const std::string& g : [&] {
             std::vector<std::string> out;
             std::string cur;
             for (char c : cg_gens) {
               if (c == ',') {
                 out.push_back(cur);
                 cur.clear();
               } else
                 cur += c;
             }
             if (!cur.empty()) out.push_back(cur);
             return out;
           }())
        gens.push_back(builtin_finop(g, static_cast<uint8_t>(cg_domain)));
      ConcreteClone cc = clone_generate(static_cast<uint8_t>(cg_domain), gens, cg_max_arity);
      ordered_json j;
      j["domain"] = cg_domain;
      j["max_arity"] = cg_max_arity;
      ordered_json counts = ordered_json::array();
      for (size_t k = 0; k <= cc.max_arity; ++k) counts.push_back(cc.count(k));
      j["arity_counts"] = counts;
      if (cg_dump) {
        ordered_json ops = ordered_json::array();
        for (size_t k = 0; k <= cc.max_arity; ++k)
          for (const FinOp& f : cc.ops[k]) ops.push_back(f.repr());
        j["ops"] = ops;
      }
      emit(j, cg_out, cg_pretty);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

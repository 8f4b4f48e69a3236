// Command-line verifier for clones on the four-element De Morgan carrier:
// table evaluation, Baker-Pixley membership, invariant relations, clone
// comparison, metalogical classification, closure exploration, the theorem
// suites, and Hasse-diagram emission.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dm4/catalog.hpp"
#include "dm4/clone.hpp"
#include "dm4/invariants.hpp"
#include "dm4/lattice.hpp"
#include "dm4/logic.hpp"
#include "dm4/suites.hpp"
#include "dm4/term.hpp"

namespace {

using namespace dm4;

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  std::string out;
  for (char c : base) {
    if (std::isupper(static_cast<unsigned char>(c))) c = static_cast<char>(std::tolower(c));
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') out += c;
  }
  if (out.empty() || !(out[0] >= 'a' && out[0] <= 'z')) out = "g" + out;
  return out;
}

FnTable load_raw_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string cells;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cells += c;
  int arity = 0;
  for (int n = 1; n <= kMaxArity; ++n)
    if (cells.size() == table_size(n)) arity = n;
  if (!arity) throw std::runtime_error(path + ": length " + std::to_string(cells.size()) +
                                       " is not 4^n for n in 1..6");
  return decode_table(cells, arity);
}

// comma-separated catalog names or @file raw tables; dma/dlat/bilat expand
// to the base generating sets
CloneSpec parse_clone(const std::string& genlist) {
  CloneSpec spec;
  spec.name = genlist;
  spec.base = Base::none;
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= genlist.size()) {
    std::size_t comma = genlist.find(',', pos);
    std::string item = genlist.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) names.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::set<std::string> seen;
  for (const std::string& item : names) {
    std::vector<std::pair<std::string, FnTable>> add;
    if (item == "dma" || item == "dlat" || item == "bilat") {
      Base b = item == "dma" ? Base::dma : item == "dlat" ? Base::dlat : Base::bilat;
      for (const std::string& n : base_generator_names(b)) add.emplace_back(n, catalog_lookup(n));
    } else if (!item.empty() && item[0] == '@') {
      std::string path = item.substr(1);
      add.emplace_back(file_stem(path), load_raw_table(path));
    } else {
      add.emplace_back(item, catalog_lookup(item));
    }
    for (auto& [n, t] : add)
      if (seen.insert(n).second) spec.add(n, std::move(t));
  }
  return spec;
}

FnTable parse_function(const std::string& text, const SymbolEnv& env) {
  if (!text.empty() && text[0] == '@') return load_raw_table(text.substr(1));
  return resolve_function(text, env);
}

void print_table(const FnTable& f, std::ostream& os) {
  os << "arity " << f.arity() << "\n" << encode_table(f) << "\n";
  if (f.arity() == 2) {
    os << "    t f n b\n";
    for (Elem a : kElems) {
      os << "  " << elem_char(a) << " ";
      for (Elem b : kElems) os << " " << elem_char(f.eval({a, b}));
      os << "\n";
    }
  } else if (f.arity() == 1) {
    os << "  t f n b -> ";
    for (Elem a : kElems) os << elem_char(f.eval({a}));
    os << "\n";
  }
}

int exit_code_for(const std::vector<SuiteResult>& results) {
  int fails = 0, inconclusive = 0;
  for (const auto& r : results) {
    fails += r.count(CheckStatus::fail);
    inconclusive += r.count(CheckStatus::inconclusive);
  }
  if (fails) return 1;
  if (inconclusive) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for clones of finitary functions on the De Morgan four-element domain"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "bound worker parallelism (0 = hardware)");

  std::string table_arg;
  auto* cmd_table = app.add_subcommand("table", "print a catalog table or evaluate a term");
  cmd_table->add_option("name", table_arg, "catalog name or term, e.g. meet(x1, conf(x1))")->required();

  std::string m_clone, m_fn, m_majority;
  auto* cmd_member = app.add_subcommand("member", "Baker-Pixley membership test");
  cmd_member->add_option("--clone", m_clone, "generator list")->required();
  cmd_member->add_option("--fn", m_fn, "function: name, term, or @file")->required();
  cmd_member->add_option("--majority", m_majority, "majority witness term when meet/join are absent");

  std::string i_clone;
  auto* cmd_inv2 = app.add_subcommand("inv2", "invariant binary relations of a clone");
  cmd_inv2->add_option("--clone", i_clone, "generator list")->required();

  std::string c_a, c_b;
  auto* cmd_compare = app.add_subcommand("compare", "compare two clones by inclusion");
  cmd_compare->add_option("--a", c_a, "generator list")->required();
  cmd_compare->add_option("--b", c_b, "generator list")->required();

  std::string k_clone;
  auto* cmd_classify = app.add_subcommand("classify", "metalogical classification (above DMA)");
  cmd_classify->add_option("--clone", k_clone, "generator list")->required();

  std::string cl_clone, cl_find;
  int cl_arity = 1;
  std::size_t cl_cap = 0;
  auto* cmd_closure = app.add_subcommand("closure", "fixed-arity clone closure");
  cmd_closure->add_option("--clone", cl_clone, "generator list")->required();
  cmd_closure->add_option("--arity", cl_arity, "arity (1..3)")->required();
  cmd_closure->add_option("--find", cl_find, "stop when this function is reached; print a witness term");
  cmd_closure->add_option("--cap", cl_cap, "table cap (default DM4_CLOSURE_CAP or 5,000,000)");

  std::vector<std::string> v_suites;
  std::string v_json;
  bool v_deep = false, v_timings = false;
  auto* cmd_verify = app.add_subcommand("verify", "run theorem suites");
  cmd_verify->add_option("suites", v_suites, "suite names (default: all)");
  cmd_verify->add_option("--json", v_json, "write the machine-readable report here");
  cmd_verify->add_flag("--deep", v_deep, "run the exhaustive variants of the gated heavy checks");
  cmd_verify->add_flag("--timings", v_timings, "include wall-clock runtimes in the report");

  std::string l_nodes, l_dot, l_json;
  auto* cmd_lattice = app.add_subcommand("lattice", "Hasse diagram of named clones");
  cmd_lattice->add_option("--nodes", l_nodes, "file with lines 'name: genlist'")->required();
  cmd_lattice->add_option("--dot", l_dot, "write DOT here (default stdout)");
  cmd_lattice->add_option("--json", l_json, "write JSON adjacency here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  thread_limit() = threads;

  try {
    if (*cmd_table) {
      FnTable f = parse_function(table_arg, catalog_env());
      print_table(f, std::cout);
      if (auto n = catalog_name_of(f)) std::cout << "catalog name: " << *n << "\n";
      return 0;
    }
    if (*cmd_member) {
      CloneSpec spec = parse_clone(m_clone);
      FnTable f = parse_function(m_fn, spec.env());
      std::optional<Term> maj;
      if (!m_majority.empty()) maj = parse_term(m_majority);
      bool in = member(f, spec, maj);
      std::cout << (in ? "member" : "not a member") << "\n";
      if (!in) {
        auto w = witness_nonmembership(f, spec, maj);
        std::cout << "violated relation: " << w->str() << " (mask 0x" << std::hex << w->mask
                  << std::dec << ")\n";
      } else if (auto ft = find_term(spec, f, {200000, 200'000'000}); ft.term) {
        std::cout << "witness term: " << ft.term->str() << "\n";
      }
      return 0;
    }
    if (*cmd_inv2) {
      CloneSpec spec = parse_clone(i_clone);
      auto fp = inv2(spec);
      std::cout << fp->relations.size() << " invariant relations ("
                << fp->core.size() << " intersection-irreducible)\n";
      for (BinaryRelation16 r : fp->relations)
        std::cout << "0x" << std::hex << r.mask << std::dec << "  " << r.str() << "\n";
      return 0;
    }
    if (*cmd_compare) {
      CloneSpec a = parse_clone(c_a), b = parse_clone(c_b);
      bool ab = clone_leq(a, b), ba = clone_leq(b, a);
      std::cout << (ab && ba ? "equal" : ab ? "a < b" : ba ? "b < a" : "incomparable") << "\n";
      return 0;
    }
    if (*cmd_classify) {
      CloneSpec spec = parse_clone(k_clone);
      ClassificationRecord r = classify(spec);
      auto line = [](const char* k, bool v, const std::string& w) {
        std::cout << k << ": " << (v ? "yes" : "no");
        if (!w.empty()) std::cout << " (" << w << ")";
        std::cout << "\n";
      };
      line("protoalgebraic", r.protoalgebraic, r.protoalgebraic_witness);
      line("equivalential", r.equivalential, r.protoalgebraic_witness);
      line("truth-equational", r.truth_equational, r.truth_equational_witness);
      line("algebraizable", r.algebraizable, r.algebraizable_witness);
      line("selfextensional", r.selfextensional,
           r.selfextensional ? "" : "non-harmonious generator " + r.selfextensional_counterexample);
      return 0;
    }
    if (*cmd_closure) {
      CloneSpec spec = parse_clone(cl_clone);
      ClosureOptions opt;
      opt.cap = cl_cap ? cl_cap : default_closure_cap();
      if (!cl_find.empty()) {
        FnTable target = parse_function(cl_find, spec.env());
        auto r = find_term(spec, target, opt);
        if (r.term) {
          std::cout << "found: " << r.term->str() << "\n";
          return 0;
        }
        std::cout << (r.exhausted ? "not found (cap exhausted)" : "absent") << "\n";
        return r.exhausted ? 3 : 0;
      }
      ClosureResult r = closure_fixed_arity(spec, cl_arity, opt);
      std::cout << r.count() << " tables at arity " << cl_arity
                << (r.exhausted ? " (cap exhausted, partial)" : " (complete)") << "\n";
      if (r.count() <= 64)
        for (std::size_t i = 0; i < r.count(); ++i)
          std::cout << encode_table(r.table(i)) << "  " << r.term_for(i).str() << "\n";
      return 0;
    }
    if (*cmd_lattice) {
      std::ifstream in(l_nodes);
      if (!in) throw std::runtime_error("cannot open " + l_nodes);
      std::vector<CloneSpec> specs;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad node line: " + line);
        CloneSpec s = parse_clone(line.substr(colon + 1).erase(0, line.substr(colon + 1).find_first_not_of(" \t")));
        s.name = line.substr(0, colon);
        specs.push_back(std::move(s));
      }
      LatticeDescription d = compute_lattice(specs);
      std::string dot = lattice_dot(d);
      if (l_dot.empty()) {
        std::cout << dot;
      } else {
        std::ofstream(l_dot) << dot;
      }
      if (!l_json.empty()) std::ofstream(l_json) << lattice_json(d) << "\n";
      return 0;
    }
    if (*cmd_verify) {
      RunOptions opt;
      opt.deep = v_deep;
      opt.timings = v_timings;
      std::vector<std::string> names = v_suites.empty() ? suites::suite_names() : v_suites;
      std::vector<SuiteResult> results;
      for (const std::string& name : names) {
        SuiteResult r = suites::run_suite(name, opt);
        for (const auto& c : r.checks) {
          std::cout << "[" << status_name(c.status) << "] " << r.suite << "/" << c.id;
          if (!c.detail.empty()) std::cout << "  -- " << c.detail;
          std::cout << "\n";
        }
        std::cout << r.suite << ": " << r.count(CheckStatus::pass) << " pass, "
                  << r.count(CheckStatus::fail) << " fail, " << r.count(CheckStatus::skip)
                  << " skip, " << r.count(CheckStatus::inconclusive) << " inconclusive\n";
        results.push_back(std::move(r));
      }
      if (!v_json.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back(suite_json(r));
        std::ofstream(v_json) << arr.dump(2) << "\n";
      }
      return exit_code_for(results);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

// Command-line front door for the clasper workbench.  Subcommands read JSON
// payloads (inline, from a file, or "-" for stdin) and print text or JSON.
// Exit codes: 0 success, 1 domain error, 2 malformed input.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cwb/braid.hpp"
#include "cwb/clasper.hpp"
#include "cwb/diagram.hpp"
#include "cwb/json_io.hpp"
#include "cwb/magnus.hpp"
#include "cwb/pd.hpp"
#include "cwb/verify.hpp"

using nlohmann::json;

namespace {

// option values may be inline JSON, a file path, or "-" for stdin
std::string load_payload(const std::string& s) {
  if (s == "-") return cwb::read_file_or_stdin(s);
  size_t i = s.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (s[i] == '{' || s[i] == '[')) return s;
  return cwb::read_file_or_stdin(s);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw cwb::JsonError("not an integer list: " + s);
    }
  }
  return out;
}

std::vector<cwb::SkelKind> parse_skeleton(const std::string& s) {
  std::vector<cwb::SkelKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "circle")
      out.push_back(cwb::SkelKind::Circle);
    else if (item == "interval")
      out.push_back(cwb::SkelKind::Interval);
    else
      throw cwb::JsonError("unknown skeleton component: " + item);
  }
  if (out.empty()) throw cwb::JsonError("empty skeleton");
  return out;
}

std::string poly_text(const std::vector<long long>& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial clasper workbench"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "structured JSON output");

  int exit_code = 0;

  // ---- clasper graphs ----
  {
    auto* c = app.add_subcommand("validate-clasper", "check a clasper graph");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in, "clasper JSON (inline, file, or -)")->required();
    c->callback([&, in] {
      cwb::ClasperGraph g = cwb::clasper_from_json(load_payload(*in));
      cwb::ValidationReport rep = cwb::validate_clasper(g);
      if (json_out) {
        json j{{"ok", rep.ok}, {"violations", rep.violations}};
        std::cout << j.dump(2) << "\n";
      } else if (rep.ok) {
        std::cout << "valid\n";
      } else {
        for (const auto& v : rep.violations) std::cout << v << "\n";
      }
      if (!rep.ok) exit_code = 1;
    });
  }
  {
    auto* c = app.add_subcommand("zip", "resolve marked boxes");
    auto in = std::make_shared<std::string>();
    auto mk = std::make_shared<std::string>("[]");
    c->add_option("--in", *in, "clasper JSON")->required();
    c->add_option("--marking", *mk, "marking JSON: array of [box, input slot]");
    c->callback([&, in, mk] {
      cwb::ClasperGraph g = cwb::clasper_from_json(load_payload(*in));
      cwb::Marking m = cwb::marking_from_json(load_payload(*mk));
      auto diags = cwb::check_marking(g, m);
      if (!diags.empty()) throw std::domain_error(diags[0]);
      cwb::ZipResult res = cwb::zip(g, m);
      if (json_out) {
        json j{{"format", "zip.v1"},
               {"steps", res.steps},
               {"graph", json::parse(cwb::clasper_to_json(res.graph))}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << cwb::clasper_to_json(res.graph);
      }
    });
  }
  {
    auto* c = app.add_subcommand("classify", "classify clasper components");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in, "clasper JSON")->required();
    c->callback([&, in] {
      cwb::ClasperGraph g = cwb::clasper_from_json(load_payload(*in));
      cwb::ForestClass fc = cwb::classify_forest(g);
      if (json_out) {
        json comps = json::array();
        for (const auto& t : fc.components) {
          json one{{"tree", t.is_tree},
                   {"admissible", t.is_admissible},
                   {"strict", t.is_strict},
                   {"simple", t.is_simple}};
          one["degree"] = t.degree ? json(*t.degree) : json(nullptr);
          comps.push_back(one);
        }
        json j{{"components", comps}};
        j["forest_degree"] =
            fc.forest_degree ? json(*fc.forest_degree) : json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        for (size_t i = 0; i < fc.components.size(); ++i) {
          const auto& t = fc.components[i];
          std::cout << "component " << i << ":";
          if (!t.is_tree) {
            std::cout << " not a tree\n";
            continue;
          }
          if (t.is_simple)
            std::cout << " simple strict tree";
          else if (t.is_strict)
            std::cout << " strict tree";
          else if (t.is_admissible)
            std::cout << " admissible tree";
          else
            std::cout << " tree";
          if (t.degree) std::cout << ", degree " << *t.degree;
          std::cout << "\n";
        }
        if (fc.forest_degree)
          std::cout << "forest degree " << *fc.forest_degree << "\n";
      }
    });
  }
  {
    auto* c = app.add_subcommand("degrees", "whole-graph degree bookkeeping");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in, "clasper JSON")->required();
    c->callback([&, in] {
      cwb::ClasperGraph g = cwb::clasper_from_json(load_payload(*in));
      cwb::GraphDegrees d = cwb::graph_degrees(g);
      if (json_out) {
        json j{{"a_degree", d.a_degree}, {"s_twice", d.s_twice}};
        j["strict_degree"] =
            d.strict_degree ? json(*d.strict_degree) : json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "a-degree " << d.a_degree << "\n";
        std::cout << "twice s-degree " << d.s_twice << "\n";
        if (d.strict_degree)
          std::cout << "strict degree " << *d.strict_degree << "\n";
        else
          std::cout << "strict degree undefined (plain leaves present)\n";
      }
    });
  }

  // ---- braids ----
  {
    auto* c = app.add_subcommand("braid-compose", "concatenate two braids");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    c->add_option("--a", *a, "braid JSON")->required();
    c->add_option("--b", *b, "braid JSON")->required();
    c->callback([&, a, b] {
      cwb::BraidWord u = cwb::braid_from_json(load_payload(*a));
      cwb::BraidWord v = cwb::braid_from_json(load_payload(*b));
      std::cout << cwb::braid_to_json(cwb::braid_compose(u, v));
    });
  }
  {
    auto* c = app.add_subcommand("braid-trivial", "decide triviality");
    auto b = std::make_shared<std::string>();
    c->add_option("--braid", *b, "braid JSON")->required();
    c->callback([&, b] {
      bool t = cwb::is_trivial_braid(cwb::braid_from_json(load_payload(*b)));
      if (json_out)
        std::cout << json{{"trivial", t}}.dump(2) << "\n";
      else
        std::cout << (t ? "true" : "false") << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("bing", "doubling-ladder braid");
    auto k = std::make_shared<int>(1);
    c->add_option("--k", *k, "ladder depth (>=1)")->required();
    c->callback([&, k] { std::cout << cwb::braid_to_json(cwb::bing_braid(*k)); });
  }
  {
    auto* c = app.add_subcommand("strand-double", "double one strand");
    auto b = std::make_shared<std::string>();
    auto i = std::make_shared<int>(1);
    c->add_option("--braid", *b, "braid JSON")->required();
    c->add_option("--strand", *i, "strand to double")->required();
    c->callback([&, b, i] {
      cwb::BraidWord u = cwb::braid_from_json(load_payload(*b));
      std::cout << cwb::braid_to_json(cwb::strand_double(u, *i));
    });
  }
  {
    auto* c = app.add_subcommand("strand-delete", "delete strands of a pure braid");
    auto b = std::make_shared<std::string>();
    auto list = std::make_shared<std::string>();
    c->add_option("--braid", *b, "braid JSON")->required();
    c->add_option("--strands", *list, "comma list, e.g. 1,2")->required();
    c->callback([&, b, list] {
      cwb::BraidWord u = cwb::braid_from_json(load_payload(*b));
      std::vector<int> gone = parse_int_list(*list);
      std::cout << cwb::braid_to_json(
          cwb::strand_delete(u, {gone.begin(), gone.end()}));
    });
  }

  // ---- expansions and invariants ----
  {
    auto* c = app.add_subcommand("magnus", "expand a free-group word");
    auto letters = std::make_shared<std::string>();
    auto rank = std::make_shared<int>(0);
    auto cutoff = std::make_shared<int>(0);
    c->add_option("--letters", *letters, "word letters, e.g. 1,-2,1")->required();
    c->add_option("--rank", *rank, "number of generators")->required();
    c->add_option("--cutoff", *cutoff, "truncation degree")->required();
    c->callback([&, letters, rank, cutoff] {
      std::vector<int> raw = parse_int_list(*letters);
      cwb::FreeWord w = cwb::free_reduce(raw);
      cwb::MagnusSeries s = cwb::magnus_expand(w, *rank, *cutoff);
      json terms = json::array();
      for (int d = 0; d <= s.cutoff; ++d) {
        std::vector<std::vector<int>> monos;
        for (const auto& [key, v] : s.by_degree[d])
          monos.push_back(cwb::unpack_monomial(key, d));
        std::sort(monos.begin(), monos.end());
        for (const auto& m : monos)
          terms.push_back(json{{"monomial", m}, {"coeff", s.coeff(m)}});
      }
      json j{{"format", "magnus.v1"},
             {"rank", s.rank},
             {"cutoff", s.cutoff},
             {"terms", terms}};
      std::cout << j.dump(2) << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("mu", "one longitude coefficient");
    auto b = std::make_shared<std::string>();
    auto idx = std::make_shared<std::string>();
    c->add_option("--braid", *b, "braid JSON")->required();
    c->add_option("--index", *idx, "index sequence, e.g. 2,1")->required();
    c->callback([&, b, idx] {
      cwb::BraidWord u = cwb::braid_from_json(load_payload(*b));
      long long v = cwb::milnor_mu(u, parse_int_list(*idx));
      if (json_out)
        std::cout << json{{"mu", v}}.dump(2) << "\n";
      else
        std::cout << v << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("mu-table", "all coefficients to a length");
    auto b = std::make_shared<std::string>();
    auto len = std::make_shared<int>(2);
    c->add_option("--braid", *b, "braid JSON")->required();
    c->add_option("--maxlen,--max-length", *len, "longest index sequence")
        ->required();
    c->callback([&, b, len] {
      cwb::BraidWord u = cwb::braid_from_json(load_payload(*b));
      cwb::MuTable t = cwb::mu_table(u, *len);
      if (json_out) {
        std::cout << cwb::mu_table_to_json(t);
      } else {
        for (const auto& [key, v] : t.mu)
          std::cout << key << ": " << v << "\n";
      }
    });
  }

  // ---- diagram spaces ----
  {
    auto* c = app.add_subcommand("enumerate", "distinct diagrams on a skeleton");
    auto skel = std::make_shared<std::string>("circle");
    auto degree = std::make_shared<int>(0);
    auto chords = std::make_shared<bool>(false);
    c->add_option("--skeleton", *skel, "comma list of circle/interval");
    c->add_option("--degree", *degree, "diagram degree")->required();
    c->add_flag("--chords-only", *chords, "no internal vertices");
    c->callback([&, skel, degree, chords] {
      cwb::DiagramSet ds =
          cwb::enumerate_diagrams(parse_skeleton(*skel), *degree, *chords);
      if (json_out) {
        json arr = json::array();
        for (const auto& d : ds.reps)
          arr.push_back(json::parse(cwb::utd_to_json(d)));
        json j{{"format", "utd-set.v1"},
               {"count", ds.reps.size()},
               {"diagrams", arr}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << ds.reps.size() << "\n";
      }
    });
  }
  {
    auto* c = app.add_subcommand("dim", "dimension of the relation quotient");
    auto skel = std::make_shared<std::string>("circle");
    auto degree = std::make_shared<int>(0);
    auto rels = std::make_shared<std::string>("1t,as,ihx,stu");
    auto basis_path = std::make_shared<std::string>();
    c->add_option("--skeleton", *skel, "comma list of circle/interval");
    c->add_option("--degree", *degree, "diagram degree")->required();
    c->add_option("--relations", *rels,
                  "1t,as,ihx,stu (unitrivalent) or 1t,4t (chords)");
    c->add_option("--emit-basis", *basis_path,
                  "write canonical labels of a spanning set to a file");
    c->callback([&, skel, degree, rels, basis_path] {
      bool has_stu = false, has_4t = false;
      std::stringstream ss(*rels);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok == "stu")
          has_stu = true;
        else if (tok == "4t")
          has_4t = true;
        else if (tok != "1t" && tok != "as" && tok != "ihx")
          throw cwb::JsonError("unknown relation: " + tok);
      }
      if (has_stu == has_4t)
        throw cwb::JsonError("pick one presentation: stu or 4t");
      cwb::Presentation p = has_4t ? cwb::Presentation::ChordOnly
                                   : cwb::Presentation::Unitrivalent;
      std::vector<cwb::SkelKind> sk = parse_skeleton(*skel);
      int dim = cwb::space_dimension(sk, *degree, p);
      if (!basis_path->empty()) {
        cwb::DiagramSet ds = cwb::enumerate_diagrams(
            sk, *degree, p == cwb::Presentation::ChordOnly);
        std::ofstream out(*basis_path);
        if (!out) throw cwb::JsonError("cannot open " + *basis_path);
        for (const auto& d : ds.reps) {
          std::string label;
          for (uint64_t w : cwb::utd_certificate(d)) {
            if (!label.empty()) label += ".";
            char buf[17];
            std::snprintf(buf, sizeof buf, "%llx",
                          static_cast<unsigned long long>(w));
            label += buf;
          }
          out << label << "\n";
        }
      }
      if (json_out)
        std::cout << json{{"dimension", dim}}.dump(2) << "\n";
      else
        std::cout << dim << "\n";
    });
  }

  // ---- planar diagrams ----
  {
    auto* c = app.add_subcommand("pd-validate", "check a link diagram");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in, "diagram JSON")->required();
    c->callback([&, in] {
      cwb::LinkDiagram d = cwb::pd_from_json(load_payload(*in));
      cwb::PdReport rep = cwb::validate_pd(d);
      if (json_out) {
        json j{{"ok", rep.ok}, {"problems", rep.problems}};
        std::cout << j.dump(2) << "\n";
      } else if (rep.ok) {
        std::cout << "valid\n";
      } else {
        for (const auto& v : rep.problems) std::cout << v << "\n";
      }
      if (!rep.ok) exit_code = 1;
    });
  }
  {
    auto* c = app.add_subcommand("conway", "conway polynomial");
    auto in = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>();
    c->add_option("--in", *in, "diagram JSON");
    c->add_option("--builtin", *name, "built-in diagram name");
    c->callback([&, in, name] {
      cwb::LinkDiagram d = name->empty()
                               ? cwb::pd_from_json(load_payload(*in))
                               : cwb::builtin_link(*name);
      std::vector<long long> p = cwb::conway_polynomial(d);
      if (json_out)
        std::cout << json{{"coeffs", p}}.dump(2) << "\n";
      else
        std::cout << poly_text(p) << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("a2", "degree-2 conway coefficient of a knot");
    auto in = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>();
    auto route = std::make_shared<std::string>("gauss");
    c->add_option("--in", *in, "diagram JSON");
    c->add_option("--builtin", *name, "built-in diagram name");
    c->add_option("--route", *route, "gauss (default) or skein")
        ->check(CLI::IsMember({"gauss", "skein"}));
    c->callback([&, in, name, route] {
      cwb::LinkDiagram d = name->empty()
                               ? cwb::pd_from_json(load_payload(*in))
                               : cwb::builtin_link(*name);
      long long v = *route == "skein" ? cwb::a2_skein(d) : cwb::a2_gauss(d);
      if (json_out)
        std::cout << json{{"a2", v}}.dump(2) << "\n";
      else
        std::cout << v << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("ck-apply", "graft the degree-k pattern");
    auto in = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>();
    auto sites = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    c->add_option("--in", *in, "diagram JSON");
    c->add_option("--builtin", *name, "built-in diagram name");
    c->add_option("--sites", *sites, "k+1 distinct arc ids")->required();
    c->add_option("--degree", *k, "pattern degree k>=1")->required();
    c->callback([&, in, name, sites, k] {
      cwb::LinkDiagram d = name->empty()
                               ? cwb::pd_from_json(load_payload(*in))
                               : cwb::builtin_link(*name);
      cwb::LinkDiagram out =
          cwb::apply_ck_template(d, parse_int_list(*sites), *k);
      std::cout << cwb::pd_to_json(out);
    });
  }
  {
    auto* c = app.add_subcommand("bracket", "alternating sum over switch subsets");
    auto in = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>();
    auto sites = std::make_shared<std::string>();
    c->add_option("--in", *in, "diagram JSON");
    c->add_option("--builtin", *name, "built-in diagram name");
    c->add_option("--sites", *sites, "crossing ids to switch")->required();
    c->callback([&, in, name, sites] {
      cwb::LinkDiagram d = name->empty()
                               ? cwb::pd_from_json(load_payload(*in))
                               : cwb::builtin_link(*name);
      long long v = cwb::bracket_sum(d, parse_int_list(*sites));
      if (json_out)
        std::cout << json{{"bracket", v}}.dump(2) << "\n";
      else
        std::cout << v << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("decide-ck", "compare knots at low degree");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    auto k = std::make_shared<int>(3);
    c->add_option("--a", *a, "diagram JSON or built-in name")->required();
    c->add_option("--b", *b, "diagram JSON or built-in name")->required();
    c->add_option("--k", *k, "degree (1..3 decidable here)")->required();
    c->callback([&, a, b, k] {
      auto load = [](const std::string& s) {
        size_t i = s.find_first_not_of(" \t\r\n");
        bool inline_json =
            i != std::string::npos && (s[i] == '{' || s[i] == '[');
        if (!inline_json && s != "-" && s.find('.') == std::string::npos &&
            s.find('/') == std::string::npos)
          return cwb::builtin_link(s);
        return cwb::pd_from_json(load_payload(s));
      };
      bool eq = cwb::decide_ck_knots(*k, load(*a), load(*b));
      if (json_out)
        std::cout << json{{"equivalent", eq}}.dump(2) << "\n";
      else
        std::cout << (eq ? "true" : "false") << "\n";
    });
  }
  {
    auto* c = app.add_subcommand("milnor-rep", "nested-commutator string link");
    auto k = std::make_shared<int>(1);
    c->add_option("--k", *k, "depth (>=1)")->required();
    c->callback([&, k] {
      std::cout << cwb::braid_to_json(cwb::milnor_representative(*k));
    });
  }

  // ---- acceptance harness ----
  {
    auto* c = app.add_subcommand("verify", "run the acceptance checks");
    auto seed = std::make_shared<uint64_t>(1);
    auto budget = std::make_shared<std::string>("full");
    auto timings = std::make_shared<bool>(false);
    c->add_option("--seed", *seed, "random seed (default 1)");
    c->add_option("--budget", *budget, "quick or full (default full)")
        ->check(CLI::IsMember({"quick", "full"}));
    c->add_flag("--timings", *timings, "append wall-clock times");
    c->callback([&, seed, budget, timings] {
      cwb::VerifyReport rep = cwb::run_verification(*seed, *budget == "full");
      if (json_out) {
        json arr = json::array();
        for (const auto& cr : rep.criteria) {
          json cj{{"id", cr.id},
                  {"name", cr.name},
                  {"pass", cr.pass},
                  {"observed", cr.observed},
                  {"expected", cr.expected}};
          if (*timings) cj["seconds"] = cr.seconds;
          arr.push_back(std::move(cj));
        }
        json j{{"format", "verify.v1"},
               {"seed", rep.seed},
               {"budget", rep.full ? "full" : "quick"},
               {"criteria", std::move(arr)},
               {"pass", rep.all_pass}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << cwb::format_report(rep, *timings);
      }
      if (!rep.all_pass) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cwb::JsonError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

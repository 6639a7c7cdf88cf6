#include "cwb/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace cwb {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw JsonError("not valid JSON");
  return j;
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw JsonError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw JsonError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

// "format" may be omitted, but a wrong tag is rejected
void require_format(const json& j, const std::string& tag) {
  if (!j.is_object()) throw JsonError("payload must be a JSON object");
  if (j.contains("format") && j.at("format") != tag)
    throw JsonError("expected format \"" + tag + "\"");
}

EndRef end_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw JsonError(std::string(what) + " must be a [constituent, slot] pair");
  return {require_int(j[0], "constituent"), require_int(j[1], "slot")};
}

}  // namespace

std::string read_file_or_stdin(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

ClasperGraph clasper_from_json(const std::string& text) {
  json j = parse(text);
  require_format(j, "clasper.v1");
  ClasperGraph g;
  const json& cons = require_field(j, "constituents");
  if (!cons.is_array()) throw JsonError("\"constituents\" must be an array");
  for (size_t i = 0; i < cons.size(); ++i) {
    const json& cj = cons[i];
    if (require_int(require_field(cj, "id"), "id") != static_cast<int>(i))
      throw JsonError("constituent ids must be 0,1,2,... in order");
    std::string kind = require_field(cj, "kind").get<std::string>();
    Constituent c;
    if (kind == "leaf") {
      c.kind = CKind::Leaf;
    } else if (kind == "disk-leaf") {
      c.kind = CKind::DiskLeaf;
      const json& st = require_field(cj, "strands");
      if (!st.is_array() || st.empty())
        throw JsonError("disk-leaf needs a non-empty \"strands\" array");
      for (const json& s : st) c.strands.push_back(require_int(s, "strand"));
    } else if (kind == "node") {
      c.kind = CKind::Node;
    } else if (kind == "box") {
      c.kind = CKind::Box;
      int out = require_int(require_field(cj, "output"), "output");
      if (out < 0 || out > 2) throw JsonError("box output slot must be 0..2");
      c.output_mask = static_cast<uint8_t>(1 << out);
    } else {
      throw JsonError("unknown constituent kind \"" + kind + "\"");
    }
    g.constituents.push_back(std::move(c));
  }
  const json& edges = require_field(j, "edges");
  if (!edges.is_array()) throw JsonError("\"edges\" must be an array");
  for (const json& ej : edges) {
    ClasperEdge e;
    e.a = end_from(require_field(ej, "a"), "edge end a");
    e.b = end_from(require_field(ej, "b"), "edge end b");
    if (ej.contains("half_twists"))
      e.half_twists = require_int(ej.at("half_twists"), "half_twists");
    g.edges.push_back(e);
  }
  return g;
}

std::string clasper_to_json(const ClasperGraph& g) {
  json cons = json::array();
  for (size_t i = 0; i < g.constituents.size(); ++i) {
    const Constituent& c = g.constituents[i];
    json cj;
    cj["id"] = i;
    switch (c.kind) {
      case CKind::Leaf:
        cj["kind"] = "leaf";
        break;
      case CKind::DiskLeaf:
        cj["kind"] = "disk-leaf";
        cj["strands"] = c.strands;
        break;
      case CKind::Node:
        cj["kind"] = "node";
        break;
      case CKind::Box: {
        cj["kind"] = "box";
        int out = 0;
        while (out < 3 && !(c.output_mask >> out & 1)) ++out;
        cj["output"] = out;
        break;
      }
    }
    cons.push_back(std::move(cj));
  }
  json edges = json::array();
  for (const ClasperEdge& e : g.edges) {
    edges.push_back({{"a", {e.a.c, e.a.slot}},
                     {"b", {e.b.c, e.b.slot}},
                     {"half_twists", e.half_twists}});
  }
  json j{{"format", "clasper.v1"},
         {"constituents", std::move(cons)},
         {"edges", std::move(edges)}};
  return j.dump(2) + "\n";
}

Marking marking_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw JsonError("marking must be an array of [box, slot] pairs");
  Marking m;
  for (const json& e : j) m.push_back(end_from(e, "marking entry"));
  return m;
}

BraidWord braid_from_json(const std::string& text) {
  json j = parse(text);
  require_format(j, "braid.v1");
  int strands = require_int(require_field(j, "strands"), "strands");
  const json& word = require_field(j, "word");
  if (!word.is_array()) throw JsonError("\"word\" must be an array of letters");
  std::vector<int> letters;
  for (const json& l : word) letters.push_back(require_int(l, "letter"));
  try {
    return make_braid(strands, std::move(letters));
  } catch (const std::exception& e) {
    throw JsonError(e.what());
  }
}

std::string braid_to_json(const BraidWord& b) {
  json j{{"format", "braid.v1"}, {"strands", b.strands}, {"word", b.letters}};
  return j.dump(2) + "\n";
}

LinkDiagram pd_from_json(const std::string& text) {
  json j = parse(text);
  require_format(j, "pd.v1");
  LinkDiagram d;
  const json& cr = require_field(j, "crossings");
  if (!cr.is_array()) throw JsonError("\"crossings\" must be an array");
  for (const json& cj : cr) {
    Crossing c;
    const json& arcs = require_field(cj, "arcs");
    if (!arcs.is_array() || arcs.size() != 4)
      throw JsonError("\"arcs\" must list four arc ids");
    for (int i = 0; i < 4; ++i) c.arcs[i] = require_int(arcs[i], "arc");
    c.sign = require_int(require_field(cj, "sign"), "sign");
    if (cj.contains("singular")) {
      if (!cj.at("singular").is_boolean())
        throw JsonError("\"singular\" must be a boolean");
      c.singular = cj.at("singular").get<bool>();
    }
    d.crossings.push_back(c);
  }
  if (j.contains("free_loops"))
    d.free_loops = require_int(j.at("free_loops"), "free_loops");
  return d;
}

std::string pd_to_json(const LinkDiagram& d) {
  json cr = json::array();
  for (const Crossing& c : d.crossings) {
    json cj{{"arcs", c.arcs}, {"sign", c.sign}};
    if (c.singular) cj["singular"] = true;
    cr.push_back(std::move(cj));
  }
  json j{{"format", "pd.v1"},
         {"crossings", std::move(cr)},
         {"free_loops", d.free_loops}};
  return j.dump(2) + "\n";
}

std::string mu_table_to_json(const MuTable& t) {
  json mu = json::object();
  for (const auto& [k, v] : t.mu) mu[k] = v;
  json j{{"format", "mu.v1"},
         {"strands", t.strands},
         {"cutoff", t.cutoff},
         {"mu", std::move(mu)}};
  return j.dump(2) + "\n";
}

std::string utd_to_json(const UTD& d) {
  json skel = json::array();
  for (SkelKind k : d.skel)
    skel.push_back(k == SkelKind::Circle ? "circle" : "interval");
  json j{{"format", "utd.v1"},
         {"skeleton", std::move(skel)},
         {"legs_per_comp", d.legs_per_comp},
         {"internal", d.internal},
         {"mate", d.mate}};
  return j.dump(2) + "\n";
}

}  // namespace cwb

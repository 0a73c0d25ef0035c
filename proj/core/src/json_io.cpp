#include "tolspace/json_io.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "tolspace/error.hpp"

namespace tolspace::json {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string loc(const std::string& where) { return where.empty() ? "/" : where; }

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(loc(where), what); }

void expect_object(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "schema_version") {
      if (!value.is_number_integer() || value.get<int>() != kSchemaVersion) {
        fail(at(where, key), "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
      }
      continue;
    }
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(at(where, key), "unknown key '" + key + "'");
  }
  for (const char* a : allowed)
    if (!j.contains(a)) fail(where, std::string("missing key '") + a + "'");
}

const std::string& expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get_ref<const std::string&>();
}

Json torsion_json(const std::vector<BigInt>& torsion) {
  Json out = Json::array();
  for (const auto& t : torsion) {
    if (t <= std::numeric_limits<std::int64_t>::max()) {
      out.push_back(static_cast<std::int64_t>(t));
    } else {
      out.push_back(t.str());
    }
  }
  return out;
}

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed JSON");
  }
}

ToleranceSpace graph_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"vertices", "edges"});
  const Json& vs = j["vertices"];
  if (!vs.is_array()) fail(at(where, "vertices"), "expected an array");
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string& v = expect_string(vs[i], at(at(where, "vertices"), i));
    if (!seen.insert(v).second) fail(at(at(where, "vertices"), i), "duplicate vertex '" + v + "'");
    vertices.push_back(v);
  }
  const Json& es = j["edges"];
  if (!es.is_array()) fail(at(where, "edges"), "expected an array");
  std::vector<Edge> edges;
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string w = at(at(where, "edges"), i);
    if (!es[i].is_array() || es[i].size() != 2) fail(w, "expected a pair of vertex labels");
    const std::string& a = expect_string(es[i][0], at(w, 0));
    const std::string& b = expect_string(es[i][1], at(w, 1));
    if (!seen.count(a)) fail(at(w, 0), "unknown vertex '" + a + "'");
    if (!seen.count(b)) fail(at(w, 1), "unknown vertex '" + b + "'");
    if (a == b) fail(w, "self-pair on '" + a + "' (reflexivity is implicit)");
    if (!seen_edges.insert(std::minmax(a, b)).second) fail(w, "duplicate edge");
    edges.emplace_back(a, b);
  }
  return ToleranceSpace(std::move(vertices), edges);
}

ToleranceMap map_from_json(const Json& j) {
  expect_object(j, "", {"domain", "codomain", "assignment"});
  ToleranceSpace domain = graph_from_json(j["domain"], "/domain");
  ToleranceSpace codomain = graph_from_json(j["codomain"], "/codomain");
  const Json& a = j["assignment"];
  if (!a.is_object()) fail("/assignment", "expected an object");
  ToleranceMap::Assignment assignment;
  for (const auto& [key, value] : a.items()) {
    const std::string w = at("/assignment", key);
    if (!domain.contains(key)) fail(w, "'" + key + "' is not a domain vertex");
    const std::string& image = expect_string(value, w);
    if (!codomain.contains(image)) fail(w, "'" + image + "' is not a codomain vertex");
    assignment[key] = image;
  }
  for (const auto& v : domain.labels())
    if (!assignment.count(v)) fail("/assignment", "no image for '" + v + "'");
  return ToleranceMap(std::move(domain), std::move(codomain), std::move(assignment));
}

MultiplicationTable table_from_json(const Json& j) {
  expect_object(j, "", {"graph", "identity", "table"});
  ToleranceSpace carrier = graph_from_json(j["graph"], "/graph");
  const std::string& identity = expect_string(j["identity"], "/identity");
  if (!carrier.contains(identity)) fail("/identity", "'" + identity + "' is not a vertex");
  const Json& t = j["table"];
  if (!t.is_object()) fail("/table", "expected an object");
  MultiplicationTable::Table table;
  for (const auto& [a, row] : t.items()) {
    const std::string wa = at("/table", a);
    if (!carrier.contains(a)) fail(wa, "'" + a + "' is not a vertex");
    if (!row.is_object()) fail(wa, "expected an object");
    for (const auto& [b, c] : row.items()) {
      const std::string wb = at(wa, b);
      if (!carrier.contains(b)) fail(wb, "'" + b + "' is not a vertex");
      const std::string& prod = expect_string(c, wb);
      if (!carrier.contains(prod)) fail(wb, "'" + prod + "' is not a vertex");
      table[a][b] = prod;
    }
  }
  for (const auto& a : carrier.labels())
    for (const auto& b : carrier.labels())
      if (!table.count(a) || !table[a].count(b)) fail("/table", "missing product " + a + "·" + b);
  return MultiplicationTable(std::move(carrier), identity, std::move(table));
}

ToleranceSpace read_graph(std::string_view text) { return graph_from_json(parse(text)); }
ToleranceMap read_map(std::string_view text) { return map_from_json(parse(text)); }
MultiplicationTable read_table(std::string_view text) { return table_from_json(parse(text)); }

Json to_json(const ToleranceSpace& x, bool versioned) {
  Json out = Json::object();
  if (versioned) out["schema_version"] = kSchemaVersion;
  out["vertices"] = string_list(x.labels());
  Json edges = Json::array();
  for (const auto& [a, b] : x.edges()) edges.push_back({a, b});
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const ToleranceMap& f) {
  Json out = Json::object();
  out["schema_version"] = kSchemaVersion;
  out["domain"] = to_json(f.domain(), false);
  out["codomain"] = to_json(f.codomain(), false);
  Json a = Json::object();
  for (const auto& [k, v] : f.assignment()) a[k] = v;
  out["assignment"] = std::move(a);
  return out;
}

Json to_json(const MultiplicationTable& t) {
  Json out = Json::object();
  out["schema_version"] = kSchemaVersion;
  out["graph"] = to_json(t.carrier(), false);
  out["identity"] = t.identity();
  Json table = Json::object();
  for (const auto& [a, row] : t.table()) {
    Json r = Json::object();
    for (const auto& [b, c] : row) r[b] = c;
    table[a] = std::move(r);
  }
  out["table"] = std::move(table);
  return out;
}

Json to_json(const HomologyProfile& h) {
  Json out = Json::object();
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    Json g = Json::object();
    g["betti"] = h.groups[d].betti;
    g["torsion"] = torsion_json(h.groups[d].torsion);
    out[std::to_string(d)] = std::move(g);
  }
  return out;
}

Json to_json(const Move& m) {
  Json out = Json::object();
  out["kind"] = to_string(m.kind);
  switch (m.kind) {
    case MoveKind::DeleteVertex:
    case MoveKind::AttachVertex:
      out["vertex"] = m.vertex;
      out["neighbors"] = string_list(m.neighbors);
      break;
    case MoveKind::DeleteEdge:
    case MoveKind::AttachEdge:
      out["edge"] = {m.edge.first, m.edge.second};
      break;
  }
  return out;
}

Json to_json(const MoveTrace& t) {
  Json out = Json::object();
  out["start"] = to_json(t.start, false);
  Json moves = Json::array();
  for (const auto& m : t.moves) moves.push_back(to_json(m));
  out["moves"] = std::move(moves);
  out["end"] = to_json(t.end, false);
  return out;
}

Json to_json(const EquivalenceVerdict& v, bool with_trace) {
  Json out = Json::object();
  out["verdict"] = to_string(v.kind);
  out["method"] = v.method;
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.trace) {
    out["moves"] = v.trace->moves.size();
    out["peak_size"] = v.trace->peak_size();
    if (with_trace) out["trace"] = to_json(*v.trace);
  }
  if (with_trace && !v.relabel.empty()) {
    Json r = Json::object();
    for (const auto& [a, b] : v.relabel) r[a] = b;
    out["relabel"] = std::move(r);
  }
  return out;
}

Json to_json(const ContractibilityResult& r, bool with_trace) {
  Json out = Json::object();
  out["verdict"] = to_string(r.verdict);
  out["nodes"] = r.nodes;
  if (r.witness) {
    out["moves"] = r.witness->moves.size();
    if (with_trace) out["trace"] = to_json(*r.witness);
  }
  return out;
}

Json to_json(const CoreReduction& r, bool with_trace) {
  Json out = Json::object();
  out["core"] = to_json(r.core, false);
  out["moves"] = r.trace.moves.size();
  if (with_trace) out["trace"] = to_json(r.trace);
  return out;
}

Json to_json(const SphereReport& r, bool with_trace) {
  Json out = Json::object();
  out["verdict"] = to_string(r.verdict);
  out["dimension"] = r.dimension;
  if (r.homology) out["homology"] = to_json(*r.homology);
  Json links = Json::array();
  for (const auto& l : r.links) {
    Json e = Json::object();
    e["vertex"] = l.vertex;
    e["link_size"] = l.link_size;
    e["verdict"] = to_string(l.verdict);
    e["method"] = l.method;
    if (!l.detail.empty()) e["detail"] = l.detail;
    if (l.reduction) {
      e["core_size"] = l.reduction->end.size();
      if (with_trace) e["reduction"] = to_json(*l.reduction);
    }
    if (l.equivalence && with_trace) e["equivalence"] = to_json(*l.equivalence);
    links.push_back(std::move(e));
  }
  out["links"] = std::move(links);
  out["failures"] = string_list(r.failures);
  return out;
}

Json to_json(const BundleReport& r, bool with_trace) {
  Json out = Json::object();
  out["pass"] = r.pass;
  out["continuous"] = r.continuous;
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json e = Json::object();
    e["base"] = f.base;
    e["size"] = f.size;
    e["equivalence"] = to_json(f.verdict, with_trace);
    fibers.push_back(std::move(e));
  }
  out["fibers"] = std::move(fibers);
  Json charts = Json::array();
  for (const auto& c : r.charts) {
    Json e = Json::object();
    e["name"] = c.name;
    e["base_points"] = string_list(c.base_points);
    e["preimage_size"] = c.preimage_size;
    e["product_size"] = c.product_size;
    e["equivalence"] = to_json(c.equivalence, with_trace);
    e["phi_supplied"] = c.phi_supplied;
    e["phi_continuous"] = c.phi_continuous;
    e["commutes"] = c.commutes;
    e["points_checked"] = c.points_checked;
    if (c.commutation_witness) e["commutation_witness"] = *c.commutation_witness;
    charts.push_back(std::move(e));
  }
  out["charts"] = std::move(charts);
  out["failures"] = string_list(r.failures);
  return out;
}

Json to_json(const GroupCheck& g) {
  Json out = Json::object();
  out["ok"] = g.ok;
  if (!g.ok) {
    out["failed"] = g.failed;
    out["witness"] = string_list(g.witness);
    out["message"] = g.message;
  }
  return out;
}

Json to_json(const LatticeEmbedding& e) {
  Json out = Json::object();
  out["dimension"] = e.dimension;
  Json coords = Json::object();
  for (const auto& v : e.order) coords[v] = e.coords.at(v);
  out["coords"] = std::move(coords);
  return out;
}

std::string to_dot(const ToleranceSpace& x, std::string_view name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(std::string(name)) << " {\n";
  for (const auto& v : x.labels()) os << "  " << quote(v) << ";\n";
  for (const auto& [a, b] : x.edges()) os << "  " << quote(a) << " -- " << quote(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tolspace::json

#include "ocsp/json_io.hpp"

#include "ocsp/error.hpp"

namespace ocsp {

json to_json(const FinSet& a) { return json{{"n", a.size}}; }

json to_json(const FinFunction& f) {
  return json{{"dom", f.dom.size}, {"cod", f.cod.size}, {"map", f.table}};
}

json to_json(const Graph& g) {
  return json{{"v", g.vertices.size},
              {"e", g.edges.size},
              {"src", g.src.table},
              {"tgt", g.tgt.table}};
}

namespace {

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw BoundaryError(std::string("json: missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<int> get_table(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw BoundaryError(std::string("json: missing array field '") + key + "'");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      throw BoundaryError(std::string("json: field '") + key + "' has a non-integer entry");
    out.push_back(v.get<int>());
  }
  return out;
}

const json& get_obj(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object())
    throw BoundaryError(std::string("json: missing object field '") + key + "'");
  return j[key];
}

}  // namespace

FinSet finset_from_json(const json& j) { return FinSet{get_int(j, "n")}; }

FinFunction finfunction_from_json(const json& j) {
  return FinFunction(FinSet{get_int(j, "dom")}, FinSet{get_int(j, "cod")},
                     get_table(j, "map"));
}

Graph graph_from_json(const json& j) {
  return Graph(FinSet{get_int(j, "v")}, FinSet{get_int(j, "e")},
               get_table(j, "src"), get_table(j, "tgt"));
}

json to_json(const Cospan<FinSetCat>& m) {
  return json{{"footL", to_json(m.foot_l)},
              {"apex", to_json(m.apex)},
              {"footR", to_json(m.foot_r)},
              {"legL", to_json(m.leg_l)},
              {"legR", to_json(m.leg_r)}};
}

Cospan<FinSetCat> cospan_from_json(const json& j) {
  return make_cospan<FinSetCat>(
      finset_from_json(get_obj(j, "footL")),
      finfunction_from_json(get_obj(j, "legL")),
      finset_from_json(get_obj(j, "apex")),
      finfunction_from_json(get_obj(j, "legR")),
      finset_from_json(get_obj(j, "footR")));
}

json to_json(const OpenGraph& g) {
  return json{{"footL", g.a.size},
              {"footR", g.b.size},
              {"graph", to_json(g.carrier.apex)},
              {"legL", g.carrier.leg_l.vmap.table},
              {"legR", g.carrier.leg_r.vmap.table}};
}

OpenGraph open_graph_from_json(const json& j) {
  FinSet a{get_int(j, "footL")}, b{get_int(j, "footR")};
  Graph g = graph_from_json(get_obj(j, "graph"));
  GraphHom l(discrete(a), g, FinFunction(a, g.vertices, get_table(j, "legL")),
             FinFunction(FinSet{0}, g.edges, {}));
  GraphHom r(discrete(b), g, FinFunction(b, g.vertices, get_table(j, "legR")),
             FinFunction(FinSet{0}, g.edges, {}));
  return OpenGraph{a, b,
                   make_cospan<GraphCat>(discrete(a), l, g, r, discrete(b))};
}

json to_json(const FinCat& c) {
  json comp = json::array();
  for (const auto& [key, h] : c.comp_table)
    comp.push_back({key.first, key.second, h});
  return json{{"objects", c.objects.size},
              {"dom", c.mor_dom},
              {"cod", c.mor_cod},
              {"id", c.identity_of},
              {"comp", comp}};
}

FinCat fincat_from_json(const json& j) {
  if (!j.contains("comp") || !j["comp"].is_array())
    throw BoundaryError("json: missing array field 'comp'");
  std::map<std::pair<int, int>, int> comp;
  for (const auto& row : j["comp"]) {
    if (!row.is_array() || row.size() != 3)
      throw BoundaryError("json: 'comp' rows must be triples");
    comp[{row[0].get<int>(), row[1].get<int>()}] = row[2].get<int>();
  }
  return FinCat(FinSet{get_int(j, "objects")}, get_table(j, "dom"),
                get_table(j, "cod"), get_table(j, "id"), std::move(comp));
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ocsp

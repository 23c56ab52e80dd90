#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocsp/finset.hpp"

namespace ocsp {

// Directed multigraph: a pair of finite sets with parallel source/target maps.
struct Graph {
  FinSet vertices;
  FinSet edges;
  FinFunction src;  // edges -> vertices
  FinFunction tgt;

  Graph() : Graph(FinSet{0}, FinSet{0}, {}, {}) {}
  Graph(FinSet v, FinSet e, std::vector<int> src_, std::vector<int> tgt_);
  bool operator==(const Graph&) const = default;
};

struct GraphHom {
  Graph dom;
  Graph cod;
  FinFunction vmap;
  FinFunction emap;

  GraphHom() = default;
  GraphHom(Graph dom_, Graph cod_, FinFunction vmap_, FinFunction emap_);
  bool operator==(const GraphHom&) const = default;
};

GraphHom identity(const Graph& g);
GraphHom compose(const GraphHom& f, const GraphHom& g);

// Convenience builder from raw vertex/edge tables.
GraphHom graph_hom(const Graph& dom, const Graph& cod, std::vector<int> vmap,
                   std::vector<int> emap);

Coprod<Graph, GraphHom> coproduct(const Graph& a, const Graph& b);
GraphHom copair(const GraphHom& f, const GraphHom& g,
                const Coprod<Graph, GraphHom>& w);
Graph graph_initial();
GraphHom bang(const Graph& a);

// Pointwise pushout: vertices and edges are glued independently with the
// FinSet conventions; incidence is induced on the quotient.
PushoutData<Graph, GraphHom> pushout(const GraphHom& f, const GraphHom& g);
GraphHom pushout_copair(const PushoutData<Graph, GraphHom>& w,
                        const GraphHom& p, const GraphHom& q);

std::optional<GraphHom> try_inverse(const GraphHom& f);
std::vector<GraphHom> all_graph_homs(const Graph& a, const Graph& b);

// Edge-free graph on a finite set, and the functoriality of that assignment.
Graph discrete(const FinSet& a);
GraphHom discrete_on(const FinFunction& f);

std::string show(const Graph& g);
std::string show(const GraphHom& h);

// Graph with chosen finite colimits, same shape as FinSetCat.
struct GraphCat {
  using Ob = Graph;
  using Arr = GraphHom;
  static Ob dom(const Arr& f) { return f.dom; }
  static Ob cod(const Arr& f) { return f.cod; }
  static Arr id(const Ob& a) { return identity(a); }
  static Arr comp(const Arr& f, const Arr& g) { return compose(f, g); }
  static Coprod<Ob, Arr> coprod(const Ob& a, const Ob& b) {
    return coproduct(a, b);
  }
  static Arr copr(const Arr& f, const Arr& g, const Coprod<Ob, Arr>& w) {
    return copair(f, g, w);
  }
  static Ob initial() { return graph_initial(); }
  static Arr initial_arrow(const Ob& a) { return bang(a); }
  static PushoutData<Ob, Arr> po(const Arr& f, const Arr& g) {
    return pushout(f, g);
  }
  static Arr po_copair(const PushoutData<Ob, Arr>& w, const Arr& p,
                       const Arr& q) {
    return pushout_copair(w, p, q);
  }
  static std::optional<Arr> inverse(const Arr& f) { return try_inverse(f); }
  static std::vector<Arr> arrows_between(const Ob& a, const Ob& b) {
    return all_graph_homs(a, b);
  }
  static std::string show_ob(const Ob& a) { return show(a); }
  static std::string show_arr(const Arr& f) { return show(f); }
};

}  // namespace ocsp

#include "ocsp/graph.hpp"

#include <sstream>

#include "ocsp/error.hpp"

namespace ocsp {

Graph::Graph(FinSet v, FinSet e, std::vector<int> src_, std::vector<int> tgt_)
    : vertices(v),
      edges(e),
      src(e, v, std::move(src_)),
      tgt(e, v, std::move(tgt_)) {}

GraphHom::GraphHom(Graph dom_, Graph cod_, FinFunction vmap_, FinFunction emap_)
    : dom(std::move(dom_)),
      cod(std::move(cod_)),
      vmap(std::move(vmap_)),
      emap(std::move(emap_)) {
  if (!(vmap.dom == dom.vertices) || !(vmap.cod == cod.vertices) ||
      !(emap.dom == dom.edges) || !(emap.cod == cod.edges))
    throw BoundaryError("GraphHom: component maps do not match the endpoints");
  if (!(compose(emap, cod.src) == compose(dom.src, vmap)) ||
      !(compose(emap, cod.tgt) == compose(dom.tgt, vmap)))
    throw BoundaryError("GraphHom: incidence squares do not commute");
}

GraphHom graph_hom(const Graph& dom, const Graph& cod, std::vector<int> vmap,
                   std::vector<int> emap) {
  return GraphHom(dom, cod,
                  FinFunction(dom.vertices, cod.vertices, std::move(vmap)),
                  FinFunction(dom.edges, cod.edges, std::move(emap)));
}

GraphHom identity(const Graph& g) {
  return GraphHom(g, g, identity(g.vertices), identity(g.edges));
}

GraphHom compose(const GraphHom& f, const GraphHom& g) {
  if (!(f.cod == g.dom))
    throw BoundaryError("compose: graph hom endpoints do not match");
  return GraphHom(f.dom, g.cod, compose(f.vmap, g.vmap), compose(f.emap, g.emap));
}

Coprod<Graph, GraphHom> coproduct(const Graph& a, const Graph& b) {
  auto wv = coproduct(a.vertices, b.vertices);
  auto we = coproduct(a.edges, b.edges);
  Graph sum(wv.sum, we.sum,
            copair(compose(a.src, wv.inl), compose(b.src, wv.inr), we).table,
            copair(compose(a.tgt, wv.inl), compose(b.tgt, wv.inr), we).table);
  return {sum, GraphHom(a, sum, wv.inl, we.inl), GraphHom(b, sum, wv.inr, we.inr)};
}

GraphHom copair(const GraphHom& f, const GraphHom& g,
                const Coprod<Graph, GraphHom>& w) {
  if (!(f.cod == g.cod))
    throw BoundaryError("copair: the two legs must share a codomain");
  Coprod<FinSet, FinFunction> wv{w.sum.vertices, w.inl.vmap, w.inr.vmap};
  Coprod<FinSet, FinFunction> we{w.sum.edges, w.inl.emap, w.inr.emap};
  return GraphHom(w.sum, f.cod, copair(f.vmap, g.vmap, wv),
                  copair(f.emap, g.emap, we));
}

Graph graph_initial() { return Graph(); }

GraphHom bang(const Graph& a) {
  return GraphHom(graph_initial(), a, bang(a.vertices), bang(a.edges));
}

PushoutData<Graph, GraphHom> pushout(const GraphHom& f, const GraphHom& g) {
  if (!(f.dom == g.dom))
    throw BoundaryError("pushout: span legs must share a domain");
  auto wv = pushout(f.vmap, g.vmap);
  auto we = pushout(f.emap, g.emap);
  // Incidence on the glued edge set, read off any representative; agreement
  // across a class is exactly the naturality of the quotient.
  std::vector<int> src_t(static_cast<size_t>(we.apex.size), -1);
  std::vector<int> tgt_t(static_cast<size_t>(we.apex.size), -1);
  auto put = [&](std::vector<int>& t, int cls, int val) {
    if (t[static_cast<size_t>(cls)] == -1)
      t[static_cast<size_t>(cls)] = val;
    else if (t[static_cast<size_t>(cls)] != val)
      throw StructuralError("graph pushout: incidence is not respected by the gluing");
  };
  const Graph& a = f.cod;
  const Graph& b = g.cod;
  for (int e = 0; e < a.edges.size; ++e) {
    put(src_t, we.ia(e), wv.ia(a.src(e)));
    put(tgt_t, we.ia(e), wv.ia(a.tgt(e)));
  }
  for (int e = 0; e < b.edges.size; ++e) {
    put(src_t, we.ib(e), wv.ib(b.src(e)));
    put(tgt_t, we.ib(e), wv.ib(b.tgt(e)));
  }
  Graph apex(wv.apex, we.apex, std::move(src_t), std::move(tgt_t));
  return {apex, GraphHom(a, apex, wv.ia, we.ia), GraphHom(b, apex, wv.ib, we.ib)};
}

GraphHom pushout_copair(const PushoutData<Graph, GraphHom>& w,
                        const GraphHom& p, const GraphHom& q) {
  PushoutData<FinSet, FinFunction> wv{w.apex.vertices, w.ia.vmap, w.ib.vmap};
  PushoutData<FinSet, FinFunction> we{w.apex.edges, w.ia.emap, w.ib.emap};
  return GraphHom(w.apex, p.cod, pushout_copair(wv, p.vmap, q.vmap),
                  pushout_copair(we, p.emap, q.emap));
}

std::optional<GraphHom> try_inverse(const GraphHom& f) {
  auto vi = try_inverse(f.vmap);
  auto ei = try_inverse(f.emap);
  if (!vi || !ei) return std::nullopt;
  return GraphHom(f.cod, f.dom, *vi, *ei);
}

std::vector<GraphHom> all_graph_homs(const Graph& a, const Graph& b) {
  std::vector<GraphHom> out;
  for (const auto& vm : all_functions(a.vertices, b.vertices)) {
    for (const auto& em : all_functions(a.edges, b.edges)) {
      if (compose(em, b.src) == compose(a.src, vm) &&
          compose(em, b.tgt) == compose(a.tgt, vm))
        out.push_back(GraphHom(a, b, vm, em));
    }
  }
  return out;
}

Graph discrete(const FinSet& a) { return Graph(a, FinSet{0}, {}, {}); }

GraphHom discrete_on(const FinFunction& f) {
  return GraphHom(discrete(f.dom), discrete(f.cod), f,
                  FinFunction(FinSet{0}, FinSet{0}, {}));
}

std::string show(const Graph& g) {
  std::ostringstream os;
  os << "graph(v=" << g.vertices.size << ",e=" << g.edges.size;
  for (int e = 0; e < g.edges.size; ++e)
    os << "," << g.src(e) << ">" << g.tgt(e);
  os << ")";
  return os.str();
}

std::string show(const GraphHom& h) {
  return "hom(v:" + show(h.vmap) + ",e:" + show(h.emap) + ")";
}

}  // namespace ocsp

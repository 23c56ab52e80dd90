#include "ocsp/fincat.hpp"

#include <algorithm>
#include <deque>

#include "ocsp/error.hpp"

namespace ocsp {

FinCat::FinCat(FinSet obs, std::vector<int> mdom, std::vector<int> mcod,
               std::vector<int> ids, std::map<std::pair<int, int>, int> ctable)
    : objects(obs),
      mor_dom(std::move(mdom)),
      mor_cod(std::move(mcod)),
      identity_of(std::move(ids)),
      comp_table(std::move(ctable)) {
  const int n = objects.size;
  const int m = mor_count();
  if (mor_cod.size() != mor_dom.size() ||
      identity_of.size() != static_cast<size_t>(n))
    throw StructuralError("fin category: table sizes do not line up");
  for (int f = 0; f < m; ++f) {
    if (mor_dom[static_cast<size_t>(f)] < 0 ||
        mor_dom[static_cast<size_t>(f)] >= n ||
        mor_cod[static_cast<size_t>(f)] < 0 ||
        mor_cod[static_cast<size_t>(f)] >= n)
      throw StructuralError("fin category: morphism endpoints out of range");
  }
  for (int a = 0; a < n; ++a) {
    int e = identity_of[static_cast<size_t>(a)];
    if (e < 0 || e >= m || mor_dom[static_cast<size_t>(e)] != a ||
        mor_cod[static_cast<size_t>(e)] != a)
      throw StructuralError("fin category: identity table is not valid");
  }
  for (const auto& [key, h] : comp_table) {
    if (key.first < 0 || key.first >= m || key.second < 0 || key.second >= m ||
        h < 0 || h >= m)
      throw StructuralError("fin category: composition table index out of range");
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      auto it = comp_table.find({f, g});
      bool composable = mor_cod[static_cast<size_t>(f)] ==
                        mor_dom[static_cast<size_t>(g)];
      if (!composable) {
        if (it != comp_table.end())
          throw StructuralError(
              "fin category: composite listed for non-composable morphisms");
        continue;
      }
      if (it == comp_table.end())
        throw StructuralError("fin category: missing composite");
      int h = it->second;
      if (mor_dom[static_cast<size_t>(h)] != mor_dom[static_cast<size_t>(f)] ||
          mor_cod[static_cast<size_t>(h)] != mor_cod[static_cast<size_t>(g)])
        throw StructuralError("fin category: composite has wrong endpoints");
    }
  for (int f = 0; f < m; ++f) {
    if (comp(id(mor_dom[static_cast<size_t>(f)]), f) != f ||
        comp(f, id(mor_cod[static_cast<size_t>(f)])) != f)
      throw StructuralError("fin category: unit law fails");
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (mor_cod[static_cast<size_t>(f)] != mor_dom[static_cast<size_t>(g)])
        continue;
      for (int h = 0; h < m; ++h) {
        if (mor_cod[static_cast<size_t>(g)] != mor_dom[static_cast<size_t>(h)])
          continue;
        if (comp(comp(f, g), h) != comp(f, comp(g, h)))
          throw StructuralError("fin category: associativity fails");
      }
    }
}

int FinCat::comp(int f, int g) const {
  auto it = comp_table.find({f, g});
  if (it == comp_table.end())
    throw BoundaryError("fin category: morphisms are not composable");
  return it->second;
}

FinFunctor::FinFunctor(FinCat d, FinCat c, std::vector<int> obs,
                       std::vector<int> mors)
    : dom(std::move(d)),
      cod(std::move(c)),
      ob_map(std::move(obs)),
      mor_map(std::move(mors)) {
  if (ob_map.size() != static_cast<size_t>(dom.objects.size) ||
      mor_map.size() != static_cast<size_t>(dom.mor_count()))
    throw StructuralError("functor: table sizes do not match the domain");
  for (int x : ob_map)
    if (x < 0 || x >= cod.objects.size)
      throw StructuralError("functor: object image out of range");
  for (int x : mor_map)
    if (x < 0 || x >= cod.mor_count())
      throw StructuralError("functor: morphism image out of range");
  for (int f = 0; f < dom.mor_count(); ++f) {
    if (cod.mor_dom[static_cast<size_t>(mor(f))] !=
            ob(dom.mor_dom[static_cast<size_t>(f)]) ||
        cod.mor_cod[static_cast<size_t>(mor(f))] !=
            ob(dom.mor_cod[static_cast<size_t>(f)]))
      throw StructuralError("functor: endpoints are not preserved");
  }
  for (int a = 0; a < dom.objects.size; ++a)
    if (mor(dom.id(a)) != cod.id(ob(a)))
      throw StructuralError("functor: identities are not preserved");
  for (int f = 0; f < dom.mor_count(); ++f)
    for (int g = 0; g < dom.mor_count(); ++g) {
      if (dom.mor_cod[static_cast<size_t>(f)] !=
          dom.mor_dom[static_cast<size_t>(g)])
        continue;
      if (mor(dom.comp(f, g)) != cod.comp(mor(f), mor(g)))
        throw StructuralError("functor: composition is not preserved");
    }
}

FinFunctor identity(const FinCat& a) {
  std::vector<int> obs(static_cast<size_t>(a.objects.size));
  std::vector<int> mors(static_cast<size_t>(a.mor_count()));
  for (size_t i = 0; i < obs.size(); ++i) obs[i] = static_cast<int>(i);
  for (size_t i = 0; i < mors.size(); ++i) mors[i] = static_cast<int>(i);
  return FinFunctor(a, a, std::move(obs), std::move(mors));
}

FinFunctor compose(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.cod == g.dom))
    throw BoundaryError("functor composition: middle categories differ");
  std::vector<int> obs(f.ob_map.size()), mors(f.mor_map.size());
  for (size_t i = 0; i < obs.size(); ++i) obs[i] = g.ob(f.ob_map[i]);
  for (size_t i = 0; i < mors.size(); ++i) mors[i] = g.mor(f.mor_map[i]);
  return FinFunctor(f.dom, g.cod, std::move(obs), std::move(mors));
}

FinCat terminal_cat() {
  return FinCat(FinSet{1}, {0}, {0}, {0}, {{{0, 0}, 0}});
}

FinFunctor bang_functor(const FinCat& a) {
  return FinFunctor(a, terminal_cat(),
                    std::vector<int>(static_cast<size_t>(a.objects.size), 0),
                    std::vector<int>(static_cast<size_t>(a.mor_count()), 0));
}

CatSpan make_cat_span(FinFunctor l, FinFunctor r) {
  if (!(l.dom == r.dom))
    throw BoundaryError("span of categories: legs do not share the apex");
  FinCat apex = l.dom;
  return CatSpan{std::move(apex), std::move(l), std::move(r)};
}

CatSpanMap make_cat_span_map(const CatSpan& d, const CatSpan& c,
                             FinFunctor fl, FinFunctor fx, FinFunctor fr) {
  if (!(fx.dom == d.apex) || !(fx.cod == c.apex) ||
      !(fl.dom == d.leg_l.cod) || !(fl.cod == c.leg_l.cod) ||
      !(fr.dom == d.leg_r.cod) || !(fr.cod == c.leg_r.cod))
    throw BoundaryError("span map: functor endpoints do not line up");
  if (!(compose(fx, c.leg_l) == compose(d.leg_l, fl)) ||
      !(compose(fx, c.leg_r) == compose(d.leg_r, fr)))
    throw BoundaryError("span map: squares do not commute");
  return CatSpanMap{std::move(fl), std::move(fx), std::move(fr)};
}

PullbackCat pullback_cat(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.cod == g.cod))
    throw BoundaryError(
        "pullback of categories: the functors do not share a codomain");
  PullbackCat out;
  const FinCat& a = f.dom;
  const FinCat& b = g.dom;
  for (int x = 0; x < a.objects.size; ++x)
    for (int y = 0; y < b.objects.size; ++y)
      if (f.ob(x) == g.ob(y)) {
        out.ob_of[{x, y}] = static_cast<int>(out.obs.size());
        out.obs.push_back({x, y});
      }
  std::vector<int> mdom, mcod;
  for (int p = 0; p < a.mor_count(); ++p)
    for (int q = 0; q < b.mor_count(); ++q)
      if (f.mor(p) == g.mor(q)) {
        out.mor_of[{p, q}] = static_cast<int>(out.mors.size());
        out.mors.push_back({p, q});
        mdom.push_back(out.ob_of.at({a.mor_dom[static_cast<size_t>(p)],
                                     b.mor_dom[static_cast<size_t>(q)]}));
        mcod.push_back(out.ob_of.at({a.mor_cod[static_cast<size_t>(p)],
                                     b.mor_cod[static_cast<size_t>(q)]}));
      }
  std::vector<int> ids;
  for (const auto& ob : out.obs)
    ids.push_back(out.mor_of.at({a.id(ob[0]), b.id(ob[1])}));
  std::map<std::pair<int, int>, int> comp;
  for (size_t e1 = 0; e1 < out.mors.size(); ++e1)
    for (size_t e2 = 0; e2 < out.mors.size(); ++e2) {
      if (mcod[e1] != mdom[e2]) continue;
      comp[{static_cast<int>(e1), static_cast<int>(e2)}] =
          out.mor_of.at({a.comp(out.mors[e1][0], out.mors[e2][0]),
                         b.comp(out.mors[e1][1], out.mors[e2][1])});
    }
  out.cat = FinCat(FinSet{static_cast<int>(out.obs.size())}, std::move(mdom),
                   std::move(mcod), std::move(ids), std::move(comp));
  std::vector<int> obl, obr, ml, mr;
  for (const auto& ob : out.obs) {
    obl.push_back(ob[0]);
    obr.push_back(ob[1]);
  }
  for (const auto& mo : out.mors) {
    ml.push_back(mo[0]);
    mr.push_back(mo[1]);
  }
  out.proj_l = FinFunctor(out.cat, a, std::move(obl), std::move(ml));
  out.proj_r = FinFunctor(out.cat, b, std::move(obr), std::move(mr));
  return out;
}

PullbackCat product_cat(const FinCat& a, const FinCat& b) {
  return pullback_cat(bang_functor(a), bang_functor(b));
}

FreeCat free_category(const Graph& g) {
  const int n = g.vertices.size;
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int e = 0; e < g.edges.size; ++e) ++indeg[static_cast<size_t>(g.tgt(e))];
  std::deque<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    ++seen;
    for (int e = 0; e < g.edges.size; ++e)
      if (g.src(e) == v && --indeg[static_cast<size_t>(g.tgt(e))] == 0)
        ready.push_back(g.tgt(e));
  }
  if (seen != n)
    throw StructuralError("free category: the graph has a directed cycle");

  FreeCat out;
  out.graph = g;
  std::vector<int> mdom, mcod;
  auto add_path = [&](int dom, int cod, std::vector<int> edges) {
    int idx = static_cast<int>(out.paths.size());
    out.path_of[{dom, edges}] = idx;
    out.paths.push_back(std::move(edges));
    mdom.push_back(dom);
    mcod.push_back(cod);
    return idx;
  };
  for (int v = 0; v < n; ++v) add_path(v, v, {});
  std::vector<int> frontier;
  for (int e = 0; e < g.edges.size; ++e)
    frontier.push_back(add_path(g.src(e), g.tgt(e), {e}));
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int p : frontier)
      for (int e = 0; e < g.edges.size; ++e) {
        if (g.src(e) != mcod[static_cast<size_t>(p)]) continue;
        auto edges = out.paths[static_cast<size_t>(p)];
        edges.push_back(e);
        next.push_back(
            add_path(mdom[static_cast<size_t>(p)], g.tgt(e), std::move(edges)));
      }
    frontier = std::move(next);
  }
  std::vector<int> ids;
  for (int v = 0; v < n; ++v) ids.push_back(v);
  std::map<std::pair<int, int>, int> comp;
  const int m = static_cast<int>(out.paths.size());
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (mcod[static_cast<size_t>(p)] != mdom[static_cast<size_t>(q)])
        continue;
      auto edges = out.paths[static_cast<size_t>(p)];
      edges.insert(edges.end(), out.paths[static_cast<size_t>(q)].begin(),
                   out.paths[static_cast<size_t>(q)].end());
      comp[{p, q}] =
          out.path_of.at({mdom[static_cast<size_t>(p)], std::move(edges)});
    }
  out.cat = FinCat(FinSet{n}, std::move(mdom), std::move(mcod), std::move(ids),
                   std::move(comp));
  return out;
}

FinFunctor free_functor(const FreeCat& d, const FreeCat& c,
                        const GraphHom& h) {
  if (!(h.dom == d.graph) || !(h.cod == c.graph))
    throw BoundaryError(
        "free functor: the graph morphism does not match the free categories");
  std::vector<int> mors;
  for (int p = 0; p < d.cat.mor_count(); ++p) {
    std::vector<int> edges;
    for (int e : d.paths[static_cast<size_t>(p)]) edges.push_back(h.emap(e));
    mors.push_back(c.path_of.at(
        {h.vmap(d.cat.mor_dom[static_cast<size_t>(p)]), std::move(edges)}));
  }
  return FinFunctor(d.cat, c.cat, h.vmap.table, std::move(mors));
}

FreePushout pushout_free_cat(const FreeCat& x, const FreeCat& y,
                             const GraphHom& ix, const GraphHom& iy) {
  if (!(ix.dom == iy.dom) || !(ix.cod == x.graph) || !(iy.cod == y.graph))
    throw BoundaryError("free pushout: graph legs do not line up");
  auto w = pushout(ix, iy);
  FreeCat z;
  try {
    z = free_category(w.apex);
  } catch (const StructuralError&) {
    throw StructuralError(
        "free pushout: the glued graph has a directed cycle");
  }
  auto cl = free_functor(x, z, w.ia);
  auto cr = free_functor(y, z, w.ib);
  return FreePushout{std::move(z), std::move(cl), std::move(cr)};
}

CommaCat comma_category(const FinFunctor& i, const FinFunctor& o) {
  if (!(i.cod == o.cod))
    throw BoundaryError("comma: the functors do not share a codomain");
  const FinCat& a = i.dom;
  const FinCat& b = o.dom;
  const FinCat& x = i.cod;
  CommaCat out;
  out.i = i;
  out.o = o;
  for (int oa = 0; oa < a.objects.size; ++oa)
    for (int ob = 0; ob < b.objects.size; ++ob)
      for (int f = 0; f < x.mor_count(); ++f) {
        if (x.mor_dom[static_cast<size_t>(f)] != i.ob(oa) ||
            x.mor_cod[static_cast<size_t>(f)] != o.ob(ob))
          continue;
        out.ob_of[{oa, f, ob}] = static_cast<int>(out.obs.size());
        out.obs.push_back({oa, f, ob});
      }
  std::vector<int> mdom, mcod;
  const int nobs = static_cast<int>(out.obs.size());
  for (int s = 0; s < nobs; ++s)
    for (int t = 0; t < nobs; ++t) {
      const auto& so = out.obs[static_cast<size_t>(s)];
      const auto& to = out.obs[static_cast<size_t>(t)];
      for (int h = 0; h < a.mor_count(); ++h) {
        if (a.mor_dom[static_cast<size_t>(h)] != so[0] ||
            a.mor_cod[static_cast<size_t>(h)] != to[0])
          continue;
        for (int k = 0; k < b.mor_count(); ++k) {
          if (b.mor_dom[static_cast<size_t>(k)] != so[2] ||
              b.mor_cod[static_cast<size_t>(k)] != to[2])
            continue;
          if (x.comp(i.mor(h), to[1]) != x.comp(so[1], o.mor(k))) continue;
          out.mor_of[{s, t, h, k}] = static_cast<int>(out.mors.size());
          out.mors.push_back({s, t, h, k});
          mdom.push_back(s);
          mcod.push_back(t);
        }
      }
    }
  std::vector<int> ids;
  for (int s = 0; s < nobs; ++s) {
    const auto& so = out.obs[static_cast<size_t>(s)];
    ids.push_back(out.mor_of.at({s, s, a.id(so[0]), b.id(so[2])}));
  }
  std::map<std::pair<int, int>, int> comp;
  const int m = static_cast<int>(out.mors.size());
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = 0; e2 < m; ++e2) {
      const auto& m1 = out.mors[static_cast<size_t>(e1)];
      const auto& m2 = out.mors[static_cast<size_t>(e2)];
      if (m1[1] != m2[0]) continue;
      comp[{e1, e2}] = out.mor_of.at(
          {m1[0], m2[1], a.comp(m1[2], m2[2]), b.comp(m1[3], m2[3])});
    }
  FinCat cat(FinSet{nobs}, std::move(mdom), std::move(mcod), std::move(ids),
             std::move(comp));
  std::vector<int> pa_ob, pb_ob, pa_mor, pb_mor;
  for (const auto& so : out.obs) {
    pa_ob.push_back(so[0]);
    pb_ob.push_back(so[2]);
  }
  for (const auto& mo : out.mors) {
    pa_mor.push_back(mo[2]);
    pb_mor.push_back(mo[3]);
  }
  FinFunctor pa(cat, a, std::move(pa_ob), std::move(pa_mor));
  FinFunctor pb(cat, b, std::move(pb_ob), std::move(pb_mor));
  out.span = make_cat_span(std::move(pa), std::move(pb));
  return out;
}

CatSpanMap comma_on_map(const CommaCat& d, const CommaCat& c,
                        const FinFunctor& h, const FinFunctor& f,
                        const FinFunctor& k) {
  if (!(compose(d.i, f) == compose(h, c.i)) ||
      !(compose(d.o, f) == compose(k, c.o)))
    throw BoundaryError("comma map: the cospan squares do not commute");
  std::vector<int> obs, mors;
  for (const auto& so : d.obs)
    obs.push_back(c.ob_of.at({h.ob(so[0]), f.mor(so[1]), k.ob(so[2])}));
  for (const auto& mo : d.mors)
    mors.push_back(c.mor_of.at({obs[static_cast<size_t>(mo[0])],
                                obs[static_cast<size_t>(mo[1])],
                                h.mor(mo[2]), k.mor(mo[3])}));
  FinFunctor fx(d.span.apex, c.span.apex, std::move(obs), std::move(mors));
  return make_cat_span_map(d.span, c.span, h, std::move(fx), k);
}

CommaLaxator comma_laxator(const CommaCat& m, const CommaCat& n,
                           const CommaCat& comp, const FinFunctor& ix,
                           const FinFunctor& iy) {
  if (!(m.o.dom == n.i.dom))
    throw BoundaryError("comma laxator: the cospans do not share a foot");
  if (!(ix.dom == m.i.cod) || !(iy.dom == n.i.cod) || !(ix.cod == iy.cod) ||
      !(compose(m.o, ix) == compose(n.i, iy)) ||
      !(comp.i == compose(m.i, ix)) || !(comp.o == compose(n.o, iy)))
    throw BoundaryError(
        "comma laxator: composite legs do not match the gluing");
  const FinCat& z = ix.cod;
  auto pb = pullback_cat(m.span.leg_r, n.span.leg_l);
  std::vector<int> obs, mors;
  for (const auto& p : pb.obs) {
    const auto& so = m.obs[static_cast<size_t>(p[0])];
    const auto& to = n.obs[static_cast<size_t>(p[1])];
    obs.push_back(comp.ob_of.at(
        {so[0], z.comp(ix.mor(so[1]), iy.mor(to[1])), to[2]}));
  }
  for (size_t e = 0; e < pb.mors.size(); ++e) {
    const auto& mu = m.mors[static_cast<size_t>(pb.mors[e][0])];
    const auto& nu = n.mors[static_cast<size_t>(pb.mors[e][1])];
    int ds = pb.cat.mor_dom[e];
    int cs = pb.cat.mor_cod[e];
    mors.push_back(comp.mor_of.at({obs[static_cast<size_t>(ds)],
                                   obs[static_cast<size_t>(cs)], mu[2],
                                   nu[3]}));
  }
  FinFunctor map(pb.cat, comp.span.apex, std::move(obs), std::move(mors));
  return CommaLaxator{std::move(pb), std::move(map)};
}

FinFunctor comma_unitor(const CommaCat& c) {
  const FinCat& a = c.i.dom;
  if (!(c.i == identity(a)) || !(c.o == identity(a)))
    throw BoundaryError("comma unitor: the comma must be over identity legs");
  std::vector<int> obs, mors;
  for (int x = 0; x < a.objects.size; ++x)
    obs.push_back(c.ob_of.at({x, a.id(x), x}));
  for (int h = 0; h < a.mor_count(); ++h)
    mors.push_back(c.mor_of.at(
        {obs[static_cast<size_t>(a.mor_dom[static_cast<size_t>(h)])],
         obs[static_cast<size_t>(a.mor_cod[static_cast<size_t>(h)])], h, h}));
  return FinFunctor(a, c.span.apex, std::move(obs), std::move(mors));
}

std::string show(const FinCat& a) {
  return "cat(" + std::to_string(a.objects.size) + " obs, " +
         std::to_string(a.mor_count()) + " mors)";
}

std::string show(const FinFunctor& f) {
  std::string s = "functor[";
  for (size_t i = 0; i < f.ob_map.size(); ++i)
    s += (i ? " " : "") + std::to_string(f.ob_map[i]);
  s += "|";
  for (size_t i = 0; i < f.mor_map.size(); ++i)
    s += (i ? " " : "") + std::to_string(f.mor_map[i]);
  return s + "]";
}

FreeFunctor make_free_functor(const FreeCat& d, const FreeCat& c,
                              GraphHom h) {
  auto fun = free_functor(d, c, h);
  return FreeFunctor{d, c, std::move(h), std::move(fun)};
}

FreeFunctor FreeCatCat::comp(const Arr& f, const Arr& g) {
  if (!(f.cod == g.dom))
    throw BoundaryError("free functor composition: middle categories differ");
  return make_free_functor(f.dom, g.cod, compose(f.hom, g.hom));
}

Coprod<FreeCat, FreeFunctor> FreeCatCat::coprod(const Ob& a, const Ob& b) {
  auto w = coproduct(a.graph, b.graph);
  FreeCat s = free_category(w.sum);
  auto inl = make_free_functor(a, s, w.inl);
  auto inr = make_free_functor(b, s, w.inr);
  return Coprod<Ob, Arr>{std::move(s), std::move(inl), std::move(inr)};
}

FreeFunctor FreeCatCat::copr(const Arr& f, const Arr& g,
                             const Coprod<Ob, Arr>& w) {
  auto h = copair(f.hom, g.hom,
                  Coprod<Graph, GraphHom>{w.sum.graph, w.inl.hom, w.inr.hom});
  return make_free_functor(w.sum, f.cod, std::move(h));
}

FreeFunctor FreeCatCat::initial_arrow(const Ob& a) {
  return make_free_functor(initial(), a, bang(a.graph));
}

PushoutData<FreeCat, FreeFunctor> FreeCatCat::po(const Arr& f, const Arr& g) {
  if (!(f.dom == g.dom))
    throw BoundaryError("free pushout: the legs do not share a domain");
  auto w = pushout(f.hom, g.hom);
  FreeCat z;
  try {
    z = free_category(w.apex);
  } catch (const StructuralError&) {
    throw StructuralError(
        "free pushout: the glued graph has a directed cycle");
  }
  auto ia = make_free_functor(f.cod, z, std::move(w.ia));
  auto ib = make_free_functor(g.cod, z, std::move(w.ib));
  return PushoutData<Ob, Arr>{std::move(z), std::move(ia), std::move(ib)};
}

FreeFunctor FreeCatCat::po_copair(const PushoutData<Ob, Arr>& w, const Arr& p,
                                  const Arr& q) {
  auto h = pushout_copair(
      PushoutData<Graph, GraphHom>{w.apex.graph, w.ia.hom, w.ib.hom}, p.hom,
      q.hom);
  return make_free_functor(w.apex, p.cod, std::move(h));
}

std::optional<FreeFunctor> FreeCatCat::inverse(const Arr& f) {
  auto inv = try_inverse(f.hom);
  if (!inv) return std::nullopt;
  return make_free_functor(f.cod, f.dom, std::move(*inv));
}

std::vector<FreeFunctor> FreeCatCat::arrows_between(const Ob& a, const Ob& b) {
  std::vector<Arr> out;
  for (auto& h : all_graph_homs(a.graph, b.graph))
    out.push_back(make_free_functor(a, b, std::move(h)));
  return out;
}

}  // namespace ocsp

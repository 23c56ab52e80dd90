#include "ocsp/decorated.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ocsp/checkers.hpp"
#include "ocsp/error.hpp"
#include "ocsp/structured.hpp"

namespace ocsp {

std::vector<Graph> graphs_on(const FinSet& vertices, int max_edges) {
  const int n = vertices.size;
  const int cells = n * n;
  std::vector<Graph> out;
  for (int k = 0; k <= max_edges; ++k) {
    if (k > 0 && cells == 0) break;
    std::vector<int> word(static_cast<size_t>(k), 0);
    while (true) {
      std::vector<int> src, tgt;
      src.reserve(word.size());
      tgt.reserve(word.size());
      for (int d : word) {
        src.push_back(d / n);
        tgt.push_back(d % n);
      }
      out.push_back(Graph(vertices, FinSet{k}, std::move(src), std::move(tgt)));
      int i = k - 1;
      while (i >= 0 && word[static_cast<size_t>(i)] == cells - 1) {
        word[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++word[static_cast<size_t>(i)];
    }
  }
  return out;
}

namespace {

std::vector<int> graph_word(const Graph& g) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(2 * g.edges.size));
  for (int e = 0; e < g.edges.size; ++e) {
    w.push_back(g.src(e));
    w.push_back(g.tgt(e));
  }
  return w;
}

// Edge tables of the identity-on-vertices homomorphisms dom -> cod, in
// lexicographic order.
std::vector<std::vector<int>> edge_tables(const Graph& dom, const Graph& cod) {
  std::vector<std::vector<int>> cands(static_cast<size_t>(dom.edges.size));
  for (int e = 0; e < dom.edges.size; ++e)
    for (int f = 0; f < cod.edges.size; ++f)
      if (cod.src(f) == dom.src(e) && cod.tgt(f) == dom.tgt(e))
        cands[static_cast<size_t>(e)].push_back(f);
  for (const auto& c : cands)
    if (c.empty()) return {};
  std::vector<std::vector<int>> out;
  std::vector<size_t> pick(cands.size(), 0);
  while (true) {
    std::vector<int> t(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) t[i] = cands[i][pick[i]];
    out.push_back(std::move(t));
    size_t i = cands.size();
    while (i > 0 && pick[i - 1] + 1 == cands[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return out;
}

struct GraphFiber {
  std::vector<Graph> obs;
  std::map<std::vector<int>, int> ob_of;
  std::vector<std::array<int, 2>> ends;
  std::vector<std::vector<int>> emaps;
  std::map<std::tuple<int, int, std::vector<int>>, int> mor_of;
  FinCat cat;
};

GraphFiber graph_fiber(const FinSet& n, int max_edges) {
  GraphFiber fb;
  fb.obs = graphs_on(n, max_edges);
  for (size_t i = 0; i < fb.obs.size(); ++i)
    fb.ob_of[graph_word(fb.obs[i])] = static_cast<int>(i);
  std::vector<int> mdom, mcod;
  std::vector<int> ids(fb.obs.size(), -1);
  for (size_t i = 0; i < fb.obs.size(); ++i)
    for (size_t j = 0; j < fb.obs.size(); ++j)
      for (auto& t : edge_tables(fb.obs[i], fb.obs[j])) {
        int idx = static_cast<int>(fb.emaps.size());
        fb.mor_of[{static_cast<int>(i), static_cast<int>(j), t}] = idx;
        fb.ends.push_back({static_cast<int>(i), static_cast<int>(j)});
        fb.emaps.push_back(std::move(t));
        mdom.push_back(static_cast<int>(i));
        mcod.push_back(static_cast<int>(j));
      }
  for (size_t i = 0; i < fb.obs.size(); ++i) {
    std::vector<int> iota(static_cast<size_t>(fb.obs[i].edges.size));
    std::iota(iota.begin(), iota.end(), 0);
    ids[i] = fb.mor_of.at({static_cast<int>(i), static_cast<int>(i), iota});
  }
  std::map<std::pair<int, int>, int> comp;
  const int mor_count = static_cast<int>(fb.emaps.size());
  for (int a = 0; a < mor_count; ++a)
    for (int b = 0; b < mor_count; ++b) {
      if (fb.ends[static_cast<size_t>(a)][1] !=
          fb.ends[static_cast<size_t>(b)][0])
        continue;
      const auto& ea = fb.emaps[static_cast<size_t>(a)];
      const auto& eb = fb.emaps[static_cast<size_t>(b)];
      std::vector<int> c(ea.size());
      for (size_t e = 0; e < ea.size(); ++e)
        c[e] = eb[static_cast<size_t>(ea[e])];
      comp[{a, b}] = fb.mor_of.at({fb.ends[static_cast<size_t>(a)][0],
                                   fb.ends[static_cast<size_t>(b)][1], c});
    }
  fb.cat = FinCat(FinSet{static_cast<int>(fb.obs.size())}, std::move(mdom),
                  std::move(mcod), std::move(ids), std::move(comp));
  return fb;
}

struct SubsetFiber {
  FinCat cat;
  std::map<std::pair<int, int>, int> mor_of;  // (S, T) with S contained in T
};

SubsetFiber subset_fiber(int n) {
  const int count = 1 << n;
  SubsetFiber fb;
  std::vector<int> mdom, mcod;
  std::vector<int> ids(static_cast<size_t>(count), -1);
  for (int s = 0; s < count; ++s)
    for (int t = 0; t < count; ++t) {
      if ((s | t) != t) continue;
      int idx = static_cast<int>(mdom.size());
      fb.mor_of[{s, t}] = idx;
      mdom.push_back(s);
      mcod.push_back(t);
      if (s == t) ids[static_cast<size_t>(s)] = idx;
    }
  std::map<std::pair<int, int>, int> comp;
  for (const auto& [st, i] : fb.mor_of)
    for (const auto& [tu, j] : fb.mor_of) {
      if (st.second != tu.first) continue;
      comp[{i, j}] = fb.mor_of.at({st.first, tu.second});
    }
  fb.cat = FinCat(FinSet{count}, std::move(mdom), std::move(mcod),
                  std::move(ids), std::move(comp));
  return fb;
}

int image_mask(const FinFunction& f, int s) {
  int out = 0;
  for (int i = 0; i < f.dom.size; ++i)
    if ((s >> i) & 1) out |= 1 << f(i);
  return out;
}

}  // namespace

Report check_monoidal_cat_functor(const MonoidalCatFunctor& F, int max_size) {
  Report rep;
  MonDblCat mc;
  MonDblFinSet ms;
  std::vector<FinSet> sets;
  for (int k = 0; k <= max_size; ++k) sets.push_back(FinSet{k});
  std::vector<FinFunction> arrows;
  for (const auto& a : sets)
    for (const auto& b : sets)
      for (const auto& f : all_functions(a, b)) arrows.push_back(f);

  for (const auto& a : sets)
    detail::guarded(rep, "fiber functor preserves identities", show(a), [&] {
      rep.check(F.arr(identity(a)) == identity(F.ob(a)),
                "fiber functor preserves identities", show(a));
    });
  for (const auto& f : arrows)
    detail::guarded(rep, "fiber functor respects endpoints", show(f), [&] {
      auto ff = F.arr(f);
      rep.check(ff.dom == F.ob(f.dom) && ff.cod == F.ob(f.cod),
                "fiber functor respects endpoints", show(f));
    });
  for (const auto& f : arrows)
    for (const auto& g : arrows) {
      if (!(f.cod == g.dom)) continue;
      std::string w = show(f) + ";" + show(g);
      detail::guarded(rep, "fiber functor preserves composition", w, [&] {
        rep.check(F.arr(compose(f, g)) == compose(F.arr(f), F.arr(g)),
                  "fiber functor preserves composition", w);
      });
    }

  detail::guarded(rep, "unit frame", "", [&] {
    auto u = F.unit();
    rep.check(u.dom == terminal_cat() && u.cod == F.ob(FinSet{0}),
              "unit frame", "");
  });
  for (const auto& a : sets)
    for (const auto& b : sets) {
      std::string w = show(a) + "," + show(b);
      detail::guarded(rep, "comparison frames", w, [&] {
        auto l = F.lax(a, b);
        rep.check(l.dom == product_cat(F.ob(a), F.ob(b)).cat &&
                      l.cod == F.ob(coproduct(a, b).sum),
                  "comparison frames", w);
      });
    }
  for (const auto& f : arrows)
    for (const auto& g : arrows) {
      std::string w = show(f) + "," + show(g);
      detail::guarded(rep, "comparison is natural", w, [&] {
        auto lhs = compose(mc.hcomp(F.arr(f), F.arr(g)), F.lax(f.cod, g.cod));
        auto rhs = compose(F.lax(f.dom, g.dom), F.arr(ms.hcomp(f, g)));
        rep.check(lhs == rhs, "comparison is natural", w);
      });
    }
  for (const auto& a : sets)
    for (const auto& b : sets)
      for (const auto& c : sets) {
        std::string w = show(a) + "," + show(b) + "," + show(c);
        detail::guarded(rep, "comparison associativity", w, [&] {
          auto ab = coproduct(a, b).sum;
          auto bc = coproduct(b, c).sum;
          auto lhs =
              compose(mc.hcomp(F.lax(a, b), identity(F.ob(c))), F.lax(ab, c));
          auto rhs =
              compose(mc.hcomp(identity(F.ob(a)), F.lax(b, c)), F.lax(a, bc));
          rep.check(lhs == rhs, "comparison associativity", w);
        });
      }
  for (const auto& a : sets) {
    detail::guarded(rep, "comparison left unit", show(a), [&] {
      auto lhs =
          compose(mc.hcomp(F.unit(), identity(F.ob(a))), F.lax(FinSet{0}, a));
      rep.check(lhs == identity(F.ob(a)), "comparison left unit", show(a));
    });
    detail::guarded(rep, "comparison right unit", show(a), [&] {
      auto rhs =
          compose(mc.hcomp(identity(F.ob(a)), F.unit()), F.lax(a, FinSet{0}));
      rep.check(rhs == identity(F.ob(a)), "comparison right unit", show(a));
    });
  }
  return rep;
}

MonoidalCatFunctor terminal_decoration_functor() {
  MonoidalCatFunctor F;
  F.name = "terminal";
  F.ob = [](const FinSet&) { return terminal_cat(); };
  F.arr = [](const FinFunction&) { return identity(terminal_cat()); };
  F.lax = [](const FinSet&, const FinSet&) {
    auto pd = product_cat(terminal_cat(), terminal_cat());
    return FinFunctor(pd.cat, terminal_cat(), {0}, {0});
  };
  F.unit = []() { return identity(terminal_cat()); };
  return F;
}

MonoidalCatFunctor subset_decoration_functor() {
  MonoidalCatFunctor F;
  F.name = "subsets";
  F.ob = [](const FinSet& a) { return subset_fiber(a.size).cat; };
  F.arr = [](const FinFunction& f) {
    auto fd = subset_fiber(f.dom.size);
    auto fc = subset_fiber(f.cod.size);
    std::vector<int> obs(static_cast<size_t>(fd.cat.objects.size));
    for (int s = 0; s < fd.cat.objects.size; ++s)
      obs[static_cast<size_t>(s)] = image_mask(f, s);
    std::vector<int> mors(static_cast<size_t>(fd.cat.mor_count()));
    for (int k = 0; k < fd.cat.mor_count(); ++k)
      mors[static_cast<size_t>(k)] = fc.mor_of.at(
          {obs[static_cast<size_t>(fd.cat.mor_dom[static_cast<size_t>(k)])],
           obs[static_cast<size_t>(fd.cat.mor_cod[static_cast<size_t>(k)])]});
    return FinFunctor(fd.cat, fc.cat, std::move(obs), std::move(mors));
  };
  F.lax = [](const FinSet& a, const FinSet& b) {
    auto fa = subset_fiber(a.size);
    auto fb = subset_fiber(b.size);
    auto fc = subset_fiber(a.size + b.size);
    auto pd = product_cat(fa.cat, fb.cat);
    std::vector<int> obs(pd.obs.size());
    for (size_t i = 0; i < pd.obs.size(); ++i)
      obs[i] = pd.obs[i][0] | (pd.obs[i][1] << a.size);
    std::vector<int> mors(pd.mors.size());
    for (int k = 0; k < pd.cat.mor_count(); ++k)
      mors[static_cast<size_t>(k)] = fc.mor_of.at(
          {obs[static_cast<size_t>(pd.cat.mor_dom[static_cast<size_t>(k)])],
           obs[static_cast<size_t>(pd.cat.mor_cod[static_cast<size_t>(k)])]});
    return FinFunctor(pd.cat, fc.cat, std::move(obs), std::move(mors));
  };
  F.unit = []() {
    return FinFunctor(terminal_cat(), subset_fiber(0).cat, {0}, {0});
  };
  return F;
}

MonoidalCatFunctor graph_decoration_functor(int max_edges) {
  MonoidalCatFunctor F;
  F.name = "graphs<=" + std::to_string(max_edges);
  F.ob = [max_edges](const FinSet& a) { return graph_fiber(a, max_edges).cat; };
  F.arr = [max_edges](const FinFunction& f) {
    auto fd = graph_fiber(f.dom, max_edges);
    auto fc = graph_fiber(f.cod, max_edges);
    std::vector<int> obs(fd.obs.size());
    for (size_t i = 0; i < fd.obs.size(); ++i) {
      std::vector<int> w;
      w.reserve(static_cast<size_t>(2 * fd.obs[i].edges.size));
      for (int e = 0; e < fd.obs[i].edges.size; ++e) {
        w.push_back(f(fd.obs[i].src(e)));
        w.push_back(f(fd.obs[i].tgt(e)));
      }
      obs[i] = fc.ob_of.at(w);
    }
    std::vector<int> mors(fd.emaps.size());
    for (size_t k = 0; k < fd.emaps.size(); ++k)
      mors[k] = fc.mor_of.at({obs[static_cast<size_t>(fd.ends[k][0])],
                              obs[static_cast<size_t>(fd.ends[k][1])],
                              fd.emaps[k]});
    return FinFunctor(fd.cat, fc.cat, std::move(obs), std::move(mors));
  };
  F.lax = [max_edges](const FinSet& a, const FinSet& b) {
    auto fa = graph_fiber(a, max_edges);
    auto fb = graph_fiber(b, max_edges);
    auto fc = graph_fiber(FinSet{a.size + b.size}, max_edges);
    auto pd = product_cat(fa.cat, fb.cat);
    std::vector<int> obs(pd.obs.size());
    for (size_t i = 0; i < pd.obs.size(); ++i) {
      const Graph& g = fa.obs[static_cast<size_t>(pd.obs[i][0])];
      const Graph& h = fb.obs[static_cast<size_t>(pd.obs[i][1])];
      if (g.edges.size + h.edges.size > max_edges)
        throw UnsupportedError(
            "graph decorations: edge bound " + std::to_string(max_edges) +
            " cannot absorb the disjoint union of two fiber objects");
      std::vector<int> w;
      for (int e = 0; e < g.edges.size; ++e) {
        w.push_back(g.src(e));
        w.push_back(g.tgt(e));
      }
      for (int e = 0; e < h.edges.size; ++e) {
        w.push_back(a.size + h.src(e));
        w.push_back(a.size + h.tgt(e));
      }
      obs[i] = fc.ob_of.at(w);
    }
    std::vector<int> mors(pd.mors.size());
    for (size_t k = 0; k < pd.mors.size(); ++k) {
      const auto& eg = fa.emaps[static_cast<size_t>(pd.mors[k][0])];
      const auto& eh = fb.emaps[static_cast<size_t>(pd.mors[k][1])];
      int off = fa.obs[static_cast<size_t>(
                           fa.ends[static_cast<size_t>(pd.mors[k][0])][1])]
                    .edges.size;
      std::vector<int> block(eg);
      for (int v : eh) block.push_back(off + v);
      mors[k] = fc.mor_of.at(
          {obs[static_cast<size_t>(pd.cat.mor_dom[k])],
           obs[static_cast<size_t>(pd.cat.mor_cod[k])], block});
    }
    return FinFunctor(pd.cat, fc.cat, std::move(obs), std::move(mors));
  };
  F.unit = [max_edges]() {
    auto f0 = graph_fiber(FinSet{0}, max_edges);
    return FinFunctor(terminal_cat(), f0.cat, {0}, {f0.cat.id(0)});
  };
  return F;
}

MonoidalFinSetMap doubling_monoidal_map() {
  MonoidalFinSetMap P;
  P.name = "double";
  P.ob = [](const FinSet& a) { return FinSet{2 * a.size}; };
  P.arr = [](const FinFunction& f) { return MonDblFinSet{}.hcomp(f, f); };
  P.lax = [](const FinSet& a, const FinSet& b) {
    const int as = a.size, bs = b.size;
    std::vector<int> t(static_cast<size_t>(2 * (as + bs)));
    for (int i = 0; i < as; ++i) {
      t[static_cast<size_t>(i)] = i;
      t[static_cast<size_t>(as + i)] = as + bs + i;
    }
    for (int i = 0; i < bs; ++i) {
      t[static_cast<size_t>(2 * as + i)] = as + i;
      t[static_cast<size_t>(2 * as + bs + i)] = 2 * as + bs + i;
    }
    return FinFunction(FinSet{2 * as + 2 * bs}, FinSet{2 * (as + bs)},
                       std::move(t));
  };
  P.unit = []() { return identity(FinSet{0}); };
  return P;
}

MonoidalCatFunctor precompose_monoidal(const MonoidalFinSetMap& P,
                                       const MonoidalCatFunctor& F) {
  MonoidalCatFunctor H;
  H.name = F.name + "(" + P.name + ")";
  H.ob = [P, F](const FinSet& a) { return F.ob(P.ob(a)); };
  H.arr = [P, F](const FinFunction& f) { return F.arr(P.arr(f)); };
  H.lax = [P, F](const FinSet& a, const FinSet& b) {
    return compose(F.lax(P.ob(a), P.ob(b)), F.arr(P.lax(a, b)));
  };
  H.unit = [P, F]() { return compose(F.unit(), F.arr(P.unit())); };
  return H;
}

DblFunctor<MonDblFinSet, MonDblFinSet> mon_dbl(const MonoidalFinSetMap& P) {
  DblFunctor<MonDblFinSet, MonDblFinSet> G;
  G.name = P.name;
  G.ob = [](const Unit&) { return Unit{}; };
  G.arr = [](const Unit&) { return Unit{}; };
  G.pro = [P](const FinSet& m) { return P.ob(m); };
  G.cell = [P](const FinFunction& c) { return P.arr(c); };
  G.laxator = [P](const FinSet& m, const FinSet& n) { return P.lax(m, n); };
  G.unitor = [P](const Unit&) { return P.unit(); };
  return G;
}

DblFunctor<MonDblFinSet, MonDblCat> mon_dbl(const MonoidalCatFunctor& F) {
  DblFunctor<MonDblFinSet, MonDblCat> G;
  G.name = F.name;
  G.ob = [](const Unit&) { return Unit{}; };
  G.arr = [](const Unit&) { return Unit{}; };
  G.pro = [F](const FinSet& m) { return F.ob(m); };
  G.cell = [F](const FinFunction& c) { return F.arr(c); };
  G.laxator = [F](const FinSet& m, const FinSet& n) { return F.lax(m, n); };
  G.unitor = [F](const Unit&) { return F.unit(); };
  return G;
}

DblFunctor<CospanDbl<FinSetCat>, MonDblFinSet> apex_functor() {
  using Csp = CospanDbl<FinSetCat>;
  DblFunctor<Csp, MonDblFinSet> A;
  A.name = "apex";
  A.ob = [](const FinSet&) { return Unit{}; };
  A.arr = [](const FinFunction&) { return Unit{}; };
  A.pro = [](const Cospan<FinSetCat>& m) { return m.apex; };
  A.cell = [](const CospanCell<FinSetCat>& c) { return c.map_apex; };
  A.laxator = [](const Cospan<FinSetCat>& m, const Cospan<FinSetCat>& n) {
    auto data = Csp{}.compose_data(m, n);
    return copair(data.w.ia, data.w.ib, coproduct(m.apex, n.apex));
  };
  A.unitor = [](const FinSet& a) { return bang(a); };
  return A;
}

DblFunctor<MonDblCat, SpanCatDbl> apex_star() {
  DblFunctor<MonDblCat, SpanCatDbl> S;
  S.name = "star";
  auto span_of = [](const FinCat& c) {
    return CatSpan{c, bang_functor(c), bang_functor(c)};
  };
  S.ob = [](const Unit&) { return terminal_cat(); };
  S.arr = [](const Unit&) { return identity(terminal_cat()); };
  S.pro = [span_of](const FinCat& c) { return span_of(c); };
  S.cell = [span_of](const FinFunctor& h) {
    return SpanCatDbl{}.make_cell(span_of(h.dom), span_of(h.cod),
                                  identity(terminal_cat()), h,
                                  identity(terminal_cat()));
  };
  auto laxator = [span_of](const FinCat& m, const FinCat& n) {
    SpanCatDbl sd;
    auto top = sd.pro_comp(span_of(m), span_of(n));
    auto bot = span_of(product_cat(m, n).cat);
    if (!(top == bot))
      throw StructuralError(
          "apex star: chosen product and pullback over the point disagree");
    return sd.vid(bot);
  };
  S.laxator = laxator;
  S.laxator_inv = laxator;
  auto unitor = [span_of](const Unit&) {
    SpanCatDbl sd;
    auto one = sd.pro_id(terminal_cat());
    if (!(one == span_of(terminal_cat())))
      throw StructuralError("apex star: the unit span is not the point");
    return sd.vid(one);
  };
  S.unitor = unitor;
  S.unitor_inv = unitor;
  return S;
}

DecoratedDbl dcsp(const MonoidalCatFunctor& F) {
  auto inner = compose_functors(MonDblCat{}, apex_functor(), mon_dbl(F));
  auto chain = compose_functors(SpanCatDbl{}, inner, apex_star());
  chain.name = "dcsp(" + F.name + ")";
  return DecoratedDbl{CatValuedLax<CospanDbl<FinSetCat>>{
      CospanDbl<FinSetCat>{}, std::move(chain)}};
}

namespace {

Graph relabel_graph(const Graph& s, const FinFunction& w) {
  std::vector<int> src, tgt;
  src.reserve(static_cast<size_t>(s.edges.size));
  tgt.reserve(static_cast<size_t>(s.edges.size));
  for (int e = 0; e < s.edges.size; ++e) {
    src.push_back(w(s.src(e)));
    tgt.push_back(w(s.tgt(e)));
  }
  return Graph(w.cod, s.edges, std::move(src), std::move(tgt));
}

}  // namespace

Graph GraphDecorationLax::cell_ob(const BCell& al, const Graph& s) const {
  return relabel_graph(s, al.map_apex);
}

GraphHom GraphDecorationLax::cell_mor(const BCell& al,
                                      const GraphHom& nu) const {
  return GraphHom(cell_ob(al, nu.dom), cell_ob(al, nu.cod),
                  identity(al.bottom.apex), nu.emap);
}

Graph GraphDecorationLax::lax_ob(const BPro& m, const BPro& n, const Graph& s,
                                 const Graph& t) const {
  auto w = base.compose_data(m, n).w;
  std::vector<int> src, tgt;
  src.reserve(static_cast<size_t>(s.edges.size + t.edges.size));
  tgt.reserve(static_cast<size_t>(s.edges.size + t.edges.size));
  for (int e = 0; e < s.edges.size; ++e) {
    src.push_back(w.ia(s.src(e)));
    tgt.push_back(w.ia(s.tgt(e)));
  }
  for (int e = 0; e < t.edges.size; ++e) {
    src.push_back(w.ib(t.src(e)));
    tgt.push_back(w.ib(t.tgt(e)));
  }
  return Graph(w.apex, FinSet{s.edges.size + t.edges.size}, std::move(src),
               std::move(tgt));
}

GraphHom GraphDecorationLax::lax_mor(const BPro& m, const BPro& n,
                                     const GraphHom& nu,
                                     const GraphHom& mu) const {
  Graph d = lax_ob(m, n, nu.dom, mu.dom);
  Graph c = lax_ob(m, n, nu.cod, mu.cod);
  std::vector<int> em;
  em.reserve(static_cast<size_t>(d.edges.size));
  for (int e = 0; e < nu.dom.edges.size; ++e) em.push_back(nu.emap(e));
  for (int e = 0; e < mu.dom.edges.size; ++e)
    em.push_back(nu.cod.edges.size + mu.emap(e));
  return GraphHom(d, c, identity(d.vertices),
                  FinFunction(d.edges, c.edges, std::move(em)));
}

std::vector<GraphHom> GraphDecorationLax::enum_pmors(const BPro& m) const {
  auto obs = enum_pobs(m);
  std::vector<GraphHom> out;
  for (const auto& g : obs)
    for (const auto& h : obs)
      for (auto& t : edge_tables(g, h))
        out.push_back(GraphHom(g, h, identity(m.apex),
                               FinFunction(g.edges, h.edges, std::move(t))));
  return out;
}

DecoratedGraphDbl dcsp_graphs(int max_edges) {
  return DecoratedGraphDbl{
      GraphDecorationLax{CospanDbl<FinSetCat>{}, max_edges}};
}

DecoratedCospan make_decorated(const Cospan<FinSetCat>& m, const Graph& s) {
  if (!(s.vertices == m.apex))
    throw BoundaryError(
        "decorated cospan: decoration vertices differ from the apex");
  return DecoratedCospan{m, s};
}

json to_json(const DecoratedCospan& d) {
  json out = to_json(d.cospan);
  json edges = json::array();
  for (int e = 0; e < d.decoration.edges.size; ++e)
    edges.push_back(json::array({d.decoration.src(e), d.decoration.tgt(e)}));
  out["decoration"] = json{{"edges", edges}};
  return out;
}

DecoratedCospan decorated_from_json(const json& j) {
  auto m = cospan_from_json(j);
  if (!j.contains("decoration") || !j["decoration"].is_object() ||
      !j["decoration"].contains("edges") || !j["decoration"]["edges"].is_array())
    throw BoundaryError("json: missing field 'decoration.edges'");
  std::vector<int> src, tgt;
  for (const auto& e : j["decoration"]["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw BoundaryError("json: decoration edges must be [src, tgt] pairs");
    src.push_back(e.at(0).get<int>());
    tgt.push_back(e.at(1).get<int>());
  }
  FinSet ecount{static_cast<int>(src.size())};
  Graph s(m.apex, ecount, std::move(src), std::move(tgt));
  return make_decorated(m, s);
}

Report open_graph_equivalence(int max_edges) {
  Report rep;
  const int max_foot = 2, max_apex = 3;
  CospanDbl<FinSetCat> base;
  DecoratedGraphDbl dg{GraphDecorationLax{base, max_edges}};
  StructuringFunctor<FinSetCat, GraphCat> L{
      "discrete", [](const FinSet& a) { return discrete(a); },
      [](const FinFunction& f) { return discrete_on(f); }};
  StructuredDbl<FinSetCat, GraphCat> sd{L};

  using DPro = GrothPro<GraphDecorationLax>;
  using SPro = StructuredCospan<FinSetCat, GraphCat>;

  auto psi = [&](const DPro& p) {
    GraphHom ll =
        graph_hom(discrete(p.m.foot_l), p.s, p.m.leg_l.table, {});
    GraphHom rr =
        graph_hom(discrete(p.m.foot_r), p.s, p.m.leg_r.table, {});
    return sd.make_pro(p.m.foot_l,
                       make_cospan<GraphCat>(discrete(p.m.foot_l), ll, p.s, rr,
                                             discrete(p.m.foot_r)),
                       p.m.foot_r);
  };
  auto psi_inv = [&](const SPro& q) {
    FinFunction l(q.a, q.carrier.apex.vertices, q.carrier.leg_l.vmap.table);
    FinFunction r(q.b, q.carrier.apex.vertices, q.carrier.leg_r.vmap.table);
    return dg.make_pro(
        make_cospan<FinSetCat>(q.a, l, q.carrier.apex.vertices, r, q.b),
        q.carrier.apex);
  };
  auto skey = [](const SPro& q) {
    return show(q.carrier.leg_l.vmap) + "|" + show(q.carrier.apex) + "|" +
           show(q.carrier.leg_r.vmap);
  };

  std::vector<DPro> dpros;
  for (int x = 0; x <= max_apex; ++x)
    for (int a = 0; a <= max_foot; ++a)
      for (int b = 0; b <= max_foot; ++b)
        for (const auto& l : all_functions(FinSet{a}, FinSet{x}))
          for (const auto& r : all_functions(FinSet{b}, FinSet{x})) {
            auto m =
                make_cospan<FinSetCat>(FinSet{a}, l, FinSet{x}, r, FinSet{b});
            for (const auto& s : graphs_on(m.apex, max_edges))
              dpros.push_back(dg.make_pro(m, s));
          }

  std::vector<SPro> spros;
  spros.reserve(dpros.size());
  std::set<std::string> keys;
  bool round_ok = true;
  detail::guarded(rep, "translation lands in structured cospans", "", [&] {
    for (const auto& p : dpros) {
      auto q = psi(p);
      keys.insert(skey(q));
      auto back = psi_inv(q);
      round_ok = round_ok && back.m == p.m && back.s == p.s;
      spros.push_back(std::move(q));
    }
    rep.check(spros.size() == dpros.size(),
              "translation lands in structured cospans",
              std::to_string(dpros.size()) + " proarrows");
  });
  rep.check(round_ok, "translation round trip",
            std::to_string(dpros.size()) + " proarrows");
  rep.check(keys.size() == dpros.size(), "translation is injective",
            std::to_string(keys.size()) + " distinct images");

  long scount = 0;
  for (int v = 0; v <= max_apex; ++v) {
    long legs = 0;
    for (int a = 0; a <= max_foot; ++a)
      for (int b = 0; b <= max_foot; ++b) {
        long la = 1, lb = 1;
        for (int i = 0; i < a; ++i) la *= v;
        for (int i = 0; i < b; ++i) lb *= v;
        legs += la * lb;
      }
    scount += legs * static_cast<long>(graphs_on(FinSet{v}, max_edges).size());
  }
  rep.check(scount == static_cast<long>(dpros.size()), "translation is onto",
            std::to_string(scount) + " structured proarrows");

  for (int a = 0; a <= max_foot; ++a) {
    FinSet fa{a};
    detail::guarded(rep, "translation preserves identities", show(fa), [&] {
      auto did = dg.pro_id(dg.make_ob(fa, Unit{}));
      rep.check(psi(did) == sd.pro_id(fa), "translation preserves identities",
                show(fa));
    });
  }

  bool comp_ok = true;
  long comp_count = 0;
  std::string comp_witness;
  detail::guarded(rep, "translation preserves composition", "", [&] {
    for (size_t i = 0; i < dpros.size(); ++i)
      for (size_t j = 0; j < dpros.size(); ++j) {
        if (!(dpros[i].m.foot_r == dpros[j].m.foot_l)) continue;
        auto dcomp = dg.pro_comp(dpros[i], dpros[j]);
        if (!(psi(dcomp) == sd.pro_comp(spros[i], spros[j]))) {
          comp_ok = false;
          if (comp_witness.empty())
            comp_witness = dg.show_pro(dpros[i]) + " ; " + dg.show_pro(dpros[j]);
        }
        ++comp_count;
      }
    rep.check(comp_ok, "translation preserves composition",
              comp_ok ? std::to_string(comp_count) + " composable pairs"
                      : comp_witness);
  });

  bool res_ok = true;
  long res_count = 0;
  detail::guarded(rep, "translation preserves restriction", "", [&] {
    for (size_t i = 0; i < dpros.size(); i += 7) {
      const auto& p = dpros[i];
      for (int a = 0; a <= max_foot; ++a)
        for (const auto& f : all_functions(FinSet{a}, p.m.foot_l))
          for (int b = 0; b <= max_foot; ++b)
            for (const auto& g : all_functions(FinSet{b}, p.m.foot_r)) {
              auto dres = dg.make_pro(base.restriction(f, g, p.m).pro, p.s);
              res_ok =
                  res_ok && psi(dres) == sd.restriction(f, g, spros[i]).pro;
              ++res_count;
            }
    }
    rep.check(res_ok, "translation preserves restriction",
              std::to_string(res_count) + " niches");
  });

  bool sum_ok = true;
  long sum_count = 0;
  detail::guarded(rep, "translation preserves coproducts", "", [&] {
    for (size_t i = 0; i < dpros.size(); i += 11)
      for (size_t j = 0; j < dpros.size(); j += 13) {
        auto dsum = dg.make_pro(base.pro_coproduct(dpros[i].m, dpros[j].m).sum,
                                coproduct(dpros[i].s, dpros[j].s).sum);
        sum_ok = sum_ok && psi(dsum) == sd.pro_coproduct(spros[i], spros[j]).sum;
        ++sum_count;
      }
    rep.check(sum_ok, "translation preserves coproducts",
              std::to_string(sum_count) + " pairs");
  });

  detail::guarded(rep, "edge gluing yields the two step path", "", [&] {
    FinSet one{1}, two{2};
    auto edge_cospan = make_cospan<FinSetCat>(
        one, FinFunction(one, two, {0}), two, FinFunction(one, two, {1}), one);
    Graph edge(two, FinSet{1}, {0}, {1});
    auto p = dg.make_pro(edge_cospan, edge);
    auto comp = dg.pro_comp(p, p);
    Graph path(FinSet{3}, FinSet{2}, {0, 1}, {1, 2});
    rep.check(comp.s == path && psi(comp) == sd.pro_comp(psi(p), psi(p)),
              "edge gluing yields the two step path", show(comp.s));
  });

  return rep;
}

DblFunctor<CospanDbl<GraphCat>, SpanCatDbl> comma_functor() {
  using Csp = CospanDbl<GraphCat>;
  DblFunctor<Csp, SpanCatDbl> F;
  F.name = "processes";
  auto comma_of = [](const Cospan<GraphCat>& m) {
    auto fa = free_category(m.foot_l);
    auto fx = free_category(m.apex);
    auto fb = free_category(m.foot_r);
    return comma_category(free_functor(fa, fx, m.leg_l),
                          free_functor(fb, fx, m.leg_r));
  };
  F.ob = [](const Graph& a) { return free_category(a).cat; };
  F.arr = [](const GraphHom& h) {
    return free_functor(free_category(h.dom), free_category(h.cod), h);
  };
  F.pro = [comma_of](const Cospan<GraphCat>& m) { return comma_of(m).span; };
  F.cell = [comma_of](const CospanCell<GraphCat>& al) {
    auto d = comma_of(al.top);
    auto c = comma_of(al.bottom);
    auto h = free_functor(free_category(al.top.foot_l),
                          free_category(al.bottom.foot_l), al.map_l);
    auto fx = free_functor(free_category(al.top.apex),
                           free_category(al.bottom.apex), al.map_apex);
    auto k = free_functor(free_category(al.top.foot_r),
                          free_category(al.bottom.foot_r), al.map_r);
    return SpanCell{d.span, c.span, comma_on_map(d, c, h, fx, k)};
  };
  F.laxator = [comma_of](const Cospan<GraphCat>& m, const Cospan<GraphCat>& n) {
    auto data = Csp{}.compose_data(m, n);
    auto cm = comma_of(m);
    auto cn = comma_of(n);
    auto cc = comma_of(data.comp);
    auto ix = free_functor(free_category(m.apex),
                           free_category(data.comp.apex), data.w.ia);
    auto iy = free_functor(free_category(n.apex),
                           free_category(data.comp.apex), data.w.ib);
    auto cl = comma_laxator(cm, cn, cc, ix, iy);
    SpanCatDbl sdd;
    auto top = sdd.pro_comp(cm.span, cn.span);
    return sdd.make_cell(top, cc.span, identity(cm.span.leg_l.cod), cl.map,
                         identity(cn.span.leg_r.cod));
  };
  F.unitor = [](const Graph& a) {
    auto fa = free_category(a);
    auto c = comma_category(identity(fa.cat), identity(fa.cat));
    SpanCatDbl sdd;
    return sdd.make_cell(sdd.pro_id(fa.cat), c.span, identity(fa.cat),
                         comma_unitor(c), identity(fa.cat));
  };
  return F;
}

ProcessDbl process_theories() {
  return ProcessDbl{
      CatValuedLax<CospanDbl<GraphCat>>{CospanDbl<GraphCat>{}, comma_functor()}};
}

}  // namespace ocsp

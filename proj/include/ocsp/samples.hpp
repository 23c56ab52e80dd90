#pragma once

// Sample builders shared by the check suites, the command-line tool, and
// the tests.

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ocsp/checkers.hpp"
#include "ocsp/cospan.hpp"
#include "ocsp/finset.hpp"
#include "ocsp/graph.hpp"
#include "ocsp/groth.hpp"
#include "ocsp/structured.hpp"

namespace ocsp::samples {

inline StructuringFunctor<FinSetCat, GraphCat> discrete_structuring() {
  return {"discrete", [](const FinSet& a) { return discrete(a); },
          [](const FinFunction& f) { return discrete_on(f); }};
}

inline std::vector<Cospan<FinSetCat>> all_finset_cospans(int max_foot,
                                                         int max_apex) {
  std::vector<Cospan<FinSetCat>> out;
  for (int x = 0; x <= max_apex; ++x)
    for (int a = 0; a <= max_foot; ++a)
      for (int b = 0; b <= max_foot; ++b) {
        FinSet fa{a}, fx{x}, fb{b};
        for (const auto& l : all_functions(fa, fx))
          for (const auto& r : all_functions(fb, fx))
            out.push_back(Cospan<FinSetCat>{fa, fx, fb, l, r});
      }
  return out;
}

inline std::vector<Graph> all_graphs(int max_v, int max_e) {
  std::vector<Graph> out;
  for (int v = 0; v <= max_v; ++v)
    for (int e = 0; e <= max_e; ++e) {
      FinSet fe{e}, fv{v};
      for (const auto& s : all_functions(fe, fv))
        for (const auto& t : all_functions(fe, fv))
          out.push_back(Graph(fv, fe, s.table, t.table));
    }
  return out;
}

template <typename D>
std::vector<std::array<typename D::Pro, 2>> composable_pairs(
    const D& d, const std::vector<typename D::Pro>& pros, size_t cap) {
  std::vector<std::array<typename D::Pro, 2>> out;
  for (const auto& m : pros) {
    for (const auto& n : pros) {
      if (d.pro_tgt(m) == d.pro_src(n)) out.push_back({m, n});
      if (out.size() >= cap) return out;
    }
  }
  return out;
}

template <typename D>
std::vector<std::array<typename D::Pro, 3>> composable_triples(
    const D& d, const std::vector<typename D::Pro>& pros, size_t cap) {
  std::vector<std::array<typename D::Pro, 3>> out;
  for (const auto& m : pros) {
    for (const auto& n : pros) {
      if (!(d.pro_tgt(m) == d.pro_src(n))) continue;
      for (const auto& p : pros) {
        if (d.pro_tgt(n) == d.pro_src(p)) out.push_back({m, n, p});
        if (out.size() >= cap) return out;
      }
    }
  }
  return out;
}

template <typename D>
std::vector<typename D::Cell> some_cells(const D& d,
                                         const std::vector<typename D::Pro>& pros,
                                         size_t cap) {
  std::vector<typename D::Cell> out;
  for (const auto& m : pros) {
    for (const auto& n : pros) {
      for (auto& c : cells_between(d, m, n)) {
        out.push_back(std::move(c));
        if (out.size() >= cap) return out;
      }
    }
  }
  return out;
}

// Horizontally composable cell pairs, found by indexing on the shared foot
// data. Deterministic: keys are the printed forms.
template <typename D>
std::vector<std::array<typename D::Cell, 2>> hcomposable_pairs(
    const D& d, const std::vector<typename D::Cell>& cells, size_t cap) {
  std::vector<std::array<typename D::Cell, 2>> out;
  std::map<std::string, std::vector<size_t>> by_left;
  auto right_key = [&](const typename D::Cell& c) {
    return d.show_ob(d.pro_tgt(d.cell_top(c))) + "|" +
           d.show_ob(d.pro_tgt(d.cell_bot(c))) + "|" +
           d.show_arr(d.cell_right(c));
  };
  auto left_key = [&](const typename D::Cell& c) {
    return d.show_ob(d.pro_src(d.cell_top(c))) + "|" +
           d.show_ob(d.pro_src(d.cell_bot(c))) + "|" +
           d.show_arr(d.cell_left(c));
  };
  for (size_t i = 0; i < cells.size(); ++i)
    by_left[left_key(cells[i])].push_back(i);
  for (const auto& a : cells) {
    auto it = by_left.find(right_key(a));
    if (it == by_left.end()) continue;
    for (size_t j : it->second) {
      out.push_back({a, cells[j]});
      if (out.size() >= cap) return out;
    }
  }
  return out;
}

template <typename D>
std::vector<std::array<typename D::Cell, 3>> hcomposable_triples(
    const D& d, const std::vector<std::array<typename D::Cell, 2>>& pairs,
    const std::vector<typename D::Cell>& cells, size_t cap) {
  std::vector<std::array<typename D::Cell, 3>> out;
  for (const auto& [a, b] : pairs) {
    for (const auto& c : cells) {
      if (d.pro_tgt(d.cell_top(b)) == d.pro_src(d.cell_top(c)) &&
          d.pro_tgt(d.cell_bot(b)) == d.pro_src(d.cell_bot(c)) &&
          d.cell_right(b) == d.cell_left(c)) {
        out.push_back({a, b, c});
        if (out.size() >= cap) return out;
      }
    }
  }
  return out;
}

template <typename D>
std::vector<std::array<typename D::Cell, 4>> interchange_grids(
    const D& d, const std::vector<std::array<typename D::Cell, 2>>& pairs,
    size_t cap) {
  std::vector<std::array<typename D::Cell, 4>> out;
  std::map<std::string, std::vector<size_t>> by_tops;
  auto top_key = [&](const std::array<typename D::Cell, 2>& p) {
    return d.show_pro(d.cell_top(p[0])) + "|" + d.show_pro(d.cell_top(p[1]));
  };
  auto bot_key = [&](const std::array<typename D::Cell, 2>& p) {
    return d.show_pro(d.cell_bot(p[0])) + "|" + d.show_pro(d.cell_bot(p[1]));
  };
  for (size_t i = 0; i < pairs.size(); ++i) by_tops[top_key(pairs[i])].push_back(i);
  for (const auto& p : pairs) {
    auto it = by_tops.find(bot_key(p));
    if (it == by_tops.end()) continue;
    for (size_t j : it->second) {
      const auto& q = pairs[j];
      if (!(d.cell_bot(p[0]) == d.cell_top(q[0])) ||
          !(d.cell_bot(p[1]) == d.cell_top(q[1])))
        continue;
      out.push_back({p[0], p[1], q[0], q[1]});
      if (out.size() >= cap) return out;
    }
  }
  return out;
}

// Open graphs: graph-carried cospans with discrete structuring on the feet.
using OpenGraphDbl = StructuredDbl<FinSetCat, GraphCat>;

inline std::vector<typename OpenGraphDbl::Pro> all_open_graphs(
    const OpenGraphDbl& d, int max_foot, int max_v, int max_e, size_t cap) {
  std::vector<typename OpenGraphDbl::Pro> out;
  for (const auto& g : all_graphs(max_v, max_e)) {
    for (int a = 0; a <= max_foot; ++a)
      for (const auto& l : all_functions(FinSet{a}, g.vertices))
        for (int b = 0; b <= max_foot; ++b)
          for (const auto& r : all_functions(FinSet{b}, g.vertices)) {
            out.push_back(d.make_pro(
                FinSet{a},
                Cospan<GraphCat>{discrete(FinSet{a}), g, discrete(FinSet{b}),
                                 GraphHom(discrete(FinSet{a}), g, l,
                                          FinFunction(FinSet{0}, g.edges, {})),
                                 GraphHom(discrete(FinSet{b}), g, r,
                                          FinFunction(FinSet{0}, g.edges, {}))},
                FinSet{b}));
            if (out.size() >= cap) return out;
          }
  }
  return out;
}

inline std::vector<FinFunction> all_finset_arrows(int max_size) {
  std::vector<FinFunction> out;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      for (const auto& f : all_functions(FinSet{a}, FinSet{b}))
        out.push_back(f);
  return out;
}

template <typename D>
std::vector<std::array<typename D::Arr, 2>> composable_arrow_pairs(
    const D& d, const std::vector<typename D::Arr>& arrs, size_t cap) {
  std::vector<std::array<typename D::Arr, 2>> out;
  for (const auto& f : arrs) {
    for (const auto& g : arrs) {
      if (d.arr_cod(f) == d.arr_dom(g)) out.push_back({f, g});
      if (out.size() >= cap) return out;
    }
  }
  return out;
}

template <typename D>
std::vector<std::array<typename D::Cell, 2>> vcomposable_pairs(
    const D& d, const std::vector<typename D::Cell>& cells, size_t cap) {
  std::vector<std::array<typename D::Cell, 2>> out;
  for (const auto& x : cells) {
    for (const auto& y : cells) {
      if (d.cell_bot(x) == d.cell_top(y)) out.push_back({x, y});
      if (out.size() >= cap) return out;
    }
  }
  return out;
}

// Fill the composability pairings of a GrothSample from its lists.
template <typename B, typename S>
void fill_sample(const B& b, S& s, size_t cap) {
  for (const auto& f : s.arrs) {
    for (const auto& h : s.arrs)
      if (b.arr_cod(f) == b.arr_dom(h)) s.arr_pairs.push_back({f, h});
    if (s.arr_pairs.size() >= cap) break;
  }
  for (const auto& m : s.pros) {
    for (const auto& n : s.pros)
      if (b.pro_tgt(m) == b.pro_src(n)) s.pro_pairs.push_back({m, n});
    if (s.pro_pairs.size() >= cap) break;
  }
  for (const auto& [m, n] : s.pro_pairs) {
    for (const auto& p : s.pros)
      if (b.pro_tgt(n) == b.pro_src(p)) s.pro_triples.push_back({m, n, p});
    if (s.pro_triples.size() >= cap) break;
  }
  for (const auto& c : s.cells) {
    for (const auto& e : s.cells) {
      if (b.cell_bot(c) == b.cell_top(e)) s.cell_vpairs.push_back({c, e});
      if (b.pro_tgt(b.cell_top(c)) == b.pro_src(b.cell_top(e)) &&
          b.pro_tgt(b.cell_bot(c)) == b.pro_src(b.cell_bot(e)) &&
          b.cell_right(c) == b.cell_left(e))
        s.cell_hpairs.push_back({c, e});
    }
    if (s.cell_vpairs.size() >= cap && s.cell_hpairs.size() >= cap) break;
  }
}

template <typename D>
FunctorSample<D> build_functor_sample(const D& d,
                                      std::vector<typename D::Ob> obs,
                                      std::vector<typename D::Arr> arrs,
                                      const std::vector<typename D::Pro>& pros,
                                      size_t cap) {
  FunctorSample<D> s;
  s.obs = std::move(obs);
  s.arrs = std::move(arrs);
  s.arr_pairs = composable_arrow_pairs(d, s.arrs, cap);
  s.pros = pros;
  s.pro_pairs = composable_pairs(d, pros, cap);
  s.pro_triples = composable_triples(d, pros, cap);
  s.cells = some_cells(d, pros, cap);
  s.cell_vpairs = vcomposable_pairs(d, s.cells, cap);
  s.cell_hpairs = hcomposable_pairs(d, s.cells, cap);
  return s;
}

template <typename D>
PseudoSample<D> build_pseudo_sample(const D& d,
                                    const std::vector<typename D::Pro>& pros,
                                    size_t pair_cap, size_t cell_cap,
                                    size_t grid_cap) {
  PseudoSample<D> s;
  s.pros = pros;
  s.pro_pairs = composable_pairs(d, pros, pair_cap);
  s.pro_triples = composable_triples(d, pros, pair_cap);
  s.cells = some_cells(d, pros, cell_cap);
  auto hpairs = hcomposable_pairs(d, s.cells, cell_cap);
  s.cell_htriples = hcomposable_triples(d, hpairs, s.cells, grid_cap);
  s.grids = interchange_grids(d, hpairs, grid_cap);
  return s;
}

// Span-valued functor on cospans of finite sets. The fiber over a cospan is
// the discrete category of boundary pairs (p, q) whose legs hit the same
// apex point; arrows and cells push pairs forward componentwise. The
// comparison sends a pullback pair ((p, q), (q, r)) to (p, r), which is lax
// but has no inverse in general. Feet carry nontrivial fibers, so composing
// mismatched decorations is an observable error here.
inline CatValuedLax<CospanDbl<FinSetCat>> matched_pairs_lax() {
  using Csp = CospanDbl<FinSetCat>;

  auto disc = [](int n) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::map<std::pair<int, int>, int> ct;
    for (int i = 0; i < n; ++i) ct[{i, i}] = i;
    return FinCat(FinSet{n}, idx, idx, idx, std::move(ct));
  };
  auto pairs_of = [](const Cospan<FinSetCat>& m) {
    std::vector<std::array<int, 2>> out;
    for (int p = 0; p < m.foot_l.size; ++p)
      for (int q = 0; q < m.foot_r.size; ++q)
        if (m.leg_l(p) == m.leg_r(q)) out.push_back({p, q});
    return out;
  };
  auto arr_fn = [disc](const FinFunction& f) {
    return FinFunctor(disc(f.dom.size), disc(f.cod.size), f.table, f.table);
  };
  auto pro_fn = [disc, pairs_of](const Cospan<FinSetCat>& m) {
    auto ps = pairs_of(m);
    std::vector<int> lmap(ps.size()), rmap(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
      lmap[i] = ps[i][0];
      rmap[i] = ps[i][1];
    }
    FinCat apex = disc(static_cast<int>(ps.size()));
    return CatSpan{apex, FinFunctor(apex, disc(m.foot_l.size), lmap, lmap),
                   FinFunctor(apex, disc(m.foot_r.size), rmap, rmap)};
  };

  DblFunctor<Csp, SpanCatDbl> fun;
  fun.name = "matched boundary pairs";
  fun.ob = [disc](const FinSet& a) { return disc(a.size); };
  fun.arr = arr_fn;
  fun.pro = pro_fn;
  fun.cell = [pro_fn, arr_fn, pairs_of](const CospanCell<FinSetCat>& c) {
    auto d = pro_fn(c.top);
    auto co = pro_fn(c.bottom);
    auto tp = pairs_of(c.top);
    auto bp = pairs_of(c.bottom);
    std::map<std::array<int, 2>, int> bidx;
    for (size_t i = 0; i < bp.size(); ++i) bidx[bp[i]] = static_cast<int>(i);
    std::vector<int> omap(tp.size());
    for (size_t i = 0; i < tp.size(); ++i)
      omap[i] = bidx.at({c.map_l(tp[i][0]), c.map_r(tp[i][1])});
    FinFunctor ax(d.apex, co.apex, omap, omap);
    return SpanCell{
        d, co, make_cat_span_map(d, co, arr_fn(c.map_l), ax, arr_fn(c.map_r))};
  };
  fun.laxator = [disc, pro_fn, pairs_of](const Cospan<FinSetCat>& m,
                                         const Cospan<FinSetCat>& n) {
    Csp base;
    SpanCatDbl sd;
    auto comp = base.pro_comp(m, n);
    auto sm = pro_fn(m);
    auto sn = pro_fn(n);
    auto top = sd.pro_comp(sm, sn);
    auto bot = pro_fn(comp);
    auto mp = pairs_of(m);
    auto np = pairs_of(n);
    auto cp = pairs_of(comp);
    std::map<std::array<int, 2>, int> cidx;
    for (size_t i = 0; i < cp.size(); ++i) cidx[cp[i]] = static_cast<int>(i);
    auto pb = pullback_cat(sm.leg_r, sn.leg_l);
    std::vector<int> omap(pb.obs.size());
    for (size_t i = 0; i < pb.obs.size(); ++i) {
      auto [si, ti] = pb.obs[i];
      omap[i] = cidx.at({mp[static_cast<size_t>(si)][0],
                         np[static_cast<size_t>(ti)][1]});
    }
    FinFunctor ax(top.apex, bot.apex, omap, omap);
    return sd.make_cell(top, bot, identity(disc(m.foot_l.size)), ax,
                        identity(disc(n.foot_r.size)));
  };
  fun.unitor = [disc, pro_fn, pairs_of](const FinSet& a) {
    Csp base;
    SpanCatDbl sd;
    auto one = base.pro_id(a);
    auto top = sd.pro_id(disc(a.size));
    auto bot = pro_fn(one);
    auto ip = pairs_of(one);
    std::map<std::array<int, 2>, int> idx;
    for (size_t i = 0; i < ip.size(); ++i) idx[ip[i]] = static_cast<int>(i);
    std::vector<int> omap(static_cast<size_t>(a.size));
    for (int x = 0; x < a.size; ++x)
      omap[static_cast<size_t>(x)] = idx.at({x, x});
    FinFunctor ax(top.apex, bot.apex, omap, omap);
    return sd.make_cell(top, bot, identity(disc(a.size)), ax,
                        identity(disc(a.size)));
  };

  return CatValuedLax<Csp>{Csp{}, std::move(fun)};
}

}  // namespace ocsp::samples

#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ocsp/checkers.hpp"
#include "ocsp/json_io.hpp"
#include "ocsp/structured.hpp"

using namespace ocsp;
using namespace ocsp::testutil;

using OG = OpenGraphDbl;

static_assert(DoubleCategory<OG>);
static_assert(EquipmentCategory<OG>);
static_assert(CocartesianCategory<OG>);
static_assert(EnumerableCells<OG>);

namespace {

const OG& og() {
  static OG d(discrete_structuring());
  return d;
}

OG::Pro open_edge() {
  Graph edge(FinSet{2}, FinSet{1}, {0}, {1});
  auto pt = discrete(FinSet{1});
  return og().make_pro(
      FinSet{1},
      Cospan<GraphCat>{pt, edge, pt, graph_hom(pt, edge, {0}, {}),
                       graph_hom(pt, edge, {1}, {})},
      FinSet{1});
}

// Complete graph on the vertex set; does not get along with gluing or with
// disjoint union, which makes it a handy counterexample.
Graph complete(const FinSet& a) {
  std::vector<int> s(static_cast<size_t>(a.size * a.size));
  std::vector<int> t(s.size());
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < a.size; ++j) {
      s[static_cast<size_t>(i * a.size + j)] = i;
      t[static_cast<size_t>(i * a.size + j)] = j;
    }
  return Graph(a, FinSet{a.size * a.size}, std::move(s), std::move(t));
}

GraphHom complete_on(const FinFunction& f) {
  std::vector<int> e(static_cast<size_t>(f.dom.size * f.dom.size));
  for (int i = 0; i < f.dom.size; ++i)
    for (int j = 0; j < f.dom.size; ++j)
      e[static_cast<size_t>(i * f.dom.size + j)] = f(i) * f.cod.size + f(j);
  return GraphHom(complete(f.dom), complete(f.cod), f,
                  FinFunction(FinSet{f.dom.size * f.dom.size},
                              FinSet{f.cod.size * f.cod.size}, std::move(e)));
}

}  // namespace

TEST_CASE("discrete structuring preserves coproducts, complete does not") {
  std::vector<std::array<FinSet, 2>> obs;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) obs.push_back({FinSet{a}, FinSet{b}});
  std::vector<std::array<FinFunction, 2>> cocones;
  for (const auto& f : all_finset_arrows(2))
    for (const auto& g : all_finset_arrows(2)) {
      if (f.cod == g.cod) cocones.push_back({f, g});
      if (cocones.size() >= 30) break;
    }
  auto rep = check_structuring(discrete_structuring(), obs, cocones);
  INFO(rep.first_failure());
  CHECK(rep.all_ok());

  StructuringFunctor<FinSetCat, GraphCat> comp{
      "complete", [](const FinSet& a) { return complete(a); },
      [](const FinFunction& f) { return complete_on(f); }};
  auto bad = check_structuring(comp, obs, {});
  CHECK_FALSE(bad.all_ok());

  OG broken(comp);
  auto m = broken.pro_id(FinSet{1});
  CHECK_THROWS_AS(broken.pro_coproduct(m, m), StructuralError);
}

TEST_CASE("open graphs compose by gluing along shared boundary points") {
  auto e = open_edge();
  auto path2 = og().pro_comp(e, e);
  CHECK(path2.carrier.apex.vertices.size == 3);
  CHECK(path2.carrier.apex.edges.size == 2);
  CHECK(path2.a == FinSet{1});
  CHECK(og().pro_src(path2) == FinSet{1});

  // composing an open edge with its reverse folds into a wedge
  auto rev = og().make_pro(
      FinSet{1},
      Cospan<GraphCat>{discrete(FinSet{1}), e.carrier.apex,
                       discrete(FinSet{1}), e.carrier.leg_r, e.carrier.leg_l},
      FinSet{1});
  auto wedge = og().pro_comp(e, rev);
  CHECK(wedge.carrier.apex.vertices.size == 3);
  CHECK(wedge.carrier.apex.edges.size == 2);
  // both edges point at the glued tip; the feet stay distinct
  CHECK(wedge.carrier.apex.tgt(0) == wedge.carrier.apex.tgt(1));
  CHECK(wedge.carrier.apex.src(0) != wedge.carrier.apex.src(1));
  CHECK(wedge.carrier.leg_l.vmap.table != wedge.carrier.leg_r.vmap.table);
}

TEST_CASE("open graphs satisfy the pseudocategory laws") {
  auto pros = all_open_graphs(og(), 1, 2, 1, 60);
  REQUIRE(pros.size() == 54);
  auto s = build_pseudo_sample(og(), pros, 250, 150, 150);
  CHECK(s.pro_triples.size() > 30);
  auto rep = check_pseudocategory(og(), s);
  INFO(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("open graphs form an equipment") {
  auto pros = all_open_graphs(og(), 1, 2, 1, 40);
  std::vector<NicheSample<OG>> niches;
  for (const auto& n : pros) {
    if (niches.size() >= 25) break;
    for (int ap = 0; ap <= 1 && niches.size() < 25; ++ap)
      for (const auto& f : all_functions(FinSet{ap}, n.a))
        for (const auto& g : all_functions(FinSet{1}, n.b)) {
          niches.push_back({f, g, n});
          if (niches.size() >= 25) break;
        }
  }
  std::vector<FactorSample<OG>> cases;
  for (const auto& niche : niches) {
    if (cases.size() >= 12) break;
    for (const auto& h :
         all_functions(FinSet{1}, FinSet{niche.f.dom.size})) {
      auto k = identity(FinSet{niche.g.dom.size});
      auto alpha =
          og().restriction(compose(h, niche.f), compose(k, niche.g), niche.n)
              .cell;
      cases.push_back({niche, h, k, alpha});
      if (cases.size() >= 12) break;
    }
  }
  auto rep = check_equipment(og(), niches, cases);
  INFO(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("open graphs have coproducts with invertible comparison cells") {
  OG d(discrete_structuring());
  CocartSample<OG> s;
  for (int a = 0; a <= 1; ++a) {
    s.ob_targets.push_back(FinSet{a});
    for (int b = 0; b <= 1; ++b) s.ob_pairs.push_back({FinSet{a}, FinSet{b}});
  }
  s.ob_targets.push_back(FinSet{2});
  auto pros = all_open_graphs(d, 1, 1, 1, 12);
  for (size_t i = 0; i < pros.size() && i < 4; ++i) {
    s.pro_targets.push_back(pros[i]);
    for (size_t j = 0; j < pros.size() && j < 4; ++j)
      s.pro_pairs.push_back({pros[i], pros[j]});
  }
  auto pairs = composable_pairs(d, pros, 30);
  for (const auto& [m, n] : pairs) {
    if (s.comp_quads.size() >= 8) break;
    s.comp_quads.push_back({m, n, m, n});
  }
  s.max_cocones = 16;
  auto rep = check_cocartesian(d, s);
  INFO(rep.first_failure());
  CHECK(rep.all_ok());

  // juxtaposition of two open edges: disjoint union with two-point feet
  auto e = open_edge();
  auto w = d.pro_coproduct(e, e);
  CHECK(w.sum.a == FinSet{2});
  CHECK(w.sum.carrier.apex.vertices.size == 4);
  CHECK(w.sum.carrier.apex.edges.size == 2);
}

TEST_CASE("carrier change along a pushout-preserving functor is pseudo") {
  OG dom(discrete_structuring());
  OG cod(discrete_structuring());
  BaseFunctor<GraphCat, GraphCat> idf{
      "id", [](const Graph& g) { return g; },
      [](const GraphHom& h) { return h; }, true};
  auto F = sc_map_codomain(dom, cod, idf);
  CHECK(F.claims_pseudo());
  auto s = build_functor_sample(dom, {FinSet{0}, FinSet{1}, FinSet{2}},
                                all_finset_arrows(2),
                                all_open_graphs(dom, 1, 2, 1, 30), 80);
  auto res = check_lax_double_functor(dom, cod, F, s);
  INFO(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK(res.normal);
  CHECK(res.pseudo);
}

TEST_CASE("carrier change along completion is lax only") {
  OG dom(discrete_structuring());
  StructuringFunctor<FinSetCat, GraphCat> comp_l{
      "complete", [](const FinSet& a) { return complete(a); },
      [](const FinFunction& f) { return complete_on(f); }};
  OG cod(comp_l);
  BaseFunctor<GraphCat, GraphCat> kv{
      "complete.vertices",
      [](const Graph& g) { return complete(g.vertices); },
      [](const GraphHom& h) { return complete_on(h.vmap); }, false};
  auto F = sc_map_codomain(dom, cod, kv);
  CHECK_FALSE(F.claims_pseudo());
  auto s = build_functor_sample(dom, {FinSet{0}, FinSet{1}, FinSet{2}},
                                all_finset_arrows(2),
                                all_open_graphs(dom, 1, 2, 1, 30), 80);
  auto res = check_lax_double_functor(dom, cod, F, s);
  INFO(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK_FALSE(res.pseudo);

  // witness: gluing two edges end to end has 9 completed edges, gluing the
  // completed edges only 7
  auto e = open_edge();
  auto lax = F.laxator(e, e);
  CHECK(lax.apex.dom.edges.size == 7);
  CHECK(lax.apex.cod.edges.size == 9);
  CHECK_FALSE(cod.try_invert_cell(lax).has_value());
}

TEST_CASE("feet change along a coproduct-preserving functor is strict") {
  StructuringFunctor<FinSetCat, GraphCat> dbl_disc{
      "discrete.double",
      [](const FinSet& a) { return discrete(FinSet{2 * a.size}); },
      [](const FinFunction& f) {
        std::vector<int> t(static_cast<size_t>(2 * f.dom.size));
        for (int i = 0; i < f.dom.size; ++i) {
          t[static_cast<size_t>(2 * i)] = 2 * f(i);
          t[static_cast<size_t>(2 * i + 1)] = 2 * f(i) + 1;
        }
        return discrete_on(FinFunction(FinSet{2 * f.dom.size},
                                       FinSet{2 * f.cod.size}, std::move(t)));
      }};
  OG dom(dbl_disc);
  OG cod(discrete_structuring());
  BaseFunctor<FinSetCat, FinSetCat> dbl{
      "double", [](const FinSet& a) { return FinSet{2 * a.size}; },
      [](const FinFunction& f) {
        std::vector<int> t(static_cast<size_t>(2 * f.dom.size));
        for (int i = 0; i < f.dom.size; ++i) {
          t[static_cast<size_t>(2 * i)] = 2 * f(i);
          t[static_cast<size_t>(2 * i + 1)] = 2 * f(i) + 1;
        }
        return FinFunction(FinSet{2 * f.dom.size}, FinSet{2 * f.cod.size},
                           std::move(t));
      },
      true};
  auto F = sc_map_base(dom, cod, dbl);
  CHECK(F.claims_pseudo());
  auto s = build_functor_sample(dom, {FinSet{0}, FinSet{1}, FinSet{2}},
                                all_finset_arrows(2), {}, 50);
  // dom structures a foot of size a by 2a discrete points
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (const auto& g : all_graphs(2, 1)) {
        if ((a > 0 || b > 0) && g.vertices.size == 0) continue;
        std::vector<int> lt, rt;
        for (int i = 0; i < 2 * a; ++i) lt.push_back(i % g.vertices.size);
        for (int i = 0; i < 2 * b; ++i)
          rt.push_back(g.vertices.size - 1 - (i % g.vertices.size));
        s.pros.push_back(dom.make_pro(
            FinSet{a},
            Cospan<GraphCat>{
                discrete(FinSet{2 * a}), g, discrete(FinSet{2 * b}),
                graph_hom(discrete(FinSet{2 * a}), g, std::move(lt), {}),
                graph_hom(discrete(FinSet{2 * b}), g, std::move(rt), {})},
            FinSet{b}));
      }
  s.pro_pairs = composable_pairs(dom, s.pros, 50);
  s.pro_triples = composable_triples(dom, s.pros, 50);
  s.cells = some_cells(dom, s.pros, 50);
  s.cell_vpairs = vcomposable_pairs(dom, s.cells, 50);
  s.cell_hpairs = hcomposable_pairs(dom, s.cells, 50);
  auto res = check_lax_double_functor(dom, cod, F, s);
  INFO(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK(res.normal);
  CHECK(res.pseudo);
}

TEST_CASE("restriction along a natural transformation is a lax map") {
  StructuringFunctor<FinSetCat, GraphCat> disc_plus{
      "discrete.succ",
      [](const FinSet& a) { return discrete(FinSet{a.size + 1}); },
      [](const FinFunction& f) {
        std::vector<int> t(static_cast<size_t>(f.dom.size + 1));
        for (int i = 0; i < f.dom.size; ++i) t[static_cast<size_t>(i)] = f(i);
        t[static_cast<size_t>(f.dom.size)] = f.cod.size;
        return discrete_on(FinFunction(FinSet{f.dom.size + 1},
                                       FinSet{f.cod.size + 1}, std::move(t)));
      }};
  OG dom(disc_plus);
  OG cod(discrete_structuring());
  auto tau = [](const FinSet& a) {
    std::vector<int> t(static_cast<size_t>(a.size));
    for (int i = 0; i < a.size; ++i) t[static_cast<size_t>(i)] = i;
    return discrete_on(
        FinFunction(a, FinSet{a.size + 1}, std::move(t)));
  };
  auto F = sc_map_transform<FinSetCat, GraphCat>(dom, cod, tau,
                                                 all_finset_arrows(2));
  CHECK_FALSE(F.claims_pseudo());
  auto s = build_functor_sample(dom, {FinSet{0}, FinSet{1}, FinSet{2}},
                                all_finset_arrows(2), {}, 40);
  // feet of dom pros carry the successor structuring
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (const auto& g : all_graphs(2, 1)) {
        if (g.vertices.size < a + 1 || g.vertices.size < b + 1) continue;
        std::vector<int> lt, rt;
        for (int i = 0; i <= a; ++i) lt.push_back(i);
        for (int i = 0; i <= b; ++i) rt.push_back(g.vertices.size - 1 - i);
        s.pros.push_back(dom.make_pro(
            FinSet{a},
            Cospan<GraphCat>{
                discrete(FinSet{a + 1}), g, discrete(FinSet{b + 1}),
                graph_hom(discrete(FinSet{a + 1}), g, std::move(lt), {}),
                graph_hom(discrete(FinSet{b + 1}), g, std::move(rt), {})},
            FinSet{b}));
      }
  s.pro_pairs = composable_pairs(dom, s.pros, 60);
  s.pro_triples = composable_triples(dom, s.pros, 60);
  s.cells = some_cells(dom, s.pros, 60);
  s.cell_vpairs = vcomposable_pairs(dom, s.cells, 60);
  s.cell_hpairs = hcomposable_pairs(dom, s.cells, 60);
  auto res = check_lax_double_functor(dom, cod, F, s);
  INFO(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK_FALSE(res.normal);
  CHECK_FALSE(res.pseudo);
}

TEST_CASE("a non-natural transformation is rejected with a witness") {
  OG d(discrete_structuring());
  auto rev = [](const FinSet& a) {
    std::vector<int> t(static_cast<size_t>(a.size));
    for (int i = 0; i < a.size; ++i)
      t[static_cast<size_t>(i)] = a.size - 1 - i;
    return discrete_on(FinFunction(a, a, std::move(t)));
  };
  CHECK_THROWS_AS((sc_map_transform<FinSetCat, GraphCat>(
                      d, d, rev, all_finset_arrows(2))),
                  StructuralError);
}

TEST_CASE("identity transformation gives a pseudo map") {
  OG d(discrete_structuring());
  auto idt = [](const FinSet& a) { return discrete_on(identity(a)); };
  auto F = sc_map_transform<FinSetCat, GraphCat>(d, d, idt,
                                                 all_finset_arrows(2), true);
  CHECK(F.claims_pseudo());
  auto s = build_functor_sample(d, {FinSet{0}, FinSet{1}, FinSet{2}},
                                all_finset_arrows(2),
                                all_open_graphs(d, 1, 2, 1, 25), 60);
  auto res = check_lax_double_functor(d, d, F, s);
  INFO(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK(res.normal);
  CHECK(res.pseudo);
}

TEST_CASE("square map: the composite of the three parts equals the formulas") {
  OG dom(discrete_structuring());
  OG cod(discrete_structuring());
  BaseFunctor<FinSetCat, FinSetCat> f0{
      "id", [](const FinSet& a) { return a; },
      [](const FinFunction& f) { return f; }, true};
  BaseFunctor<GraphCat, GraphCat> f1{
      "complete.vertices",
      [](const Graph& g) { return complete(g.vertices); },
      [](const GraphHom& h) { return complete_on(h.vmap); }, false};
  auto alpha = [](const FinSet& a) {
    return GraphHom(discrete(a), complete(a), identity(a),
                    FinFunction(FinSet{0}, FinSet{a.size * a.size}, {}));
  };
  auto sq = sc_map_square(dom, cod, f0, f1, alpha, all_finset_arrows(2));

  auto pros = all_open_graphs(dom, 1, 2, 1, 25);
  auto pairs = composable_pairs(dom, pros, 40);
  auto cells = some_cells(dom, pros, 40);
  for (int a = 0; a <= 2; ++a) {
    CHECK(sq.composite.ob(FinSet{a}) == sq.direct.ob(FinSet{a}));
    CHECK(sq.composite.unitor(FinSet{a}) == sq.direct.unitor(FinSet{a}));
  }
  for (const auto& f : all_finset_arrows(2))
    CHECK(sq.composite.arr(f) == sq.direct.arr(f));
  for (const auto& m : pros) CHECK(sq.composite.pro(m) == sq.direct.pro(m));
  for (const auto& c : cells)
    CHECK(sq.composite.cell(c) == sq.direct.cell(c));
  for (const auto& [m, n] : pairs)
    CHECK(sq.composite.laxator(m, n) == sq.direct.laxator(m, n));

  auto s = build_functor_sample(dom, {FinSet{0}, FinSet{1}, FinSet{2}},
                                all_finset_arrows(2), pros, 40);
  auto res = check_lax_double_functor(dom, cod, sq.direct, s);
  INFO(res.report.first_failure());
  CHECK(res.report.all_ok());
}

TEST_CASE("open graphs serialize with flat feet and vertex legs") {
  auto m = open_edge();
  auto j = to_json(m);
  CHECK(open_graph_from_json(j) == m);
  CHECK(j["footL"] == 1);
  CHECK(j["legR"] == json::array({1}));
  CHECK(j["graph"] == json{{"v", 2}, {"e", 1}, {"src", {0}}, {"tgt", {1}}});
  CHECK(canonical(to_json(open_graph_from_json(j))) == canonical(j));

  auto bad = j;
  bad["legL"] = json::array({5});
  CHECK_THROWS_AS(open_graph_from_json(bad), BoundaryError);
}

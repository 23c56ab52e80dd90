#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ocsp/checkers.hpp"
#include "ocsp/decorated.hpp"
#include "ocsp/error.hpp"

using namespace ocsp;
using namespace ocsp::testutil;

using CspFin = CospanDbl<FinSetCat>;
using CspGraph = CospanDbl<GraphCat>;

static_assert(SpanValuedLax<GraphDecorationLax>);
static_assert(DoubleCategory<DecoratedGraphDbl>);
static_assert(EnumerableCells<DecoratedGraphDbl>);
static_assert(DoubleCategory<DecoratedDbl>);
static_assert(DoubleCategory<ProcessDbl>);
static_assert(EnumerableCells<ProcessDbl>);

namespace {

FinFunction ff(int a, int b, std::vector<int> t) {
  return FinFunction(FinSet{a}, FinSet{b}, std::move(t));
}

Cospan<FinSetCat> mk(int a, int x, int b, std::vector<int> l,
                     std::vector<int> r) {
  return make_cospan<FinSetCat>(FinSet{a}, ff(a, x, std::move(l)), FinSet{x},
                                ff(b, x, std::move(r)), FinSet{b});
}

// 1 -> 2 <- 1 picking the two endpoints of an edge.
Cospan<FinSetCat> open_edge() { return mk(1, 2, 1, {0}, {1}); }

Graph edge_graph() { return Graph(FinSet{2}, FinSet{1}, {0}, {1}); }

}  // namespace

TEST_CASE("graphs_on enumerates by edge count then incidence word") {
  auto gs = graphs_on(FinSet{2}, 1);
  REQUIRE(gs.size() == 5);
  CHECK(gs[0] == Graph(FinSet{2}, FinSet{0}, {}, {}));
  CHECK(gs[2] == edge_graph());
  CHECK(graphs_on(FinSet{2}, 2).size() == 21);
  CHECK(graphs_on(FinSet{1}, 2).size() == 3);
  CHECK(graphs_on(FinSet{0}, 3).size() == 1);
}

TEST_CASE("decoration theories satisfy the monoidal functor laws") {
  auto rt = check_monoidal_cat_functor(terminal_decoration_functor(), 2);
  if (!rt.all_ok()) MESSAGE(rt.first_failure());
  CHECK(rt.all_ok());

  auto S = subset_decoration_functor();
  CHECK(S.ob(FinSet{2}).objects.size == 4);
  CHECK(S.ob(FinSet{2}).mor_count() == 9);
  auto rs = check_monoidal_cat_functor(S, 2);
  if (!rs.all_ok()) MESSAGE(rs.first_failure());
  CHECK(rs.all_ok());

  auto G0 = graph_decoration_functor(0);
  auto rg = check_monoidal_cat_functor(G0, 2);
  if (!rg.all_ok()) MESSAGE(rg.first_failure());
  CHECK(rg.all_ok());
}

TEST_CASE("tabulated graph comparisons overflow past the edge bound") {
  auto G1 = graph_decoration_functor(1);
  CHECK(G1.ob(FinSet{2}).objects.size == 5);
  CHECK(G1.ob(FinSet{2}).mor_count() == 9);
  CHECK_THROWS_AS(G1.lax(FinSet{1}, FinSet{1}), UnsupportedError);
  // a strict checker run surfaces the partiality instead of crashing
  auto rep = check_monoidal_cat_functor(G1, 1);
  CHECK(!rep.all_ok());
  // at bound zero every fiber is a single empty graph, so the theory is total
  auto G0 = graph_decoration_functor(0);
  CHECK(G0.lax(FinSet{1}, FinSet{1}).cod == G0.ob(FinSet{2}));
}

TEST_CASE("apex functor is lax with pushout coprojection comparisons") {
  CspFin base;
  MonDblFinSet ms;
  auto A = apex_functor();
  CHECK(!A.claims_pseudo());

  auto m = open_edge();
  CHECK(A.pro(m) == FinSet{2});
  auto lx = A.laxator(m, m);
  CHECK(lx.dom == FinSet{4});
  CHECK(lx.cod == FinSet{3});
  CHECK(lx.table == std::vector<int>{0, 1, 1, 2});
  CHECK(A.unitor(FinSet{2}) == bang(FinSet{2}));

  auto bs = build_functor_sample(base, {FinSet{0}, FinSet{1}, FinSet{2}},
                                 all_finset_arrows(2), all_finset_cospans(1, 2),
                                 40);
  auto res = check_lax_double_functor(base, ms, A, bs);
  if (!res.report.all_ok()) MESSAGE(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK(!res.pseudo);
}

TEST_CASE("doubling map precomposes decoration theories") {
  auto P = doubling_monoidal_map();
  CHECK(P.ob(FinSet{3}) == FinSet{6});
  CHECK(P.lax(FinSet{1}, FinSet{1}).table == std::vector<int>{0, 2, 1, 3});
  CHECK(P.arr(ff(2, 1, {0, 0})).table == std::vector<int>{0, 0, 1, 1});

  auto H = precompose_monoidal(P, subset_decoration_functor());
  auto rep = check_monoidal_cat_functor(H, 1);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());

  // the double-functor reading of the precomposite is the composite of the
  // readings
  auto G1 = mon_dbl(H);
  auto G2 = compose_functors(MonDblCat{}, mon_dbl(P),
                             mon_dbl(subset_decoration_functor()));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      CHECK(G1.laxator(FinSet{a}, FinSet{b}) ==
            G2.laxator(FinSet{a}, FinSet{b}));
  CHECK(G1.unitor(Unit{}) == G2.unitor(Unit{}));
  CHECK(G1.pro(FinSet{2}) == G2.pro(FinSet{2}));
}

TEST_CASE("categories as spans over the point compose strictly") {
  auto S = apex_star();
  CHECK(S.claims_pseudo());
  SpanCatDbl sd;
  auto w = free_category(edge_graph()).cat;
  CHECK(S.pro(w).apex == w);
  CHECK(S.pro(w).leg_l == bang_functor(w));
  CHECK(S.laxator(w, w) == sd.vid(S.pro(product_cat(w, w).cat)));

  auto one = terminal_cat();
  auto pick1 = FinFunctor(one, w, {1}, {w.id(1)});
  FunctorSample<MonDblCat> s;
  s.obs = {Unit{}};
  s.arrs = {Unit{}};
  s.arr_pairs = {{Unit{}, Unit{}}};
  s.pros = {one, w};
  s.pro_pairs = composable_pairs(MonDblCat{}, s.pros, 16);
  s.pro_triples = composable_triples(MonDblCat{}, s.pros, 16);
  s.cells = {identity(one), identity(w), bang_functor(w), pick1,
             compose(bang_functor(w), pick1)};
  s.cell_vpairs = vcomposable_pairs(MonDblCat{}, s.cells, 24);
  s.cell_hpairs = hcomposable_pairs(MonDblCat{}, s.cells, 24);
  auto res = check_lax_double_functor(MonDblCat{}, sd, S, s);
  if (!res.report.all_ok()) MESSAGE(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK(res.pseudo);
}

TEST_CASE("subset decorations compose by pushforward union") {
  auto g = dcsp(subset_decoration_functor());
  CspFin base;
  auto m = open_edge();
  auto p = g.make_pro(m, 1);  // {0} on the apex
  auto q = g.make_pro(m, 2);  // {1}
  auto pq = g.pro_comp(p, q);
  CHECK(pq.m == base.pro_comp(m, m));
  CHECK(pq.s == 5);  // {0, 2} after gluing the shared endpoint

  CHECK(g.pro_id(g.make_ob(FinSet{2}, 0)).s == 0);  // empty subset
  CHECK_THROWS_AS(g.make_pro(m, 4), BoundaryError);

  auto lu = g.lunitor(p);
  CHECK(g.cell_bot(lu.fwd) == p);
  CHECK(detail::iso_ok(g, lu));
  CHECK(detail::iso_ok(g, g.runitor(p)));
  CHECK(detail::iso_ok(g, g.associator(p, q, p)));
}

TEST_CASE("the pairing laxator factors as comparison then pushforward") {
  auto F = subset_decoration_functor();
  auto g = dcsp(F);
  CspFin base;
  auto pros = all_finset_cospans(1, 2);
  int used = 0;
  for (const auto& m : pros) {
    for (const auto& n : pros) {
      if (!(m.foot_r == n.foot_l)) continue;
      if (++used > 12) break;
      auto data = base.compose_data(m, n);
      auto push = F.arr(copair(data.w.ia, data.w.ib,
                               coproduct(m.apex, n.apex)));
      auto two_step = compose(F.lax(m.apex, n.apex), push);
      auto pc = product_cat(F.ob(m.apex), F.ob(n.apex));
      for (int s = 0; s < F.ob(m.apex).objects.size; ++s)
        for (int t = 0; t < F.ob(n.apex).objects.size; ++t)
          CHECK(g.f.lax_ob(m, n, s, t) == two_step.ob(pc.ob_of.at({s, t})));
    }
    if (used > 12) break;
  }
  CHECK(used > 12);
}

TEST_CASE("span-valued laws for subset-decorated cospans") {
  auto g = dcsp(subset_decoration_functor());
  CspFin base;
  GrothSample<CatValuedLax<CspFin>> s;
  s.obs = {FinSet{0}, FinSet{1}, FinSet{2}};
  s.arrs = all_finset_arrows(2);
  s.pros = all_finset_cospans(1, 2);
  s.cells = some_cells(base, s.pros, 20);
  fill_sample(base, s, 48);
  s.pair_cap = 48;
  auto rep = check_span_valued_lax(g.f, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("graph decorations glue along the pushout without a cap") {
  auto dg = dcsp_graphs(1);
  CspFin base;
  auto m = open_edge();
  auto p = dg.make_pro(m, edge_graph());
  auto pq = dg.pro_comp(p, p);
  CHECK(pq.m == base.pro_comp(m, m));
  CHECK(pq.s == Graph(FinSet{3}, FinSet{2}, {0, 1}, {1, 2}));

  // the bound limits enumeration, not membership: the same composite exists
  // at bound zero
  auto dg0 = dcsp_graphs(0);
  auto p0 = dg0.make_pro(m, edge_graph());
  CHECK(dg0.pro_comp(p0, p0).s == pq.s);
  CHECK(dg0.f.enum_pobs(m).size() == 1);
  CHECK(dg.f.enum_pobs(m).size() == 5);

  CHECK(dg.pro_id(dg.make_ob(FinSet{2}, Unit{})).s == discrete(FinSet{2}));
  CHECK_THROWS_AS(dg.make_pro(m, Graph(FinSet{3}, FinSet{0}, {}, {})),
                  BoundaryError);

  auto lu = dg.lunitor(p);
  CHECK(dg.cell_bot(lu.fwd) == p);
  CHECK(detail::iso_ok(dg, lu));
  CHECK(detail::iso_ok(dg, dg.runitor(p)));
  CHECK(detail::iso_ok(dg, dg.associator(p, p, p)));
}

TEST_CASE("lazy graph fibers agree with the tabulated functor") {
  auto F = graph_decoration_functor(2);
  GraphDecorationLax lazy{CspFin{}, 2};
  auto gs2 = graphs_on(FinSet{2}, 2);
  auto gs1 = graphs_on(FinSet{1}, 2);
  CHECK(F.ob(FinSet{2}).objects.size == static_cast<int>(gs2.size()));
  CHECK(F.ob(FinSet{1}).objects.size == static_cast<int>(gs1.size()));

  // pushforward along 2 -> 1 matches the lazy cell action, object by object
  auto f = ff(2, 1, {0, 0});
  auto Ff = F.arr(f);
  auto al = make_cospan_cell<FinSetCat>(mk(0, 2, 0, {}, {}),
                                        mk(0, 1, 0, {}, {}), ff(0, 0, {}),
                                        ff(0, 0, {}), f);
  for (size_t i = 0; i < gs2.size(); ++i) {
    auto moved = lazy.cell_ob(al, gs2[i]);
    CHECK(gs1[static_cast<size_t>(Ff.ob(static_cast<int>(i)))] == moved);
  }
}

TEST_CASE("span-valued laws for the lazy graph decorations") {
  CspFin base;
  GraphDecorationLax lazy{base, 2};
  GrothSample<GraphDecorationLax> s;
  s.obs = {FinSet{0}, FinSet{1}, FinSet{2}};
  s.arrs = all_finset_arrows(2);
  s.pros = all_finset_cospans(1, 2);
  s.cells = some_cells(base, s.pros, 16);
  fill_sample(base, s, 32);
  s.pair_cap = 32;
  auto rep = check_span_valued_lax(lazy, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("pseudocategory laws for graph-decorated cospans") {
  auto dg = dcsp_graphs(1);
  std::vector<DecoratedGraphDbl::Pro> pros;
  for (const auto& m : all_finset_cospans(1, 1))
    for (const auto& s : graphs_on(m.apex, 1)) pros.push_back(dg.make_pro(m, s));
  auto s = build_pseudo_sample(dg, pros, 24, 20, 12);
  CHECK(!s.cells.empty());
  CHECK(!s.grids.empty());
  auto rep = check_pseudocategory(dg, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("graph-decorated cospans match open graphs up to the bound") {
  auto rep = open_graph_equivalence(1);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("decorated cospans serialize to canonical json") {
  auto d = make_decorated(open_edge(), edge_graph());
  auto j = to_json(d);
  CHECK(decorated_from_json(j) == d);
  CHECK(canonical(j) ==
        "{\n"
        "  \"apex\": {\n"
        "    \"n\": 2\n"
        "  },\n"
        "  \"decoration\": {\n"
        "    \"edges\": [\n"
        "      [\n"
        "        0,\n"
        "        1\n"
        "      ]\n"
        "    ]\n"
        "  },\n"
        "  \"footL\": {\n"
        "    \"n\": 1\n"
        "  },\n"
        "  \"footR\": {\n"
        "    \"n\": 1\n"
        "  },\n"
        "  \"legL\": {\n"
        "    \"cod\": 2,\n"
        "    \"dom\": 1,\n"
        "    \"map\": [\n"
        "      0\n"
        "    ]\n"
        "  },\n"
        "  \"legR\": {\n"
        "    \"cod\": 2,\n"
        "    \"dom\": 1,\n"
        "    \"map\": [\n"
        "      1\n"
        "    ]\n"
        "  }\n"
        "}\n");
  CHECK(canonical(to_json(decorated_from_json(j))) == canonical(j));

  CHECK_THROWS_AS(make_decorated(open_edge(), Graph(FinSet{3}, FinSet{0}, {}, {})),
                  BoundaryError);
  auto bad = j;
  bad["legL"]["map"] = nlohmann::json::array({7});
  CHECK_THROWS_AS(decorated_from_json(bad), BoundaryError);
}

TEST_CASE("trivial decorations reproduce plain cospans") {
  auto g = dcsp(terminal_decoration_functor());
  CspFin base;
  auto pros = all_finset_cospans(1, 2);
  for (const auto& m : pros) CHECK(g.f.enum_pobs(m).size() == 1);
  int used = 0;
  for (const auto& m : pros) {
    for (const auto& n : pros) {
      if (!(m.foot_r == n.foot_l)) continue;
      if (++used > 20) break;
      auto pq = g.pro_comp(g.make_pro(m, 0), g.make_pro(n, 0));
      CHECK(pq.m == base.pro_comp(m, n));
      CHECK(pq.s == 0);
    }
    if (used > 20) break;
  }
  CHECK(used > 20);
}

TEST_CASE("process theories compose by pasting along the boundary") {
  auto g = process_theories();
  Graph pt(FinSet{1}, FinSet{0}, {}, {});
  Graph arrow = edge_graph();
  auto m = make_cospan<GraphCat>(pt, graph_hom(pt, arrow, {0}, {}), arrow,
                                 graph_hom(pt, arrow, {1}, {}), pt);

  // exactly one process from source to sink of the walking arrow
  CHECK(g.f.enum_pobs(m).size() == 1);
  auto p = g.make_pro(m, 0);
  auto pq = g.pro_comp(p, p);
  CHECK(pq.m.apex == Graph(FinSet{3}, FinSet{2}, {0, 1}, {1, 2}));
  CHECK(pq.s == 0);  // the two-step path is the only inhabitant
  CHECK(g.f.enum_pobs(pq.m).size() == 1);

  auto o = g.make_ob(pt, 0);
  CHECK(g.pro_id(o).s == 0);
  CHECK(detail::iso_ok(g, g.lunitor(p)));
  CHECK(detail::iso_ok(g, g.runitor(p)));
  CHECK(detail::iso_ok(g, g.associator(p, p, p)));

  // the only globular endomorphism cell of the arrow process is the identity
  auto endo = cells_between(g, p, p);
  REQUIRE(endo.size() == 1);
  CHECK(endo[0] == g.vid(p));
  CHECK(g.hcomp(g.vid(p), g.vid(p)) == g.vid(pq));

  // mapping the arrow into a parallel pair picks one of the two edges, and
  // the chosen process follows the chosen edge
  Graph par(FinSet{2}, FinSet{2}, {0, 0}, {1, 1});
  auto m2 = make_cospan<GraphCat>(pt, graph_hom(pt, par, {0}, {}), par,
                                  graph_hom(pt, par, {1}, {}), pt);
  CHECK(g.f.enum_pobs(m2).size() == 2);
  auto q0 = g.make_pro(m2, 0);
  auto q1 = g.make_pro(m2, 1);
  CHECK(cells_between(g, p, q0).size() == 1);
  CHECK(cells_between(g, p, q1).size() == 1);

  std::vector<ProcessDbl::Pro> pros = {g.pro_id(o), p, q0, q1};
  auto s = build_pseudo_sample(g, pros, 12, 12, 8);
  CHECK(!s.cells.empty());
  auto rep = check_pseudocategory(g, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("gluing a cycle is rejected when processes must stay acyclic") {
  auto g = process_theories();
  Graph pt(FinSet{1}, FinSet{0}, {}, {});
  Graph two(FinSet{2}, FinSet{0}, {}, {});
  Graph arrow = edge_graph();
  // open both endpoints on the right, then close them onto one vertex
  auto m = make_cospan<GraphCat>(pt, graph_hom(pt, arrow, {0}, {}), arrow,
                                 graph_hom(two, arrow, {0, 1}, {}), two);
  auto n = make_cospan<GraphCat>(two, graph_hom(two, pt, {0, 0}, {}), pt,
                                 graph_hom(pt, pt, {0}, {}), pt);
  CHECK(g.f.enum_pobs(m).size() == 2);
  CHECK(g.f.enum_pobs(n).size() == 2);
  bool tried = false;
  for (int s : g.f.enum_pobs(m)) {
    for (int t : g.f.enum_pobs(n)) {
      if (!(g.f.tau_ob(m, s) == g.f.sigma_ob(n, t))) continue;
      tried = true;
      CHECK_THROWS_AS(g.pro_comp(g.make_pro(m, s), g.make_pro(n, t)),
                      StructuralError);
    }
  }
  CHECK(tried);
}

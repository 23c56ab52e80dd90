#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ocsp/checkers.hpp"
#include "ocsp/error.hpp"
#include "ocsp/fincat.hpp"
#include "ocsp/groth.hpp"

using namespace ocsp;
using namespace ocsp::testutil;

using CspFin = CospanDbl<FinSetCat>;
using TrivGroth = GrothDbl<TrivLax<CspFin>>;
using PairsLax = CatValuedLax<CspFin>;
using PairsGroth = GrothDbl<PairsLax>;

static_assert(DoubleCategory<MonDblFinSet>);
static_assert(EnumerableCells<MonDblFinSet>);
static_assert(DoubleCategory<MonDblCat>);
static_assert(DoubleCategory<SpanCatDbl>);
static_assert(SpanValuedLax<TrivLax<CspFin>>);
static_assert(SpanValuedLax<PairsLax>);
static_assert(DoubleCategory<TrivGroth>);
static_assert(EnumerableCells<TrivGroth>);
static_assert(DoubleCategory<PairsGroth>);
static_assert(EnumerableCells<PairsGroth>);

namespace {

FinFunction ff(int a, int b, std::vector<int> t) {
  return FinFunction(FinSet{a}, FinSet{b}, std::move(t));
}

Cospan<FinSetCat> mk(int a, int x, int b, std::vector<int> l,
                     std::vector<int> r) {
  return make_cospan<FinSetCat>(FinSet{a}, ff(a, x, std::move(l)), FinSet{x},
                                ff(b, x, std::move(r)), FinSet{b});
}

// The walking arrow as a finite category.
FinCat warr() { return free_category(Graph(FinSet{2}, FinSet{1}, {0}, {1})).cat; }

}  // namespace

TEST_CASE("disjoint union as external composition of finite sets") {
  MonDblFinSet d;
  CHECK(d.pro_comp(FinSet{2}, FinSet{3}) == FinSet{5});
  CHECK(d.pro_id(Unit{}) == FinSet{0});

  auto a = ff(2, 1, {0, 0});
  auto b = ff(1, 2, {1});
  auto h = d.hcomp(a, b);
  CHECK(h.dom == FinSet{3});
  CHECK(h.cod == FinSet{3});
  CHECK(h.table == std::vector<int>{0, 0, 2});

  auto w = d.associator(FinSet{1}, FinSet{2}, FinSet{3});
  CHECK(w.fwd == d.vid(FinSet{6}));
  CHECK(d.lunitor(FinSet{2}).fwd == d.vid(FinSet{2}));
  CHECK(d.runitor(FinSet{2}).inv == d.vid(FinSet{2}));
}

TEST_CASE("disjoint union pseudocategory laws") {
  MonDblFinSet d;
  std::vector<FinSet> pros = {FinSet{0}, FinSet{1}, FinSet{2}};
  auto s = build_pseudo_sample(d, pros, 64, 40, 24);
  CHECK(!s.cells.empty());
  CHECK(!s.grids.empty());
  auto rep = check_pseudocategory(d, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("product as external composition of finite categories") {
  MonDblCat d;
  auto w = warr();
  auto one = terminal_cat();
  CHECK(d.pro_id(Unit{}) == one);
  CHECK(d.pro_comp(w, one) == w);
  CHECK(d.pro_comp(one, w) == w);
  CHECK(d.pro_comp(d.pro_comp(w, w), w) == d.pro_comp(w, d.pro_comp(w, w)));

  auto h = d.hcomp(bang_functor(w), identity(w));
  CHECK(h.dom == d.pro_comp(w, w));
  CHECK(h.cod == w);
  CHECK(h.ob_map == std::vector<int>{0, 1, 0, 1});
  CHECK(h.mor_map == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});

  CHECK(d.associator(w, w, w).fwd == d.vid(d.pro_comp(d.pro_comp(w, w), w)));
  CHECK(d.lunitor(w).fwd == d.vid(w));
}

TEST_CASE("product pseudocategory laws") {
  MonDblCat d;
  auto w = warr();
  auto one = terminal_cat();
  auto pick1 = FinFunctor(one, w, {1}, {w.id(1)});
  auto collapse = compose(bang_functor(w), pick1);

  PseudoSample<MonDblCat> s;
  s.pros = {one, w};
  s.pro_pairs = composable_pairs(d, s.pros, 16);
  s.pro_triples = composable_triples(d, s.pros, 16);
  s.cells = {identity(one), identity(w), bang_functor(w), pick1, collapse};
  auto hp = hcomposable_pairs(d, s.cells, 32);
  s.cell_htriples = hcomposable_triples(d, hp, s.cells, 24);
  s.grids = interchange_grids(d, hp, 24);
  CHECK(!hp.empty());
  auto rep = check_pseudocategory(d, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("spans of categories compose by pullback") {
  SpanCatDbl d;
  auto w = warr();
  auto one = terminal_cat();
  auto nl = make_cat_span(identity(w), bang_functor(w));
  auto pr = make_cat_span(bang_functor(w), identity(w));
  auto mb = make_cat_span(bang_functor(w), bang_functor(w));

  auto comp = d.pro_comp(pr, nl);
  CHECK(comp.apex.objects.size == 2);
  CHECK(comp.apex.mor_count() == 3);
  CHECK(comp.leg_l == bang_functor(comp.apex));
  CHECK(comp.leg_r == bang_functor(comp.apex));

  auto half = d.pro_comp(d.pro_id(w), nl);
  CHECK(half.leg_l.cod == w);
  CHECK(half.apex.objects.size == 2);

  auto both = d.pro_comp(mb, mb);
  CHECK(both.apex == product_cat(w, w).cat);

  CHECK_THROWS_AS(d.pro_comp(mb, nl), BoundaryError);

  auto w3 = d.associator(mb, mb, mb);
  CHECK(w3.fwd == d.vid(d.pro_comp(d.pro_comp(mb, mb), mb)));

  auto lu = d.lunitor(nl);
  CHECK(detail::iso_ok(d, lu));
  CHECK(d.cell_bot(lu.fwd) == nl);
  auto ru = d.runitor(pr);
  CHECK(detail::iso_ok(d, ru));
  CHECK(d.cell_bot(ru.fwd) == pr);

  CHECK(d.make_cell(nl, nl, identity(w), identity(w), identity(one)) ==
        d.vid(nl));
  CHECK_THROWS_AS(
      d.make_cell(nl, nl, identity(w), bang_functor(w), identity(one)),
      BoundaryError);
}

TEST_CASE("span pseudocategory laws") {
  SpanCatDbl d;
  auto w = warr();
  auto one = terminal_cat();
  auto pick1 = FinFunctor(one, w, {1}, {w.id(1)});
  auto collapse = compose(bang_functor(w), pick1);
  auto nl = make_cat_span(identity(w), bang_functor(w));
  auto pr = make_cat_span(bang_functor(w), identity(w));
  auto mb = make_cat_span(bang_functor(w), bang_functor(w));

  PseudoSample<SpanCatDbl> s;
  s.pros = {d.pro_id(one), d.pro_id(w), mb, nl, pr};
  s.pro_pairs = composable_pairs(d, s.pros, 32);
  s.pro_triples = composable_triples(d, s.pros, 32);
  for (const auto& m : s.pros) s.cells.push_back(d.vid(m));
  s.cells.push_back(d.hid(bang_functor(w)));
  s.cells.push_back(d.make_cell(mb, mb, identity(one), collapse,
                                identity(one)));
  auto hp = hcomposable_pairs(d, s.cells, 48);
  s.cell_htriples = hcomposable_triples(d, hp, s.cells, 24);
  s.grids = interchange_grids(d, hp, 24);
  CHECK(!hp.empty());
  auto rep = check_pseudocategory(d, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("pairing with trivial fibers reproduces the base") {
  auto g = trivial_fibers(CspFin{});
  CspFin base;
  auto m = mk(2, 1, 1, {0, 0}, {0});
  auto n = mk(1, 1, 2, {0}, {0, 0});
  auto p = g.make_pro(m, {});
  auto q = g.make_pro(n, {});
  CHECK(g.pro_comp(p, q).m == base.pro_comp(m, n));
  CHECK(g.pro_src(p) == g.make_ob(FinSet{2}, {}));
  CHECK(g.pro_id(g.make_ob(FinSet{1}, {})).m == base.pro_id(FinSet{1}));

  auto f1 = g.make_arr(ff(1, 2, {0}), {}, {});
  auto f2 = g.make_arr(ff(2, 1, {0, 0}), {}, {});
  CHECK(g.arr_comp(f1, f2).f == compose(ff(1, 2, {0}), ff(2, 1, {0, 0})));

  auto r = g.make_pro(base.pro_id(FinSet{2}), {});
  auto w = g.associator(p, q, r);
  CHECK(w.fwd.al == base.associator(m, n, base.pro_id(FinSet{2})).fwd);
  CHECK(detail::iso_ok(g, w));
}

TEST_CASE("trivial pairing is a pseudocategory") {
  auto g = trivial_fibers(CspFin{});
  std::vector<TrivGroth::Pro> pros;
  for (const auto& m : all_finset_cospans(1, 2))
    pros.push_back(g.make_pro(m, {}));
  auto s = build_pseudo_sample(g, pros, 64, 40, 24);
  CHECK(!s.cells.empty());
  CHECK(!s.grids.empty());
  auto rep = check_pseudocategory(g, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("trivial fibers satisfy the span-valued laws") {
  auto g = trivial_fibers(CspFin{});
  CspFin base;
  GrothSample<TrivLax<CspFin>> s;
  s.obs = {FinSet{0}, FinSet{1}, FinSet{2}};
  s.arrs = all_finset_arrows(2);
  s.pros = all_finset_cospans(1, 2);
  s.cells = some_cells(base, s.pros, 24);
  fill_sample(base, s, 80);
  auto rep = check_span_valued_lax(g.f, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("projection and pairing are mutually inverse in the trivial case") {
  auto g = trivial_fibers(CspFin{});
  CspFin base;
  auto pi = groth_projection(g);
  auto emb = trivial_embedding(g);
  auto m = mk(2, 1, 1, {0, 0}, {0});
  auto n = mk(1, 1, 2, {0}, {0, 0});
  CHECK(pi.pro(emb.pro(m)) == m);
  CHECK(emb.pro(pi.pro(g.make_pro(m, {}))) == g.make_pro(m, {}));
  CHECK(emb.arr(pi.arr(g.make_arr(ff(1, 2, {0}), {}, {}))) ==
        g.make_arr(ff(1, 2, {0}), {}, {}));
  CHECK(pi.claims_pseudo());
  CHECK(emb.claims_pseudo());

  auto p = g.make_pro(m, {});
  auto q = g.make_pro(n, {});
  CHECK(pi.pro(g.pro_comp(p, q)) == base.pro_comp(m, n));
  CHECK(pi.laxator(p, q) == base.vid(base.pro_comp(m, n)));

  std::vector<TrivGroth::Pro> pros;
  for (const auto& mm : all_finset_cospans(1, 2))
    pros.push_back(g.make_pro(mm, {}));
  std::vector<TrivGroth::Ob> obs = {g.make_ob(FinSet{0}, {}),
                                    g.make_ob(FinSet{1}, {}),
                                    g.make_ob(FinSet{2}, {})};
  std::vector<TrivGroth::Arr> arrs;
  for (const auto& f : all_finset_arrows(2))
    arrs.push_back(g.make_arr(f, {}, {}));
  auto s = build_functor_sample(g, obs, arrs, pros, 40);
  auto res = check_lax_double_functor(g, base, pi, s);
  if (!res.report.all_ok()) MESSAGE(res.report.first_failure());
  CHECK(res.report.all_ok());
  CHECK(res.pseudo);
  CHECK(res.normal);

  std::vector<Cospan<FinSetCat>> bpros = all_finset_cospans(1, 2);
  auto bs = build_functor_sample(base, {FinSet{0}, FinSet{1}, FinSet{2}},
                                 all_finset_arrows(2), bpros, 40);
  auto eres = check_lax_double_functor(base, g, emb, bs);
  if (!eres.report.all_ok()) MESSAGE(eres.report.first_failure());
  CHECK(eres.report.all_ok());
  CHECK(eres.pseudo);
}

TEST_CASE("matched pairs fiber enumerates boundary pairs") {
  auto f = matched_pairs_lax();
  CspFin base;
  auto allp = mk(2, 1, 2, {0, 0}, {0, 0});
  CHECK(f.enum_pobs(allp).size() == 4);
  CHECK(f.sigma_ob(allp, 1) == 0);
  CHECK(f.tau_ob(allp, 1) == 1);
  CHECK(f.enum_pobs(mk(1, 2, 1, {0}, {1})).empty());
  CHECK(f.enum_pobs(base.pro_id(FinSet{2})).size() == 2);
  CHECK(f.unit_ob(FinSet{2}, 1) == 1);
  CHECK(f.fib(FinSet{3}).objects.size == 3);
  CHECK(f.fib(FinSet{3}).mor_count() == 3);
  CHECK(f.lax_ob(allp, allp, 1, 2) == 0);
}

TEST_CASE("decorated composition pairs decorations through the foot") {
  PairsGroth g(matched_pairs_lax());
  CspFin base;
  auto m = mk(2, 1, 2, {0, 0}, {0, 0});
  auto p = g.make_pro(m, 1);
  auto q = g.make_pro(m, 2);
  auto pq = g.pro_comp(p, q);
  CHECK(pq.m == base.pro_comp(m, m));
  CHECK(pq.s == 0);
  CHECK_THROWS_WITH_AS(
      g.pro_comp(p, g.make_pro(m, 0)),
      "grothendieck composition: decoration mismatch on the shared foot",
      BoundaryError);
  CHECK_THROWS_AS(g.make_pro(mk(1, 2, 1, {0}, {1}), 0), BoundaryError);

  auto o = g.make_ob(FinSet{2}, 1);
  CHECK(g.pro_id(o).s == 1);

  auto lu = g.lunitor(p);
  CHECK(g.cell_bot(lu.fwd) == p);
  CHECK(detail::iso_ok(g, lu));
  auto ru = g.runitor(p);
  CHECK(detail::iso_ok(g, ru));

  auto w = g.associator(p, q, p);
  CHECK(detail::iso_ok(g, w));
}

TEST_CASE("decorated arrows transport boundary points") {
  PairsGroth g(matched_pairs_lax());
  auto f = ff(2, 2, {1, 0});
  auto r = g.make_arr(f, 0, 1);
  CHECK(g.arr_cod(r) == g.make_ob(FinSet{2}, 1));
  CHECK_THROWS_AS(g.make_arr(f, 0, 0), BoundaryError);
  auto i = g.arr_id(g.make_ob(FinSet{2}, 0));
  CHECK(g.arr_comp(i, r) == r);
  CHECK(g.arr_comp(r, g.arr_id(g.arr_cod(r))) == r);

  auto as = g.arrows_between(g.make_ob(FinSet{1}, 0), g.make_ob(FinSet{2}, 1));
  CHECK(as.size() == 1);
  CHECK(as[0].f.table == std::vector<int>{1});
}

TEST_CASE("decorated cells act on decorations") {
  PairsGroth g(matched_pairs_lax());
  auto m = mk(2, 1, 2, {0, 0}, {0, 0});
  auto p = g.make_pro(m, 1);
  auto al = make_cospan_cell<FinSetCat>(m, m, ff(2, 2, {1, 0}),
                                        ff(2, 2, {0, 1}), ff(1, 1, {0}));
  CHECK(g.f.cell_ob(al, 1) == 3);
  auto c = g.make_cell(al, 1, 3);
  CHECK(g.cell_top(c) == p);
  CHECK(g.cell_bot(c) == g.make_pro(m, 3));
  CHECK_THROWS_AS(g.make_cell(al, 1, 0), BoundaryError);

  auto c2 = g.vcomp(c, g.vid(g.make_pro(m, 3)));
  CHECK(c2.s == 1);
  CHECK(g.cell_bot(c2) == g.make_pro(m, 3));

  auto h = g.hcomp(c, g.vid(g.make_pro(m, 2)));
  CHECK(h.s == 0);

  auto cs = g.cells_with_frame(p, p, g.arr_id(g.pro_src(p)),
                               g.arr_id(g.pro_tgt(p)));
  CHECK(cs.size() == 1);
  CHECK(cs[0] == g.vid(p));
}

TEST_CASE("matched pairs satisfy the span-valued laws") {
  auto f = matched_pairs_lax();
  CspFin base;
  GrothSample<PairsLax> s;
  s.obs = {FinSet{0}, FinSet{1}, FinSet{2}};
  s.arrs = all_finset_arrows(2);
  s.pros = {base.pro_id(FinSet{1}), base.pro_id(FinSet{2}),
            mk(2, 1, 2, {0, 0}, {0, 0}), mk(1, 1, 1, {0}, {0}),
            mk(2, 2, 1, {0, 1}, {0}),   mk(1, 2, 1, {0}, {1}),
            mk(1, 2, 2, {0}, {0, 1})};
  s.cells = some_cells(base, s.pros, 24);
  fill_sample(base, s, 80);
  auto rep = check_span_valued_lax(f, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
  CHECK(rep.passes() > 100);
}

TEST_CASE("decorated cospans of matched pairs form a pseudocategory") {
  PairsGroth g(matched_pairs_lax());
  CspFin base;
  std::vector<Cospan<FinSetCat>> ms = {
      base.pro_id(FinSet{1}), base.pro_id(FinSet{2}),
      mk(2, 1, 2, {0, 0}, {0, 0}), mk(1, 1, 1, {0}, {0}),
      mk(1, 2, 2, {0}, {0, 1})};
  std::vector<PairsGroth::Pro> pros;
  for (const auto& m : ms)
    for (int sx : g.f.enum_pobs(m)) pros.push_back(g.make_pro(m, sx));
  auto s = build_pseudo_sample(g, pros, 64, 32, 16);
  CHECK(!s.cells.empty());
  auto rep = check_pseudocategory(g, s);
  if (!rep.all_ok()) MESSAGE(rep.first_failure());
  CHECK(rep.all_ok());
}

TEST_CASE("the law checker flags a corrupted comparison") {
  auto m = mk(2, 1, 2, {0, 0}, {0, 0});
  GrothSample<PairsLax> s;
  s.pros = {m};
  s.pro_pairs = {{m, m}};
  CHECK(check_span_valued_lax(matched_pairs_lax(), s).all_ok());

  auto bad = matched_pairs_lax();
  auto good = bad.fun.laxator;
  bad.fun.laxator = [good](const Cospan<FinSetCat>& a,
                           const Cospan<FinSetCat>& b) {
    auto c = good(a, b);
    if (c.bot.apex.objects.size < 2) return c;
    std::vector<int> omap(c.map.apex.ob_map.size(), 0);
    FinFunctor ax(c.map.apex.dom, c.map.apex.cod, omap, omap);
    return SpanCell{c.top, c.bot, CatSpanMap{c.map.foot_l, ax, c.map.foot_r}};
  };
  auto rep = check_span_valued_lax(bad, s);
  CHECK(!rep.all_ok());
}

TEST_CASE("coherence refuses to move a misrouted decoration") {
  auto bad = matched_pairs_lax();
  auto good = bad.fun.cell;
  bad.fun.cell = [good](const CospanCell<FinSetCat>& c) {
    auto sc = good(c);
    if (sc.bot.apex.objects.size < 2) return sc;
    auto swap01 = [](std::vector<int> v) {
      for (auto& x : v) x = x == 0 ? 1 : (x == 1 ? 0 : x);
      return v;
    };
    FinFunctor ax(sc.map.apex.dom, sc.map.apex.cod,
                  swap01(sc.map.apex.ob_map), swap01(sc.map.apex.mor_map));
    return SpanCell{sc.top, sc.bot,
                    CatSpanMap{sc.map.foot_l, ax, sc.map.foot_r}};
  };
  PairsGroth g(bad);
  auto m = mk(2, 1, 2, {0, 0}, {0, 0});
  auto p = g.make_pro(m, 1);
  auto q = g.make_pro(m, 2);
  auto r = g.make_pro(m, 1);
  CHECK_THROWS_AS(g.associator(p, q, r), StructuralError);
}

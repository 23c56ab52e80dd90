#pragma once

#include <array>
#include <string>
#include <vector>

#include "ocsp/dblcat.hpp"
#include "ocsp/report.hpp"

namespace ocsp {

// Sample data for the pseudocategory laws. Tuples are expected to be
// composable; ill-framed tuples are reported as failures, never thrown
// through.
template <typename D>
struct PseudoSample {
  std::vector<typename D::Pro> pros;
  std::vector<std::array<typename D::Pro, 2>> pro_pairs;
  std::vector<std::array<typename D::Pro, 3>> pro_triples;
  std::vector<typename D::Cell> cells;
  std::vector<std::array<typename D::Cell, 3>> cell_htriples;
  // [a, b; c, d]: a,b horizontally composable, c,d below them.
  std::vector<std::array<typename D::Cell, 4>> grids;
};

namespace detail {

template <typename D>
bool is_vid(const D& d, const typename D::Cell& c, const typename D::Pro& m) {
  return c == d.vid(m);
}

template <typename D>
bool iso_ok(const D& d, const CellIso<typename D::Cell>& i) {
  return d.vcomp(i.fwd, i.inv) == d.vid(d.cell_top(i.fwd)) &&
         d.vcomp(i.inv, i.fwd) == d.vid(d.cell_bot(i.fwd));
}

template <typename F>
void guarded(Report& rep, const std::string& law, const std::string& witness,
             F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rep.fail(law, witness + " raised: " + e.what());
  }
}

}  // namespace detail

// Unit and associativity coherence, invertibility and naturality of the
// coherence cells, interchange, and functoriality of external composition
// on identities.
template <typename D>
Report check_pseudocategory(const D& d, const PseudoSample<D>& s) {
  Report rep;
  for (size_t i = 0; i < s.pros.size(); ++i) {
    const auto& m = s.pros[i];
    const std::string w = "pro " + d.show_pro(m);
    detail::guarded(rep, "unitor", w, [&] {
      auto lu = d.lunitor(m);
      auto ru = d.runitor(m);
      auto idm = d.pro_comp(d.pro_id(d.pro_src(m)), m);
      auto mid = d.pro_comp(m, d.pro_id(d.pro_tgt(m)));
      rep.check(d.cell_top(lu.fwd) == idm && d.cell_bot(lu.fwd) == m &&
                    d.cell_left(lu.fwd) == d.arr_id(d.pro_src(m)) &&
                    d.cell_right(lu.fwd) == d.arr_id(d.pro_tgt(m)),
                "left unit frame", w);
      rep.check(d.cell_top(ru.fwd) == mid && d.cell_bot(ru.fwd) == m,
                "right unit frame", w);
      rep.check(detail::iso_ok(d, lu), "left unitor invertible", w);
      rep.check(detail::iso_ok(d, ru), "right unitor invertible", w);
    });
  }
  for (size_t i = 0; i < s.pro_pairs.size(); ++i) {
    const auto& [m, n] = s.pro_pairs[i];
    const std::string w = d.show_pro(m) + " (.) " + d.show_pro(n);
    detail::guarded(rep, "composition", w, [&] {
      auto mn = d.pro_comp(m, n);
      rep.check(d.pro_src(mn) == d.pro_src(m) && d.pro_tgt(mn) == d.pro_tgt(n),
                "composite feet", w);
      rep.check(d.hcomp(d.vid(m), d.vid(n)) == d.vid(mn),
                "(.) preserves identity cells", w);
    });
  }
  for (size_t i = 0; i < s.pro_triples.size(); ++i) {
    const auto& [m, n, p] = s.pro_triples[i];
    const std::string w = d.show_pro(m) + " (.) " + d.show_pro(n) + " (.) " +
                          d.show_pro(p);
    detail::guarded(rep, "associator", w, [&] {
      auto a = d.associator(m, n, p);
      rep.check(d.cell_top(a.fwd) == d.pro_comp(d.pro_comp(m, n), p) &&
                    d.cell_bot(a.fwd) == d.pro_comp(m, d.pro_comp(n, p)),
                "associator frame", w);
      rep.check(detail::iso_ok(d, a), "associator invertible", w);
    });
  }
  for (size_t i = 0; i < s.cells.size(); ++i) {
    const auto& c = s.cells[i];
    const std::string w = "cell " + d.show_cell(c);
    detail::guarded(rep, "unit naturality", w, [&] {
      auto top = d.cell_top(c), bot = d.cell_bot(c);
      auto lf = d.hcomp(d.hid(d.cell_left(c)), c);
      rep.check(d.vcomp(lf, d.lunitor(bot).fwd) == d.vcomp(d.lunitor(top).fwd, c),
                "left unitor natural", w);
      auto rf = d.hcomp(c, d.hid(d.cell_right(c)));
      rep.check(d.vcomp(rf, d.runitor(bot).fwd) == d.vcomp(d.runitor(top).fwd, c),
                "right unitor natural", w);
    });
  }
  for (size_t i = 0; i < s.cell_htriples.size(); ++i) {
    const auto& [x, y, z] = s.cell_htriples[i];
    const std::string w = "cells #" + std::to_string(i);
    detail::guarded(rep, "associator naturality", w, [&] {
      auto lhs = d.vcomp(d.hcomp(d.hcomp(x, y), z),
                         d.associator(d.cell_bot(x), d.cell_bot(y), d.cell_bot(z)).fwd);
      auto rhs = d.vcomp(d.associator(d.cell_top(x), d.cell_top(y), d.cell_top(z)).fwd,
                         d.hcomp(x, d.hcomp(y, z)));
      rep.check(lhs == rhs, "associator natural", w);
    });
  }
  for (size_t i = 0; i < s.grids.size(); ++i) {
    const auto& g = s.grids[i];
    const std::string w = "grid #" + std::to_string(i);
    detail::guarded(rep, "interchange", w, [&] {
      auto lhs = d.vcomp(d.hcomp(g[0], g[1]), d.hcomp(g[2], g[3]));
      auto rhs = d.hcomp(d.vcomp(g[0], g[2]), d.vcomp(g[1], g[3]));
      rep.check(lhs == rhs, "interchange", w);
    });
  }
  return rep;
}

template <typename D>
struct NicheSample {
  typename D::Arr f, g;  // f: x -> w, g: y -> z
  typename D::Pro n;     // n: w -/-> z
};

template <typename D>
struct FactorSample {
  NicheSample<D> niche;
  typename D::Arr h, k;    // h: x' -> x, k: y' -> y
  typename D::Cell alpha;  // alpha: m' => n over (h;f, k;g)
};

// Universal property of a single restriction cell: every compatible cell
// factors through it uniquely. Uniqueness is verified by bounded exhaustive
// enumeration of candidate cells.
template <typename D>
void check_restriction_property(const D& d, const Restriction<D>& r,
                                const FactorSample<D>& fc, Report& rep)
  requires EnumerableCells<D>
{
  const std::string w = "factor through " + d.show_pro(r.pro);
  detail::guarded(rep, "restriction factorization", w, [&] {
    auto beta = d.restriction_factor(fc.alpha, fc.h, fc.k, r);
    rep.check(d.cell_top(beta) == d.cell_top(fc.alpha) &&
                  d.cell_bot(beta) == r.pro && d.cell_left(beta) == fc.h &&
                  d.cell_right(beta) == fc.k,
              "factorization frame", w);
    rep.check(d.vcomp(beta, r.cell) == fc.alpha, "factorization equation", w);
    int count = 0;
    for (const auto& cand :
         d.cells_with_frame(d.cell_top(fc.alpha), r.pro, fc.h, fc.k))
      if (d.vcomp(cand, r.cell) == fc.alpha) ++count;
    rep.check(count == 1, "factorization unique",
              w + " (candidates matching: " + std::to_string(count) + ")");
  });
}

template <typename D>
Report check_equipment(const D& d, const std::vector<NicheSample<D>>& niches,
                       const std::vector<FactorSample<D>>& factor_cases)
  requires EnumerableCells<D>
{
  Report rep;
  for (const auto& niche : niches) {
    const std::string w = "niche (" + d.show_arr(niche.f) + ", " +
                          d.show_arr(niche.g) + ", " + d.show_pro(niche.n) + ")";
    detail::guarded(rep, "restriction", w, [&] {
      auto r = d.restriction(niche.f, niche.g, niche.n);
      rep.check(d.cell_top(r.cell) == r.pro && d.cell_bot(r.cell) == niche.n &&
                    d.cell_left(r.cell) == niche.f &&
                    d.cell_right(r.cell) == niche.g,
                "restriction frame", w);
      rep.check(d.pro_src(r.pro) == d.arr_dom(niche.f) &&
                    d.pro_tgt(r.pro) == d.arr_dom(niche.g),
                "restriction feet", w);
    });
  }
  for (const auto& fc : factor_cases) {
    detail::guarded(rep, "restriction factorization", "factor case", [&] {
      auto r = d.restriction(fc.niche.f, fc.niche.g, fc.niche.n);
      check_restriction_property(d, r, fc, rep);
    });
  }
  return rep;
}

template <typename D>
struct CocartSample {
  std::vector<std::array<typename D::Ob, 2>> ob_pairs;
  std::vector<typename D::Ob> ob_targets;
  std::vector<std::array<typename D::Pro, 2>> pro_pairs;
  std::vector<typename D::Pro> pro_targets;
  // m, n, m', n' with m (.) n and m' (.) n' both defined
  std::vector<std::array<typename D::Pro, 4>> comp_quads;
  size_t max_cocones = 64;  // cap on enumerated cocones per pair/target
};

// Coproducts on both levels (equations plus mediating-map uniqueness by
// enumeration), preservation of coproducts by src/tgt, and invertibility of
// the four comparison cells against their designated inverses.
template <typename D>
Report check_cocartesian(const D& d, const CocartSample<D>& s)
  requires EnumerableCells<D>
{
  Report rep;
  for (const auto& [a, b] : s.ob_pairs) {
    const std::string w = d.show_ob(a) + " + " + d.show_ob(b);
    detail::guarded(rep, "ob coproduct", w, [&] {
      auto cw = d.ob_coproduct(a, b);
      rep.check(d.arr_dom(cw.inl) == a && d.arr_dom(cw.inr) == b &&
                    d.arr_cod(cw.inl) == cw.sum && d.arr_cod(cw.inr) == cw.sum,
                "coprojection endpoints", w);
      for (const auto& z : s.ob_targets) {
        size_t seen = 0;
        auto into_sum = d.arrows_between(cw.sum, z);
        for (const auto& p : d.arrows_between(a, z)) {
          for (const auto& q : d.arrows_between(b, z)) {
            if (++seen > s.max_cocones) break;
            auto u = d.ob_copair(p, q, cw);
            bool eq = d.arr_comp(cw.inl, u) == p && d.arr_comp(cw.inr, u) == q;
            int count = 0;
            for (const auto& cand : into_sum)
              if (d.arr_comp(cw.inl, cand) == p && d.arr_comp(cw.inr, cand) == q)
                ++count;
            rep.check(eq && count == 1, "ob copair universal",
                      w + " -> " + d.show_ob(z));
          }
          if (seen > s.max_cocones) break;
        }
      }
    });
  }
  for (const auto& z : s.ob_targets) {
    detail::guarded(rep, "ob initial", d.show_ob(z), [&] {
      auto zero = d.ob_initial();
      auto arrows = d.arrows_between(zero, z);
      rep.check(arrows.size() == 1 && arrows[0] == d.ob_bang(z),
                "initial object unique arrow", d.show_ob(z));
    });
  }
  for (const auto& [m, n] : s.pro_pairs) {
    const std::string w = d.show_pro(m) + " + " + d.show_pro(n);
    detail::guarded(rep, "pro coproduct", w, [&] {
      auto pw = d.pro_coproduct(m, n);
      auto sl = d.ob_coproduct(d.pro_src(m), d.pro_src(n));
      auto tl = d.ob_coproduct(d.pro_tgt(m), d.pro_tgt(n));
      rep.check(d.pro_src(pw.sum) == sl.sum && d.pro_tgt(pw.sum) == tl.sum,
                "src/tgt preserve coproducts", w);
      rep.check(d.cell_left(pw.inl) == sl.inl && d.cell_right(pw.inl) == tl.inl &&
                    d.cell_left(pw.inr) == sl.inr &&
                    d.cell_right(pw.inr) == tl.inr,
                "coprojection cells over object coprojections", w);
      for (const auto& t : s.pro_targets) {
        size_t seen = 0;
        for (const auto& beta : cells_between(d, m, t)) {
          for (const auto& betap : cells_between(d, n, t)) {
            if (++seen > s.max_cocones) break;
            auto u = d.pro_copair(beta, betap, pw);
            bool eq = d.vcomp(pw.inl, u) == beta && d.vcomp(pw.inr, u) == betap;
            int count = 0;
            for (const auto& cand : d.cells_with_frame(
                     pw.sum, t, d.cell_left(u), d.cell_right(u)))
              if (d.vcomp(pw.inl, cand) == beta && d.vcomp(pw.inr, cand) == betap)
                ++count;
            rep.check(eq && count == 1, "pro copair universal",
                      w + " -> " + d.show_pro(t));
          }
          if (seen > s.max_cocones) break;
        }
      }
    });
  }
  for (const auto& t : s.pro_targets) {
    detail::guarded(rep, "pro initial", d.show_pro(t), [&] {
      auto zero = d.pro_initial();
      auto cells = cells_between(d, zero, t);
      rep.check(cells.size() == 1 && cells[0] == d.pro_bang(t),
                "initial proarrow unique cell", d.show_pro(t));
    });
  }
  for (const auto& q : s.comp_quads) {
    const auto &m = q[0], &n = q[1], &mp = q[2], &np = q[3];
    const std::string w = "(" + d.show_pro(m) + "," + d.show_pro(n) + "," +
                          d.show_pro(mp) + "," + d.show_pro(np) + ")";
    detail::guarded(rep, "comparison (.)/+", w, [&] {
      auto iso = d.comparison_compose(m, n, mp, np);
      auto wmn = d.pro_coproduct(d.pro_comp(m, n), d.pro_comp(mp, np));
      auto wsum = d.pro_comp(d.pro_coproduct(m, mp).sum, d.pro_coproduct(n, np).sum);
      rep.check(d.cell_top(iso.fwd) == wmn.sum && d.cell_bot(iso.fwd) == wsum,
                "comparison (.)/+ frame", w);
      // The defining formula: copair of the composites of coprojections.
      auto wm = d.pro_coproduct(m, mp);
      auto wn = d.pro_coproduct(n, np);
      auto expected =
          d.pro_copair(d.hcomp(wm.inl, wn.inl), d.hcomp(wm.inr, wn.inr), wmn);
      rep.check(iso.fwd == expected, "comparison (.)/+ formula", w);
      rep.check(detail::iso_ok(d, iso), "comparison (.)/+ invertible", w);
    });
  }
  for (const auto& [a, b] : s.ob_pairs) {
    const std::string w = d.show_ob(a) + ", " + d.show_ob(b);
    detail::guarded(rep, "comparison id/+", w, [&] {
      auto iso = d.comparison_id(a, b);
      auto cw = d.ob_coproduct(a, b);
      auto pw = d.pro_coproduct(d.pro_id(a), d.pro_id(b));
      rep.check(d.cell_top(iso.fwd) == pw.sum &&
                    d.cell_bot(iso.fwd) == d.pro_id(cw.sum),
                "comparison id/+ frame", w);
      auto expected = d.pro_copair(d.hid(cw.inl), d.hid(cw.inr), pw);
      rep.check(iso.fwd == expected, "comparison id/+ formula", w);
      rep.check(detail::iso_ok(d, iso), "comparison id/+ invertible", w);
    });
  }
  detail::guarded(rep, "comparison zero", "nullary", [&] {
    auto zc = d.comparison_zero_compose();
    rep.check(d.cell_top(zc.fwd) == d.pro_initial() &&
                  d.cell_bot(zc.fwd) == d.pro_comp(d.pro_initial(), d.pro_initial()),
              "comparison 0/(.) frame", "nullary");
    rep.check(detail::iso_ok(d, zc), "comparison 0/(.) invertible", "nullary");
    auto zi = d.comparison_zero_id();
    rep.check(d.cell_top(zi.fwd) == d.pro_initial() &&
                  d.cell_bot(zi.fwd) == d.pro_id(d.ob_initial()),
              "comparison 0/id frame", "nullary");
    rep.check(detail::iso_ok(d, zi), "comparison 0/id invertible", "nullary");
  });
  return rep;
}

template <typename D>
struct FunctorSample {
  std::vector<typename D::Ob> obs;
  std::vector<typename D::Arr> arrs;
  std::vector<std::array<typename D::Arr, 2>> arr_pairs;
  std::vector<typename D::Pro> pros;
  std::vector<typename D::Cell> cells;
  std::vector<std::array<typename D::Cell, 2>> cell_vpairs;
  std::vector<std::array<typename D::Cell, 2>> cell_hpairs;
  std::vector<std::array<typename D::Pro, 2>> pro_pairs;
  std::vector<std::array<typename D::Pro, 3>> pro_triples;
};

struct LaxCheckResult {
  Report report;
  bool normal = true;  // unitors are identity cells
  bool pseudo = true;  // designated inverses provided and verified
};

// Functoriality, frame preservation, laxator/unitor naturality, the unit
// triangles and the associativity hexagon, plus normal/pseudo status.
template <typename Dom, typename Cod>
LaxCheckResult check_lax_double_functor(const Dom& dd, const Cod& cd,
                                        const DblFunctor<Dom, Cod>& F,
                                        const FunctorSample<Dom>& s) {
  LaxCheckResult res;
  Report& rep = res.report;
  for (const auto& a : s.obs) {
    detail::guarded(rep, "functor on objects", dd.show_ob(a), [&] {
      rep.check(F.arr(dd.arr_id(a)) == cd.arr_id(F.ob(a)), "F(id) = id",
                dd.show_ob(a));
      auto u = F.unitor(a);
      rep.check(cd.cell_top(u) == cd.pro_id(F.ob(a)) &&
                    cd.cell_bot(u) == F.pro(dd.pro_id(a)) &&
                    cd.cell_left(u) == cd.arr_id(F.ob(a)) &&
                    cd.cell_right(u) == cd.arr_id(F.ob(a)),
                "unitor frame", dd.show_ob(a));
      if (!(u == cd.vid(cd.pro_id(F.ob(a)))) ||
          !(F.pro(dd.pro_id(a)) == cd.pro_id(F.ob(a))))
        res.normal = false;
      if (F.unitor_inv) {
        auto ui = F.unitor_inv(a);
        rep.check(cd.vcomp(u, ui) == cd.vid(cd.cell_top(u)) &&
                      cd.vcomp(ui, u) == cd.vid(cd.cell_bot(u)),
                  "unitor invertible", dd.show_ob(a));
      } else {
        res.pseudo = false;
      }
    });
  }
  for (const auto& f : s.arrs) {
    detail::guarded(rep, "functor on arrows", dd.show_arr(f), [&] {
      rep.check(cd.arr_dom(F.arr(f)) == F.ob(dd.arr_dom(f)) &&
                    cd.arr_cod(F.arr(f)) == F.ob(dd.arr_cod(f)),
                "arrow endpoints preserved", dd.show_arr(f));
      rep.check(cd.vcomp(cd.hid(F.arr(f)), F.unitor(dd.arr_cod(f))) ==
                    cd.vcomp(F.unitor(dd.arr_dom(f)), F.cell(dd.hid(f))),
                "unitor natural", dd.show_arr(f));
    });
  }
  for (const auto& [f, g] : s.arr_pairs) {
    detail::guarded(rep, "functor on arrows", "pair", [&] {
      rep.check(F.arr(dd.arr_comp(f, g)) == cd.arr_comp(F.arr(f), F.arr(g)),
                "F(f;g) = F(f);F(g)", dd.show_arr(f) + " ; " + dd.show_arr(g));
    });
  }
  for (const auto& m : s.pros) {
    detail::guarded(rep, "functor on proarrows", dd.show_pro(m), [&] {
      rep.check(cd.pro_src(F.pro(m)) == F.ob(dd.pro_src(m)) &&
                    cd.pro_tgt(F.pro(m)) == F.ob(dd.pro_tgt(m)),
                "proarrow feet preserved", dd.show_pro(m));
      rep.check(F.cell(dd.vid(m)) == cd.vid(F.pro(m)), "F(vid) = vid",
                dd.show_pro(m));
      // unit triangles
      auto a = dd.pro_src(m);
      auto b = dd.pro_tgt(m);
      auto left = cd.vcomp(
          cd.vcomp(cd.hcomp(F.unitor(a), cd.vid(F.pro(m))),
                   F.laxator(dd.pro_id(a), m)),
          F.cell(dd.lunitor(m).fwd));
      rep.check(left == cd.lunitor(F.pro(m)).fwd, "left unit triangle",
                dd.show_pro(m));
      auto right = cd.vcomp(
          cd.vcomp(cd.hcomp(cd.vid(F.pro(m)), F.unitor(b)),
                   F.laxator(m, dd.pro_id(b))),
          F.cell(dd.runitor(m).fwd));
      rep.check(right == cd.runitor(F.pro(m)).fwd, "right unit triangle",
                dd.show_pro(m));
    });
  }
  for (const auto& c : s.cells) {
    detail::guarded(rep, "functor on cells", dd.show_cell(c), [&] {
      auto fc = F.cell(c);
      rep.check(cd.cell_top(fc) == F.pro(dd.cell_top(c)) &&
                    cd.cell_bot(fc) == F.pro(dd.cell_bot(c)) &&
                    cd.cell_left(fc) == F.arr(dd.cell_left(c)) &&
                    cd.cell_right(fc) == F.arr(dd.cell_right(c)),
                "cell frame preserved", dd.show_cell(c));
    });
  }
  for (const auto& [x, y] : s.cell_vpairs) {
    detail::guarded(rep, "functor on cells", "vpair", [&] {
      rep.check(F.cell(dd.vcomp(x, y)) == cd.vcomp(F.cell(x), F.cell(y)),
                "F(x;y) = F(x);F(y) vertically", "vpair");
    });
  }
  for (const auto& [m, n] : s.pro_pairs) {
    const std::string w = dd.show_pro(m) + " (.) " + dd.show_pro(n);
    detail::guarded(rep, "laxator", w, [&] {
      auto l = F.laxator(m, n);
      rep.check(cd.cell_top(l) == cd.pro_comp(F.pro(m), F.pro(n)) &&
                    cd.cell_bot(l) == F.pro(dd.pro_comp(m, n)) &&
                    cd.cell_left(l) == cd.arr_id(F.ob(dd.pro_src(m))) &&
                    cd.cell_right(l) == cd.arr_id(F.ob(dd.pro_tgt(n))),
                "laxator frame", w);
      if (F.laxator_inv) {
        auto li = F.laxator_inv(m, n);
        rep.check(cd.vcomp(l, li) == cd.vid(cd.cell_top(l)) &&
                      cd.vcomp(li, l) == cd.vid(cd.cell_bot(l)),
                  "laxator invertible", w);
      } else {
        res.pseudo = false;
      }
    });
  }
  for (const auto& [x, y] : s.cell_hpairs) {
    detail::guarded(rep, "laxator naturality", "hpair", [&] {
      auto lhs = cd.vcomp(cd.hcomp(F.cell(x), F.cell(y)),
                          F.laxator(dd.cell_bot(x), dd.cell_bot(y)));
      auto rhs = cd.vcomp(F.laxator(dd.cell_top(x), dd.cell_top(y)),
                          F.cell(dd.hcomp(x, y)));
      rep.check(lhs == rhs, "laxator natural",
                dd.show_cell(x) + " | " + dd.show_cell(y));
    });
  }
  for (const auto& [m, n, p] : s.pro_triples) {
    const std::string w =
        dd.show_pro(m) + " (.) " + dd.show_pro(n) + " (.) " + dd.show_pro(p);
    detail::guarded(rep, "hexagon", w, [&] {
      auto route1 = cd.vcomp(
          cd.vcomp(cd.hcomp(F.laxator(m, n), cd.vid(F.pro(p))),
                   F.laxator(dd.pro_comp(m, n), p)),
          F.cell(dd.associator(m, n, p).fwd));
      auto route2 = cd.vcomp(
          cd.vcomp(cd.associator(F.pro(m), F.pro(n), F.pro(p)).fwd,
                   cd.hcomp(cd.vid(F.pro(m)), F.laxator(n, p))),
          F.laxator(m, dd.pro_comp(n, p)));
      rep.check(route1 == route2, "associativity hexagon", w);
    });
  }
  return res;
}

// A functor is cocartesian when both components preserve finite coproducts;
// verified on the images of sampled coproduct diagrams by re-running the
// universal property in the codomain.
template <typename Dom, typename Cod>
Report check_cocartesian_functor(const Dom& dd, const Cod& cd,
                                 const DblFunctor<Dom, Cod>& F,
                                 const CocartSample<Dom>& s,
                                 const std::vector<typename Cod::Ob>& cod_ob_targets,
                                 const std::vector<typename Cod::Pro>& cod_pro_targets)
  requires EnumerableCells<Cod>
{
  Report rep;
  for (const auto& [a, b] : s.ob_pairs) {
    const std::string w = dd.show_ob(a) + " + " + dd.show_ob(b);
    detail::guarded(rep, "image coproduct", w, [&] {
      auto cw = dd.ob_coproduct(a, b);
      auto fs = F.ob(cw.sum);
      auto fl = F.arr(cw.inl);
      auto fr = F.arr(cw.inr);
      for (const auto& z : cod_ob_targets) {
        size_t seen = 0;
        auto into_sum = cd.arrows_between(fs, z);
        for (const auto& p : cd.arrows_between(F.ob(a), z)) {
          for (const auto& q : cd.arrows_between(F.ob(b), z)) {
            if (++seen > s.max_cocones) break;
            int count = 0;
            for (const auto& cand : into_sum)
              if (cd.arr_comp(fl, cand) == p && cd.arr_comp(fr, cand) == q)
                ++count;
            rep.check(count == 1, "image coproduct universal",
                      w + " -> " + cd.show_ob(z));
          }
          if (seen > s.max_cocones) break;
        }
      }
    });
  }
  detail::guarded(rep, "image initial", "0", [&] {
    auto fz = F.ob(dd.ob_initial());
    for (const auto& z : cod_ob_targets)
      rep.check(cd.arrows_between(fz, z).size() == 1, "image initial",
                cd.show_ob(z));
  });
  for (const auto& [m, n] : s.pro_pairs) {
    const std::string w = dd.show_pro(m) + " + " + dd.show_pro(n);
    detail::guarded(rep, "image pro coproduct", w, [&] {
      auto pw = dd.pro_coproduct(m, n);
      auto fs = F.pro(pw.sum);
      auto fl = F.cell(pw.inl);
      auto fr = F.cell(pw.inr);
      for (const auto& t : cod_pro_targets) {
        size_t seen = 0;
        for (const auto& beta : cells_between(cd, F.pro(m), t)) {
          for (const auto& betap : cells_between(cd, F.pro(n), t)) {
            if (++seen > s.max_cocones) break;
            int count = 0;
            for (const auto& cand : cells_between(cd, fs, t))
              if (cd.vcomp(fl, cand) == beta && cd.vcomp(fr, cand) == betap)
                ++count;
            rep.check(count == 1, "image pro coproduct universal",
                      w + " -> " + cd.show_pro(t));
          }
          if (seen > s.max_cocones) break;
        }
      }
    });
  }
  return rep;
}

}  // namespace ocsp

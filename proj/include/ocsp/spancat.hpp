#pragma once

#include <string>
#include <vector>

#include "ocsp/dblcat.hpp"
#include "ocsp/error.hpp"
#include "ocsp/fincat.hpp"

namespace ocsp {

// Cell in the span double category: a span map together with its stated
// domain and codomain spans (a CatSpanMap alone does not determine the legs).
struct SpanCell {
  CatSpan top, bot;
  CatSpanMap map;
  bool operator==(const SpanCell&) const = default;
};

// Spans of finite categories, composed by the chosen strict pullback. The
// flattened pair indexing makes iterated pullbacks associate on the nose;
// the unitors are genuine isomorphisms built from the projections.
struct SpanCatDbl {
  using Ob = FinCat;
  using Arr = FinFunctor;
  using Pro = CatSpan;
  using Cell = SpanCell;

  Ob arr_dom(const Arr& f) const { return f.dom; }
  Ob arr_cod(const Arr& f) const { return f.cod; }
  Arr arr_id(const Ob& a) const { return identity(a); }
  Arr arr_comp(const Arr& f, const Arr& g) const { return compose(f, g); }

  Ob pro_src(const Pro& m) const { return m.leg_l.cod; }
  Ob pro_tgt(const Pro& m) const { return m.leg_r.cod; }

  Pro pro_id(const Ob& a) const { return Pro{a, identity(a), identity(a)}; }

  Pro pro_comp(const Pro& m, const Pro& n) const {
    if (!(m.leg_r.cod == n.leg_l.cod))
      throw BoundaryError("span composition: middle feet do not match");
    auto pb = pullback_cat(m.leg_r, n.leg_l);
    return Pro{pb.cat, compose(pb.proj_l, m.leg_l),
               compose(pb.proj_r, n.leg_r)};
  }

  Pro cell_top(const Cell& c) const { return c.top; }
  Pro cell_bot(const Cell& c) const { return c.bot; }
  Arr cell_left(const Cell& c) const { return c.map.foot_l; }
  Arr cell_right(const Cell& c) const { return c.map.foot_r; }

  Cell make_cell(const Pro& top, const Pro& bot, Arr fl, Arr fx,
                 Arr fr) const {
    auto map = make_cat_span_map(top, bot, std::move(fl), std::move(fx),
                                 std::move(fr));
    return Cell{top, bot, std::move(map)};
  }

  Cell vid(const Pro& m) const {
    return Cell{m, m,
                CatSpanMap{identity(m.leg_l.cod), identity(m.apex),
                           identity(m.leg_r.cod)}};
  }

  Cell vcomp(const Cell& a, const Cell& b) const {
    if (!(a.bot == b.top))
      throw BoundaryError("span cell composition: middle spans do not match");
    return Cell{a.top, b.bot,
                CatSpanMap{compose(a.map.foot_l, b.map.foot_l),
                           compose(a.map.apex, b.map.apex),
                           compose(a.map.foot_r, b.map.foot_r)}};
  }

  Cell hid(const Arr& f) const {
    return Cell{pro_id(f.dom), pro_id(f.cod), CatSpanMap{f, f, f}};
  }

  Cell hcomp(const Cell& a, const Cell& b) const {
    if (!(a.map.foot_r == b.map.foot_l))
      throw BoundaryError(
          "external span composition: shared foot functors differ");
    auto top = pro_comp(a.top, b.top);
    auto bot = pro_comp(a.bot, b.bot);
    auto pt = pullback_cat(a.top.leg_r, b.top.leg_l);
    auto pbm = pullback_cat(a.bot.leg_r, b.bot.leg_l);
    std::vector<int> obs, mors;
    obs.reserve(pt.obs.size());
    for (const auto& ob : pt.obs)
      obs.push_back(pbm.ob_of.at({a.map.apex.ob(ob[0]), b.map.apex.ob(ob[1])}));
    mors.reserve(pt.mors.size());
    for (const auto& mo : pt.mors)
      mors.push_back(
          pbm.mor_of.at({a.map.apex.mor(mo[0]), b.map.apex.mor(mo[1])}));
    FinFunctor apex(pt.cat, pbm.cat, std::move(obs), std::move(mors));
    return make_cell(top, bot, a.map.foot_l, std::move(apex), b.map.foot_r);
  }

  CellIso<Cell> associator(const Pro& m, const Pro& n, const Pro& p) const {
    auto lhs = pro_comp(pro_comp(m, n), p);
    auto rhs = pro_comp(m, pro_comp(n, p));
    if (!(lhs == rhs))
      throw StructuralError(
          "span associator: chosen pullbacks do not associate strictly");
    return {vid(lhs), vid(rhs)};
  }

  CellIso<Cell> lunitor(const Pro& m) const {
    auto comp = pro_comp(pro_id(m.leg_l.cod), m);
    auto pb = pullback_cat(identity(m.leg_l.cod), m.leg_l);
    std::vector<int> obs, mors;
    obs.reserve(static_cast<size_t>(m.apex.objects.size));
    for (int s = 0; s < m.apex.objects.size; ++s)
      obs.push_back(pb.ob_of.at({m.leg_l.ob(s), s}));
    mors.reserve(static_cast<size_t>(m.apex.mor_count()));
    for (int s = 0; s < m.apex.mor_count(); ++s)
      mors.push_back(pb.mor_of.at({m.leg_l.mor(s), s}));
    FinFunctor back(m.apex, pb.cat, std::move(obs), std::move(mors));
    auto fwd = make_cell(comp, m, identity(m.leg_l.cod), pb.proj_r,
                         identity(m.leg_r.cod));
    auto inv = make_cell(m, comp, identity(m.leg_l.cod), back,
                         identity(m.leg_r.cod));
    if (!(vcomp(fwd, inv) == vid(comp)) || !(vcomp(inv, fwd) == vid(m)))
      throw StructuralError("span left unitor: not an isomorphism");
    return {fwd, inv};
  }

  CellIso<Cell> runitor(const Pro& m) const {
    auto comp = pro_comp(m, pro_id(m.leg_r.cod));
    auto pb = pullback_cat(m.leg_r, identity(m.leg_r.cod));
    std::vector<int> obs, mors;
    obs.reserve(static_cast<size_t>(m.apex.objects.size));
    for (int s = 0; s < m.apex.objects.size; ++s)
      obs.push_back(pb.ob_of.at({s, m.leg_r.ob(s)}));
    mors.reserve(static_cast<size_t>(m.apex.mor_count()));
    for (int s = 0; s < m.apex.mor_count(); ++s)
      mors.push_back(pb.mor_of.at({s, m.leg_r.mor(s)}));
    FinFunctor back(m.apex, pb.cat, std::move(obs), std::move(mors));
    auto fwd = make_cell(comp, m, identity(m.leg_l.cod), pb.proj_l,
                         identity(m.leg_r.cod));
    auto inv = make_cell(m, comp, identity(m.leg_l.cod), back,
                         identity(m.leg_r.cod));
    if (!(vcomp(fwd, inv) == vid(comp)) || !(vcomp(inv, fwd) == vid(m)))
      throw StructuralError("span right unitor: not an isomorphism");
    return {fwd, inv};
  }

  std::string show_ob(const Ob& a) const { return show(a); }
  std::string show_arr(const Arr& f) const { return show(f); }
  std::string show_pro(const Pro& m) const {
    return show(m.leg_l.cod) + "<" + show(m.apex) + ">" + show(m.leg_r.cod);
  }
  std::string show_cell(const Cell& c) const {
    return show_pro(c.top) + " => " + show_pro(c.bot);
  }
};

}  // namespace ocsp

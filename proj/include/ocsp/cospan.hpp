#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ocsp/dblcat.hpp"
#include "ocsp/error.hpp"

namespace ocsp {

// Cospan in a category C with chosen finite colimits. Feet are stored
// explicitly so ill-typed data is caught at construction.
template <typename C>
struct Cospan {
  typename C::Ob foot_l, apex, foot_r;
  typename C::Arr leg_l, leg_r;
  bool operator==(const Cospan&) const = default;
};

template <typename C>
struct CospanCell {
  Cospan<C> top, bottom;
  typename C::Arr map_l, map_r, map_apex;
  bool operator==(const CospanCell&) const = default;
};

template <typename C>
Cospan<C> make_cospan(const typename C::Ob& a, const typename C::Arr& l,
                      const typename C::Ob& x, const typename C::Arr& r,
                      const typename C::Ob& b) {
  if (!(C::dom(l) == a) || !(C::cod(l) == x) || !(C::dom(r) == b) ||
      !(C::cod(r) == x))
    throw BoundaryError("cospan: legs do not match the stated feet and apex");
  return Cospan<C>{a, x, b, l, r};
}

template <typename C>
CospanCell<C> make_cospan_cell(const Cospan<C>& top, const Cospan<C>& bottom,
                               const typename C::Arr& fl,
                               const typename C::Arr& fr,
                               const typename C::Arr& fx) {
  if (!(C::dom(fl) == top.foot_l) || !(C::cod(fl) == bottom.foot_l) ||
      !(C::dom(fr) == top.foot_r) || !(C::cod(fr) == bottom.foot_r) ||
      !(C::dom(fx) == top.apex) || !(C::cod(fx) == bottom.apex))
    throw BoundaryError("cospan cell: component maps do not match the frame");
  if (!(C::comp(top.leg_l, fx) == C::comp(fl, bottom.leg_l)) ||
      !(C::comp(top.leg_r, fx) == C::comp(fr, bottom.leg_r)))
    throw BoundaryError("cospan cell: leg squares do not commute");
  return CospanCell<C>{top, bottom, fl, fr, fx};
}

// The double category of cospans in C, composed by the chosen pushouts.
// Restrictions precompose legs; coproducts are pointwise.
template <typename C>
struct CospanDbl {
  using Base = C;
  using Ob = typename C::Ob;
  using Arr = typename C::Arr;
  using Pro = Cospan<C>;
  using Cell = CospanCell<C>;

  struct ComposeData {
    PushoutData<Ob, Arr> w;
    Pro comp;
  };

  Ob arr_dom(const Arr& f) const { return C::dom(f); }
  Ob arr_cod(const Arr& f) const { return C::cod(f); }
  Arr arr_id(const Ob& a) const { return C::id(a); }
  Arr arr_comp(const Arr& f, const Arr& g) const { return C::comp(f, g); }

  Ob pro_src(const Pro& m) const { return m.foot_l; }
  Ob pro_tgt(const Pro& m) const { return m.foot_r; }

  Pro pro_id(const Ob& a) const {
    return Pro{a, a, a, C::id(a), C::id(a)};
  }

  ComposeData compose_data(const Pro& m, const Pro& n) const {
    if (!(m.foot_r == n.foot_l))
      throw BoundaryError("cospan composition: middle feet do not match");
    auto w = C::po(m.leg_r, n.leg_l);
    Pro comp{m.foot_l, w.apex, n.foot_r, C::comp(m.leg_l, w.ia),
             C::comp(n.leg_r, w.ib)};
    return {w, comp};
  }

  Pro pro_comp(const Pro& m, const Pro& n) const {
    return compose_data(m, n).comp;
  }

  Pro cell_top(const Cell& c) const { return c.top; }
  Pro cell_bot(const Cell& c) const { return c.bottom; }
  Arr cell_left(const Cell& c) const { return c.map_l; }
  Arr cell_right(const Cell& c) const { return c.map_r; }

  Cell vid(const Pro& m) const {
    return Cell{m, m, C::id(m.foot_l), C::id(m.foot_r), C::id(m.apex)};
  }

  Cell vcomp(const Cell& a, const Cell& b) const {
    if (!(a.bottom == b.top))
      throw BoundaryError("cell composition: middle proarrows do not match");
    return Cell{a.top, b.bottom, C::comp(a.map_l, b.map_l),
                C::comp(a.map_r, b.map_r), C::comp(a.map_apex, b.map_apex)};
  }

  Cell hid(const Arr& f) const {
    return Cell{pro_id(C::dom(f)), pro_id(C::cod(f)), f, f, f};
  }

  Cell hcomp(const Cell& a, const Cell& b) const {
    if (!(a.map_r == b.map_l))
      throw BoundaryError("external cell composition: shared foot maps differ");
    auto wt = compose_data(a.top, b.top);
    auto wb = compose_data(a.bottom, b.bottom);
    auto apex = C::po_copair(wt.w, C::comp(a.map_apex, wb.w.ia),
                             C::comp(b.map_apex, wb.w.ib));
    return Cell{wt.comp, wb.comp, a.map_l, b.map_r, apex};
  }

  // Globular isomorphism between the two composites, built from the
  // mediating maps of the iterated pushouts; both composites are verified
  // to be mutually inverse at construction.
  CellIso<Cell> associator(const Pro& m, const Pro& n, const Pro& p) const {
    auto w1 = compose_data(m, n);
    auto w2 = compose_data(w1.comp, p);   // ((m.n).p)
    auto v1 = compose_data(n, p);
    auto v2 = compose_data(m, v1.comp);   // (m.(n.p))
    // forward: apex((m.n).p) -> apex(m.(n.p))
    auto u1 = C::po_copair(w1.w, v2.w.ia, C::comp(v1.w.ia, v2.w.ib));
    auto fwd_apex = C::po_copair(w2.w, u1, C::comp(v1.w.ib, v2.w.ib));
    // backward: glue the other way around
    auto u2 = C::po_copair(v1.w, C::comp(w1.w.ib, w2.w.ia), w2.w.ib);
    auto inv_apex = C::po_copair(v2.w, C::comp(w1.w.ia, w2.w.ia), u2);
    Cell fwd{w2.comp, v2.comp, C::id(m.foot_l), C::id(p.foot_r), fwd_apex};
    Cell inv{v2.comp, w2.comp, C::id(m.foot_l), C::id(p.foot_r), inv_apex};
    CellIso<Cell> iso{fwd, inv};
    if (!(vcomp(fwd, inv) == vid(w2.comp)) || !(vcomp(inv, fwd) == vid(v2.comp)))
      throw StructuralError("cospan associator: mediating maps are not mutually inverse");
    return iso;
  }

  CellIso<Cell> lunitor(const Pro& m) const {
    auto w = compose_data(pro_id(m.foot_l), m);
    auto fwd_apex = C::po_copair(w.w, m.leg_l, C::id(m.apex));
    Cell fwd{w.comp, m, C::id(m.foot_l), C::id(m.foot_r), fwd_apex};
    Cell inv{m, w.comp, C::id(m.foot_l), C::id(m.foot_r), w.w.ib};
    CellIso<Cell> iso{fwd, inv};
    if (!(vcomp(fwd, inv) == vid(w.comp)) || !(vcomp(inv, fwd) == vid(m)))
      throw StructuralError("cospan left unitor: not an isomorphism");
    return iso;
  }

  CellIso<Cell> runitor(const Pro& m) const {
    auto w = compose_data(m, pro_id(m.foot_r));
    auto fwd_apex = C::po_copair(w.w, C::id(m.apex), m.leg_r);
    Cell fwd{w.comp, m, C::id(m.foot_l), C::id(m.foot_r), fwd_apex};
    Cell inv{m, w.comp, C::id(m.foot_l), C::id(m.foot_r), w.w.ia};
    CellIso<Cell> iso{fwd, inv};
    if (!(vcomp(fwd, inv) == vid(w.comp)) || !(vcomp(inv, fwd) == vid(m)))
      throw StructuralError("cospan right unitor: not an isomorphism");
    return iso;
  }

  // Restriction along (f, g): precompose the legs. The restriction cell has
  // the identity on the apex, so factorizations keep their apex map.
  Restriction<CospanDbl> restriction(const Arr& f, const Arr& g,
                                     const Pro& n) const {
    if (!(C::cod(f) == n.foot_l) || !(C::cod(g) == n.foot_r))
      throw BoundaryError("restriction: arrows do not land in the feet");
    Pro res{C::dom(f), n.apex, C::dom(g), C::comp(f, n.leg_l),
            C::comp(g, n.leg_r)};
    Cell cell{res, n, f, g, C::id(n.apex)};
    return {res, cell};
  }

  Cell restriction_factor(const Cell& alpha, const Arr& h, const Arr& k,
                          const Restriction<CospanDbl>& r) const {
    if (!(alpha.bottom == r.cell.bottom))
      throw BoundaryError("restriction factor: cell does not sit over the niche");
    if (!(alpha.map_l == C::comp(h, r.cell.map_l)) ||
        !(alpha.map_r == C::comp(k, r.cell.map_r)))
      throw BoundaryError("restriction factor: side arrows do not factor as stated");
    return make_cospan_cell<C>(alpha.top, r.pro, h, k, alpha.map_apex);
  }

  Coprod<Ob, Arr> ob_coproduct(const Ob& a, const Ob& b) const {
    return C::coprod(a, b);
  }
  Arr ob_copair(const Arr& f, const Arr& g, const Coprod<Ob, Arr>& w) const {
    return C::copr(f, g, w);
  }
  Ob ob_initial() const { return C::initial(); }
  Arr ob_bang(const Ob& a) const { return C::initial_arrow(a); }

  ProCoprod<CospanDbl> pro_coproduct(const Pro& m, const Pro& n) const {
    auto wl = C::coprod(m.foot_l, n.foot_l);
    auto wx = C::coprod(m.apex, n.apex);
    auto wr = C::coprod(m.foot_r, n.foot_r);
    Pro sum{wl.sum, wx.sum, wr.sum,
            C::copr(C::comp(m.leg_l, wx.inl), C::comp(n.leg_l, wx.inr), wl),
            C::copr(C::comp(m.leg_r, wx.inl), C::comp(n.leg_r, wx.inr), wr)};
    Cell inl{m, sum, wl.inl, wr.inl, wx.inl};
    Cell inr{n, sum, wl.inr, wr.inr, wx.inr};
    return {sum, inl, inr};
  }

  Cell pro_copair(const Cell& a, const Cell& b,
                  const ProCoprod<CospanDbl>& w) const {
    if (!(a.bottom == b.bottom))
      throw BoundaryError("pro copair: cells do not share a codomain");
    const Pro& m = w.inl.top;
    const Pro& n = w.inr.top;
    auto wl = C::coprod(m.foot_l, n.foot_l);
    auto wx = C::coprod(m.apex, n.apex);
    auto wr = C::coprod(m.foot_r, n.foot_r);
    return Cell{w.sum, a.bottom, C::copr(a.map_l, b.map_l, wl),
                C::copr(a.map_r, b.map_r, wr),
                C::copr(a.map_apex, b.map_apex, wx)};
  }

  Pro pro_initial() const {
    auto z = C::initial();
    return Pro{z, z, z, C::id(z), C::id(z)};
  }

  Cell pro_bang(const Pro& n) const {
    return Cell{pro_initial(), n, C::initial_arrow(n.foot_l),
                C::initial_arrow(n.foot_r), C::initial_arrow(n.apex)};
  }

  // Globular cell whose designated inverse comes from inverting the apex
  // map; non-invertibility is a structural error.
  CellIso<Cell> globular_iso(const Cell& fwd, const std::string& what) const {
    auto apex_inv = C::inverse(fwd.map_apex);
    auto l_inv = C::inverse(fwd.map_l);
    auto r_inv = C::inverse(fwd.map_r);
    if (!apex_inv || !l_inv || !r_inv)
      throw StructuralError(what + ": comparison cell is not invertible");
    Cell inv{fwd.bottom, fwd.top, *l_inv, *r_inv, *apex_inv};
    if (!(vcomp(fwd, inv) == vid(fwd.top)) || !(vcomp(inv, fwd) == vid(fwd.bottom)))
      throw StructuralError(what + ": designated inverse fails the identities");
    return {fwd, inv};
  }

  // The four comparison cells of a cocartesian double category.
  CellIso<Cell> comparison_compose(const Pro& m, const Pro& n, const Pro& mp,
                                   const Pro& np) const {
    auto wm = pro_coproduct(m, mp);
    auto wn = pro_coproduct(n, np);
    auto wmn = pro_coproduct(pro_comp(m, n), pro_comp(mp, np));
    auto fwd = pro_copair(hcomp(wm.inl, wn.inl), hcomp(wm.inr, wn.inr), wmn);
    return globular_iso(fwd, "comparison (m.n)+(m'.n') -> (m+m').(n+n')");
  }

  CellIso<Cell> comparison_id(const Ob& a, const Ob& b) const {
    auto cw = C::coprod(a, b);
    auto pw = pro_coproduct(pro_id(a), pro_id(b));
    auto fwd = pro_copair(hid(cw.inl), hid(cw.inr), pw);
    return globular_iso(fwd, "comparison id+id -> id(+)");
  }

  CellIso<Cell> comparison_zero_compose() const {
    auto fwd = pro_bang(pro_comp(pro_initial(), pro_initial()));
    return globular_iso(fwd, "comparison 0 -> 0.0");
  }

  CellIso<Cell> comparison_zero_id() const {
    auto fwd = pro_bang(pro_id(C::initial()));
    return globular_iso(fwd, "comparison 0 -> id(0)");
  }

  std::optional<Cell> try_invert_cell(const Cell& c) const {
    auto il = C::inverse(c.map_l);
    auto ir = C::inverse(c.map_r);
    auto ix = C::inverse(c.map_apex);
    if (!il || !ir || !ix) return std::nullopt;
    return Cell{c.bottom, c.top, *il, *ir, *ix};
  }

  std::vector<Arr> arrows_between(const Ob& a, const Ob& b) const {
    return C::arrows_between(a, b);
  }

  std::vector<Cell> cells_with_frame(const Pro& top, const Pro& bot,
                                     const Arr& f, const Arr& g) const {
    std::vector<Cell> out;
    for (const auto& h : C::arrows_between(top.apex, bot.apex)) {
      if (C::comp(top.leg_l, h) == C::comp(f, bot.leg_l) &&
          C::comp(top.leg_r, h) == C::comp(g, bot.leg_r))
        out.push_back(Cell{top, bot, f, g, h});
    }
    return out;
  }

  std::string show_ob(const Ob& a) const { return C::show_ob(a); }
  std::string show_arr(const Arr& f) const { return C::show_arr(f); }
  std::string show_pro(const Pro& m) const {
    return C::show_ob(m.foot_l) + ">" + C::show_ob(m.apex) + "<" +
           C::show_ob(m.foot_r);
  }
  std::string show_cell(const Cell& c) const {
    return show_pro(c.top) + " => " + show_pro(c.bottom);
  }
};

// Functor between the base categories, the datum for a map of cospan double
// categories; `preserves_pushouts` marks the designated inverse available.
template <typename C, typename D>
struct BaseFunctor {
  std::string name = "F";
  std::function<typename D::Ob(const typename C::Ob&)> ob;
  std::function<typename D::Arr(const typename C::Arr&)> arr;
  bool preserves_pushouts = false;
};

// Postcomposition by F: a normal lax map of cospan double categories whose
// laxator is the mediating map F(x) +_{F(b)} F(y) -> F(x +_b y); it is
// pseudo exactly when F preserves the chosen pushouts.
template <typename C, typename D>
DblFunctor<CospanDbl<C>, CospanDbl<D>> csp_map(const BaseFunctor<C, D>& F) {
  using DomD = CospanDbl<C>;
  using CodD = CospanDbl<D>;
  DblFunctor<DomD, CodD> out;
  out.name = "Csp(" + F.name + ")";
  out.ob = F.ob;
  out.arr = F.arr;
  out.pro = [F](const typename DomD::Pro& m) {
    return typename CodD::Pro{F.ob(m.foot_l), F.ob(m.apex), F.ob(m.foot_r),
                              F.arr(m.leg_l), F.arr(m.leg_r)};
  };
  out.cell = [F](const typename DomD::Cell& c) {
    typename CodD::Pro top{F.ob(c.top.foot_l), F.ob(c.top.apex),
                           F.ob(c.top.foot_r), F.arr(c.top.leg_l),
                           F.arr(c.top.leg_r)};
    typename CodD::Pro bot{F.ob(c.bottom.foot_l), F.ob(c.bottom.apex),
                           F.ob(c.bottom.foot_r), F.arr(c.bottom.leg_l),
                           F.arr(c.bottom.leg_r)};
    return typename CodD::Cell{top, bot, F.arr(c.map_l), F.arr(c.map_r),
                               F.arr(c.map_apex)};
  };
  out.laxator = [F](const typename DomD::Pro& m, const typename DomD::Pro& n) {
    DomD dom;
    CodD cod;
    auto w = dom.compose_data(m, n);
    auto fm = typename CodD::Pro{F.ob(m.foot_l), F.ob(m.apex), F.ob(m.foot_r),
                                 F.arr(m.leg_l), F.arr(m.leg_r)};
    auto fn = typename CodD::Pro{F.ob(n.foot_l), F.ob(n.apex), F.ob(n.foot_r),
                                 F.arr(n.leg_l), F.arr(n.leg_r)};
    auto wf = cod.compose_data(fm, fn);
    auto apex = D::po_copair(wf.w, F.arr(w.w.ia), F.arr(w.w.ib));
    auto fcomp = typename CodD::Pro{F.ob(w.comp.foot_l), F.ob(w.comp.apex),
                                    F.ob(w.comp.foot_r), F.arr(w.comp.leg_l),
                                    F.arr(w.comp.leg_r)};
    return typename CodD::Cell{wf.comp, fcomp, D::id(F.ob(m.foot_l)),
                               D::id(F.ob(n.foot_r)), apex};
  };
  out.unitor = [F](const typename DomD::Ob& a) {
    CodD cod;
    return cod.vid(cod.pro_id(F.ob(a)));  // normal: identities go to identities
  };
  out.unitor_inv = out.unitor;
  if (F.preserves_pushouts) {
    auto lax = out.laxator;
    out.laxator_inv = [lax](const typename DomD::Pro& m,
                            const typename DomD::Pro& n) {
      CodD cod;
      auto c = lax(m, n);
      auto inv = cod.try_invert_cell(c);
      if (!inv)
        throw StructuralError(
            "csp_map: functor was declared pushout-preserving but the "
            "laxator does not invert");
      return *inv;
    };
  }
  return out;
}

}  // namespace ocsp

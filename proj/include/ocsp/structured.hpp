#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ocsp/cospan.hpp"
#include "ocsp/dblcat.hpp"
#include "ocsp/error.hpp"
#include "ocsp/report.hpp"

namespace ocsp {

// Finite-coproduct-preserving functor L from the foot category into the
// carrier category. Preservation is witnessed by the invertibility of the
// canonical comparison maps, checked where they are used.
template <typename CA, typename CX>
struct StructuringFunctor {
  std::string name = "L";
  std::function<typename CX::Ob(const typename CA::Ob&)> ob;
  std::function<typename CX::Arr(const typename CA::Arr&)> arr;
};

// Cospan in X whose feet are images of chosen foot objects under L.
template <typename CA, typename CX>
struct StructuredCospan {
  typename CA::Ob a, b;
  Cospan<CX> carrier;
  bool operator==(const StructuredCospan&) const = default;
};

template <typename CA, typename CX>
struct StructuredCell {
  StructuredCospan<CA, CX> top, bottom;
  typename CA::Arr f, g;     // foot maps, taken in the foot category
  typename CX::Arr apex;     // apex map in the carrier category
  bool operator==(const StructuredCell&) const = default;
};

// The double category of L-structured cospans. Feet live in A, carriers in
// X; composition and the globular coherence cells are inherited from the
// carrier cospans, coproducts go through the comparison maps of L.
template <typename CA, typename CX>
struct StructuredDbl {
  using Ob = typename CA::Ob;
  using Arr = typename CA::Arr;
  using Pro = StructuredCospan<CA, CX>;
  using Cell = StructuredCell<CA, CX>;
  using XOb = typename CX::Ob;
  using XArr = typename CX::Arr;

  StructuringFunctor<CA, CX> L;
  CospanDbl<CX> car;

  explicit StructuredDbl(StructuringFunctor<CA, CX> L_) : L(std::move(L_)) {}

  Pro make_pro(const Ob& a, const Cospan<CX>& carrier, const Ob& b) const {
    if (!(carrier.foot_l == L.ob(a)) || !(carrier.foot_r == L.ob(b)))
      throw BoundaryError(
          "structured cospan: carrier feet are not the images of the stated "
          "feet");
    return Pro{a, b, carrier};
  }

  Cell make_cell(const Pro& top, const Pro& bottom, const Arr& f, const Arr& g,
                 const XArr& apex) const {
    if (!(CA::dom(f) == top.a) || !(CA::cod(f) == bottom.a) ||
        !(CA::dom(g) == top.b) || !(CA::cod(g) == bottom.b))
      throw BoundaryError("structured cell: foot maps do not match the frame");
    make_cospan_cell<CX>(top.carrier, bottom.carrier, L.arr(f), L.arr(g), apex);
    return Cell{top, bottom, f, g, apex};
  }

  CospanCell<CX> carrier_cell(const Cell& c) const {
    return CospanCell<CX>{c.top.carrier, c.bottom.carrier, L.arr(c.f),
                          L.arr(c.g), c.apex};
  }

  Ob arr_dom(const Arr& f) const { return CA::dom(f); }
  Ob arr_cod(const Arr& f) const { return CA::cod(f); }
  Arr arr_id(const Ob& a) const { return CA::id(a); }
  Arr arr_comp(const Arr& f, const Arr& g) const { return CA::comp(f, g); }

  Ob pro_src(const Pro& m) const { return m.a; }
  Ob pro_tgt(const Pro& m) const { return m.b; }

  Pro pro_id(const Ob& a) const { return Pro{a, a, car.pro_id(L.ob(a))}; }

  Pro pro_comp(const Pro& m, const Pro& n) const {
    if (!(m.b == n.a))
      throw BoundaryError("structured composition: middle feet do not match");
    return Pro{m.a, n.b, car.pro_comp(m.carrier, n.carrier)};
  }

  Pro cell_top(const Cell& c) const { return c.top; }
  Pro cell_bot(const Cell& c) const { return c.bottom; }
  Arr cell_left(const Cell& c) const { return c.f; }
  Arr cell_right(const Cell& c) const { return c.g; }

  Cell vid(const Pro& m) const {
    return Cell{m, m, CA::id(m.a), CA::id(m.b), CX::id(m.carrier.apex)};
  }

  Cell vcomp(const Cell& a, const Cell& b) const {
    if (!(a.bottom == b.top))
      throw BoundaryError("cell composition: middle proarrows do not match");
    return Cell{a.top, b.bottom, CA::comp(a.f, b.f), CA::comp(a.g, b.g),
                CX::comp(a.apex, b.apex)};
  }

  Cell hid(const Arr& f) const {
    return Cell{pro_id(CA::dom(f)), pro_id(CA::cod(f)), f, f, L.arr(f)};
  }

  Cell hcomp(const Cell& a, const Cell& b) const {
    if (!(a.g == b.f))
      throw BoundaryError("external cell composition: shared foot maps differ");
    auto cc = car.hcomp(carrier_cell(a), carrier_cell(b));
    return Cell{pro_comp(a.top, b.top), pro_comp(a.bottom, b.bottom), a.f, b.g,
                cc.map_apex};
  }

  CellIso<Cell> lift_globular(const Pro& top, const Pro& bot,
                              const CellIso<CospanCell<CX>>& iso) const {
    Cell fwd{top, bot, CA::id(top.a), CA::id(top.b), iso.fwd.map_apex};
    Cell inv{bot, top, CA::id(top.a), CA::id(top.b), iso.inv.map_apex};
    return {fwd, inv};
  }

  CellIso<Cell> associator(const Pro& m, const Pro& n, const Pro& p) const {
    auto iso = car.associator(m.carrier, n.carrier, p.carrier);
    return lift_globular(pro_comp(pro_comp(m, n), p),
                         pro_comp(m, pro_comp(n, p)), iso);
  }

  CellIso<Cell> lunitor(const Pro& m) const {
    auto iso = car.lunitor(m.carrier);
    return lift_globular(pro_comp(pro_id(m.a), m), m, iso);
  }

  CellIso<Cell> runitor(const Pro& m) const {
    auto iso = car.runitor(m.carrier);
    return lift_globular(pro_comp(m, pro_id(m.b)), m, iso);
  }

  Restriction<StructuredDbl> restriction(const Arr& f, const Arr& g,
                                         const Pro& n) const {
    if (!(CA::cod(f) == n.a) || !(CA::cod(g) == n.b))
      throw BoundaryError("restriction: arrows do not land in the feet");
    auto rc = car.restriction(L.arr(f), L.arr(g), n.carrier);
    Pro res{CA::dom(f), CA::dom(g), rc.pro};
    Cell cell{res, n, f, g, CX::id(n.carrier.apex)};
    return {res, cell};
  }

  Cell restriction_factor(const Cell& alpha, const Arr& h, const Arr& k,
                          const Restriction<StructuredDbl>& r) const {
    if (!(alpha.bottom == r.cell.bottom))
      throw BoundaryError("restriction factor: cell does not sit over the niche");
    if (!(alpha.f == CA::comp(h, r.cell.f)) ||
        !(alpha.g == CA::comp(k, r.cell.g)))
      throw BoundaryError("restriction factor: side arrows do not factor as stated");
    return make_cell(alpha.top, r.pro, h, k, alpha.apex);
  }

  // Comparison L(a) + L(a') -> L(a + a'), copaired from the images of the
  // coprojections; its inverse witnesses that L preserves the coproduct.
  struct FootComparison {
    Coprod<XOb, XArr> w;  // chosen coproduct of L(a), L(a')
    XArr cmp;
  };

  FootComparison comparison(const Ob& a, const Ob& ap) const {
    auto cw = CA::coprod(a, ap);
    auto w = CX::coprod(L.ob(a), L.ob(ap));
    return {w, CX::copr(L.arr(cw.inl), L.arr(cw.inr), w)};
  }

  XArr comparison_inverse(const Ob& a, const Ob& ap) const {
    auto fc = comparison(a, ap);
    auto inv = CX::inverse(fc.cmp);
    if (!inv)
      throw StructuralError(
          "structuring functor does not preserve the coproduct " +
          CA::show_ob(a) + " + " + CA::show_ob(ap));
    return *inv;
  }

  XArr zero_comparison_inverse() const {
    auto cmp0 = CX::initial_arrow(L.ob(CA::initial()));
    auto inv = CX::inverse(cmp0);
    if (!inv)
      throw StructuralError(
          "structuring functor does not preserve the initial object");
    return *inv;
  }

  Coprod<Ob, Arr> ob_coproduct(const Ob& a, const Ob& b) const {
    return CA::coprod(a, b);
  }
  Arr ob_copair(const Arr& f, const Arr& g, const Coprod<Ob, Arr>& w) const {
    return CA::copr(f, g, w);
  }
  Ob ob_initial() const { return CA::initial(); }
  Arr ob_bang(const Ob& a) const { return CA::initial_arrow(a); }

  ProCoprod<StructuredDbl> pro_coproduct(const Pro& m, const Pro& n) const {
    auto cwa = CA::coprod(m.a, n.a);
    auto cwb = CA::coprod(m.b, n.b);
    auto wx = CX::coprod(m.carrier.apex, n.carrier.apex);
    auto inva = comparison_inverse(m.a, n.a);
    auto invb = comparison_inverse(m.b, n.b);
    auto wla = CX::coprod(L.ob(m.a), L.ob(n.a));
    auto wlb = CX::coprod(L.ob(m.b), L.ob(n.b));
    auto leg_l = CX::comp(
        inva, CX::copr(CX::comp(m.carrier.leg_l, wx.inl),
                       CX::comp(n.carrier.leg_l, wx.inr), wla));
    auto leg_r = CX::comp(
        invb, CX::copr(CX::comp(m.carrier.leg_r, wx.inl),
                       CX::comp(n.carrier.leg_r, wx.inr), wlb));
    Pro sum{cwa.sum, cwb.sum,
            Cospan<CX>{L.ob(cwa.sum), wx.sum, L.ob(cwb.sum), leg_l, leg_r}};
    Cell inl{m, sum, cwa.inl, cwb.inl, wx.inl};
    Cell inr{n, sum, cwa.inr, cwb.inr, wx.inr};
    return {sum, inl, inr};
  }

  Cell pro_copair(const Cell& a, const Cell& b,
                  const ProCoprod<StructuredDbl>& w) const {
    if (!(a.bottom == b.bottom))
      throw BoundaryError("pro copair: cells do not share a codomain");
    const Pro& m = w.inl.top;
    const Pro& n = w.inr.top;
    auto cwa = CA::coprod(m.a, n.a);
    auto cwb = CA::coprod(m.b, n.b);
    auto wx = CX::coprod(m.carrier.apex, n.carrier.apex);
    try {
      return make_cell(w.sum, a.bottom, CA::copr(a.f, b.f, cwa),
                       CA::copr(a.g, b.g, cwb), CX::copr(a.apex, b.apex, wx));
    } catch (const BoundaryError& e) {
      throw StructuralError(
          std::string("pro copair: structuring functor fails the copair "
                      "triangle (") +
          e.what() + ")");
    }
  }

  Pro pro_initial() const {
    auto z = CA::initial();
    auto lz = L.ob(z);
    return Pro{z, z, Cospan<CX>{lz, lz, lz, CX::id(lz), CX::id(lz)}};
  }

  Cell pro_bang(const Pro& n) const {
    auto apex = CX::comp(zero_comparison_inverse(),
                         CX::initial_arrow(n.carrier.apex));
    try {
      return make_cell(pro_initial(), n, CA::initial_arrow(n.a),
                       CA::initial_arrow(n.b), apex);
    } catch (const BoundaryError& e) {
      throw StructuralError(
          std::string("pro bang: image of the initial object does not behave "
                      "initially (") +
          e.what() + ")");
    }
  }

  CellIso<Cell> globular_iso(const Cell& fwd, const std::string& what) const {
    auto il = CA::inverse(fwd.f);
    auto ir = CA::inverse(fwd.g);
    auto ix = CX::inverse(fwd.apex);
    if (!il || !ir || !ix)
      throw StructuralError(what + ": comparison cell is not invertible");
    Cell inv{fwd.bottom, fwd.top, *il, *ir, *ix};
    if (!(vcomp(fwd, inv) == vid(fwd.top)) ||
        !(vcomp(inv, fwd) == vid(fwd.bottom)))
      throw StructuralError(what + ": designated inverse fails the identities");
    return {fwd, inv};
  }

  CellIso<Cell> comparison_compose(const Pro& m, const Pro& n, const Pro& mp,
                                   const Pro& np) const {
    auto wm = pro_coproduct(m, mp);
    auto wn = pro_coproduct(n, np);
    auto wmn = pro_coproduct(pro_comp(m, n), pro_comp(mp, np));
    auto fwd = pro_copair(hcomp(wm.inl, wn.inl), hcomp(wm.inr, wn.inr), wmn);
    return globular_iso(fwd, "comparison (m.n)+(m'.n') -> (m+m').(n+n')");
  }

  CellIso<Cell> comparison_id(const Ob& a, const Ob& b) const {
    auto cw = CA::coprod(a, b);
    auto pw = pro_coproduct(pro_id(a), pro_id(b));
    auto fwd = pro_copair(hid(cw.inl), hid(cw.inr), pw);
    return globular_iso(fwd, "comparison id+id -> id(+)");
  }

  CellIso<Cell> comparison_zero_compose() const {
    auto fwd = pro_bang(pro_comp(pro_initial(), pro_initial()));
    return globular_iso(fwd, "comparison 0 -> 0.0");
  }

  CellIso<Cell> comparison_zero_id() const {
    auto fwd = pro_bang(pro_id(CA::initial()));
    return globular_iso(fwd, "comparison 0 -> id(0)");
  }

  std::optional<Cell> try_invert_cell(const Cell& c) const {
    auto il = CA::inverse(c.f);
    auto ir = CA::inverse(c.g);
    auto ix = CX::inverse(c.apex);
    if (!il || !ir || !ix) return std::nullopt;
    return Cell{c.bottom, c.top, *il, *ir, *ix};
  }

  std::vector<Arr> arrows_between(const Ob& a, const Ob& b) const {
    return CA::arrows_between(a, b);
  }

  std::vector<Cell> cells_with_frame(const Pro& top, const Pro& bot,
                                     const Arr& f, const Arr& g) const {
    std::vector<Cell> out;
    auto lf = L.arr(f);
    auto lg = L.arr(g);
    for (const auto& h :
         CX::arrows_between(top.carrier.apex, bot.carrier.apex)) {
      if (CX::comp(top.carrier.leg_l, h) == CX::comp(lf, bot.carrier.leg_l) &&
          CX::comp(top.carrier.leg_r, h) == CX::comp(lg, bot.carrier.leg_r))
        out.push_back(Cell{top, bot, f, g, h});
    }
    return out;
  }

  std::string show_ob(const Ob& a) const { return CA::show_ob(a); }
  std::string show_arr(const Arr& f) const { return CA::show_arr(f); }
  std::string show_pro(const Pro& m) const {
    return CA::show_ob(m.a) + ">" + CX::show_ob(m.carrier.apex) + "<" +
           CA::show_ob(m.b);
  }
  std::string show_cell(const Cell& c) const {
    return show_pro(c.top) + " => " + show_pro(c.bottom);
  }
};

// Coproduct preservation evidence for a structuring functor on samples:
// comparison maps invert, the initial object is preserved, and copairing
// commutes with L through the comparison.
template <typename CA, typename CX>
Report check_structuring(
    const StructuringFunctor<CA, CX>& L,
    const std::vector<std::array<typename CA::Ob, 2>>& ob_pairs,
    const std::vector<std::array<typename CA::Arr, 2>>& cocone_pairs) {
  Report rep;
  StructuredDbl<CA, CX> sd(L);
  for (const auto& [a, ap] : ob_pairs) {
    const std::string w = CA::show_ob(a) + " + " + CA::show_ob(ap);
    try {
      auto fc = sd.comparison(a, ap);
      auto inv = CX::inverse(fc.cmp);
      rep.check(inv.has_value(), "comparison invertible", w);
    } catch (const std::exception& e) {
      rep.fail("comparison invertible", w + " raised: " + e.what());
    }
  }
  try {
    auto cmp0 = CX::initial_arrow(L.ob(CA::initial()));
    rep.check(CX::inverse(cmp0).has_value(), "initial preserved", "0");
  } catch (const std::exception& e) {
    rep.fail("initial preserved", std::string("raised: ") + e.what());
  }
  for (const auto& [f, fp] : cocone_pairs) {
    const std::string w = CA::show_arr(f) + " with " + CA::show_arr(fp);
    try {
      if (!(CA::cod(f) == CA::cod(fp))) {
        rep.fail("copair triangle", w + " (not a cocone)");
        continue;
      }
      auto a = CA::dom(f);
      auto ap = CA::dom(fp);
      auto cw = CA::coprod(a, ap);
      auto fc = sd.comparison(a, ap);
      auto lhs = CX::copr(L.arr(f), L.arr(fp), fc.w);
      auto rhs = CX::comp(fc.cmp, L.arr(CA::copr(f, fp, cw)));
      rep.check(lhs == rhs, "copair triangle", w);
    } catch (const std::exception& e) {
      rep.fail("copair triangle", w + " raised: " + e.what());
    }
  }
  return rep;
}

// Change of carrier category along F1: apply F1 to carriers, keep the feet.
// Normal lax; pseudo exactly when F1 preserves the chosen pushouts.
template <typename CA, typename CX, typename CY>
DblFunctor<StructuredDbl<CA, CX>, StructuredDbl<CA, CY>> sc_map_codomain(
    const StructuredDbl<CA, CX>& dom, const StructuredDbl<CA, CY>& cod,
    const BaseFunctor<CX, CY>& F1) {
  using DomD = StructuredDbl<CA, CX>;
  using CodD = StructuredDbl<CA, CY>;
  DblFunctor<DomD, CodD> out;
  out.name = "carrier(" + F1.name + ")";
  out.ob = [](const typename DomD::Ob& a) { return a; };
  out.arr = [](const typename DomD::Arr& f) { return f; };
  auto on_carrier = [F1](const Cospan<CX>& c) {
    return Cospan<CY>{F1.ob(c.foot_l), F1.ob(c.apex), F1.ob(c.foot_r),
                      F1.arr(c.leg_l), F1.arr(c.leg_r)};
  };
  out.pro = [on_carrier](const typename DomD::Pro& m) {
    return typename CodD::Pro{m.a, m.b, on_carrier(m.carrier)};
  };
  out.cell = [on_carrier, F1](const typename DomD::Cell& c) {
    return typename CodD::Cell{
        typename CodD::Pro{c.top.a, c.top.b, on_carrier(c.top.carrier)},
        typename CodD::Pro{c.bottom.a, c.bottom.b, on_carrier(c.bottom.carrier)},
        c.f, c.g, F1.arr(c.apex)};
  };
  auto pro = out.pro;
  out.laxator = [dom, cod, pro, F1](const typename DomD::Pro& m,
                                    const typename DomD::Pro& n) {
    auto w = dom.car.compose_data(m.carrier, n.carrier);
    auto fm = pro(m);
    auto fn = pro(n);
    auto wf = cod.car.compose_data(fm.carrier, fn.carrier);
    auto apex = CY::po_copair(wf.w, F1.arr(w.w.ia), F1.arr(w.w.ib));
    return typename CodD::Cell{cod.pro_comp(fm, fn), pro(dom.pro_comp(m, n)),
                               CA::id(m.a), CA::id(n.b), apex};
  };
  out.unitor = [cod](const typename DomD::Ob& a) {
    return cod.vid(cod.pro_id(a));
  };
  out.unitor_inv = out.unitor;
  if (F1.preserves_pushouts) {
    auto lax = out.laxator;
    out.laxator_inv = [lax, cod](const typename DomD::Pro& m,
                                 const typename DomD::Pro& n) {
      auto inv = cod.try_invert_cell(lax(m, n));
      if (!inv)
        throw StructuralError(
            "carrier map: functor was declared pushout-preserving but the "
            "laxator does not invert");
      return *inv;
    };
  }
  return out;
}

// Change of feet along F0, with the domain structured by the composite of
// F0 and the codomain structuring functor; carriers are untouched, so this
// map is strict.
template <typename CA, typename CB, typename CX>
DblFunctor<StructuredDbl<CA, CX>, StructuredDbl<CB, CX>> sc_map_base(
    const StructuredDbl<CA, CX>& dom, const StructuredDbl<CB, CX>& cod,
    const BaseFunctor<CA, CB>& F0) {
  using DomD = StructuredDbl<CA, CX>;
  using CodD = StructuredDbl<CB, CX>;
  DblFunctor<DomD, CodD> out;
  out.name = "feet(" + F0.name + ")";
  out.ob = F0.ob;
  out.arr = F0.arr;
  out.pro = [F0](const typename DomD::Pro& m) {
    return typename CodD::Pro{F0.ob(m.a), F0.ob(m.b), m.carrier};
  };
  out.cell = [F0](const typename DomD::Cell& c) {
    return typename CodD::Cell{
        typename CodD::Pro{F0.ob(c.top.a), F0.ob(c.top.b), c.top.carrier},
        typename CodD::Pro{F0.ob(c.bottom.a), F0.ob(c.bottom.b),
                           c.bottom.carrier},
        F0.arr(c.f), F0.arr(c.g), c.apex};
  };
  auto pro = out.pro;
  out.laxator = [dom, cod, pro](const typename DomD::Pro& m,
                                const typename DomD::Pro& n) {
    auto lhs = cod.pro_comp(pro(m), pro(n));
    auto rhs = pro(dom.pro_comp(m, n));
    if (!(lhs == rhs))
      throw StructuralError("feet map: composite carriers disagree");
    return cod.vid(lhs);
  };
  out.laxator_inv = out.laxator;
  out.unitor = [cod, F0](const typename DomD::Ob& a) {
    return cod.vid(cod.pro_id(F0.ob(a)));
  };
  out.unitor_inv = out.unitor;
  return out;
}

// Restriction along the components of a natural transformation tau between
// structuring functors with the same feet and carrier; naturality is
// verified on the sample, and again cell by cell during application.
template <typename CA, typename CX>
DblFunctor<StructuredDbl<CA, CX>, StructuredDbl<CA, CX>> sc_map_transform(
    const StructuredDbl<CA, CX>& dom, const StructuredDbl<CA, CX>& cod,
    std::function<typename CX::Arr(const typename CA::Ob&)> tau,
    const std::vector<typename CA::Arr>& naturality_sample,
    bool invertible = false) {
  using D = StructuredDbl<CA, CX>;
  for (const auto& f : naturality_sample) {
    auto lhs = CX::comp(tau(CA::dom(f)), dom.L.arr(f));
    auto rhs = CX::comp(cod.L.arr(f), tau(CA::cod(f)));
    if (!(lhs == rhs))
      throw StructuralError("transformation is not natural at " +
                            CA::show_arr(f));
  }
  DblFunctor<D, D> out;
  out.name = "restrict(tau)";
  out.ob = [](const typename D::Ob& a) { return a; };
  out.arr = [](const typename D::Arr& f) { return f; };
  out.pro = [cod, tau](const typename D::Pro& m) {
    return cod.make_pro(
        m.a,
        Cospan<CX>{cod.L.ob(m.a), m.carrier.apex, cod.L.ob(m.b),
                   CX::comp(tau(m.a), m.carrier.leg_l),
                   CX::comp(tau(m.b), m.carrier.leg_r)},
        m.b);
  };
  auto pro = out.pro;
  out.cell = [cod, pro](const typename D::Cell& c) {
    try {
      return cod.make_cell(pro(c.top), pro(c.bottom), c.f, c.g, c.apex);
    } catch (const BoundaryError& e) {
      throw StructuralError(
          std::string("transformation is not natural on a used arrow (") +
          e.what() + ")");
    }
  };
  out.laxator = [dom, cod, pro](const typename D::Pro& m,
                                const typename D::Pro& n) {
    auto fm = pro(m);
    auto fn = pro(n);
    auto wres = cod.car.compose_data(fm.carrier, fn.carrier);
    auto w = dom.car.compose_data(m.carrier, n.carrier);
    auto apex = CX::po_copair(wres.w, w.w.ia, w.w.ib);
    return cod.make_cell(cod.pro_comp(fm, fn), pro(dom.pro_comp(m, n)),
                         CA::id(m.a), CA::id(n.b), apex);
  };
  out.unitor = [dom, cod, tau](const typename D::Ob& a) {
    return cod.make_cell(cod.pro_id(a), /* image of dom id */
                         cod.make_pro(a,
                                      Cospan<CX>{cod.L.ob(a), dom.L.ob(a),
                                                 cod.L.ob(a), tau(a), tau(a)},
                                      a),
                         CA::id(a), CA::id(a), tau(a));
  };
  if (invertible) {
    auto lax = out.laxator;
    auto uni = out.unitor;
    out.laxator_inv = [lax, cod](const typename D::Pro& m,
                                 const typename D::Pro& n) {
      auto inv = cod.try_invert_cell(lax(m, n));
      if (!inv)
        throw StructuralError(
            "restrict(tau): declared invertible but the laxator does not "
            "invert");
      return *inv;
    };
    out.unitor_inv = [uni, cod](const typename D::Ob& a) {
      auto inv = cod.try_invert_cell(uni(a));
      if (!inv)
        throw StructuralError(
            "restrict(tau): declared invertible but the unitor does not "
            "invert");
      return *inv;
    };
  }
  return out;
}

// Square of structuring functors: F0 on feet, F1 on carriers, and a natural
// comparison alpha from the codomain structure on the image feet to the
// image of the domain structure. Yields the same map of structured cospan
// double categories in two forms: as the composite of the three elementary
// maps through the intermediate structures, and directly by the formulas.
template <typename CA, typename CB, typename CX, typename CY>
struct SquareMapData {
  StructuredDbl<CA, CY> mid_carrier;  // feet A, structuring F1 . L
  StructuredDbl<CA, CY> mid_feet;     // feet A, structuring L' . F0
  DblFunctor<StructuredDbl<CA, CX>, StructuredDbl<CB, CY>> composite;
  DblFunctor<StructuredDbl<CA, CX>, StructuredDbl<CB, CY>> direct;
};

template <typename CA, typename CB, typename CX, typename CY>
SquareMapData<CA, CB, CX, CY> sc_map_square(
    const StructuredDbl<CA, CX>& dom, const StructuredDbl<CB, CY>& cod,
    const BaseFunctor<CA, CB>& F0, const BaseFunctor<CX, CY>& F1,
    std::function<typename CY::Arr(const typename CA::Ob&)> alpha,
    const std::vector<typename CA::Arr>& naturality_sample) {
  using DomD = StructuredDbl<CA, CX>;
  using CodD = StructuredDbl<CB, CY>;
  StructuringFunctor<CA, CY> f1l{
      F1.name + "." + dom.L.name,
      [F1, L = dom.L](const typename CA::Ob& a) { return F1.ob(L.ob(a)); },
      [F1, L = dom.L](const typename CA::Arr& f) { return F1.arr(L.arr(f)); }};
  StructuringFunctor<CA, CY> lpf0{
      cod.L.name + "." + F0.name,
      [F0, Lp = cod.L](const typename CA::Ob& a) { return Lp.ob(F0.ob(a)); },
      [F0, Lp = cod.L](const typename CA::Arr& f) { return Lp.arr(F0.arr(f)); }};
  SquareMapData<CA, CB, CX, CY> out{StructuredDbl<CA, CY>(f1l),
                                    StructuredDbl<CA, CY>(lpf0),
                                    {},
                                    {}};
  auto step1 = sc_map_codomain(dom, out.mid_carrier, F1);
  auto step2 = sc_map_transform(out.mid_carrier, out.mid_feet, alpha,
                                naturality_sample);
  auto step3 = sc_map_base(out.mid_feet, cod, F0);
  out.composite = compose_functors(
      cod, compose_functors(out.mid_feet, step1, step2), step3);
  out.composite.name = "square(composite)";

  DblFunctor<DomD, CodD> dir;
  dir.name = "square(direct)";
  dir.ob = F0.ob;
  dir.arr = F0.arr;
  dir.pro = [F0, F1, alpha, cod](const typename DomD::Pro& m) {
    return cod.make_pro(
        F0.ob(m.a),
        Cospan<CY>{cod.L.ob(F0.ob(m.a)), F1.ob(m.carrier.apex),
                   cod.L.ob(F0.ob(m.b)),
                   CY::comp(alpha(m.a), F1.arr(m.carrier.leg_l)),
                   CY::comp(alpha(m.b), F1.arr(m.carrier.leg_r))},
        F0.ob(m.b));
  };
  {
    auto pro = dir.pro;
    dir.cell = [F0, F1, pro, cod](const typename DomD::Cell& c) {
      return cod.make_cell(pro(c.top), pro(c.bottom), F0.arr(c.f),
                           F0.arr(c.g), F1.arr(c.apex));
    };
    dir.laxator = [F0, F1, pro, dom, cod](const typename DomD::Pro& m,
                                          const typename DomD::Pro& n) {
      auto fm = pro(m);
      auto fn = pro(n);
      auto wf = cod.car.compose_data(fm.carrier, fn.carrier);
      auto w = dom.car.compose_data(m.carrier, n.carrier);
      auto apex = CY::po_copair(wf.w, F1.arr(w.w.ia), F1.arr(w.w.ib));
      return cod.make_cell(cod.pro_comp(fm, fn), pro(dom.pro_comp(m, n)),
                           CB::id(F0.ob(m.a)), CB::id(F0.ob(n.b)), apex);
    };
    dir.unitor = [F0, F1, alpha, pro, dom, cod](const typename DomD::Ob& a) {
      return cod.make_cell(cod.pro_id(F0.ob(a)), pro(dom.pro_id(a)),
                           CB::id(F0.ob(a)), CB::id(F0.ob(a)), alpha(a));
    };
  }
  out.direct = dir;
  return out;
}

}  // namespace ocsp

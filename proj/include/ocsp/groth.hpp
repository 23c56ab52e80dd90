#pragma once

#include <concepts>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ocsp/checkers.hpp"
#include "ocsp/dblcat.hpp"
#include "ocsp/error.hpp"
#include "ocsp/fincat.hpp"
#include "ocsp/mondbl.hpp"
#include "ocsp/report.hpp"
#include "ocsp/spancat.hpp"

namespace ocsp {

// Span-valued lax double functor out of a base double category, presented
// operationally. Fibers never appear as whole categories: objects and
// morphisms of the fiber over a base object are BOb/BMor, those of the fiber
// over a proarrow are POb/PMor. sigma/tau are the span legs, act_* the
// reindexing along base arrows, cell_* the action of base cells, lax_*/unit_*
// the comparison functors. Enumerators are bounded so laws stay checkable;
// lazily evaluated fibers just enumerate within their bound.
template <typename F>
concept SpanValuedLax = requires(
    const F& f, const typename F::Base::Ob& a, const typename F::Base::Arr& r,
    const typename F::Base::Pro& m, const typename F::Base::Cell& al,
    const typename F::BOb& x, const typename F::BMor& phi,
    const typename F::POb& s, const typename F::PMor& nu) {
  { f.base } -> std::convertible_to<typename F::Base>;
  { f.check_bob(a, x) } -> std::convertible_to<bool>;
  { f.check_bmor(a, phi) } -> std::convertible_to<bool>;
  { f.check_pob(m, s) } -> std::convertible_to<bool>;
  { f.check_pmor(m, nu) } -> std::convertible_to<bool>;
  { f.act_ob(r, x) } -> std::convertible_to<typename F::BOb>;
  { f.act_mor(r, phi) } -> std::convertible_to<typename F::BMor>;
  { f.bmor_dom(a, phi) } -> std::convertible_to<typename F::BOb>;
  { f.bmor_cod(a, phi) } -> std::convertible_to<typename F::BOb>;
  { f.bmor_id(a, x) } -> std::convertible_to<typename F::BMor>;
  { f.bmor_comp(a, phi, phi) } -> std::convertible_to<typename F::BMor>;
  { f.sigma_ob(m, s) } -> std::convertible_to<typename F::BOb>;
  { f.tau_ob(m, s) } -> std::convertible_to<typename F::BOb>;
  { f.sigma_mor(m, nu) } -> std::convertible_to<typename F::BMor>;
  { f.tau_mor(m, nu) } -> std::convertible_to<typename F::BMor>;
  { f.pmor_dom(m, nu) } -> std::convertible_to<typename F::POb>;
  { f.pmor_cod(m, nu) } -> std::convertible_to<typename F::POb>;
  { f.pmor_id(m, s) } -> std::convertible_to<typename F::PMor>;
  { f.pmor_comp(m, nu, nu) } -> std::convertible_to<typename F::PMor>;
  { f.cell_ob(al, s) } -> std::convertible_to<typename F::POb>;
  { f.cell_mor(al, nu) } -> std::convertible_to<typename F::PMor>;
  { f.lax_ob(m, m, s, s) } -> std::convertible_to<typename F::POb>;
  { f.lax_mor(m, m, nu, nu) } -> std::convertible_to<typename F::PMor>;
  { f.unit_ob(a, x) } -> std::convertible_to<typename F::POb>;
  { f.unit_mor(a, phi) } -> std::convertible_to<typename F::PMor>;
  { f.enum_bobs(a) } -> std::convertible_to<std::vector<typename F::BOb>>;
  { f.enum_bmors(a) } -> std::convertible_to<std::vector<typename F::BMor>>;
  { f.enum_pobs(m) } -> std::convertible_to<std::vector<typename F::POb>>;
  { f.enum_pmors(m) } -> std::convertible_to<std::vector<typename F::PMor>>;
  { f.show_bob(a, x) } -> std::convertible_to<std::string>;
  { f.show_bmor(a, phi) } -> std::convertible_to<std::string>;
  { f.show_pob(m, s) } -> std::convertible_to<std::string>;
  { f.show_pmor(m, nu) } -> std::convertible_to<std::string>;
};

template <typename F>
struct GrothOb {
  typename F::Base::Ob a;
  typename F::BOb x;
  bool operator==(const GrothOb&) const = default;
};

// An arrow (f, phi) keeps its fiber source x as well: phi starts at the
// transported object, which does not determine x.
template <typename F>
struct GrothArr {
  typename F::Base::Arr f;
  typename F::BOb x;
  typename F::BMor phi;
  bool operator==(const GrothArr&) const = default;
};

template <typename F>
struct GrothPro {
  typename F::Base::Pro m;
  typename F::POb s;
  bool operator==(const GrothPro&) const = default;
};

template <typename F>
struct GrothCell {
  typename F::Base::Cell al;
  typename F::POb s;  // decoration of the top proarrow
  typename F::PMor nu;
  bool operator==(const GrothCell&) const = default;
};

// Double category of pairs over a span-valued lax double functor: base datum
// in the first component, fiber datum in the second. Proarrows compose by
// the comparison functor; the coherence cells of the base carry the
// decorations across (verified, then paired with a fiber identity).
template <typename F>
  requires SpanValuedLax<F>
struct GrothDbl {
  using Fun = F;
  using B = typename F::Base;
  using Ob = GrothOb<F>;
  using Arr = GrothArr<F>;
  using Pro = GrothPro<F>;
  using Cell = GrothCell<F>;

  F f;
  B base;

  explicit GrothDbl(F fun) : f(std::move(fun)), base(f.base) {}

  Ob make_ob(typename B::Ob a, typename F::BOb x) const {
    if (!f.check_bob(a, x))
      throw BoundaryError(
          "grothendieck object: fiber component does not live over the base "
          "object");
    return Ob{std::move(a), std::move(x)};
  }

  Arr make_arr(typename B::Arr r, typename F::BOb x,
               typename F::BMor phi) const {
    auto a = base.arr_dom(r);
    auto b = base.arr_cod(r);
    if (!f.check_bob(a, x) || !f.check_bmor(b, phi))
      throw BoundaryError(
          "grothendieck arrow: components do not live in their fibers");
    if (!(f.bmor_dom(b, phi) == f.act_ob(r, x)))
      throw BoundaryError(
          "grothendieck arrow: fiber morphism does not start at the "
          "transported object");
    return Arr{std::move(r), std::move(x), std::move(phi)};
  }

  Pro make_pro(typename B::Pro m, typename F::POb s) const {
    if (!f.check_pob(m, s))
      throw BoundaryError(
          "grothendieck proarrow: decoration does not live in the fiber of "
          "the proarrow");
    return Pro{std::move(m), std::move(s)};
  }

  Cell make_cell(typename B::Cell al, typename F::POb s,
                 typename F::PMor nu) const {
    auto top = base.cell_top(al);
    auto bot = base.cell_bot(al);
    if (!f.check_pob(top, s) || !f.check_pmor(bot, nu))
      throw BoundaryError(
          "grothendieck cell: components do not live in their fibers");
    if (!(f.pmor_dom(bot, nu) == f.cell_ob(al, s)))
      throw BoundaryError(
          "grothendieck cell: fiber morphism does not start at the "
          "transported decoration");
    return Cell{std::move(al), std::move(s), std::move(nu)};
  }

  Ob arr_dom(const Arr& r) const { return Ob{base.arr_dom(r.f), r.x}; }
  Ob arr_cod(const Arr& r) const {
    auto b = base.arr_cod(r.f);
    auto y = f.bmor_cod(b, r.phi);
    return Ob{std::move(b), std::move(y)};
  }
  Arr arr_id(const Ob& o) const {
    return Arr{base.arr_id(o.a), o.x, f.bmor_id(o.a, o.x)};
  }
  Arr arr_comp(const Arr& r, const Arr& t) const {
    if (!(arr_cod(r) == arr_dom(t)))
      throw BoundaryError(
          "grothendieck arrow composition: endpoints do not match");
    auto c = base.arr_cod(t.f);
    auto phi = f.bmor_comp(c, f.act_mor(t.f, r.phi), t.phi);
    return Arr{base.arr_comp(r.f, t.f), r.x, std::move(phi)};
  }

  Ob pro_src(const Pro& p) const {
    return Ob{base.pro_src(p.m), f.sigma_ob(p.m, p.s)};
  }
  Ob pro_tgt(const Pro& p) const {
    return Ob{base.pro_tgt(p.m), f.tau_ob(p.m, p.s)};
  }

  Pro pro_comp(const Pro& p, const Pro& q) const {
    auto m = base.pro_comp(p.m, q.m);  // validates the base feet
    if (!(f.tau_ob(p.m, p.s) == f.sigma_ob(q.m, q.s)))
      throw BoundaryError(
          "grothendieck composition: decoration mismatch on the shared foot");
    auto s = f.lax_ob(p.m, q.m, p.s, q.s);
    return Pro{std::move(m), std::move(s)};
  }

  Pro pro_id(const Ob& o) const {
    return Pro{base.pro_id(o.a), f.unit_ob(o.a, o.x)};
  }

  Pro cell_top(const Cell& c) const { return Pro{base.cell_top(c.al), c.s}; }
  Pro cell_bot(const Cell& c) const {
    auto bot = base.cell_bot(c.al);
    auto t = f.pmor_cod(bot, c.nu);
    return Pro{std::move(bot), std::move(t)};
  }
  Arr cell_left(const Cell& c) const {
    auto bot = base.cell_bot(c.al);
    return Arr{base.cell_left(c.al), f.sigma_ob(base.cell_top(c.al), c.s),
               f.sigma_mor(bot, c.nu)};
  }
  Arr cell_right(const Cell& c) const {
    auto bot = base.cell_bot(c.al);
    return Arr{base.cell_right(c.al), f.tau_ob(base.cell_top(c.al), c.s),
               f.tau_mor(bot, c.nu)};
  }

  Cell vid(const Pro& p) const {
    return Cell{base.vid(p.m), p.s, f.pmor_id(p.m, p.s)};
  }

  Cell vcomp(const Cell& c, const Cell& d) const {
    auto al = base.vcomp(c.al, d.al);  // validates the base frames
    auto mid = base.cell_bot(c.al);
    if (!(f.pmor_cod(mid, c.nu) == d.s))
      throw BoundaryError(
          "grothendieck cell composition: middle decorations do not match");
    auto bot = base.cell_bot(d.al);
    auto nu = f.pmor_comp(bot, f.cell_mor(d.al, c.nu), d.nu);
    return Cell{std::move(al), c.s, std::move(nu)};
  }

  Cell hid(const Arr& r) const {
    auto a = base.arr_dom(r.f);
    auto b = base.arr_cod(r.f);
    return Cell{base.hid(r.f), f.unit_ob(a, r.x), f.unit_mor(b, r.phi)};
  }

  Cell hcomp(const Cell& c, const Cell& d) const {
    auto al = base.hcomp(c.al, d.al);  // validates the base frames
    auto ct = base.cell_top(c.al);
    auto dt = base.cell_top(d.al);
    auto cb = base.cell_bot(c.al);
    auto db = base.cell_bot(d.al);
    if (!(f.tau_ob(ct, c.s) == f.sigma_ob(dt, d.s)) ||
        !(f.tau_mor(cb, c.nu) == f.sigma_mor(db, d.nu)))
      throw BoundaryError(
          "grothendieck external composition: decorations do not agree on "
          "the shared foot");
    auto s = f.lax_ob(ct, dt, c.s, d.s);
    auto nu = f.lax_mor(cb, db, c.nu, d.nu);
    return Cell{std::move(al), std::move(s), std::move(nu)};
  }

  CellIso<Cell> associator(const Pro& p, const Pro& q, const Pro& r) const {
    auto lhs = pro_comp(pro_comp(p, q), r);
    auto rhs = pro_comp(p, pro_comp(q, r));
    auto w = base.associator(p.m, q.m, r.m);
    if (!(f.cell_ob(w.fwd, lhs.s) == rhs.s) ||
        !(f.cell_ob(w.inv, rhs.s) == lhs.s))
      throw StructuralError(
          "grothendieck associator: base coherence does not carry the "
          "decoration");
    Cell fwd{w.fwd, lhs.s, f.pmor_id(rhs.m, rhs.s)};
    Cell inv{w.inv, rhs.s, f.pmor_id(lhs.m, lhs.s)};
    return {std::move(fwd), std::move(inv)};
  }

  CellIso<Cell> lunitor(const Pro& p) const {
    auto comp = pro_comp(pro_id(pro_src(p)), p);
    auto w = base.lunitor(p.m);
    if (!(f.cell_ob(w.fwd, comp.s) == p.s) ||
        !(f.cell_ob(w.inv, p.s) == comp.s))
      throw StructuralError(
          "grothendieck left unitor: base coherence does not carry the "
          "decoration");
    Cell fwd{w.fwd, comp.s, f.pmor_id(p.m, p.s)};
    Cell inv{w.inv, p.s, f.pmor_id(comp.m, comp.s)};
    return {std::move(fwd), std::move(inv)};
  }

  CellIso<Cell> runitor(const Pro& p) const {
    auto comp = pro_comp(p, pro_id(pro_tgt(p)));
    auto w = base.runitor(p.m);
    if (!(f.cell_ob(w.fwd, comp.s) == p.s) ||
        !(f.cell_ob(w.inv, p.s) == comp.s))
      throw StructuralError(
          "grothendieck right unitor: base coherence does not carry the "
          "decoration");
    Cell fwd{w.fwd, comp.s, f.pmor_id(p.m, p.s)};
    Cell inv{w.inv, p.s, f.pmor_id(comp.m, comp.s)};
    return {std::move(fwd), std::move(inv)};
  }

  std::vector<Arr> arrows_between(const Ob& o, const Ob& p) const {
    std::vector<Arr> out;
    for (const auto& r : base.arrows_between(o.a, p.a))
      for (const auto& phi : f.enum_bmors(p.a))
        if (f.bmor_dom(p.a, phi) == f.act_ob(r, o.x) &&
            f.bmor_cod(p.a, phi) == p.x)
          out.push_back(Arr{r, o.x, phi});
    return out;
  }

  std::vector<Cell> cells_with_frame(const Pro& top, const Pro& bot,
                                     const Arr& l, const Arr& r) const {
    std::vector<Cell> out;
    for (const auto& al : base.cells_with_frame(top.m, bot.m, l.f, r.f))
      for (const auto& nu : f.enum_pmors(bot.m))
        if (f.pmor_dom(bot.m, nu) == f.cell_ob(al, top.s) &&
            f.pmor_cod(bot.m, nu) == bot.s &&
            f.sigma_mor(bot.m, nu) == l.phi && f.tau_mor(bot.m, nu) == r.phi)
          out.push_back(Cell{al, top.s, nu});
    return out;
  }

  // Shows carry the fiber components: the sample builders key composability
  // on these strings, so the string must determine the whole datum.
  std::string show_ob(const Ob& o) const {
    return base.show_ob(o.a) + "." + f.show_bob(o.a, o.x);
  }
  std::string show_arr(const Arr& r) const {
    auto a = base.arr_dom(r.f);
    auto b = base.arr_cod(r.f);
    return base.show_arr(r.f) + "." + f.show_bob(a, r.x) + "." +
           f.show_bmor(b, r.phi);
  }
  std::string show_pro(const Pro& p) const {
    return base.show_pro(p.m) + "." + f.show_pob(p.m, p.s);
  }
  std::string show_cell(const Cell& c) const {
    return show_pro(cell_top(c)) + " => " + show_pro(cell_bot(c)) + "." +
           f.show_pmor(base.cell_bot(c.al), c.nu);
  }
};

// First-component projection; strict, so its comparison cells are vertical
// identities in the base.
template <typename F>
  requires SpanValuedLax<F>
DblFunctor<GrothDbl<F>, typename F::Base> groth_projection(
    const GrothDbl<F>& g) {
  using B = typename F::Base;
  DblFunctor<GrothDbl<F>, B> out;
  out.name = "pi";
  out.ob = [](const GrothOb<F>& o) { return o.a; };
  out.arr = [](const GrothArr<F>& r) { return r.f; };
  out.pro = [](const GrothPro<F>& p) { return p.m; };
  out.cell = [](const GrothCell<F>& c) { return c.al; };
  B b = g.base;
  out.laxator = [b](const GrothPro<F>& p, const GrothPro<F>& q) {
    return b.vid(b.pro_comp(p.m, q.m));
  };
  out.unitor = [b](const GrothOb<F>& o) { return b.vid(b.pro_id(o.a)); };
  out.laxator_inv = out.laxator;
  out.unitor_inv = out.unitor;
  return out;
}

// Constant functor at the terminal category and terminal spans.
template <typename B>
struct TrivLax {
  using Base = B;
  using BOb = Unit;
  using BMor = Unit;
  using POb = Unit;
  using PMor = Unit;

  B base;

  bool check_bob(const typename B::Ob&, Unit) const { return true; }
  bool check_bmor(const typename B::Ob&, Unit) const { return true; }
  bool check_pob(const typename B::Pro&, Unit) const { return true; }
  bool check_pmor(const typename B::Pro&, Unit) const { return true; }
  Unit act_ob(const typename B::Arr&, Unit) const { return {}; }
  Unit act_mor(const typename B::Arr&, Unit) const { return {}; }
  Unit bmor_dom(const typename B::Ob&, Unit) const { return {}; }
  Unit bmor_cod(const typename B::Ob&, Unit) const { return {}; }
  Unit bmor_id(const typename B::Ob&, Unit) const { return {}; }
  Unit bmor_comp(const typename B::Ob&, Unit, Unit) const { return {}; }
  Unit sigma_ob(const typename B::Pro&, Unit) const { return {}; }
  Unit tau_ob(const typename B::Pro&, Unit) const { return {}; }
  Unit sigma_mor(const typename B::Pro&, Unit) const { return {}; }
  Unit tau_mor(const typename B::Pro&, Unit) const { return {}; }
  Unit pmor_dom(const typename B::Pro&, Unit) const { return {}; }
  Unit pmor_cod(const typename B::Pro&, Unit) const { return {}; }
  Unit pmor_id(const typename B::Pro&, Unit) const { return {}; }
  Unit pmor_comp(const typename B::Pro&, Unit, Unit) const { return {}; }
  Unit cell_ob(const typename B::Cell&, Unit) const { return {}; }
  Unit cell_mor(const typename B::Cell&, Unit) const { return {}; }
  Unit lax_ob(const typename B::Pro&, const typename B::Pro&, Unit,
              Unit) const {
    return {};
  }
  Unit lax_mor(const typename B::Pro&, const typename B::Pro&, Unit,
               Unit) const {
    return {};
  }
  Unit unit_ob(const typename B::Ob&, Unit) const { return {}; }
  Unit unit_mor(const typename B::Ob&, Unit) const { return {}; }
  std::vector<Unit> enum_bobs(const typename B::Ob&) const { return {Unit{}}; }
  std::vector<Unit> enum_bmors(const typename B::Ob&) const {
    return {Unit{}};
  }
  std::vector<Unit> enum_pobs(const typename B::Pro&) const {
    return {Unit{}};
  }
  std::vector<Unit> enum_pmors(const typename B::Pro&) const {
    return {Unit{}};
  }
  std::string show_bob(const typename B::Ob&, Unit) const { return "*"; }
  std::string show_bmor(const typename B::Ob&, Unit) const { return "*"; }
  std::string show_pob(const typename B::Pro&, Unit) const { return "*"; }
  std::string show_pmor(const typename B::Pro&, Unit) const { return "*"; }
};

template <typename B>
GrothDbl<TrivLax<B>> trivial_fibers(B base) {
  return GrothDbl<TrivLax<B>>(TrivLax<B>{std::move(base)});
}

// Inverse to the projection in the trivial case: pair everything with the
// unique fiber datum. Together with groth_projection this is the explicit
// isomorphism with the base.
template <typename B>
DblFunctor<B, GrothDbl<TrivLax<B>>> trivial_embedding(
    const GrothDbl<TrivLax<B>>& g) {
  using G = GrothDbl<TrivLax<B>>;
  DblFunctor<B, G> out;
  out.name = "pair";
  out.ob = [](const typename B::Ob& a) { return GrothOb<TrivLax<B>>{a, {}}; };
  out.arr = [](const typename B::Arr& r) {
    return GrothArr<TrivLax<B>>{r, {}, {}};
  };
  out.pro = [](const typename B::Pro& m) {
    return GrothPro<TrivLax<B>>{m, {}};
  };
  out.cell = [](const typename B::Cell& c) {
    return GrothCell<TrivLax<B>>{c, {}, {}};
  };
  G gg = g;
  out.laxator = [gg](const typename B::Pro& m, const typename B::Pro& n) {
    return gg.vid(gg.pro_comp(GrothPro<TrivLax<B>>{m, {}},
                              GrothPro<TrivLax<B>>{n, {}}));
  };
  out.unitor = [gg](const typename B::Ob& a) {
    return gg.vid(gg.pro_id(GrothOb<TrivLax<B>>{a, {}}));
  };
  out.laxator_inv = out.laxator;
  out.unitor_inv = out.unitor;
  return out;
}

// Materialized span-valued functor: fibers are explicit FinCats delivered by
// a functor into the span double category; BOb/BMor/POb/PMor are indices.
// Everything is recomputed per call, which keeps the wrapper pure; the
// bundled instances are small enough for that.
template <typename BaseD>
struct CatValuedLax {
  using Base = BaseD;
  using BOb = int;
  using BMor = int;
  using POb = int;
  using PMor = int;

  Base base;
  DblFunctor<BaseD, SpanCatDbl> fun;

  FinCat fib(const typename BaseD::Ob& a) const { return fun.ob(a); }
  CatSpan span(const typename BaseD::Pro& m) const { return fun.pro(m); }

  bool check_bob(const typename BaseD::Ob& a, int x) const {
    return 0 <= x && x < fib(a).objects.size;
  }
  bool check_bmor(const typename BaseD::Ob& a, int phi) const {
    return 0 <= phi && phi < fib(a).mor_count();
  }
  bool check_pob(const typename BaseD::Pro& m, int s) const {
    return 0 <= s && s < span(m).apex.objects.size;
  }
  bool check_pmor(const typename BaseD::Pro& m, int nu) const {
    return 0 <= nu && nu < span(m).apex.mor_count();
  }

  int act_ob(const typename BaseD::Arr& r, int x) const {
    return fun.arr(r).ob(x);
  }
  int act_mor(const typename BaseD::Arr& r, int phi) const {
    return fun.arr(r).mor(phi);
  }
  int bmor_dom(const typename BaseD::Ob& a, int phi) const {
    return fib(a).mor_dom[static_cast<size_t>(phi)];
  }
  int bmor_cod(const typename BaseD::Ob& a, int phi) const {
    return fib(a).mor_cod[static_cast<size_t>(phi)];
  }
  int bmor_id(const typename BaseD::Ob& a, int x) const { return fib(a).id(x); }
  int bmor_comp(const typename BaseD::Ob& a, int phi, int psi) const {
    return fib(a).comp(phi, psi);
  }

  int sigma_ob(const typename BaseD::Pro& m, int s) const {
    return span(m).leg_l.ob(s);
  }
  int tau_ob(const typename BaseD::Pro& m, int s) const {
    return span(m).leg_r.ob(s);
  }
  int sigma_mor(const typename BaseD::Pro& m, int nu) const {
    return span(m).leg_l.mor(nu);
  }
  int tau_mor(const typename BaseD::Pro& m, int nu) const {
    return span(m).leg_r.mor(nu);
  }

  int pmor_dom(const typename BaseD::Pro& m, int nu) const {
    return span(m).apex.mor_dom[static_cast<size_t>(nu)];
  }
  int pmor_cod(const typename BaseD::Pro& m, int nu) const {
    return span(m).apex.mor_cod[static_cast<size_t>(nu)];
  }
  int pmor_id(const typename BaseD::Pro& m, int s) const {
    return span(m).apex.id(s);
  }
  int pmor_comp(const typename BaseD::Pro& m, int nu, int mu) const {
    return span(m).apex.comp(nu, mu);
  }

  int cell_ob(const typename BaseD::Cell& al, int s) const {
    return fun.cell(al).map.apex.ob(s);
  }
  int cell_mor(const typename BaseD::Cell& al, int nu) const {
    return fun.cell(al).map.apex.mor(nu);
  }

  int lax_ob(const typename BaseD::Pro& m, const typename BaseD::Pro& n, int s,
             int t) const {
    auto pb = pullback_cat(span(m).leg_r, span(n).leg_l);
    return fun.laxator(m, n).map.apex.ob(pb.ob_of.at({s, t}));
  }
  int lax_mor(const typename BaseD::Pro& m, const typename BaseD::Pro& n,
              int nu, int mu) const {
    auto pb = pullback_cat(span(m).leg_r, span(n).leg_l);
    return fun.laxator(m, n).map.apex.mor(pb.mor_of.at({nu, mu}));
  }

  int unit_ob(const typename BaseD::Ob& a, int x) const {
    return fun.unitor(a).map.apex.ob(x);
  }
  int unit_mor(const typename BaseD::Ob& a, int phi) const {
    return fun.unitor(a).map.apex.mor(phi);
  }

  std::vector<int> enum_bobs(const typename BaseD::Ob& a) const {
    std::vector<int> out(static_cast<size_t>(fib(a).objects.size));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<int> enum_bmors(const typename BaseD::Ob& a) const {
    std::vector<int> out(static_cast<size_t>(fib(a).mor_count()));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<int> enum_pobs(const typename BaseD::Pro& m) const {
    std::vector<int> out(static_cast<size_t>(span(m).apex.objects.size));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<int> enum_pmors(const typename BaseD::Pro& m) const {
    std::vector<int> out(static_cast<size_t>(span(m).apex.mor_count()));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  std::string show_bob(const typename BaseD::Ob&, int x) const {
    return "#" + std::to_string(x);
  }
  std::string show_bmor(const typename BaseD::Ob&, int phi) const {
    return "#" + std::to_string(phi);
  }
  std::string show_pob(const typename BaseD::Pro&, int s) const {
    return "#" + std::to_string(s);
  }
  std::string show_pmor(const typename BaseD::Pro&, int nu) const {
    return "#" + std::to_string(nu);
  }
};

// Base-level data a span-valued functor is checked against.
template <typename F>
struct GrothSample {
  using B = typename F::Base;
  std::vector<typename B::Ob> obs;
  std::vector<typename B::Arr> arrs;
  std::vector<std::pair<typename B::Arr, typename B::Arr>> arr_pairs;
  std::vector<typename B::Pro> pros;
  std::vector<std::pair<typename B::Pro, typename B::Pro>> pro_pairs;
  std::vector<std::tuple<typename B::Pro, typename B::Pro, typename B::Pro>>
      pro_triples;
  std::vector<typename B::Cell> cells;
  std::vector<std::pair<typename B::Cell, typename B::Cell>> cell_vpairs;
  std::vector<std::pair<typename B::Cell, typename B::Cell>> cell_hpairs;
  int pair_cap = 64;  // bound on fiber-pair loops inside one sample item
};

// Pointwise law checker for a span-valued lax double functor: functoriality
// of the actions, leg naturality, globularity of the comparisons, unitor
// naturality, the two unit triangles and the hexagon. Works for lazy fibers
// too since it only evaluates on enumerated data.
template <typename F>
  requires SpanValuedLax<F>
Report check_span_valued_lax(const F& f, const GrothSample<F>& s) {
  Report rep;
  const auto& b = f.base;

  for (const auto& a : s.obs) {
    auto ida = b.arr_id(a);
    auto idm = b.pro_id(a);
    for (const auto& x : f.enum_bobs(a)) {
      rep.check(f.act_ob(ida, x) == x, "fiber action preserves identities",
                f.show_bob(a, x));
      rep.check(f.sigma_ob(idm, f.unit_ob(a, x)) == x &&
                    f.tau_ob(idm, f.unit_ob(a, x)) == x,
                "unitor image is globular", f.show_bob(a, x));
      rep.check(f.unit_mor(a, f.bmor_id(a, x)) ==
                    f.pmor_id(idm, f.unit_ob(a, x)),
                "unitor preserves identities", f.show_bob(a, x));
    }
    for (const auto& phi : f.enum_bmors(a)) {
      rep.check(f.act_mor(ida, phi) == phi,
                "fiber action preserves identities", b.show_ob(a));
      rep.check(f.sigma_mor(idm, f.unit_mor(a, phi)) == phi &&
                    f.tau_mor(idm, f.unit_mor(a, phi)) == phi,
                "unitor image is globular", b.show_ob(a));
    }
    int used = 0;
    for (const auto& phi : f.enum_bmors(a)) {
      for (const auto& psi : f.enum_bmors(a)) {
        if (!(f.bmor_cod(a, phi) == f.bmor_dom(a, psi))) continue;
        if (++used > s.pair_cap) break;
        rep.check(f.unit_mor(a, f.bmor_comp(a, phi, psi)) ==
                      f.pmor_comp(idm, f.unit_mor(a, phi),
                                  f.unit_mor(a, psi)),
                  "unitor preserves composition", b.show_ob(a));
      }
      if (used > s.pair_cap) break;
    }
  }

  for (const auto& r : s.arrs) {
    auto a = b.arr_dom(r);
    auto c = b.arr_cod(r);
    auto h = b.hid(r);
    for (const auto& x : f.enum_bobs(a)) {
      rep.check(f.act_mor(r, f.bmor_id(a, x)) ==
                    f.bmor_id(c, f.act_ob(r, x)),
                "fiber action is functorial", f.show_bob(a, x));
      rep.check(f.cell_ob(h, f.unit_ob(a, x)) ==
                    f.unit_ob(c, f.act_ob(r, x)),
                "unitor is natural in the object", f.show_bob(a, x));
    }
    for (const auto& phi : f.enum_bmors(a)) {
      rep.check(f.bmor_dom(c, f.act_mor(r, phi)) ==
                        f.act_ob(r, f.bmor_dom(a, phi)) &&
                    f.bmor_cod(c, f.act_mor(r, phi)) ==
                        f.act_ob(r, f.bmor_cod(a, phi)),
                "fiber action preserves endpoints", b.show_arr(r));
      rep.check(f.cell_mor(h, f.unit_mor(a, phi)) ==
                    f.unit_mor(c, f.act_mor(r, phi)),
                "unitor is natural in the morphism", b.show_arr(r));
    }
    int used = 0;
    for (const auto& phi : f.enum_bmors(a)) {
      for (const auto& psi : f.enum_bmors(a)) {
        if (!(f.bmor_cod(a, phi) == f.bmor_dom(a, psi))) continue;
        if (++used > s.pair_cap) break;
        rep.check(f.act_mor(r, f.bmor_comp(a, phi, psi)) ==
                      f.bmor_comp(c, f.act_mor(r, phi), f.act_mor(r, psi)),
                  "fiber action is functorial", b.show_arr(r));
      }
      if (used > s.pair_cap) break;
    }
  }

  for (const auto& [r, t] : s.arr_pairs) {
    auto a = b.arr_dom(r);
    auto rt = b.arr_comp(r, t);
    for (const auto& x : f.enum_bobs(a))
      rep.check(f.act_ob(rt, x) == f.act_ob(t, f.act_ob(r, x)),
                "fiber action respects arrow composition", f.show_bob(a, x));
    for (const auto& phi : f.enum_bmors(a))
      rep.check(f.act_mor(rt, phi) == f.act_mor(t, f.act_mor(r, phi)),
                "fiber action respects arrow composition", b.show_arr(rt));
  }

  for (const auto& m : s.pros) {
    auto a = b.pro_src(m);
    auto c = b.pro_tgt(m);
    auto v = b.vid(m);
    for (const auto& sx : f.enum_pobs(m)) {
      rep.check(f.check_bob(a, f.sigma_ob(m, sx)) &&
                    f.check_bob(c, f.tau_ob(m, sx)),
                "span legs land in the foot fibers", f.show_pob(m, sx));
      rep.check(f.cell_ob(v, sx) == sx, "identity cell acts trivially",
                f.show_pob(m, sx));
      rep.check(f.sigma_mor(m, f.pmor_id(m, sx)) ==
                        f.bmor_id(a, f.sigma_ob(m, sx)) &&
                    f.tau_mor(m, f.pmor_id(m, sx)) ==
                        f.bmor_id(c, f.tau_ob(m, sx)),
                "span legs preserve identities", f.show_pob(m, sx));
    }
    for (const auto& nu : f.enum_pmors(m)) {
      rep.check(f.sigma_ob(m, f.pmor_dom(m, nu)) ==
                        f.bmor_dom(a, f.sigma_mor(m, nu)) &&
                    f.sigma_ob(m, f.pmor_cod(m, nu)) ==
                        f.bmor_cod(a, f.sigma_mor(m, nu)) &&
                    f.tau_ob(m, f.pmor_dom(m, nu)) ==
                        f.bmor_dom(c, f.tau_mor(m, nu)) &&
                    f.tau_ob(m, f.pmor_cod(m, nu)) ==
                        f.bmor_cod(c, f.tau_mor(m, nu)),
                "span legs preserve endpoints", b.show_pro(m));
      rep.check(f.cell_mor(v, nu) == nu, "identity cell acts trivially",
                b.show_pro(m));
    }
    int used = 0;
    for (const auto& nu : f.enum_pmors(m)) {
      for (const auto& mu : f.enum_pmors(m)) {
        if (!(f.pmor_cod(m, nu) == f.pmor_dom(m, mu))) continue;
        if (++used > s.pair_cap) break;
        auto comp = f.pmor_comp(m, nu, mu);
        rep.check(f.sigma_mor(m, comp) ==
                          f.bmor_comp(a, f.sigma_mor(m, nu),
                                      f.sigma_mor(m, mu)) &&
                      f.tau_mor(m, comp) ==
                          f.bmor_comp(c, f.tau_mor(m, nu), f.tau_mor(m, mu)),
                  "span legs preserve composition", b.show_pro(m));
      }
      if (used > s.pair_cap) break;
    }

    // unit triangles, pointwise
    auto lu = b.lunitor(m);
    auto ru = b.runitor(m);
    auto ida = b.pro_id(a);
    auto idc = b.pro_id(c);
    for (const auto& sx : f.enum_pobs(m)) {
      detail::guarded(rep, "left unit triangle", f.show_pob(m, sx), [&] {
        auto lcomp = f.lax_ob(ida, m, f.unit_ob(a, f.sigma_ob(m, sx)), sx);
        rep.check(f.cell_ob(lu.fwd, lcomp) == sx, "left unit triangle",
                  f.show_pob(m, sx));
      });
      detail::guarded(rep, "right unit triangle", f.show_pob(m, sx), [&] {
        auto rcomp = f.lax_ob(m, idc, sx, f.unit_ob(c, f.tau_ob(m, sx)));
        rep.check(f.cell_ob(ru.fwd, rcomp) == sx, "right unit triangle",
                  f.show_pob(m, sx));
      });
    }
  }

  for (const auto& al : s.cells) {
    auto m = b.cell_top(al);
    auto n = b.cell_bot(al);
    auto l = b.cell_left(al);
    auto r = b.cell_right(al);
    for (const auto& sx : f.enum_pobs(m)) {
      rep.check(f.sigma_ob(n, f.cell_ob(al, sx)) ==
                        f.act_ob(l, f.sigma_ob(m, sx)) &&
                    f.tau_ob(n, f.cell_ob(al, sx)) ==
                        f.act_ob(r, f.tau_ob(m, sx)),
                "cell action is natural over the legs", f.show_pob(m, sx));
      rep.check(f.cell_mor(al, f.pmor_id(m, sx)) ==
                    f.pmor_id(n, f.cell_ob(al, sx)),
                "cell action is functorial", f.show_pob(m, sx));
    }
    for (const auto& nu : f.enum_pmors(m)) {
      rep.check(f.pmor_dom(n, f.cell_mor(al, nu)) ==
                        f.cell_ob(al, f.pmor_dom(m, nu)) &&
                    f.pmor_cod(n, f.cell_mor(al, nu)) ==
                        f.cell_ob(al, f.pmor_cod(m, nu)),
                "cell action preserves endpoints", b.show_cell(al));
      rep.check(f.sigma_mor(n, f.cell_mor(al, nu)) ==
                        f.act_mor(l, f.sigma_mor(m, nu)) &&
                    f.tau_mor(n, f.cell_mor(al, nu)) ==
                        f.act_mor(r, f.tau_mor(m, nu)),
                "cell action is natural over the legs", b.show_cell(al));
    }
    int used = 0;
    for (const auto& nu : f.enum_pmors(m)) {
      for (const auto& mu : f.enum_pmors(m)) {
        if (!(f.pmor_cod(m, nu) == f.pmor_dom(m, mu))) continue;
        if (++used > s.pair_cap) break;
        rep.check(f.cell_mor(al, f.pmor_comp(m, nu, mu)) ==
                      f.pmor_comp(n, f.cell_mor(al, nu), f.cell_mor(al, mu)),
                  "cell action is functorial", b.show_cell(al));
      }
      if (used > s.pair_cap) break;
    }
  }

  for (const auto& [al, be] : s.cell_vpairs) {
    auto m = b.cell_top(al);
    auto comp = b.vcomp(al, be);
    for (const auto& sx : f.enum_pobs(m))
      rep.check(f.cell_ob(comp, sx) == f.cell_ob(be, f.cell_ob(al, sx)),
                "cell action respects vertical composition",
                f.show_pob(m, sx));
  }

  for (const auto& [m, n] : s.pro_pairs) {
    auto comp = b.pro_comp(m, n);
    int used = 0;
    for (const auto& sx : f.enum_pobs(m)) {
      for (const auto& tx : f.enum_pobs(n)) {
        if (!(f.tau_ob(m, sx) == f.sigma_ob(n, tx))) continue;
        if (++used > s.pair_cap) break;
        detail::guarded(rep, "laxator image is globular", f.show_pob(m, sx),
                        [&] {
          auto g = f.lax_ob(m, n, sx, tx);
          rep.check(f.sigma_ob(comp, g) == f.sigma_ob(m, sx) &&
                        f.tau_ob(comp, g) == f.tau_ob(n, tx),
                    "laxator image is globular", f.show_pob(m, sx));
          rep.check(f.lax_mor(m, n, f.pmor_id(m, sx), f.pmor_id(n, tx)) ==
                        f.pmor_id(comp, g),
                    "laxator preserves identities", f.show_pob(m, sx));
        });
      }
      if (used > s.pair_cap) break;
    }
    used = 0;
    for (const auto& nu : f.enum_pmors(m)) {
      for (const auto& mu : f.enum_pmors(n)) {
        if (!(f.tau_mor(m, nu) == f.sigma_mor(n, mu))) continue;
        if (++used > s.pair_cap) break;
        detail::guarded(rep, "laxator preserves endpoints", b.show_pro(comp),
                        [&] {
          auto lnu = f.lax_mor(m, n, nu, mu);
          rep.check(f.pmor_dom(comp, lnu) ==
                            f.lax_ob(m, n, f.pmor_dom(m, nu),
                                     f.pmor_dom(n, mu)) &&
                        f.pmor_cod(comp, lnu) ==
                            f.lax_ob(m, n, f.pmor_cod(m, nu),
                                     f.pmor_cod(n, mu)),
                    "laxator preserves endpoints", b.show_pro(comp));
        });
      }
      if (used > s.pair_cap) break;
    }
  }

  for (const auto& [al, be] : s.cell_hpairs) {
    auto mt = b.cell_top(al);
    auto nt = b.cell_top(be);
    auto mb = b.cell_bot(al);
    auto nb = b.cell_bot(be);
    auto h = b.hcomp(al, be);
    int used = 0;
    for (const auto& sx : f.enum_pobs(mt)) {
      for (const auto& tx : f.enum_pobs(nt)) {
        if (!(f.tau_ob(mt, sx) == f.sigma_ob(nt, tx))) continue;
        if (++used > s.pair_cap) break;
        detail::guarded(rep, "laxator is natural", f.show_pob(mt, sx), [&] {
          rep.check(f.cell_ob(h, f.lax_ob(mt, nt, sx, tx)) ==
                        f.lax_ob(mb, nb, f.cell_ob(al, sx),
                                 f.cell_ob(be, tx)),
                    "laxator is natural", f.show_pob(mt, sx));
        });
      }
      if (used > s.pair_cap) break;
    }
    used = 0;
    for (const auto& nu : f.enum_pmors(mt)) {
      for (const auto& mu : f.enum_pmors(nt)) {
        if (!(f.tau_mor(mt, nu) == f.sigma_mor(nt, mu))) continue;
        if (++used > s.pair_cap) break;
        detail::guarded(rep, "laxator is natural", b.show_pro(mt), [&] {
          rep.check(f.cell_mor(h, f.lax_mor(mt, nt, nu, mu)) ==
                        f.lax_mor(mb, nb, f.cell_mor(al, nu),
                                  f.cell_mor(be, mu)),
                    "laxator is natural", b.show_pro(mt));
        });
      }
      if (used > s.pair_cap) break;
    }
  }

  for (const auto& [m, n, p] : s.pro_triples) {
    auto mn = b.pro_comp(m, n);
    auto np = b.pro_comp(n, p);
    auto w = b.associator(m, n, p);
    int used = 0;
    for (const auto& sx : f.enum_pobs(m)) {
      for (const auto& tx : f.enum_pobs(n)) {
        if (!(f.tau_ob(m, sx) == f.sigma_ob(n, tx))) continue;
        for (const auto& ux : f.enum_pobs(p)) {
          if (!(f.tau_ob(n, tx) == f.sigma_ob(p, ux))) continue;
          if (++used > s.pair_cap) break;
          auto witness = f.show_pob(m, sx) + "," + f.show_pob(n, tx) + "," +
                         f.show_pob(p, ux);
          detail::guarded(rep, "laxator hexagon", witness, [&] {
            auto lhs = f.lax_ob(mn, p, f.lax_ob(m, n, sx, tx), ux);
            auto rhs = f.lax_ob(m, np, sx, f.lax_ob(n, p, tx, ux));
            rep.check(f.cell_ob(w.fwd, lhs) == rhs, "laxator hexagon",
                      witness);
          });
        }
        if (used > s.pair_cap) break;
      }
      if (used > s.pair_cap) break;
    }
  }

  return rep;
}

}  // namespace ocsp

#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ocsp/error.hpp"
#include "ocsp/finset.hpp"

namespace ocsp {

// A pair of mutually inverse cells, stored together so inverses are never
// recomputed downstream.
template <typename CellT>
struct CellIso {
  CellT fwd;
  CellT inv;
};

template <typename D>
struct Restriction {
  typename D::Pro pro;
  typename D::Cell cell;  // cartesian cell: pro => restricted proarrow's base
};

template <typename D>
struct ProCoprod {
  typename D::Pro sum;
  typename D::Cell inl, inr;
};

// Pseudocategory in Cat, presented operationally. Conventions used
// throughout: composition arguments are diagrammatic (first argument first);
// a cell has a top and a bottom proarrow and left/right arrows between the
// feet; vertical composition composes cells along a shared proarrow,
// horizontal (external) composition along a shared foot.
template <typename D>
concept DoubleCategory = requires(const D& d, const typename D::Ob& a,
                                  const typename D::Arr& f,
                                  const typename D::Pro& m,
                                  const typename D::Cell& c) {
  { d.arr_dom(f) } -> std::convertible_to<typename D::Ob>;
  { d.arr_cod(f) } -> std::convertible_to<typename D::Ob>;
  { d.arr_id(a) } -> std::convertible_to<typename D::Arr>;
  { d.arr_comp(f, f) } -> std::convertible_to<typename D::Arr>;
  { d.pro_src(m) } -> std::convertible_to<typename D::Ob>;
  { d.pro_tgt(m) } -> std::convertible_to<typename D::Ob>;
  { d.pro_comp(m, m) } -> std::convertible_to<typename D::Pro>;
  { d.pro_id(a) } -> std::convertible_to<typename D::Pro>;
  { d.cell_top(c) } -> std::convertible_to<typename D::Pro>;
  { d.cell_bot(c) } -> std::convertible_to<typename D::Pro>;
  { d.cell_left(c) } -> std::convertible_to<typename D::Arr>;
  { d.cell_right(c) } -> std::convertible_to<typename D::Arr>;
  { d.vid(m) } -> std::convertible_to<typename D::Cell>;
  { d.vcomp(c, c) } -> std::convertible_to<typename D::Cell>;
  { d.hid(f) } -> std::convertible_to<typename D::Cell>;
  { d.hcomp(c, c) } -> std::convertible_to<typename D::Cell>;
  { d.associator(m, m, m) } -> std::convertible_to<CellIso<typename D::Cell>>;
  { d.lunitor(m) } -> std::convertible_to<CellIso<typename D::Cell>>;
  { d.runitor(m) } -> std::convertible_to<CellIso<typename D::Cell>>;
  { d.show_ob(a) } -> std::convertible_to<std::string>;
  { d.show_arr(f) } -> std::convertible_to<std::string>;
  { d.show_pro(m) } -> std::convertible_to<std::string>;
  { d.show_cell(c) } -> std::convertible_to<std::string>;
};

// Every niche (f, g, n) has a chosen restriction with the usual
// unique-factorization property.
template <typename D>
concept EquipmentCategory = DoubleCategory<D> &&
    requires(const D& d, const typename D::Arr& f, const typename D::Pro& n,
             const typename D::Cell& c, const Restriction<D>& r) {
  { d.restriction(f, f, n) } -> std::convertible_to<Restriction<D>>;
  { d.restriction_factor(c, f, f, r) } -> std::convertible_to<typename D::Cell>;
};

// Finite coproducts on both levels plus the four comparison cells, each
// stored with its designated inverse.
template <typename D>
concept CocartesianCategory = DoubleCategory<D> &&
    requires(const D& d, const typename D::Ob& a, const typename D::Arr& f,
             const typename D::Pro& m, const typename D::Cell& c,
             const Coprod<typename D::Ob, typename D::Arr>& w,
             const ProCoprod<D>& pw) {
  { d.ob_coproduct(a, a) } -> std::convertible_to<Coprod<typename D::Ob, typename D::Arr>>;
  { d.ob_copair(f, f, w) } -> std::convertible_to<typename D::Arr>;
  { d.ob_initial() } -> std::convertible_to<typename D::Ob>;
  { d.ob_bang(a) } -> std::convertible_to<typename D::Arr>;
  { d.pro_coproduct(m, m) } -> std::convertible_to<ProCoprod<D>>;
  { d.pro_copair(c, c, pw) } -> std::convertible_to<typename D::Cell>;
  { d.pro_initial() } -> std::convertible_to<typename D::Pro>;
  { d.pro_bang(m) } -> std::convertible_to<typename D::Cell>;
  { d.comparison_compose(m, m, m, m) } -> std::convertible_to<CellIso<typename D::Cell>>;
  { d.comparison_id(a, a) } -> std::convertible_to<CellIso<typename D::Cell>>;
  { d.comparison_zero_compose() } -> std::convertible_to<CellIso<typename D::Cell>>;
  { d.comparison_zero_id() } -> std::convertible_to<CellIso<typename D::Cell>>;
};

// Bounded exhaustive enumeration hooks, used by the uniqueness checkers.
template <typename D>
concept EnumerableCells = requires(const D& d, const typename D::Ob& a,
                                   const typename D::Arr& f,
                                   const typename D::Pro& m) {
  { d.arrows_between(a, a) } -> std::convertible_to<std::vector<typename D::Arr>>;
  { d.cells_with_frame(m, m, f, f) } -> std::convertible_to<std::vector<typename D::Cell>>;
};

// Lax double functor between two instances. `laxator(m, n)` is the globular
// comparison F(m) (.) F(n) => F(m (.) n); `unitor(a)` is id_{F a} => F(id_a).
// The *_inv fields are designated inverses; leave them unset for a functor
// that is only lax.
template <typename DomD, typename CodD>
struct DblFunctor {
  std::string name = "F";
  std::function<typename CodD::Ob(const typename DomD::Ob&)> ob;
  std::function<typename CodD::Arr(const typename DomD::Arr&)> arr;
  std::function<typename CodD::Pro(const typename DomD::Pro&)> pro;
  std::function<typename CodD::Cell(const typename DomD::Cell&)> cell;
  std::function<typename CodD::Cell(const typename DomD::Pro&,
                                    const typename DomD::Pro&)>
      laxator;
  std::function<typename CodD::Cell(const typename DomD::Ob&)> unitor;
  std::function<typename CodD::Cell(const typename DomD::Pro&,
                                    const typename DomD::Pro&)>
      laxator_inv;
  std::function<typename CodD::Cell(const typename DomD::Ob&)> unitor_inv;

  bool claims_pseudo() const {
    return static_cast<bool>(laxator_inv) && static_cast<bool>(unitor_inv);
  }
};

// Composite lax functor; laxators compose by whiskering the outer functor
// over the inner comparison.
template <typename D0, typename D1, typename D2>
DblFunctor<D0, D2> compose_functors(const D2& cod, const DblFunctor<D0, D1>& F,
                                    const DblFunctor<D1, D2>& G) {
  DblFunctor<D0, D2> H;
  H.name = F.name + ";" + G.name;
  H.ob = [F, G](const typename D0::Ob& a) { return G.ob(F.ob(a)); };
  H.arr = [F, G](const typename D0::Arr& f) { return G.arr(F.arr(f)); };
  H.pro = [F, G](const typename D0::Pro& m) { return G.pro(F.pro(m)); };
  H.cell = [F, G](const typename D0::Cell& c) { return G.cell(F.cell(c)); };
  H.laxator = [cod, F, G](const typename D0::Pro& m, const typename D0::Pro& n) {
    return cod.vcomp(G.laxator(F.pro(m), F.pro(n)), G.cell(F.laxator(m, n)));
  };
  H.unitor = [cod, F, G](const typename D0::Ob& a) {
    return cod.vcomp(G.unitor(F.ob(a)), G.cell(F.unitor(a)));
  };
  if (F.laxator_inv && G.laxator_inv) {
    H.laxator_inv = [cod, F, G](const typename D0::Pro& m,
                                 const typename D0::Pro& n) {
      return cod.vcomp(G.cell(F.laxator_inv(m, n)),
                       G.laxator_inv(F.pro(m), F.pro(n)));
    };
  }
  if (F.unitor_inv && G.unitor_inv) {
    H.unitor_inv = [cod, F, G](const typename D0::Ob& a) {
      return cod.vcomp(G.cell(F.unitor_inv(a)), G.unitor_inv(F.ob(a)));
    };
  }
  return H;
}

// All cells m => n regardless of the arrows on the sides; this is the
// hom-set of the proarrow category.
template <typename D>
std::vector<typename D::Cell> cells_between(const D& d, const typename D::Pro& m,
                                            const typename D::Pro& n)
  requires EnumerableCells<D>
{
  std::vector<typename D::Cell> out;
  for (const auto& f : d.arrows_between(d.pro_src(m), d.pro_src(n)))
    for (const auto& g : d.arrows_between(d.pro_tgt(m), d.pro_tgt(n)))
      for (auto& c : d.cells_with_frame(m, n, f, g)) out.push_back(std::move(c));
  return out;
}

}  // namespace ocsp

#pragma once

#include <string>
#include <vector>

#include "ocsp/dblcat.hpp"
#include "ocsp/error.hpp"
#include "ocsp/fincat.hpp"
#include "ocsp/finset.hpp"

namespace ocsp {

// The one-point category, used wherever a double category is trivial in one
// direction.
struct Unit {
  bool operator==(const Unit&) const = default;
};

// A monoidal category viewed as a double category with a single object:
// proarrows are the monoid elements, cells its morphisms, external
// composition the tensor. Both instances below use chosen tensors that are
// associative and unital on the nose, so every coherence cell is an identity
// (this is asserted, not assumed).

// (FinSet, +). Proarrow composition is size addition; cells are functions.
struct MonDblFinSet {
  using Ob = Unit;
  using Arr = Unit;
  using Pro = FinSet;
  using Cell = FinFunction;

  Ob arr_dom(const Arr&) const { return {}; }
  Ob arr_cod(const Arr&) const { return {}; }
  Arr arr_id(const Ob&) const { return {}; }
  Arr arr_comp(const Arr&, const Arr&) const { return {}; }

  Ob pro_src(const Pro&) const { return {}; }
  Ob pro_tgt(const Pro&) const { return {}; }
  Pro pro_comp(const Pro& m, const Pro& n) const { return coproduct(m, n).sum; }
  Pro pro_id(const Ob&) const { return FinSet{0}; }

  Pro cell_top(const Cell& c) const { return c.dom; }
  Pro cell_bot(const Cell& c) const { return c.cod; }
  Arr cell_left(const Cell&) const { return {}; }
  Arr cell_right(const Cell&) const { return {}; }

  Cell vid(const Pro& m) const { return identity(m); }
  Cell vcomp(const Cell& a, const Cell& b) const { return compose(a, b); }
  Cell hid(const Arr&) const { return identity(FinSet{0}); }

  Cell hcomp(const Cell& a, const Cell& b) const {
    auto wt = coproduct(a.dom, b.dom);
    auto wb = coproduct(a.cod, b.cod);
    return copair(compose(a, wb.inl), compose(b, wb.inr), wt);
  }

  CellIso<Cell> strict_iso(const Pro& lhs, const Pro& rhs,
                           const char* what) const {
    if (!(lhs == rhs))
      throw StructuralError(std::string(what) +
                            ": chosen tensor is not strict here");
    return {vid(lhs), vid(rhs)};
  }

  CellIso<Cell> associator(const Pro& m, const Pro& n, const Pro& p) const {
    return strict_iso(pro_comp(pro_comp(m, n), p), pro_comp(m, pro_comp(n, p)),
                      "sum associator");
  }
  CellIso<Cell> lunitor(const Pro& m) const {
    return strict_iso(pro_comp(pro_id({}), m), m, "sum left unitor");
  }
  CellIso<Cell> runitor(const Pro& m) const {
    return strict_iso(pro_comp(m, pro_id({})), m, "sum right unitor");
  }

  std::vector<Arr> arrows_between(const Ob&, const Ob&) const { return {Unit{}}; }
  std::vector<Cell> cells_with_frame(const Pro& m, const Pro& n, const Arr&,
                                     const Arr&) const {
    return all_functions(m, n);
  }

  std::string show_ob(const Ob&) const { return "*"; }
  std::string show_arr(const Arr&) const { return "*"; }
  std::string show_pro(const Pro& m) const { return show(m); }
  std::string show_cell(const Cell& c) const { return show(c); }
};

// (Cat, x) on finite categories with the chosen product. Flattened pair
// indexing makes the product strictly associative and strictly unital at the
// terminal category.
struct MonDblCat {
  using Ob = Unit;
  using Arr = Unit;
  using Pro = FinCat;
  using Cell = FinFunctor;

  Ob arr_dom(const Arr&) const { return {}; }
  Ob arr_cod(const Arr&) const { return {}; }
  Arr arr_id(const Ob&) const { return {}; }
  Arr arr_comp(const Arr&, const Arr&) const { return {}; }

  Ob pro_src(const Pro&) const { return {}; }
  Ob pro_tgt(const Pro&) const { return {}; }
  Pro pro_comp(const Pro& m, const Pro& n) const {
    return product_cat(m, n).cat;
  }
  Pro pro_id(const Ob&) const { return terminal_cat(); }

  Pro cell_top(const Cell& c) const { return c.dom; }
  Pro cell_bot(const Cell& c) const { return c.cod; }
  Arr cell_left(const Cell&) const { return {}; }
  Arr cell_right(const Cell&) const { return {}; }

  Cell vid(const Pro& m) const { return identity(m); }
  Cell vcomp(const Cell& a, const Cell& b) const { return compose(a, b); }
  Cell hid(const Arr&) const { return identity(terminal_cat()); }

  // Product functor, computed through the pair indices of both products.
  Cell hcomp(const Cell& a, const Cell& b) const {
    auto pd = product_cat(a.dom, b.dom);
    auto pc = product_cat(a.cod, b.cod);
    std::vector<int> obs, mors;
    obs.reserve(pd.obs.size());
    for (const auto& ob : pd.obs)
      obs.push_back(pc.ob_of.at({a.ob(ob[0]), b.ob(ob[1])}));
    mors.reserve(pd.mors.size());
    for (const auto& mo : pd.mors)
      mors.push_back(pc.mor_of.at({a.mor(mo[0]), b.mor(mo[1])}));
    return FinFunctor(pd.cat, pc.cat, std::move(obs), std::move(mors));
  }

  CellIso<Cell> strict_iso(const Pro& lhs, const Pro& rhs,
                           const char* what) const {
    if (!(lhs == rhs))
      throw StructuralError(std::string(what) +
                            ": chosen tensor is not strict here");
    return {vid(lhs), vid(rhs)};
  }

  CellIso<Cell> associator(const Pro& m, const Pro& n, const Pro& p) const {
    return strict_iso(pro_comp(pro_comp(m, n), p), pro_comp(m, pro_comp(n, p)),
                      "product associator");
  }
  CellIso<Cell> lunitor(const Pro& m) const {
    return strict_iso(pro_comp(pro_id({}), m), m, "product left unitor");
  }
  CellIso<Cell> runitor(const Pro& m) const {
    return strict_iso(pro_comp(m, pro_id({})), m, "product right unitor");
  }

  std::string show_ob(const Ob&) const { return "*"; }
  std::string show_arr(const Arr&) const { return "*"; }
  std::string show_pro(const Pro& m) const { return show(m); }
  std::string show_cell(const Cell& c) const { return show(c); }
};

}  // namespace ocsp

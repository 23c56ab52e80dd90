#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocsp/finset.hpp"
#include "ocsp/graph.hpp"

namespace ocsp {

// Finite category presented by tables. Morphisms are indexed; the composition
// table is defined exactly on composable pairs and the category laws are
// verified at construction.
struct FinCat {
  FinSet objects;
  std::vector<int> mor_dom, mor_cod;
  std::vector<int> identity_of;  // object -> its identity morphism
  std::map<std::pair<int, int>, int> comp_table;

  FinCat() = default;
  FinCat(FinSet obs, std::vector<int> mdom, std::vector<int> mcod,
         std::vector<int> ids, std::map<std::pair<int, int>, int> comp);

  int mor_count() const { return static_cast<int>(mor_dom.size()); }
  // Diagrammatic: first f, then g.
  int comp(int f, int g) const;
  int id(int ob) const { return identity_of[static_cast<size_t>(ob)]; }

  bool operator==(const FinCat&) const = default;
};

struct FinFunctor {
  FinCat dom, cod;
  std::vector<int> ob_map, mor_map;

  FinFunctor() = default;
  FinFunctor(FinCat d, FinCat c, std::vector<int> obs, std::vector<int> mors);

  int ob(int a) const { return ob_map[static_cast<size_t>(a)]; }
  int mor(int f) const { return mor_map[static_cast<size_t>(f)]; }

  bool operator==(const FinFunctor&) const = default;
};

FinFunctor identity(const FinCat& a);
FinFunctor compose(const FinFunctor& f, const FinFunctor& g);

FinCat terminal_cat();
FinFunctor bang_functor(const FinCat& a);

// Span of categories: two functors out of a shared apex.
struct CatSpan {
  FinCat apex;
  FinFunctor leg_l, leg_r;
  bool operator==(const CatSpan&) const = default;
};
CatSpan make_cat_span(FinFunctor l, FinFunctor r);

// Map of spans: functors on both feet and the apex, squares commuting.
struct CatSpanMap {
  FinFunctor foot_l, apex, foot_r;
  bool operator==(const CatSpanMap&) const = default;
};
CatSpanMap make_cat_span_map(const CatSpan& d, const CatSpan& c,
                             FinFunctor fl, FinFunctor fx, FinFunctor fr);

// Strict pullback of categories: pairs that agree on the nose, with the
// component indices of every object and morphism kept for lookup.
struct PullbackCat {
  FinCat cat;
  FinFunctor proj_l, proj_r;
  std::vector<std::array<int, 2>> obs, mors;
  std::map<std::array<int, 2>, int> ob_of, mor_of;
};
PullbackCat pullback_cat(const FinFunctor& f, const FinFunctor& g);
// Product as the pullback over the terminal category.
PullbackCat product_cat(const FinCat& a, const FinCat& b);

// Free category on an acyclic graph; morphisms are paths stored as edge
// lists, keyed together with their start vertex.
struct FreeCat {
  Graph graph;
  FinCat cat;
  std::vector<std::vector<int>> paths;
  std::map<std::pair<int, std::vector<int>>, int> path_of;
  bool operator==(const FreeCat&) const = default;
};
FreeCat free_category(const Graph& g);
FinFunctor free_functor(const FreeCat& d, const FreeCat& c,
                        const GraphHom& h);

// Pushout of free categories along graph homomorphisms: free on the glued
// graph, which must again be acyclic.
struct FreePushout {
  FreeCat apex;
  FinFunctor cop_l, cop_r;
};
FreePushout pushout_free_cat(const FreeCat& x, const FreeCat& y,
                             const GraphHom& ix, const GraphHom& iy);

// Comma category of a cospan of functors A -> X <- B. Objects are triples
// (a, f: i a -> o b, b), morphisms are squares (h, k); both are kept with
// their index data so images under maps can be looked up.
struct CommaCat {
  FinFunctor i, o;
  CatSpan span;                          // comma with its two projections
  std::vector<std::array<int, 3>> obs;   // (a, f, b)
  std::vector<std::array<int, 4>> mors;  // (dom ob, cod ob, h, k)
  std::map<std::array<int, 3>, int> ob_of;
  std::map<std::array<int, 4>, int> mor_of;
};
CommaCat comma_category(const FinFunctor& i, const FinFunctor& o);

// A map of cospans (h, f, k) acts on comma data by (a, m, b) ->
// (h a, f m, k b); gives a map of the comma spans.
CatSpanMap comma_on_map(const CommaCat& d, const CommaCat& c,
                        const FinFunctor& h, const FinFunctor& f,
                        const FinFunctor& k);

// Laxator: from the pullback of two comma spans over the shared foot into the
// comma of the composite cospan, pairing ((a,m,b),(b,n,c)) to the composite
// of the glued images. ix, iy are the apex coprojections into the composite.
struct CommaLaxator {
  PullbackCat pb;
  FinFunctor map;
};
CommaLaxator comma_laxator(const CommaCat& m, const CommaCat& n,
                           const CommaCat& comp, const FinFunctor& ix,
                           const FinFunctor& iy);

// Unitor: A -> comma(id_A, id_A), a -> (a, 1_a, a), h -> (h, h).
FinFunctor comma_unitor(const CommaCat& c);

std::string show(const FinCat& a);
std::string show(const FinFunctor& f);

// Functor between free categories that remembers the graph map inducing it.
struct FreeFunctor {
  FreeCat dom, cod;
  GraphHom hom;
  FinFunctor fun;
  bool operator==(const FreeFunctor&) const = default;
};
FreeFunctor make_free_functor(const FreeCat& d, const FreeCat& c, GraphHom h);

// Free categories on acyclic graphs with chosen colimits, same shape as
// FinSetCat. Pushouts exist when the glued graph stays acyclic; a cyclic
// gluing is reported as a structural error.
struct FreeCatCat {
  using Ob = FreeCat;
  using Arr = FreeFunctor;
  static Ob dom(const Arr& f) { return f.dom; }
  static Ob cod(const Arr& f) { return f.cod; }
  static Arr id(const Ob& a) { return make_free_functor(a, a, identity(a.graph)); }
  static Arr comp(const Arr& f, const Arr& g);
  static Coprod<Ob, Arr> coprod(const Ob& a, const Ob& b);
  static Arr copr(const Arr& f, const Arr& g, const Coprod<Ob, Arr>& w);
  static Ob initial() { return free_category(graph_initial()); }
  static Arr initial_arrow(const Ob& a);
  static PushoutData<Ob, Arr> po(const Arr& f, const Arr& g);
  static Arr po_copair(const PushoutData<Ob, Arr>& w, const Arr& p,
                       const Arr& q);
  static std::optional<Arr> inverse(const Arr& f);
  static std::vector<Arr> arrows_between(const Ob& a, const Ob& b);
  static std::string show_ob(const Ob& a) { return show(a.graph); }
  static std::string show_arr(const Arr& f) { return show(f.hom); }
};

}  // namespace ocsp

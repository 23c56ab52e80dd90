#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ocsp/cospan.hpp"
#include "ocsp/fincat.hpp"
#include "ocsp/finset.hpp"
#include "ocsp/graph.hpp"
#include "ocsp/groth.hpp"
#include "ocsp/json_io.hpp"
#include "ocsp/mondbl.hpp"
#include "ocsp/report.hpp"
#include "ocsp/spancat.hpp"

namespace ocsp {

// Lax monoidal functor (FinSet, +) -> (Cat, x): a category of decorations
// for every finite set, reindexing along functions, and comparison functors
// that merge decorations over a disjoint union.
struct MonoidalCatFunctor {
  std::string name = "F";
  std::function<FinCat(const FinSet&)> ob;
  std::function<FinFunctor(const FinFunction&)> arr;
  // lax(a, b): product of the fibers over a and b into the fiber over a+b
  std::function<FinFunctor(const FinSet&, const FinSet&)> lax;
  // unit(): terminal category into the fiber over the empty set
  std::function<FinFunctor()> unit;
};

// Functoriality, naturality of the comparisons, and the monoidal coherence
// triangles and squares, on all sets of size at most max_size with all
// functions between them.
Report check_monoidal_cat_functor(const MonoidalCatFunctor& F, int max_size);

// Every fiber is the terminal category; decorations carry no data.
MonoidalCatFunctor terminal_decoration_functor();

// Fibers are the poset categories of subsets ordered by inclusion,
// comparisons juxtapose. Closed under its own comparisons, so every functor
// here is total.
MonoidalCatFunctor subset_decoration_functor();

// Fibers are graphs on the given vertex set with at most max_edges edges and
// identity-on-vertices homomorphisms between them; comparisons take disjoint
// unions. Tabulating lax(a, b) needs the bound to absorb the largest pair of
// fiber objects, so it raises UnsupportedError whenever some pair of graphs
// would overflow; GraphDecorationLax below evaluates the same theory
// pointwise and has no such limit.
MonoidalCatFunctor graph_decoration_functor(int max_edges);

// Canonical enumeration of the graphs on a fixed vertex set with at most
// max_edges edges: by edge count, then lexicographically in the incidence
// word. Shared by the tabulated fibers and the lazy instance.
std::vector<Graph> graphs_on(const FinSet& vertices, int max_edges);

// Monoidal endomap of (FinSet, +), used to precompose decoration theories.
struct MonoidalFinSetMap {
  std::string name = "P";
  std::function<FinSet(const FinSet&)> ob;
  std::function<FinFunction(const FinFunction&)> arr;
  std::function<FinFunction(const FinSet&, const FinSet&)> lax;
  std::function<FinFunction()> unit;
};

// a -> a+a with the block shuffle (a+a)+(b+b) -> (a+b)+(a+b).
MonoidalFinSetMap doubling_monoidal_map();

MonoidalCatFunctor precompose_monoidal(const MonoidalFinSetMap& P,
                                       const MonoidalCatFunctor& F);

// The same data read as lax double functors between one-object double
// categories.
DblFunctor<MonDblFinSet, MonDblFinSet> mon_dbl(const MonoidalFinSetMap& P);
DblFunctor<MonDblFinSet, MonDblCat> mon_dbl(const MonoidalCatFunctor& F);

// Apex of a cospan, as a lax double functor into (FinSet, +). The laxator
// copairs the two pushout coprojections m.apex + n.apex -> apex(m . n).
DblFunctor<CospanDbl<FinSetCat>, MonDblFinSet> apex_functor();

// A category C as the span 1 <- C -> 1. Strict: the chosen product of
// categories is the chosen pullback over the terminal category.
DblFunctor<MonDblCat, SpanCatDbl> apex_star();

// Decorated cospans over a decoration theory F: pair each finite-set cospan
// with an object of the fiber over its apex. The span-valued functor is the
// composite of the three factors above, so its laxator evaluates as
// F.lax(apex m, apex n) followed by F.arr of the copaired coprojections.
using DecoratedDbl = GrothDbl<CatValuedLax<CospanDbl<FinSetCat>>>;
DecoratedDbl dcsp(const MonoidalCatFunctor& F);

// Graph decorations, lazily: the fiber over a cospan consists of the graphs
// on its apex, reindexing is pushforward, the comparison glues edge lists
// along the pushout. max_edges bounds the enumerators only; membership asks
// just that the vertices agree with the apex, so composites whose edge count
// passes the bound still exist.
struct GraphDecorationLax {
  using Base = CospanDbl<FinSetCat>;
  using BOb = Unit;
  using BMor = Unit;
  using POb = Graph;
  using PMor = GraphHom;
  using BPro = Cospan<FinSetCat>;
  using BCell = CospanCell<FinSetCat>;

  Base base;
  int max_edges = 0;

  bool check_bob(const FinSet&, const Unit&) const { return true; }
  bool check_bmor(const FinSet&, const Unit&) const { return true; }
  bool check_pob(const BPro& m, const Graph& s) const {
    return s.vertices == m.apex;
  }
  bool check_pmor(const BPro& m, const GraphHom& nu) const {
    return check_pob(m, nu.dom) && check_pob(m, nu.cod) &&
           nu.vmap == identity(m.apex);
  }

  Unit act_ob(const FinFunction&, const Unit&) const { return {}; }
  Unit act_mor(const FinFunction&, const Unit&) const { return {}; }
  Unit bmor_dom(const FinSet&, const Unit&) const { return {}; }
  Unit bmor_cod(const FinSet&, const Unit&) const { return {}; }
  Unit bmor_id(const FinSet&, const Unit&) const { return {}; }
  Unit bmor_comp(const FinSet&, const Unit&, const Unit&) const { return {}; }
  Unit sigma_ob(const BPro&, const Graph&) const { return {}; }
  Unit tau_ob(const BPro&, const Graph&) const { return {}; }
  Unit sigma_mor(const BPro&, const GraphHom&) const { return {}; }
  Unit tau_mor(const BPro&, const GraphHom&) const { return {}; }

  Graph pmor_dom(const BPro&, const GraphHom& nu) const { return nu.dom; }
  Graph pmor_cod(const BPro&, const GraphHom& nu) const { return nu.cod; }
  GraphHom pmor_id(const BPro&, const Graph& s) const { return identity(s); }
  GraphHom pmor_comp(const BPro&, const GraphHom& nu,
                     const GraphHom& mu) const {
    return compose(nu, mu);
  }

  Graph cell_ob(const BCell& al, const Graph& s) const;
  GraphHom cell_mor(const BCell& al, const GraphHom& nu) const;

  Graph lax_ob(const BPro& m, const BPro& n, const Graph& s,
               const Graph& t) const;
  GraphHom lax_mor(const BPro& m, const BPro& n, const GraphHom& nu,
                   const GraphHom& mu) const;
  Graph unit_ob(const FinSet& a, const Unit&) const { return discrete(a); }
  GraphHom unit_mor(const FinSet& a, const Unit&) const {
    return identity(discrete(a));
  }

  std::vector<Unit> enum_bobs(const FinSet&) const { return {Unit{}}; }
  std::vector<Unit> enum_bmors(const FinSet&) const { return {Unit{}}; }
  std::vector<Graph> enum_pobs(const BPro& m) const {
    return graphs_on(m.apex, max_edges);
  }
  std::vector<GraphHom> enum_pmors(const BPro& m) const;

  std::string show_bob(const FinSet&, const Unit&) const { return "*"; }
  std::string show_bmor(const FinSet&, const Unit&) const { return "*"; }
  std::string show_pob(const BPro&, const Graph& s) const { return show(s); }
  std::string show_pmor(const BPro&, const GraphHom& nu) const {
    return show(nu);
  }
};

using DecoratedGraphDbl = GrothDbl<GraphDecorationLax>;
DecoratedGraphDbl dcsp_graphs(int max_edges);

// A finite-set cospan carrying a graph on its apex: the open-graph reading
// of a decorated cospan, and the shape used for serialization.
struct DecoratedCospan {
  Cospan<FinSetCat> cospan;
  Graph decoration;
  bool operator==(const DecoratedCospan&) const = default;
};

DecoratedCospan make_decorated(const Cospan<FinSetCat>& m, const Graph& s);
json to_json(const DecoratedCospan& d);
DecoratedCospan decorated_from_json(const json& j);

// Graph-decorated cospans against structured cospans over the discrete
// structuring: the translation is bijective on proarrows up to the stated
// bounds (feet of size at most 2, apexes at most 3, decorations within
// max_edges) and commutes with composition, identities, restriction and
// coproducts on the nose.
Report open_graph_equivalence(int max_edges);

// Process theories: cospans of acyclic graph presentations, with the fiber
// over a cospan i: a -> x <- b: o the comma category of morphisms
// i(p) -> o(q) in the free category on x. Composition concatenates
// processes along the shared boundary.
DblFunctor<CospanDbl<GraphCat>, SpanCatDbl> comma_functor();
using ProcessDbl = GrothDbl<CatValuedLax<CospanDbl<GraphCat>>>;
ProcessDbl process_theories();

}  // namespace ocsp

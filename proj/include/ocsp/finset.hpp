#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ocsp {

// The finite set {0, ..., size-1}.
struct FinSet {
  int size = 0;
  bool operator==(const FinSet&) const = default;
};

// Total function between finite sets, stored as its value table.
// Arrows are equal iff their endpoints and tables are equal.
struct FinFunction {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;

  FinFunction() = default;
  FinFunction(FinSet dom_, FinSet cod_, std::vector<int> table_);

  int operator()(int i) const { return table[static_cast<size_t>(i)]; }
  bool operator==(const FinFunction&) const = default;
};

FinFunction identity(const FinSet& a);
// Diagrammatic order: first f, then g.
FinFunction compose(const FinFunction& f, const FinFunction& g);

template <typename Ob, typename Arr>
struct Coprod {
  Ob sum;
  Arr inl, inr;
};

template <typename Ob, typename Arr>
struct PushoutData {
  Ob apex;
  Arr ia, ib;  // coprojections from the two outer objects
};

Coprod<FinSet, FinFunction> coproduct(const FinSet& a, const FinSet& b);
// Mediating map out of a coproduct: [f, g] with f, g sharing a codomain.
FinFunction copair(const FinFunction& f, const FinFunction& g,
                   const Coprod<FinSet, FinFunction>& w);
FinSet fin_initial();
FinFunction bang(const FinSet& a);  // unique map 0 -> a

// Chosen pushout of a <-f- c -g-> b: quotient of a + b by f(i) ~ g(i),
// class representatives numbered in first-seen order over the
// disjoint-union indexing (all of a's elements, then b's).
PushoutData<FinSet, FinFunction> pushout(const FinFunction& f,
                                         const FinFunction& g);
// Mediating map out of a pushout given a commuting cocone (p, q).
FinFunction pushout_copair(const PushoutData<FinSet, FinFunction>& w,
                           const FinFunction& p, const FinFunction& q);

std::optional<FinFunction> try_inverse(const FinFunction& f);
std::vector<FinFunction> all_functions(const FinSet& a, const FinSet& b);

std::string show(const FinSet& a);
std::string show(const FinFunction& f);

// FinSet with chosen finite colimits, as a value-free record usable as a
// template parameter for the cospan construction.
struct FinSetCat {
  using Ob = FinSet;
  using Arr = FinFunction;
  static Ob dom(const Arr& f) { return f.dom; }
  static Ob cod(const Arr& f) { return f.cod; }
  static Arr id(const Ob& a) { return identity(a); }
  static Arr comp(const Arr& f, const Arr& g) { return compose(f, g); }
  static Coprod<Ob, Arr> coprod(const Ob& a, const Ob& b) {
    return coproduct(a, b);
  }
  static Arr copr(const Arr& f, const Arr& g, const Coprod<Ob, Arr>& w) {
    return copair(f, g, w);
  }
  static Ob initial() { return fin_initial(); }
  static Arr initial_arrow(const Ob& a) { return bang(a); }
  static PushoutData<Ob, Arr> po(const Arr& f, const Arr& g) {
    return pushout(f, g);
  }
  static Arr po_copair(const PushoutData<Ob, Arr>& w, const Arr& p,
                       const Arr& q) {
    return pushout_copair(w, p, q);
  }
  static std::optional<Arr> inverse(const Arr& f) { return try_inverse(f); }
  static std::vector<Arr> arrows_between(const Ob& a, const Ob& b) {
    return all_functions(a, b);
  }
  static std::string show_ob(const Ob& a) { return show(a); }
  static std::string show_arr(const Arr& f) { return show(f); }
};

}  // namespace ocsp

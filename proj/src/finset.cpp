#include "ocsp/finset.hpp"

#include <numeric>
#include <sstream>

#include "ocsp/error.hpp"

namespace ocsp {

FinFunction::FinFunction(FinSet dom_, FinSet cod_, std::vector<int> table_)
    : dom(dom_), cod(cod_), table(std::move(table_)) {
  if (static_cast<int>(table.size()) != dom.size)
    throw BoundaryError("FinFunction: table length " +
                        std::to_string(table.size()) + " != domain size " +
                        std::to_string(dom.size));
  for (int v : table)
    if (v < 0 || v >= cod.size)
      throw BoundaryError("FinFunction: value " + std::to_string(v) +
                          " outside codomain of size " +
                          std::to_string(cod.size));
}

FinFunction identity(const FinSet& a) {
  std::vector<int> t(static_cast<size_t>(a.size));
  std::iota(t.begin(), t.end(), 0);
  return FinFunction(a, a, std::move(t));
}

FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod == g.dom))
    throw BoundaryError("compose: codomain of first factor != domain of second");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[static_cast<size_t>(f.table[i])];
  return FinFunction(f.dom, g.cod, std::move(t));
}

Coprod<FinSet, FinFunction> coproduct(const FinSet& a, const FinSet& b) {
  FinSet sum{a.size + b.size};
  std::vector<int> l(static_cast<size_t>(a.size)), r(static_cast<size_t>(b.size));
  std::iota(l.begin(), l.end(), 0);
  std::iota(r.begin(), r.end(), a.size);
  return {sum, FinFunction(a, sum, std::move(l)), FinFunction(b, sum, std::move(r))};
}

FinFunction copair(const FinFunction& f, const FinFunction& g,
                   const Coprod<FinSet, FinFunction>& w) {
  if (!(f.cod == g.cod))
    throw BoundaryError("copair: the two legs must share a codomain");
  if (!(f.dom == w.inl.dom) || !(g.dom == w.inr.dom))
    throw BoundaryError("copair: legs do not match the coproduct witness");
  std::vector<int> t;
  t.reserve(f.table.size() + g.table.size());
  t.insert(t.end(), f.table.begin(), f.table.end());
  t.insert(t.end(), g.table.begin(), g.table.end());
  return FinFunction(w.sum, f.cod, std::move(t));
}

FinSet fin_initial() { return FinSet{0}; }

FinFunction bang(const FinSet& a) { return FinFunction(fin_initial(), a, {}); }

namespace {

// Plain array union-find with path compression.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[static_cast<size_t>(i)] != i) {
      parent[static_cast<size_t>(i)] = parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
      i = parent[static_cast<size_t>(i)];
    }
    return i;
  }
  void unite(int i, int j) {
    int ri = find(i), rj = find(j);
    if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
  }
};

}  // namespace

PushoutData<FinSet, FinFunction> pushout(const FinFunction& f,
                                         const FinFunction& g) {
  if (!(f.dom == g.dom))
    throw BoundaryError("pushout: span legs must share a domain");
  const int na = f.cod.size, nb = g.cod.size;
  UnionFind uf(na + nb);
  for (size_t i = 0; i < f.table.size(); ++i)
    uf.unite(f.table[i], na + g.table[i]);
  // Number classes by first occurrence over a's elements, then b's.
  std::vector<int> cls(static_cast<size_t>(na + nb), -1);
  int next = 0;
  for (int i = 0; i < na + nb; ++i) {
    int r = uf.find(i);
    if (cls[static_cast<size_t>(r)] == -1) cls[static_cast<size_t>(r)] = next++;
    cls[static_cast<size_t>(i)] = cls[static_cast<size_t>(r)];
  }
  FinSet apex{next};
  std::vector<int> ta(cls.begin(), cls.begin() + na);
  std::vector<int> tb(cls.begin() + na, cls.end());
  return {apex, FinFunction(f.cod, apex, std::move(ta)),
          FinFunction(g.cod, apex, std::move(tb))};
}

FinFunction pushout_copair(const PushoutData<FinSet, FinFunction>& w,
                           const FinFunction& p, const FinFunction& q) {
  if (!(p.cod == q.cod))
    throw BoundaryError("pushout_copair: cocone legs must share a codomain");
  if (!(p.dom == w.ia.dom) || !(q.dom == w.ib.dom))
    throw BoundaryError("pushout_copair: cocone does not match the witness");
  std::vector<int> t(static_cast<size_t>(w.apex.size), -1);
  auto put = [&](int cls, int val) {
    if (t[static_cast<size_t>(cls)] == -1)
      t[static_cast<size_t>(cls)] = val;
    else if (t[static_cast<size_t>(cls)] != val)
      throw BoundaryError("pushout_copair: cocone does not commute with the span");
  };
  for (size_t i = 0; i < p.table.size(); ++i) put(w.ia.table[i], p.table[i]);
  for (size_t j = 0; j < q.table.size(); ++j) put(w.ib.table[j], q.table[j]);
  for (int v : t)
    if (v == -1)
      throw BoundaryError("pushout_copair: witness coprojections are not jointly surjective");
  return FinFunction(w.apex, p.cod, std::move(t));
}

std::optional<FinFunction> try_inverse(const FinFunction& f) {
  if (f.dom.size != f.cod.size) return std::nullopt;
  std::vector<int> inv(static_cast<size_t>(f.cod.size), -1);
  for (size_t i = 0; i < f.table.size(); ++i) {
    if (inv[static_cast<size_t>(f.table[i])] != -1) return std::nullopt;
    inv[static_cast<size_t>(f.table[i])] = static_cast<int>(i);
  }
  return FinFunction(f.cod, f.dom, std::move(inv));
}

std::vector<FinFunction> all_functions(const FinSet& a, const FinSet& b) {
  std::vector<FinFunction> out;
  if (a.size == 0) {
    out.push_back(FinFunction(a, b, {}));
    return out;
  }
  if (b.size == 0) return out;  // no map from nonempty to empty
  std::vector<int> t(static_cast<size_t>(a.size), 0);
  for (;;) {
    out.push_back(FinFunction(a, b, t));
    int k = a.size - 1;
    while (k >= 0 && t[static_cast<size_t>(k)] == b.size - 1) {
      t[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++t[static_cast<size_t>(k)];
  }
  return out;
}

std::string show(const FinSet& a) { return "[" + std::to_string(a.size) + "]"; }

std::string show(const FinFunction& f) {
  std::ostringstream os;
  os << show(f.dom) << "->" << show(f.cod) << "(";
  for (size_t i = 0; i < f.table.size(); ++i) {
    if (i) os << " ";
    os << f.table[i];
  }
  os << ")";
  return os.str();
}

}  // namespace ocsp

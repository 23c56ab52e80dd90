#include <doctest.h>

#include "ocsp/error.hpp"
#include "ocsp/finset.hpp"
#include "ocsp/graph.hpp"
#include "ocsp/json_io.hpp"

using namespace ocsp;

namespace {

// Independent oracle: u is the unique mediating map out of the coproduct.
bool unique_mediator(const Coprod<FinSet, FinFunction>& w, const FinFunction& p,
                     const FinFunction& q, const FinFunction& u) {
  if (!(compose(w.inl, u) == p) || !(compose(w.inr, u) == q)) return false;
  int count = 0;
  for (const auto& cand : all_functions(w.sum, p.cod))
    if (compose(w.inl, cand) == p && compose(w.inr, cand) == q) ++count;
  return count == 1;
}

bool unique_po_mediator(const PushoutData<FinSet, FinFunction>& w,
                        const FinFunction& p, const FinFunction& q,
                        const FinFunction& u) {
  if (!(compose(w.ia, u) == p) || !(compose(w.ib, u) == q)) return false;
  int count = 0;
  for (const auto& cand : all_functions(w.apex, p.cod))
    if (compose(w.ia, cand) == p && compose(w.ib, cand) == q) ++count;
  return count == 1;
}

}  // namespace

TEST_CASE("finfunction basics") {
  FinSet a{3}, b{2};
  FinFunction f(a, b, {0, 1, 0});
  CHECK(f(2) == 0);
  CHECK(compose(identity(a), f) == f);
  CHECK(compose(f, identity(b)) == f);
  CHECK_THROWS_AS(FinFunction(a, b, {0, 2, 0}), BoundaryError);
  CHECK_THROWS_AS(FinFunction(a, b, {0, 1}), BoundaryError);
  FinFunction g(b, a, {2, 0});
  CHECK(compose(f, g).table == std::vector<int>{2, 0, 2});
  CHECK_THROWS_AS(compose(g, g), BoundaryError);
}

TEST_CASE("coproduct copair example") {
  // [1,0] and [0] into {0,1} give the table [1,0,0]
  FinSet two{2}, one{1};
  auto w = coproduct(two, one);
  CHECK(w.sum.size == 3);
  FinFunction f(two, two, {1, 0});
  FinFunction g(one, two, {0});
  CHECK(copair(f, g, w).table == std::vector<int>{1, 0, 0});
}

TEST_CASE("coproduct universal property, exhaustive at small sizes") {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb) {
      FinSet a{na}, b{nb};
      auto w = coproduct(a, b);
      for (int nz = 0; nz <= 2; ++nz) {
        FinSet z{nz};
        for (const auto& p : all_functions(a, z))
          for (const auto& q : all_functions(b, z))
            CHECK(unique_mediator(w, p, q, copair(p, q, w)));
      }
    }
}

TEST_CASE("pushout gluing two one-element boundaries") {
  FinSet one{1}, two{2};
  FinFunction f(one, two, {0});
  FinFunction g(one, two, {1});
  auto w = pushout(f, g);
  CHECK(w.apex.size == 3);
  // representatives in first-seen order over a's elements, then b's
  CHECK(w.ia.table == std::vector<int>{0, 1});
  CHECK(w.ib.table == std::vector<int>{2, 0});
}

TEST_CASE("pushout of identities collapses nothing") {
  FinSet two{2};
  auto w = pushout(identity(two), identity(two));
  CHECK(w.apex.size == 2);
  CHECK(w.ia == identity(two));
  CHECK(w.ib == identity(two));
}

TEST_CASE("pushout universal property, exhaustive at sizes <= 2") {
  for (int nc = 0; nc <= 2; ++nc)
    for (int na = 0; na <= 2; ++na)
      for (int nb = 0; nb <= 2; ++nb) {
        FinSet c{nc}, a{na}, b{nb};
        for (const auto& f : all_functions(c, a))
          for (const auto& g : all_functions(c, b)) {
            auto w = pushout(f, g);
            CHECK(compose(f, w.ia) == compose(g, w.ib));
            for (int nz = 0; nz <= 2; ++nz) {
              FinSet z{nz};
              for (const auto& p : all_functions(a, z))
                for (const auto& q : all_functions(b, z)) {
                  if (!(compose(f, p) == compose(g, q))) continue;
                  CHECK(unique_po_mediator(w, p, q, pushout_copair(w, p, q)));
                }
            }
          }
      }
}

TEST_CASE("pushout_copair rejects non-cocones") {
  FinSet one{1}, two{2};
  FinFunction f(one, two, {0});
  FinFunction g(one, two, {1});
  auto w = pushout(f, g);
  FinFunction p(two, two, {0, 1});
  FinFunction q(two, two, {1, 0});
  // p(f(0)) = 0 but q(g(0)) = 0, fine; p(0)=0 q(1)=0 conflict-free? glue is
  // a0 ~ b1, so the cocone needs p[0] == q[1]; here p[0]=0, q[1]=0. The pair
  // (p, q') with q'[1] = 1 breaks it.
  CHECK(pushout_copair(w, p, q).table == std::vector<int>{0, 1, 1});
  FinFunction q2(two, two, {1, 1});
  CHECK_THROWS_AS(pushout_copair(w, p, q2), BoundaryError);
}

TEST_CASE("try_inverse") {
  FinSet two{2};
  CHECK(try_inverse(FinFunction(two, two, {1, 0})).has_value());
  CHECK(!try_inverse(FinFunction(two, two, {0, 0})).has_value());
  CHECK(!try_inverse(FinFunction(two, FinSet{3}, {0, 1})).has_value());
  auto inv = try_inverse(FinFunction(two, two, {1, 0}));
  CHECK(inv->table == std::vector<int>{1, 0});
}

TEST_CASE("graph basics and validation") {
  Graph arrow(FinSet{2}, FinSet{1}, {0}, {1});
  CHECK(arrow.src(0) == 0);
  CHECK_THROWS_AS(Graph(FinSet{2}, FinSet{1}, {0}, {2}), BoundaryError);
  CHECK_THROWS_AS(
      GraphHom(arrow, discrete(FinSet{2}), identity(FinSet{2}),
               FinFunction(FinSet{1}, FinSet{0}, {})),
      BoundaryError);
  auto id = identity(arrow);
  CHECK(compose(id, id) == id);
}

TEST_CASE("graph pushout glues an edge chain") {
  // two single-edge graphs glued end to start give the 3-vertex path
  Graph arrow(FinSet{2}, FinSet{1}, {0}, {1});
  Graph pt = discrete(FinSet{1});
  GraphHom f(pt, arrow, FinFunction(FinSet{1}, FinSet{2}, {1}),
             FinFunction(FinSet{0}, FinSet{1}, {}));
  GraphHom g(pt, arrow, FinFunction(FinSet{1}, FinSet{2}, {0}),
             FinFunction(FinSet{0}, FinSet{1}, {}));
  auto w = pushout(f, g);
  CHECK(w.apex.vertices.size == 3);
  CHECK(w.apex.edges.size == 2);
  CHECK(w.apex.src.table == std::vector<int>{0, 1});
  CHECK(w.apex.tgt.table == std::vector<int>{1, 2});
}

TEST_CASE("graph coproduct is pointwise and couniversal") {
  Graph arrow(FinSet{2}, FinSet{1}, {0}, {1});
  Graph loop(FinSet{1}, FinSet{1}, {0}, {0});
  auto w = coproduct(arrow, loop);
  CHECK(w.sum.vertices.size == 3);
  CHECK(w.sum.edges.size == 2);
  CHECK(w.sum.src.table == std::vector<int>{0, 2});
  CHECK(w.sum.tgt.table == std::vector<int>{1, 2});
  for (const auto& p : all_graph_homs(arrow, w.sum))
    for (const auto& q : all_graph_homs(loop, w.sum)) {
      auto u = copair(p, q, w);
      CHECK(compose(w.inl, u) == p);
      CHECK(compose(w.inr, u) == q);
    }
}

TEST_CASE("discrete comparison is an isomorphism") {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb) {
      FinSet a{na}, b{nb};
      auto wa = coproduct(a, b);
      auto wg = coproduct(discrete(a), discrete(b));
      auto cmp = copair(discrete_on(wa.inl), discrete_on(wa.inr), wg);
      CHECK(cmp.cod == discrete(wa.sum));
      auto inv = try_inverse(cmp);
      REQUIRE(inv.has_value());
      CHECK(compose(cmp, *inv) == identity(wg.sum));
      CHECK(compose(*inv, cmp) == identity(discrete(wa.sum)));
    }
}

TEST_CASE("json round trip") {
  FinFunction f(FinSet{3}, FinSet{2}, {0, 1, 0});
  CHECK(finfunction_from_json(to_json(f)) == f);
  Graph arrow(FinSet{2}, FinSet{1}, {0}, {1});
  CHECK(graph_from_json(to_json(arrow)) == arrow);
  CHECK(finset_from_json(to_json(FinSet{4})) == FinSet{4});
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"v", 1}}), BoundaryError);
  // canonical text reparses to the same bytes
  auto j = to_json(arrow);
  auto text = canonical(j);
  CHECK(canonical(nlohmann::json::parse(text)) == text);
}

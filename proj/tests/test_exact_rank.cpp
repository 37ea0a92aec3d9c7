#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sgt/exact_rank.hpp"
#include "sgt/generators.hpp"
#include "sgt/reference.hpp"
#include "sgt/signed_graph.hpp"

using namespace sgt;

namespace {
SignedGraph complete(int n) {
  std::vector<SignedEdge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v, 1});
  return SignedGraph(n, e);
}
}  // namespace

TEST_CASE("nullity of small named graphs") {
  CHECK(nullity(SignedGraph(0, {})) == 0);
  CHECK(nullity(SignedGraph(3, {})) == 3);          // empty adjacency
  CHECK(nullity(pathGraph(5)) == 1);                // odd path
  CHECK(nullity(pathGraph(4)) == 0);                // even path
  CHECK(nullity(cycleGraph(4, 1)) == 2);            // positive 4-cycle
  CHECK(nullity(cycleGraph(4, -1)) == 0);           // negative 4-cycle
  CHECK(nullity(cycleGraph(6, -1)) == 2);           // negative 6-cycle
  CHECK(nullity(cycleGraph(6, 1)) == 0);
  CHECK(nullity(cycleGraph(3, 1)) == 0);
  // positive 4-cycle plus a chord: rows of the two far endpoints coincide
  CHECK(nullity(SignedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 2, 1}})) == 1);
  CHECK(nullity(complete(4)) == 0);
  // star K_{1,3}: rank 2
  CHECK(nullity(SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, -1}})) == 2);
  // positive 4-cycle with one pendant vertex
  CHECK(nullity(SignedGraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 4, 1}})) == 1);
}

TEST_CASE("rank agrees with the rational oracle") {
  for (const auto& g : {pathGraph(7, {1, -1, 1, 1, -1, 1}), cycleGraph(5, -1), complete(5),
                        SignedGraph(6, {{0, 1, -1}, {1, 2, 1}, {3, 4, -1}})})
    CHECK(g.order() - nullity(g) == rankByRationalElimination(g));
  CHECK(rankByRationalElimination(complete(4)) == 4);
}

TEST_CASE("machine-word and big-integer paths agree across the dispatch cutoff") {
  // order 16 runs on int64, order 17 on arbitrary precision
  CHECK(nullity(pathGraph(16)) == 0);
  CHECK(nullity(pathGraph(17)) == 1);
  CHECK(nullity(cycleGraph(16, 1)) == 2);
  CHECK(nullity(cycleGraph(17, -1)) == 0);
  CHECK(nullity(cycleGraph(18, -1)) == 2);
  auto m16 = adjacencyMatrix<Int>(pathGraph(16));
  CHECK(rankFractionFree(m16) == 16);
}

TEST_CASE("eigenvalue multiplicity at exact rationals") {
  SignedGraph c4 = cycleGraph(4, 1);  // spectrum 2, 0, 0, -2
  CHECK(multiplicity(c4, Rational(2)) == 1);
  CHECK(multiplicity(c4, Rational(-2)) == 1);
  CHECK(multiplicity(c4, Rational(0)) == 2);
  CHECK(multiplicity(c4, Rational(1)) == 0);
  CHECK(multiplicity(c4, Rational(1) / 2) == 0);

  SignedGraph k4 = complete(4);  // spectrum 3, -1, -1, -1
  CHECK(multiplicity(k4, Rational(3)) == 1);
  CHECK(multiplicity(k4, Rational(-1)) == 3);
  CHECK(multiplicity(k4, Rational(0)) == 0);

  SignedGraph p2 = pathGraph(2);  // spectrum 1, -1
  CHECK(multiplicity(p2, Rational(1)) == 1);
  CHECK(multiplicity(p2, Rational(-1)) == 1);
  CHECK(multiplicity(p2, Rational(1) / 3) == 0);
}

TEST_CASE("adjacency matrix carries the signs symmetrically") {
  SignedGraph g(3, {{0, 1, -1}, {1, 2, 1}});
  auto m = adjacencyMatrix<Int>(g);
  CHECK(m(0, 1) == -1);
  CHECK(m(1, 0) == -1);
  CHECK(m(1, 2) == 1);
  CHECK(m(0, 2) == 0);
  CHECK(m(0, 0) == 0);
}

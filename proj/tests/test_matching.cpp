#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sgt/exact_rank.hpp"
#include "sgt/generators.hpp"
#include "sgt/matching.hpp"
#include "sgt/reference.hpp"

using namespace sgt;

namespace {
SignedGraph star3() { return SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}); }
SignedGraph spider222() {
  return SignedGraph(7, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1}});
}
}  // namespace

TEST_CASE("matching number by leaf stripping") {
  CHECK(matchingNumber(pathGraph(4)) == 2);
  CHECK(matchingNumber(star3()) == 1);
  CHECK(matchingNumber(pathGraph(7)) == 3);
  CHECK(matchingNumber(pathGraph(1)) == 0);
  CHECK(matchingNumber(SignedGraph(3, {})) == 0);
  // forest: P4 plus P3
  SignedGraph forest(7, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {4, 5, 1}, {5, 6, 1}});
  CHECK(matchingNumber(forest) == 3);
  CHECK_THROWS_AS(matchingNumber(cycleGraph(3, 1)), std::invalid_argument);
}

TEST_CASE("covered vertices match the enumeration oracle") {
  SignedGraph p3 = pathGraph(3);
  CHECK(isCovered(p3, 1));
  CHECK_FALSE(isCovered(p3, 0));
  SignedGraph p4 = pathGraph(4);
  for (int v = 0; v < 4; ++v) CHECK(isCovered(p4, v));
  CHECK(isCovered(star3(), 0));
  CHECK_FALSE(isCovered(star3(), 1));
  for (const auto& t : {pathGraph(6), star3(), spider222()})
    for (int v = 0; v < t.order(); ++v) CHECK(isCovered(t, v) == coveredByEnumeration(t, v));
  CHECK_THROWS(isCovered(p3, 9));
}

TEST_CASE("forest nullity from the matching number") {
  CHECK(treeNullity(pathGraph(5)) == 1);
  CHECK(treeNullity(pathGraph(4)) == 0);
  CHECK(treeNullity(star3()) == 2);
  CHECK(treeNullity(spider222()) == 1);
  // matches exact rank on every signing of a fixed tree
  SignedGraph t = spider222();
  for (int bits = 0; bits < 64; ++bits) {
    auto edges = t.edges();
    for (int i = 0; i < 6; ++i) edges[i].sign = (bits >> i) & 1 ? -1 : 1;
    SignedGraph s(7, edges);
    CHECK(treeNullity(s) == nullity(s));
  }
}

TEST_CASE("deficiency recursion mirrors the direct test") {
  auto [p5ok, p5cert] = isOneDeficientTree(pathGraph(5));
  CHECK(p5ok);
  CHECK(p5cert.recursiveVerdict);
  CHECK(p5cert.basePathOddOrder);

  CHECK_FALSE(isOneDeficientTree(pathGraph(4)).first);
  CHECK(isOneDeficientTree(star3()).first);
  CHECK_FALSE(isOneDeficientTree(spider222()).first);

  // all-odd-legs spider: every leaf path has odd edge count
  SignedGraph oddSpider(8, {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1},
                            {6, 7, 1}});
  auto [ok, cert] = isOneDeficientTree(oddSpider);
  CHECK(ok);
  CHECK(cert.recursiveVerdict);
  for (const auto& step : cert.steps) {
    CHECK(step.oddParity);
    CHECK(step.majorCovered);
    CHECK(step.path.front() == step.leaf);
    CHECK(step.path.back() == step.major);
  }

  CHECK_THROWS_AS(isOneDeficientTree(cycleGraph(4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(isOneDeficientTree(SignedGraph(1, {})), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sgt/exact_rank.hpp"
#include "sgt/generators.hpp"
#include "sgt/matching.hpp"
#include "sgt/structure.hpp"

using namespace sgt;

namespace {
SignedGraph star3() {
  return SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
}
}  // namespace

TEST_CASE("paths and cycles") {
  SignedGraph p5 = pathGraph(5);
  CHECK(p5.order() == 5);
  CHECK(p5.size() == 4);
  for (const auto& e : p5.edges()) CHECK(e.sign == 1);

  SignedGraph p3 = pathGraph(3, {-1, 1});
  CHECK(p3.sign(0, 1) == -1);
  CHECK(p3.sign(1, 2) == 1);
  CHECK_THROWS_AS(pathGraph(0), std::invalid_argument);
  CHECK_THROWS_AS(pathGraph(3, {1}), std::invalid_argument);

  SignedGraph c4 = cycleGraph(4, -1);
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  CHECK(c4.sign(0, 3) == -1);  // the class sign sits on the closing edge
  CHECK(c4.sign(0, 1) == 1);
  CHECK_THROWS_AS(cycleGraph(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(cycleGraph(4, 0), std::invalid_argument);
}

TEST_CASE("coalescence identifies one vertex") {
  SignedGraph g = coalesce(pathGraph(3), 2, pathGraph(3), 0);
  CHECK(g.order() == 5);
  CHECK(g == pathGraph(5));
  CHECK_THROWS_AS(coalesce(pathGraph(3), 5, pathGraph(3), 0), std::out_of_range);
  CHECK_THROWS_AS(coalesce(pathGraph(3), 0, pathGraph(3), -1), std::out_of_range);

  // order bookkeeping: h keeps its ids, k's remaining vertices follow
  SignedGraph h = coalesce(cycleGraph(3, 1), 0, pathGraph(2), 0);
  CHECK(h.order() == 4);
  CHECK(h.degree(0) == 3);
  CHECK(h.degree(3) == 1);
}

TEST_CASE("path joins") {
  SignedGraph direct = pathJoin(cycleGraph(3, 1), 0, cycleGraph(3, 1), 0, 2);
  CHECK(direct.order() == 6);
  CHECK(direct.size() == 7);
  CHECK(direct.sign(0, 3) == 1);

  SignedGraph longer = pathJoin(cycleGraph(3, 1), 0, cycleGraph(3, 1), 0, 4);
  CHECK(longer.order() == 8);
  CHECK(longer.size() == 9);
  CHECK(componentCount(longer) == 1);
  CHECK_THROWS_AS(pathJoin(pathGraph(2), 0, pathGraph(2), 0, 1), std::invalid_argument);
}

TEST_CASE("tree joins") {
  SignedGraph j = treeJoin(pathGraph(2), 0, cycleGraph(3, 1), {0, 2});
  CHECK(j.order() == 5);
  CHECK(j.size() == 6);
  CHECK(j.sign(0, 2) == 1);
  CHECK(j.sign(0, 4) == 1);
  CHECK_THROWS_AS(treeJoin(cycleGraph(3, 1), 0, pathGraph(2), {0}), std::invalid_argument);
  CHECK_THROWS_AS(treeJoin(pathGraph(2), 0, pathGraph(2), {}), std::invalid_argument);

  // covered join point: nullities add
  SignedGraph t = pathGraph(3);
  REQUIRE(isCovered(t, 1));
  SignedGraph covered = treeJoin(t, 1, cycleGraph(3, 1), {0});
  CHECK(nullity(covered) == treeNullity(t) + nullity(cycleGraph(3, 1)));

  // uncovered join point: recurse through the complement
  REQUIRE_FALSE(isCovered(t, 0));
  SignedGraph uncovered = treeJoin(t, 0, cycleGraph(3, 1), {0});
  SignedGraph rest = treeJoin(SignedGraph(1, {}), 0, cycleGraph(3, 1), {0});
  CHECK(nullity(uncovered) == treeNullity(t) - 1 + nullity(rest));
}

TEST_CASE("two-cycle and theta families") {
  SignedGraph shared = infty(3, 3, 1, 1, -1);
  CHECK(shared.order() == 5);
  CHECK(shared.degree(0) == 4);
  CHECK(cyclomaticNumber(shared) == 2);
  CHECK_FALSE(cycleDisjoint(shared));

  SignedGraph apart = infty(3, 3, 3, 1, 1);
  CHECK(apart.order() == 7);
  CHECK(cycleDisjoint(apart));
  CHECK_THROWS_AS(infty(2, 3, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(infty(3, 3, 0, 1, 1), std::invalid_argument);

  SignedGraph diamond = theta(1, 2, 2, 1, 1);
  CHECK(diamond.order() == 4);
  CHECK(diamond.size() == 5);
  CHECK(cyclomaticNumber(diamond) == 2);

  SignedGraph k23 = theta(2, 2, 2, 1, 1);
  CHECK(k23.order() == 5);
  CHECK(k23.size() == 6);

  SignedGraph mixed = theta(2, 3, 4, 1, -1);
  int prod = 1;
  for (const auto& e : mixed.edges()) prod *= e.sign;
  CHECK(prod == -1);  // signPQ * signQL

  CHECK_THROWS_AS(theta(1, 1, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(theta(0, 2, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(theta(2, 2, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("cycles on tree leaves") {
  SignedGraph g = form1(star3(), {1}, {{6, -1}});
  CHECK(g.order() == 9);
  CHECK(cyclomaticNumber(g) == 1);
  CHECK(nullity(g) == 3);  // 2c + p - 1

  SignedGraph p5 = pathGraph(5);
  SignedGraph two = form1(p5, {0, 4}, {{4, 1}, {6, -1}});
  CHECK(two.order() == 13);
  CHECK(pendantCount(two) == 0);
  CHECK(nullity(two) == 3);  // leaf-free: 2c - 1

  CHECK_THROWS_AS(form1(pathGraph(4), {0}, {{4, 1}}), std::invalid_argument);  // tree not deficient
  CHECK_THROWS_AS(form1(star3(), {0}, {{4, 1}}), std::invalid_argument);       // not a leaf
  CHECK_THROWS_AS(form1(star3(), {1, 1}, {{4, 1}, {4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(form1(star3(), {1}, {}), std::invalid_argument);             // count mismatch
  CHECK_THROWS_AS(form1(star3(), {}, {}), std::invalid_argument);              // empty
  CHECK_THROWS_AS(form1(star3(), {1}, {{5, 1}}), std::invalid_argument);       // nullity-0 cycle
  CHECK_THROWS_AS(form1(cycleGraph(4, 1), {0}, {{4, 1}}), std::invalid_argument);
}

TEST_CASE("seeded random families are deterministic") {
  SignedGraph a = randomSigned(7, 0.5, 42);
  SignedGraph b = randomSigned(7, 0.5, 42);
  CHECK(a == b);
  CHECK(randomSigned(7, 0.0, 42).size() == 0);
  CHECK(randomSigned(5, 1.0, 42).size() == 10);
  CHECK_THROWS_AS(randomSigned(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(randomSigned(5, 1.5, 1), std::invalid_argument);

  SignedGraph t = randomTree(8, 3);
  CHECK(t == randomTree(8, 3));
  CHECK(t.order() == 8);
  CHECK(t.size() == 7);
  CHECK(componentCount(t) == 1);
  CHECK(cyclomaticNumber(t) == 0);
  CHECK(randomTree(1, 5).order() == 1);
  CHECK_THROWS_AS(randomTree(0, 5), std::invalid_argument);
}

TEST_CASE("family specs") {
  SUBCASE("parsing") {
    auto spec = parseFamilySpec({"cycle", "n=4", "sign=+"});
    CHECK(spec.family == "cycle");
    CHECK(spec.params.at("n") == "4");
    CHECK(spec.params.at("sign") == "+");
    CHECK_THROWS_AS(parseFamilySpec({}), std::invalid_argument);
    CHECK_THROWS_AS(parseFamilySpec({"cycle", "n4"}), std::invalid_argument);
    CHECK_THROWS_AS(parseFamilySpec({"cycle", "=4"}), std::invalid_argument);
    CHECK_THROWS_AS(parseFamilySpec({"cycle", "n=4", "n=5"}), std::invalid_argument);
  }
  SUBCASE("building") {
    CHECK(buildFamily(parseFamilySpec({"cycle", "n=4", "sign=+"})) == cycleGraph(4, 1));
    CHECK(buildFamily(parseFamilySpec({"path", "n=3", "signs=-+"})) == pathGraph(3, {-1, 1}));
    CHECK(buildFamily(parseFamilySpec({"theta", "p=4", "q=4", "l=4", "signs=++"})) ==
          theta(4, 4, 4, 1, 1));
    CHECK(buildFamily(parseFamilySpec({"theta", "p=4", "q=4", "l=4", "sign_pq=+",
                                       "sign_ql=+"})) == theta(4, 4, 4, 1, 1));
    CHECK(buildFamily(parseFamilySpec({"infty", "p=3", "q=3", "l=1", "signs=+-"})) ==
          infty(3, 3, 1, 1, -1));
    CHECK(buildFamily(parseFamilySpec({"random", "n=6", "prob=0.5", "seed=9"})) ==
          randomSigned(6, 0.5, 9));
  }
  SUBCASE("building errors") {
    CHECK_THROWS_AS(buildFamily(parseFamilySpec({"mystery", "n=4"})), std::invalid_argument);
    CHECK_THROWS_AS(buildFamily(parseFamilySpec({"cycle", "n=4"})), std::invalid_argument);
    CHECK_THROWS_AS(buildFamily(parseFamilySpec({"cycle", "n=4", "sign=+", "extra=1"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildFamily(parseFamilySpec({"cycle", "n=x", "sign=+"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildFamily(parseFamilySpec({"cycle", "n=4", "sign=x"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildFamily(parseFamilySpec({"theta", "p=4", "q=4", "l=4", "signs=+++"})),
                    std::invalid_argument);
  }
}

// Acceptance gate: one line per criterion, exit code = number of failures.
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sgt/classify.hpp"
#include "sgt/exact_rank.hpp"
#include "sgt/generators.hpp"
#include "sgt/harness.hpp"
#include "sgt/matching.hpp"
#include "sgt/reference.hpp"
#include "sgt/structure.hpp"
#include "sgt/transforms.hpp"

using namespace sgt;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int hardwareJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

int randInt(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string describe(const SignedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order();
  for (const auto& e : g.edges())
    out << " | e " << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-');
  return out.str();
}

Outcome fail(const std::string& why, const SignedGraph& g) {
  return {false, why + " :: " + describe(g)};
}

// --- 1: closed-form nullity for every signed path and cycle up to order 16

Outcome closedForms() {
  std::uint64_t count = 0;
  for (int n = 1; n <= 16; ++n) {
    const std::uint64_t total = 1ULL << (n - 1);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      std::vector<int> signs(n - 1);
      for (int i = 0; i + 1 < n; ++i) signs[i] = (bits >> i) & 1 ? -1 : 1;
      SignedGraph g = pathGraph(n, signs);
      if (nullity(g) != pathNullity(n)) return fail("path closed form", g);
      ++count;
    }
  }
  for (int n = 3; n <= 16; ++n)
    for (int cls : {1, -1}) {
      SignedGraph g = cycleGraph(n, cls);
      if (nullity(g) != cycleNullity(n, cls)) return fail("cycle closed form", g);
      ++count;
    }
  return {true, std::to_string(count) + " graphs agree with the closed forms"};
}

// --- 2: the all-positive theta graph on three length-4 paths has nullity 3

Outcome thetaValue() {
  SignedGraph g = theta(4, 4, 4, 1, 1);
  const int eta = nullity(g);
  if (eta != 3) return fail("expected nullity 3, got " + std::to_string(eta), g);
  if (multiplicity(g, Rational(0)) != 3) return fail("multiplicity at 0 disagrees", g);
  return {true, "nullity 3 reproduced exactly"};
}

// --- helpers for the harness-backed criteria

Universe switchingUniverse(int minN, int maxN, Connectivity conn) {
  Universe u;
  u.minN = minN;
  u.maxN = maxN;
  u.connectivity = conn;
  u.mode = SignMode::SwitchingClasses;
  return u;
}

Outcome runSelection(const std::vector<Universe>& universes,
                     const std::string& property) {
  std::uint64_t checked = 0;
  for (const auto& u : universes) {
    VerificationReport r = verify(u, {property}, hardwareJobs());
    if (!r.clean()) {
      std::string why = "violations: ";
      for (const auto& p : r.properties)
        for (const auto& ce : p.counterexamples) why += "\n    " + ce;
      return {false, why};
    }
    checked += r.totalChecked;
  }
  return {true, std::to_string(checked) + " graphs checked, zero violations"};
}

// --- 3: the nullity upper bound holds on every small graph

Outcome boundExhaustive() {
  Universe all = switchingUniverse(2, 5, Connectivity::Connected);
  all.mode = SignMode::AllSignings;
  return runSelection({switchingUniverse(2, 6, Connectivity::Connected), all},
                      "classify.upper-bound");
}

// --- 4: eta = 2c + p exactly on disjoint unions of nullity-2 cycles

Outcome cycleUnionIff() {
  return runSelection({switchingUniverse(2, 6, Connectivity::NoIsolatedVertices)},
                      "classify.cycle-union-iff");
}

// --- 5: eta = 2c + p - 1 exactly on the recognized extremal forms

Outcome oneDeficientIff() {
  Outcome o = runSelection({switchingUniverse(2, 6, Connectivity::Connected)},
                           "classify.one-deficient-forms-iff");
  if (o.ok) o.detail += "; no unreported recognizer disagreements";
  return o;
}

// --- 6: generated full-attachment families attain eta = 2c - 1

SignedGraph oddLegSpider(int legCount) {
  std::vector<SignedEdge> edges;
  int next = 1;
  for (int leg = 0; leg < legCount; ++leg) {
    const int len = leg % 2 ? 3 : 1;
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next, 1});
      prev = next++;
    }
  }
  return SignedGraph(next, edges);
}

Outcome generatorSoundness() {
  std::mt19937_64 rng(0x5ca1ab1eULL);
  const std::vector<std::pair<int, int>> goodSpecs{{4, 1}, {6, -1}, {8, 1}, {10, -1}};
  int built = 0;
  for (int i = 0; i < 100; ++i) {
    const int c = 3 + i % 3;
    const int maxTreeOrder = std::min(12, 30 - 3 * c);

    SignedGraph tree = oddLegSpider(c);
    for (int attempt = 0; attempt < 200; ++attempt) {
      SignedGraph t = randomTree(randInt(rng, c + 1, maxTreeOrder), rng());
      if (pendantCount(t) == c && treeNullity(t) == c - 1) {
        tree = std::move(t);
        break;
      }
    }
    if (pendantCount(tree) != c || treeNullity(tree) != c - 1)
      return fail("uncertified base tree", tree);

    VertexSet leaves;
    auto deg = tree.degrees();
    for (int v = 0; v < tree.order(); ++v)
      if (deg[v] == 1) leaves.push_back(v);

    int remaining = 30 - tree.order();
    std::vector<std::pair<int, int>> specs;
    for (int j = 0; j < c; ++j) {
      const int leavesLeft = c - j - 1;
      std::vector<std::pair<int, int>> fits;
      for (auto s : goodSpecs)
        if (s.first - 1 <= remaining - 3 * leavesLeft) fits.push_back(s);
      auto pick = fits[rng() % fits.size()];
      specs.push_back(pick);
      remaining -= pick.first - 1;
    }

    SignedGraph g = form1(tree, leaves, specs);
    if (g.order() > 30) return fail("order budget exceeded", g);
    if (pendantCount(g) != 0 || cyclomaticNumber(g) != c)
      return fail("family invariants broken", g);
    if (nullity(g) != 2 * c - 1) return fail("family member misses eta = 2c - 1", g);
    if (classify(g).form != ExtremalForm::LeafFreeFullAttachment)
      return fail("family member not recognized", g);
    ++built;
  }
  return {true, std::to_string(built) + " instances all attain eta = 2c - 1"};
}

// --- 7: reductions preserve nullity and terminate quickly

Outcome reductionInvariance() {
  std::mt19937_64 rng(0xced0c7edULL);
  const std::array<double, 5> probs{0.2, 0.35, 0.5, 0.65, 0.8};
  std::uint64_t steps = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = randInt(rng, 2, 12);
    SignedGraph g;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) return {false, "could not sample a connected graph"};
      g = randomSigned(n, probs[rng() % probs.size()], rng());
      if (componentCount(g) == 1) break;
    }
    const int eta = nullity(g);
    ReductionTrace tr = reduce(g);
    if (static_cast<int>(tr.steps.size()) > g.order() + cyclomaticNumber(g))
      return fail("reduction overran its step budget", g);
    SignedGraph cur = g;
    for (const auto& s : tr.steps) {
      if (s.etaBefore != eta || s.etaAfter != eta)
        return fail("a reduction step changed the nullity", g);
      cur = applyStep(cur, s);
    }
    if (!(cur == tr.reduced) || nullity(tr.reduced) != eta)
      return fail("trace replay does not land on the reduced graph", g);
    steps += tr.steps.size();
  }
  return {true, "500 graphs reduced, " + std::to_string(steps) +
                    " steps, nullity preserved at every step"};
}

// --- 8: vertex blow-ups preserve the adjacency rank

Outcome blowUpInvariance() {
  std::mt19937_64 rng(0xb10c0dedULL);
  const std::array<double, 3> probs{0.3, 0.5, 0.8};
  int maxOrder = 0;
  for (int i = 0; i < 200; ++i) {
    SignedGraph base = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
    std::vector<int> mult(base.order());
    for (int& m : mult) m = randInt(rng, 1, 3);
    SignedGraph big = blowUp(base, mult);
    maxOrder = std::max(maxOrder, big.order());
    const int rankBase = base.order() - nullity(base);
    const int rankBig = big.order() - nullity(big);
    if (rankBase != rankBig) return fail("blow-up changed the rank", base);
  }
  return {true, "200 blow-ups rank-invariant (largest order " +
                    std::to_string(maxOrder) + ")"};
}

// --- 9: matching-based tree machinery against brute force

Outcome matchingOracle() {
  std::uint64_t coverChecks = 0, nullityChecks = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& t : enumerateFreeTrees(n)) {
      for (int v = 0; v < n; ++v) {
        if (isCovered(t, v) != coveredByEnumeration(t, v))
          return fail("covered-vertex oracle disagrees at vertex " + std::to_string(v), t);
        ++coverChecks;
      }
      const int expected = treeNullity(t);
      const std::uint64_t total = 1ULL << (n - 1);
      std::vector<SignedEdge> edges = t.edges();
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (std::size_t idx = 0; idx < edges.size(); ++idx)
          edges[idx].sign = (bits >> idx) & 1 ? -1 : 1;
        SignedGraph s(n, edges);
        if (nullity(s) != expected) return fail("tree nullity depends on signs", s);
        ++nullityChecks;
      }
    }
  }
  return {true, std::to_string(coverChecks) + " coverage and " +
                    std::to_string(nullityChecks) + " nullity checks agree"};
}

// --- 10: composition bounds (joins, identifications, attachments)

Outcome compositionSuites() {
  const std::array<double, 3> probs{0.3, 0.5, 0.8};
  const std::vector<Rational> lambdas{Rational(0),  Rational(1), Rational(-1),
                                      Rational(2),  Rational(-2), Rational(1) / 2};
  std::uint64_t checks = 0;
  std::string failure;

  auto signedPath = [](std::mt19937_64& rng, int m) {
    std::vector<int> signs(m - 1);
    for (int& s : signs) s = rng() & 1 ? -1 : 1;
    return pathGraph(m, signs);
  };
  auto withMask = [](const SignedGraph& g, std::uint64_t bits) {
    std::vector<SignedEdge> edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      edges[i].sign = (bits >> i) & 1 ? -1 : 1;
    return SignedGraph(g.order(), edges);
  };

  // tree joined to an arbitrary graph: exact nullity recursion
  {
    std::mt19937_64 rng(0x09e17ee1ULL);
    for (int i = 0; i < 200; ++i) {
      const int nt = randInt(rng, 2, 8);
      SignedGraph t = withMask(randomTree(nt, rng()), rng());
      SignedGraph h = randomSigned(randInt(rng, 1, 6), probs[rng() % 3], rng());
      const int u = randInt(rng, 0, nt - 1);
      VertexSet targets;
      for (int v = 0; v < h.order(); ++v)
        if (rng() & 1) targets.push_back(v);
      if (targets.empty()) targets.push_back(randInt(rng, 0, h.order() - 1));
      SignedGraph j = treeJoin(t, u, h, targets);
      int expected;
      if (isCovered(t, u)) {
        expected = treeNullity(t) + nullity(h);
      } else {
        VertexSet rest;
        for (int v = 0; v < nt; ++v)
          if (v != u) rest.push_back(v);
        expected = treeNullity(t) - 1 + nullity(deleteVertices(j, rest).graph);
      }
      if (nullity(j) != expected) return fail("tree join nullity recursion", j);
      ++checks;
    }
  }

  // vertex identification and path joins: additive bounds
  {
    std::mt19937_64 rng(0x1de2717fULL);
    for (int i = 0; i < 200; ++i) {
      SignedGraph h = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
      SignedGraph k = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
      const int v = randInt(rng, 0, h.order() - 1);
      const int u = randInt(rng, 0, k.order() - 1);
      SignedGraph merged = coalesce(h, v, k, u);
      if (nullity(merged) > nullity(k) + nullity(deleteVertices(h, {v}).graph) + 1)
        return fail("identification nullity bound", merged);
      ++checks;
      SignedGraph joined = pathJoin(h, v, k, u, randInt(rng, 2, 5));
      if (nullity(joined) > nullity(h) + nullity(k) + 1)
        return fail("path join nullity bound", joined);
      ++checks;
    }
  }

  // multiplicity bounds for pendant paths, attached cycles, two-point paths
  {
    std::mt19937_64 rng(0x3a7a3a7aULL);
    for (int i = 0; i < 200; ++i) {
      SignedGraph h = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
      const int v = randInt(rng, 0, h.order() - 1);

      SignedGraph pendant = coalesce(h, v, signedPath(rng, randInt(rng, 2, 5)), 0);

      const int s = randInt(rng, 3, 6);
      const int m = randInt(rng, 1, 4);
      SignedGraph tail = cycleGraph(s, rng() & 1 ? -1 : 1);
      int tailEnd = 0;
      if (m >= 2) {
        tail = coalesce(tail, 0, signedPath(rng, m), 0);
        tailEnd = s + m - 2;
      }
      SignedGraph cycled = coalesce(h, v, tail, tailEnd);

      int u1 = randInt(rng, 0, h.order() - 1);
      int u2 = randInt(rng, 0, h.order() - 1);
      while (u2 == u1) u2 = randInt(rng, 0, h.order() - 1);
      int mm = randInt(rng, 2, 5);
      if (mm == 2 && h.sign(u1, u2) != 0) mm = 3;
      std::vector<SignedEdge> edges = h.edges();
      int prev = u1;
      for (int j = 0; j < mm - 2; ++j) {
        edges.push_back({prev, h.order() + j, rng() & 1 ? -1 : 1});
        prev = h.order() + j;
      }
      edges.push_back({prev, u2, rng() & 1 ? -1 : 1});
      SignedGraph chorded(h.order() + mm - 2, edges);

      for (const auto& lam : lambdas) {
        const int base = multiplicity(h, lam);
        if (multiplicity(pendant, lam) > base + 1)
          return fail("pendant path multiplicity bound", pendant);
        if (multiplicity(cycled, lam) > base + 2)
          return fail("attached cycle multiplicity bound", cycled);
        if (multiplicity(chorded, lam) > base + 2)
          return fail("two-point path multiplicity bound", chorded);
        checks += 3;
      }
    }
  }

  return {true, std::to_string(checks) + " composed-instance checks, zero violations"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> gates{
      {"closed-form nullity, all signed paths and cycles to order 16", closedForms},
      {"all-positive theta(4,4,4) nullity value", thetaValue},
      {"nullity upper bound on every small graph", boundExhaustive},
      {"cycle-union equality characterization (eta = 2c + p)", cycleUnionIff},
      {"one-deficient form characterization (eta = 2c + p - 1)", oneDeficientIff},
      {"full-attachment generator soundness (eta = 2c - 1)", generatorSoundness},
      {"reduction nullity invariance and termination", reductionInvariance},
      {"blow-up rank invariance", blowUpInvariance},
      {"matching oracle vs brute force on trees", matchingOracle},
      {"composition nullity and multiplicity bounds", compositionSuites},
  };

  int failures = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = gates[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "[PASS]" : "[FAIL]") << ' ' << i + 1 << '/' << gates.size() << ' '
         << gates[i].first << " — " << o.detail << " (" << std::fixed;
    line.precision(1);
    line << secs << "s)";
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}

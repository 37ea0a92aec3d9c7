#include "sgt/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sgt/classify.hpp"
#include "sgt/exact_rank.hpp"
#include "sgt/generators.hpp"
#include "sgt/matching.hpp"
#include "sgt/reference.hpp"
#include "sgt/structure.hpp"
#include "sgt/transforms.hpp"

namespace sgt {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

std::string inlineGraph(const SignedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order();
  for (const auto& e : g.edges())
    out << " | e " << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-');
  return out.str();
}

std::uint64_t graphHash(const SignedGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (const auto& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
    mix(static_cast<std::uint64_t>(e.sign + 2));
  }
  return h;
}

int randInt(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<int> randomPermutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[randInt(rng, 0, i)]);
  return p;
}

SignedGraph permuteVertices(const SignedGraph& g, const std::vector<int>& perm) {
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph(g.order(), edges);
}

SignedGraph disjointUnion(const SignedGraph& a, const SignedGraph& b) {
  std::vector<SignedEdge> edges = a.edges();
  for (const auto& e : b.edges())
    edges.push_back({e.u + a.order(), e.v + a.order(), e.sign});
  return SignedGraph(a.order() + b.order(), edges);
}

/// Replace the sign of edge i (storage order) by bit i of `bits`.
SignedGraph withSignMask(const SignedGraph& g, std::uint64_t bits) {
  std::vector<SignedEdge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i].sign = (bits >> i) & 1 ? -1 : 1;
  return SignedGraph(g.order(), edges);
}

/// Star-like tree: vertex 0 is the center, each entry of `legs` the order of
/// a pendant chain.
SignedGraph spider(const std::vector<int>& legs) {
  std::vector<SignedEdge> edges;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next, 1});
      prev = next++;
    }
  }
  return SignedGraph(next, edges);
}

/// Coalesce one cycle per listed leaf onto a tree, without the deficiency
/// validation form1 performs (needed to build deliberate near-misses).
SignedGraph attachCycles(const SignedGraph& t, const std::vector<int>& leaves,
                         const std::vector<std::pair<int, int>>& specs) {
  SignedGraph out = t;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    out = coalesce(out, leaves[i], cycleGraph(specs[i].first, specs[i].second), 0);
  return out;
}

int rankOf(const SignedGraph& g) { return g.order() - nullity(g); }

// ---------------------------------------------------------------------------
// Universe enumeration
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> completeEdges(int n) {
  std::vector<std::pair<int, int>> ke;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) ke.emplace_back(u, v);
  return ke;
}

bool maskOk(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& ke,
            Connectivity connectivity) {
  std::vector<int> deg(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < ke.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    auto [u, v] = ke[i];
    ++deg[u];
    ++deg[v];
    parent[find(u)] = find(v);
  }
  if (connectivity == Connectivity::Connected) {
    for (int v = 1; v < n; ++v)
      if (find(v) != find(0)) return false;
    return true;
  }
  for (int v = 0; v < n; ++v)
    if (deg[v] == 0) return false;
  return true;
}

/// Indices (into the present-edge list) of a BFS spanning forest.
std::vector<char> spanningForestFlags(int n, const std::vector<std::pair<int, int>>& present) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
  for (std::size_t i = 0; i < present.size(); ++i) {
    adj[present[i].first].emplace_back(present[i].second, static_cast<int>(i));
    adj[present[i].second].emplace_back(present[i].first, static_cast<int>(i));
  }
  std::vector<char> inTree(present.size(), 0);
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (auto [w, idx] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          inTree[idx] = 1;
          queue.push_back(w);
        }
    }
  }
  return inTree;
}

template <class F>
void forEachSigning(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& ke,
                    SignMode mode, F&& yield) {
  std::vector<std::pair<int, int>> present;
  for (std::size_t i = 0; i < ke.size(); ++i)
    if ((mask >> i) & 1) present.push_back(ke[i]);
  const std::size_t m = present.size();
  std::vector<SignedEdge> edges(m);
  for (std::size_t i = 0; i < m; ++i)
    edges[i] = {present[i].first, present[i].second, 1};

  if (mode == SignMode::AllSignings) {
    for (std::uint64_t bits = 0; bits < (1ULL << m); ++bits) {
      for (std::size_t i = 0; i < m; ++i) edges[i].sign = (bits >> i) & 1 ? -1 : 1;
      yield(SignedGraph(n, edges));
    }
    return;
  }

  // Switching classes: spanning-forest edges stay positive, the remaining
  // (independent-cycle) edges range over every sign vector.
  auto inTree = spanningForestFlags(n, present);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < m; ++i)
    if (!inTree[i]) free.push_back(i);
  for (std::uint64_t bits = 0; bits < (1ULL << free.size()); ++bits) {
    for (std::size_t j = 0; j < free.size(); ++j)
      edges[free[j]].sign = (bits >> j) & 1 ? -1 : 1;
    yield(SignedGraph(n, edges));
  }
}

bool satisfiesConnectivity(const SignedGraph& g, Connectivity c) {
  if (c == Connectivity::Connected) return componentCount(g) == 1;
  auto deg = g.degrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d > 0; });
}

std::vector<SignedGraph> sampleUniverse(const Universe& u) {
  if (u.sampleCount <= 0)
    throw std::invalid_argument("random sampling needs a positive sample count");
  std::mt19937_64 rng(u.seed);
  const std::array<double, 5> probs{0.25, 0.40, 0.55, 0.70, 0.85};
  std::vector<SignedGraph> out;
  out.reserve(static_cast<std::size_t>(u.sampleCount));
  for (int i = 0; i < u.sampleCount; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) throw std::runtime_error("sampling failed to hit the universe");
      const int n = randInt(rng, u.minN, u.maxN);
      SignedGraph g = randomSigned(n, probs[rng() % probs.size()], rng());
      if (satisfiesConnectivity(g, u.connectivity)) {
        out.push_back(std::move(g));
        break;
      }
    }
  }
  return out;
}

void validateUniverse(const Universe& u) {
  if (u.minN < 1 || u.maxN < u.minN)
    throw std::invalid_argument("universe order range is empty or invalid");
  if (u.mode == SignMode::SwitchingClasses && u.maxN > 8)
    throw std::invalid_argument("switching-class enumeration is capped at order 8");
  if (u.mode == SignMode::AllSignings && u.maxN > 6)
    throw std::invalid_argument("all-signings enumeration is capped at order 6");
  if (u.mode == SignMode::RandomSample && u.sampleCount <= 0)
    throw std::invalid_argument("random sampling needs a positive sample count");
}

// ---------------------------------------------------------------------------
// Per-graph checks
// ---------------------------------------------------------------------------

GraphCheck chkRoundtrip(const SignedGraph& g) {
  SignedGraph back = parseGraph(serializeGraph(g));
  if (!(back == g)) return GraphCheck::fail("serialize/parse changed the graph");
  return GraphCheck::pass();
}

GraphCheck chkComponentsPartition(const SignedGraph& g) {
  auto comps = components(g);
  if (static_cast<int>(comps.size()) != componentCount(g))
    return GraphCheck::fail("component list size disagrees with componentCount");
  int orderSum = 0;
  std::size_t sizeSum = 0;
  std::vector<int> ids;
  for (const auto& c : comps) {
    orderSum += c.graph.order();
    sizeSum += c.graph.edges().size();
    ids.insert(ids.end(), c.originalIds.begin(), c.originalIds.end());
    if (c.graph.order() > 0 && componentCount(c.graph) != 1)
      return GraphCheck::fail("extracted component is not connected");
  }
  std::sort(ids.begin(), ids.end());
  for (int v = 0; v < g.order(); ++v)
    if (v >= static_cast<int>(ids.size()) || ids[v] != v)
      return GraphCheck::fail("component vertex sets do not partition the graph");
  if (orderSum != g.order() || sizeSum != g.edges().size())
    return GraphCheck::fail("component orders or sizes do not add up");
  return GraphCheck::pass();
}

GraphCheck chkDeleteNoneIdentity(const SignedGraph& g) {
  auto none = deleteVertices(g, {});
  if (!(none.graph == g)) return GraphCheck::fail("deleting nothing changed the graph");
  for (int v = 0; v < g.order(); ++v)
    if (none.oldToNew[v] != v) return GraphCheck::fail("identity deletion broke the vertex map");
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  auto gone = deleteVertices(g, all);
  if (gone.graph.order() != 0 || !gone.graph.edges().empty())
    return GraphCheck::fail("deleting every vertex left something behind");
  if (g.order() == 0) return GraphCheck::pass();
  std::mt19937_64 rng(graphHash(g));
  const int x = randInt(rng, 0, g.order() - 1);
  auto one = deleteVertices(g, {x});
  if (one.graph.order() != g.order() - 1)
    return GraphCheck::fail("single deletion has the wrong order");
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (u == x || v == x) continue;
      if (one.graph.sign(one.oldToNew[u], one.oldToNew[v]) != g.sign(u, v))
        return GraphCheck::fail("single deletion changed a surviving edge");
    }
  return GraphCheck::pass();
}

GraphCheck chkRankPivotInvariance(const SignedGraph& g) {
  const int r = rankOf(g);
  if (r != rankByRationalElimination(g))
    return GraphCheck::fail("fraction-free and rational ranks disagree");
  std::mt19937_64 rng(graphHash(g) ^ 0x9e3779b97f4a7c15ULL);
  auto perm = randomPermutation(g.order(), rng);
  if (r != rankOf(permuteVertices(g, perm)))
    return GraphCheck::fail("rank changed under a vertex relabeling");
  return GraphCheck::pass();
}

GraphCheck chkNullityComponentAdditive(const SignedGraph& g) {
  int sum = 0;
  for (const auto& c : components(g)) sum += nullity(c.graph);
  if (sum != nullity(g)) return GraphCheck::fail("nullity is not additive over components");
  return GraphCheck::pass();
}

GraphCheck chkDeletionInterlacing(const SignedGraph& g) {
  const int eta = nullity(g);
  for (int v = 0; v < g.order(); ++v) {
    const int sub = nullity(deleteVertices(g, {v}).graph);
    if (sub < eta - 1 || sub > eta + 1)
      return GraphCheck::fail("vertex deletion moved the nullity by more than one");
  }
  return GraphCheck::pass();
}

GraphCheck chkMultiplicityAtZero(const SignedGraph& g) {
  if (multiplicity(g, Rational(0)) != nullity(g))
    return GraphCheck::fail("multiplicity at zero disagrees with the nullity");
  if (multiplicity(g, Rational(1) / 2) != 0)
    return GraphCheck::fail("non-integer rational eigenvalue reported");
  int sum = 0;
  for (int lam = -2; lam <= 2; ++lam) sum += multiplicity(g, Rational(lam));
  if (sum > g.order())
    return GraphCheck::fail("eigenvalue multiplicities exceed the order");
  return GraphCheck::pass();
}

GraphCheck chkCountingAtVertex(const SignedGraph& g) {
  if (componentCount(g) != 1) return GraphCheck::skip();
  const int c = cyclomaticNumber(g);
  for (int x = 0; x < g.order(); ++x) {
    const auto st = cutVertexStats(g, x);
    auto rest = deleteVertices(g, {x}).graph;
    if (st.s != componentCount(rest))
      return GraphCheck::fail("component count after deletion disagrees");
    if (cyclomaticNumber(rest) != c - st.d + st.s)
      return GraphCheck::fail("cyclomatic bookkeeping after deletion disagrees");
    if (st.m > st.d || st.r > st.s)
      return GraphCheck::fail("neighbor statistics exceed their ceilings");
    if (st.d + st.r < st.m + st.s)
      return GraphCheck::fail("degree counting inequality fails");
    if (st.onCycle && 2 * st.d + st.r < st.m + 2 * st.s + 1)
      return GraphCheck::fail("cycle-vertex counting inequality fails");
    if (st.onCycle != liesOnCycle(g, x))
      return GraphCheck::fail("cycle membership flag disagrees");
  }
  return GraphCheck::pass();
}

GraphCheck chkCycleDeletionCount(const SignedGraph& g) {
  std::vector<Cycle> cycles;
  const bool small = g.order() <= 8;
  if (small) cycles = allSimpleCycles(g);
  for (int v = 0; v < g.order(); ++v) {
    const bool on = liesOnCycle(g, v);
    if (small) {
      bool member = false;
      for (const auto& c : cycles)
        member = member || std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end();
      if (member != on)
        return GraphCheck::fail("cycle membership disagrees with cycle enumeration");
    }
    const int after = cyclomaticNumber(deleteVertices(g, {v}).graph);
    if (on && after > cyclomaticNumber(g) - 1)
      return GraphCheck::fail("deleting a cycle vertex kept every independent cycle");
    if (!on && after != cyclomaticNumber(g))
      return GraphCheck::fail("deleting a non-cycle vertex changed the cyclomatic number");
  }
  return GraphCheck::pass();
}

GraphCheck chkCycleDisjointBruteforce(const SignedGraph& g) {
  if (g.order() > 8) return GraphCheck::skip();
  auto cycles = allSimpleCycles(g);
  std::vector<std::uint64_t> sets;
  sets.reserve(cycles.size());
  for (const auto& c : cycles) {
    std::uint64_t s = 0;
    for (int v : c.vertices) s |= 1ULL << v;
    sets.push_back(s);
  }
  bool share = false;
  for (std::size_t i = 0; i < sets.size() && !share; ++i)
    for (std::size_t j = i + 1; j < sets.size() && !share; ++j)
      share = (sets[i] & sets[j]) != 0;
  if (cycleDisjoint(g) != !share)
    return GraphCheck::fail("cycle-disjoint test disagrees with cycle enumeration");
  return GraphCheck::pass();
}

GraphCheck chkCycleSignRecompute(const SignedGraph& g) {
  auto fund = fundamentalCycles(g);
  if (static_cast<int>(fund.size()) != cyclomaticNumber(g))
    return GraphCheck::fail("independent cycle count disagrees with the cyclomatic number");
  for (const auto& c : fund) {
    const int len = c.length();
    if (len < 3) return GraphCheck::fail("degenerate cycle reported");
    std::set<int> uniq(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(uniq.size()) != len)
      return GraphCheck::fail("cycle repeats a vertex");
    int sign = 1;
    for (int i = 0; i < len; ++i) {
      const int s = g.sign(c.vertices[i], c.vertices[(i + 1) % len]);
      if (s == 0) return GraphCheck::fail("cycle uses a non-edge");
      sign *= s;
    }
    if (sign != c.sign) return GraphCheck::fail("stored cycle sign is wrong");
    if (c.vertices[0] != *std::min_element(c.vertices.begin(), c.vertices.end()) ||
        c.vertices[1] > c.vertices.back())
      return GraphCheck::fail("cycle is not in canonical rotation");
  }
  auto blockList = blocks(g);
  auto deg = g.degrees();
  for (auto [idx, attach] : pendantCycles(g, blockList)) {
    const Block& b = blockList[idx];
    if (b.kind != BlockKind::Cycle) return GraphCheck::fail("pendant cycle is not a cycle block");
    if (std::find(b.vertices.begin(), b.vertices.end(), attach) == b.vertices.end())
      return GraphCheck::fail("pendant cycle attachment is outside the block");
    for (int v : b.vertices)
      if (v != attach && deg[v] != 2)
        return GraphCheck::fail("pendant cycle has a second attachment");
    if (deg[attach] < 3) return GraphCheck::fail("pendant cycle attachment has low degree");
  }
  return GraphCheck::pass();
}

GraphCheck chkPendantPairPreserves(const SignedGraph& g) {
  auto deg = g.degrees();
  bool any = false;
  const int eta = nullity(g);
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] != 1) continue;
    any = true;
    SignedGraph h = deletePendantPair(g, v);
    if (h.order() != g.order() - 2)
      return GraphCheck::fail("pendant pair deletion removed the wrong number of vertices");
    if (nullity(h) != eta)
      return GraphCheck::fail("pendant pair deletion changed the nullity");
  }
  return any ? GraphCheck::pass() : GraphCheck::skip();
}

GraphCheck chkP6Preserves(const SignedGraph& g) {
  auto segments = contractibleP6Segments(g);
  if (segments.empty()) return GraphCheck::skip();
  const int eta = nullity(g);
  for (const auto& seg : segments) {
    SignedGraph h = contractP6(g, seg);
    if (h.order() != g.order() - 4)
      return GraphCheck::fail("path contraction removed the wrong number of vertices");
    if (nullity(h) != eta) return GraphCheck::fail("path contraction changed the nullity");
  }
  return GraphCheck::pass();
}

GraphCheck chkPendantCyclePreserves(const SignedGraph& g) {
  auto blockList = blocks(g);
  bool any = false;
  const int eta = nullity(g);
  for (auto [idx, attach] : pendantCycles(g, blockList)) {
    const Block& b = blockList[idx];
    int sign = 1;
    for (const auto& e : b.edges) sign *= e.sign;
    if (cycleNullity(static_cast<int>(b.vertices.size()), sign) != 2) continue;
    any = true;
    Cycle c;
    c.vertices = cycleBlockOrder(b, attach);
    c.sign = sign;
    SignedGraph h = pendantCycleToC4(g, c);
    if (h.order() != g.order() - static_cast<int>(b.vertices.size()) + 4)
      return GraphCheck::fail("cycle replacement produced the wrong order");
    if (nullity(h) != eta) return GraphCheck::fail("cycle replacement changed the nullity");
  }
  return any ? GraphCheck::pass() : GraphCheck::skip();
}

GraphCheck chkBlowupPreservesRank(const SignedGraph& g) {
  if (g.order() == 0) return GraphCheck::skip();
  std::mt19937_64 rng(graphHash(g) ^ 0xd1b54a32d192ed03ULL);
  std::vector<int> mult(g.order());
  int total = 0;
  for (int& m : mult) total += (m = randInt(rng, 1, 3));
  SignedGraph big = blowUp(g, mult);
  if (big.order() != total) return GraphCheck::fail("blow-up has the wrong order");
  if (rankOf(big) != rankOf(g)) return GraphCheck::fail("blow-up changed the rank");
  return GraphCheck::pass();
}

GraphCheck chkReduceTrace(const SignedGraph& g) {
  ReductionTrace tr = reduce(g);
  if (!(tr.initial == g)) return GraphCheck::fail("trace does not start at the input");
  const int eta = nullity(g);
  SignedGraph cur = g;
  for (const auto& step : tr.steps) {
    if (step.etaBefore != nullity(cur) || step.etaBefore != eta || step.etaAfter != eta)
      return GraphCheck::fail("a reduction step changed the nullity");
    SignedGraph next = applyStep(cur, step);
    if (next.order() > cur.order() - 2)
      return GraphCheck::fail("a reduction step failed to shrink the graph");
    cur = std::move(next);
  }
  if (!(cur == tr.reduced)) return GraphCheck::fail("replaying the steps misses the reduced graph");
  if (!reduce(tr.reduced).steps.empty())
    return GraphCheck::fail("the reduced graph still admits a reduction");
  const std::string text = serializeTrace(tr);
  if (static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) != tr.steps.size())
    return GraphCheck::fail("trace serialization line count is off");
  return GraphCheck::pass();
}

GraphCheck chkUpperBound(const SignedGraph& g) {
  for (const auto& c : components(g))
    if (c.graph.order() < 2) return GraphCheck::skip();
  const BoundVerdict v = bound(g);
  const int c = cyclomaticNumber(g);
  const int p = pendantCount(g);
  int expected;
  BoundCase expectedCase;
  if (p >= 1) {
    expected = 2 * c + p - 1;
    expectedCase = BoundCase::PendantsPresent;
  } else if (cycleDisjoint(g)) {
    expected = 2 * c;
    expectedCase = BoundCase::LeafFreeCycleDisjoint;
  } else {
    expected = 2 * c - 1;
    expectedCase = BoundCase::LeafFreeSharedCycles;
  }
  if (v.caseKind != expectedCase || v.bound != expected)
    return GraphCheck::fail("bound case or value disagrees with recomputation");
  if (v.eta != nullity(g) || v.slack != v.bound - v.eta)
    return GraphCheck::fail("bound verdict bookkeeping is wrong");
  if (v.eta > v.bound) return GraphCheck::fail("nullity exceeds the upper bound");
  return GraphCheck::pass();
}

GraphCheck chkCycleUnionIff(const SignedGraph& g) {
  for (const auto& c : components(g))
    if (c.graph.order() < 2) return GraphCheck::skip();
  if (pendantCount(g) != 0 || !cycleDisjoint(g)) return GraphCheck::skip();
  const bool extremal = nullity(g) == 2 * cyclomaticNumber(g);
  if (extremal != recognizeCycleUnion(g))
    return GraphCheck::fail("equality at the leaf-free disjoint bound does not match the "
                            "cycle-union form");
  return GraphCheck::pass();
}

GraphCheck chkOneDeficientFormsIff(const SignedGraph& g) {
  if (g.order() < 2 || componentCount(g) != 1) return GraphCheck::skip();
  const int c = cyclomaticNumber(g);
  const int p = pendantCount(g);
  const int eta = nullity(g);
  if (p >= 1 && c == 0) {
    const bool extremal = eta == p - 1;
    if (extremal != isOneDeficientTree(g).first)
      return GraphCheck::fail("tree extremality does not match the deficiency test");
    return GraphCheck::pass();
  }
  if (p >= 1 && c >= 1) {
    const bool extremal = eta == 2 * c + p - 1;
    const bool matched = recognizeOneDeficientForms(g).form != ExtremalForm::None;
    if (extremal != matched)
      return GraphCheck::fail("equality at the pendant bound does not match the shape forms");
    return GraphCheck::pass();
  }
  if (p == 0 && c == 2) {
    const bool extremal = eta == 3;
    const bool matched = recognizeBicyclicExtremal(g).form != ExtremalForm::None;
    if (extremal != matched)
      return GraphCheck::fail("leaf-free bicyclic extremality does not match the shape forms");
    // The general recognizer must agree with the bicyclic specialization.
    if (matched != (recognizeOneDeficientForms(g).form != ExtremalForm::None))
      return GraphCheck::fail("bicyclic and general form recognizers disagree");
    return GraphCheck::pass();
  }
  if (p == 0 && c >= 3) {
    const bool extremal = eta == 2 * c - 1;
    const bool matched = recognizeLeafFreeAttachment(g).form != ExtremalForm::None;
    if (extremal != matched)
      return GraphCheck::fail("leaf-free extremality does not match the attachment form");
    return GraphCheck::pass();
  }
  return GraphCheck::skip();
}

GraphCheck chkOneDeficientCyclesAllTwo(const SignedGraph& g) {
  if (g.order() < 2 || componentCount(g) != 1) return GraphCheck::skip();
  const int c = cyclomaticNumber(g);
  const int p = pendantCount(g);
  if (p < 1 || c < 1 || nullity(g) != 2 * c + p - 1) return GraphCheck::skip();
  for (const auto& b : blocks(g)) {
    if (b.kind == BlockKind::Complex)
      return GraphCheck::fail("extremal graph contains a non-cycle block with a cycle");
    if (b.kind != BlockKind::Cycle) continue;
    int sign = 1;
    for (const auto& e : b.edges) sign *= e.sign;
    if (cycleNullity(static_cast<int>(b.vertices.size()), sign) != 2)
      return GraphCheck::fail("extremal graph contains a cycle without nullity two");
  }
  return GraphCheck::pass();
}

// ---------------------------------------------------------------------------
// Standalone runners
// ---------------------------------------------------------------------------

class Recorder {
 public:
  Recorder(std::string name, int cap) : cap_(cap) { result_.name = std::move(name); }

  void check(bool ok, const std::string& label, const SignedGraph* g = nullptr) {
    ++result_.checked;
    if (ok) return;
    ++result_.violations;
    if (static_cast<int>(result_.counterexamples.size()) < cap_)
      result_.counterexamples.push_back(g ? label + " :: " + inlineGraph(*g) : label);
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
  int cap_;
};

PropertyResult runPathClosedForm(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int n = 1; n <= 16; ++n) {
    SignedGraph base = pathGraph(n);
    const std::uint64_t masks = 1ULL << (n - 1);
    for (std::uint64_t bits = 0; bits < masks; ++bits) {
      SignedGraph g = withSignMask(base, bits);
      const bool ok = nullity(g) == pathNullity(n) &&
                      (n > 8 || rankByRationalElimination(g) == n - pathNullity(n));
      rec.check(ok, "path closed form fails", &g);
    }
  }
  return rec.take();
}

PropertyResult runCycleClosedForm(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int n = 3; n <= 12; ++n) {
    SignedGraph base = cycleGraph(n, 1);
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      SignedGraph g = withSignMask(base, bits);
      int sign = 1;
      for (const auto& e : g.edges()) sign *= e.sign;
      rec.check(nullity(g) == cycleNullity(n, sign), "cycle closed form fails", &g);
    }
  }
  for (int n = 13; n <= 16; ++n)
    for (int sign : {1, -1}) {
      SignedGraph g = cycleGraph(n, sign);
      rec.check(nullity(g) == cycleNullity(n, sign), "cycle closed form fails", &g);
    }
  return rec.take();
}

PropertyResult runTreeNullityVsRank(const std::string& name, std::uint64_t seed, int cap) {
  Recorder rec(name, cap);
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : enumerateFreeTrees(n)) {
      const int structural = treeNullity(t);
      const std::uint64_t masks = n >= 2 ? (1ULL << (n - 1)) : 1;
      for (std::uint64_t bits = 0; bits < masks; ++bits) {
        SignedGraph g = withSignMask(t, bits);
        rec.check(nullity(g) == structural, "matching-based tree nullity disagrees with rank",
                  &g);
      }
    }
  std::mt19937_64 rng(seed ^ 0xabcdef12345ULL);
  for (int i = 0; i < 40; ++i) {
    SignedGraph a = randomTree(randInt(rng, 1, 5), rng());
    SignedGraph b = randomTree(randInt(rng, 1, 5), rng());
    SignedGraph f = withSignMask(disjointUnion(a, b), rng());
    rec.check(nullity(f) == treeNullity(f), "matching-based forest nullity disagrees with rank",
              &f);
  }
  return rec.take();
}

PropertyResult runCoveredVsEnumeration(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int n = 2; n <= 11; ++n)
    for (const auto& t : enumerateFreeTrees(n))
      for (int u = 0; u < n; ++u)
        rec.check(isCovered(t, u) == coveredByEnumeration(t, u),
                  "matching-based cover test disagrees with enumeration at vertex " +
                      std::to_string(u),
                  &t);
  return rec.take();
}

PropertyResult runOneDeficientRecursion(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int n = 2; n <= 12; ++n)
    for (const auto& t : enumerateFreeTrees(n)) {
      auto [direct, cert] = isOneDeficientTree(t);
      bool ok = direct == cert.recursiveVerdict;
      if (ok && direct)
        for (const auto& step : cert.steps) ok = ok && step.oddParity && step.majorCovered;
      rec.check(ok, "recursive deficiency test disagrees with the direct one", &t);
    }
  return rec.take();
}

PropertyResult runJoinFormulaOnGallery(const std::string& name, std::uint64_t seed, int cap) {
  Recorder rec(name, cap);
  std::vector<SignedGraph> gallery;
  gallery.push_back(SignedGraph(1, {}));
  gallery.push_back(pathGraph(2));
  gallery.push_back(pathGraph(3, {1, -1}));
  gallery.push_back(cycleGraph(3, 1));
  gallery.push_back(cycleGraph(3, -1));
  gallery.push_back(cycleGraph(4, 1));
  gallery.push_back(disjointUnion(pathGraph(2), pathGraph(3)));
  std::mt19937_64 rng(seed ^ 0x5151515151ULL);
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerateFreeTrees(n))
      for (int u = 0; u < n; ++u)
        for (const auto& h : gallery) {
          for (int rep = 0; rep < 2; ++rep) {
            VertexSet targets;
            if (rep == 0) {
              targets = {0};
            } else {
              auto perm = randomPermutation(h.order(), rng);
              targets.assign(perm.begin(), perm.begin() + randInt(rng, 1, h.order()));
              std::sort(targets.begin(), targets.end());
            }
            SignedGraph j = treeJoin(t, u, h, targets);
            int expected;
            if (isCovered(t, u)) {
              expected = treeNullity(t) + nullity(h);
            } else {
              VertexSet rest;
              for (int v = 0; v < n; ++v)
                if (v != u) rest.push_back(v);
              expected = treeNullity(t) - 1 + nullity(deleteVertices(j, rest).graph);
            }
            rec.check(nullity(j) == expected, "join nullity formula fails", &j);
          }
        }
  return rec.take();
}

PropertyResult runTreeJoinFormulaRandom(const std::string& name, std::uint64_t seed, int cap) {
  Recorder rec(name, cap);
  std::mt19937_64 rng(seed ^ 0x7272727272ULL);
  const std::array<double, 3> probs{0.3, 0.5, 0.8};
  for (int i = 0; i < 200; ++i) {
    const int nt = randInt(rng, 2, 8);
    SignedGraph t = withSignMask(randomTree(nt, rng()), rng());
    SignedGraph h = randomSigned(randInt(rng, 1, 6), probs[rng() % 3], rng());
    const int u = randInt(rng, 0, nt - 1);
    auto perm = randomPermutation(h.order(), rng);
    VertexSet targets(perm.begin(), perm.begin() + randInt(rng, 1, h.order()));
    std::sort(targets.begin(), targets.end());
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
    rec.check(nullity(j) == expected, "join nullity formula fails", &j);
  }
  return rec.take();
}

PropertyResult runSwitchPreservesNullity(const std::string& name, std::uint64_t seed, int cap) {
  Recorder rec(name, cap);
  std::mt19937_64 rng(seed ^ 0x1badb002ULL);
  const std::array<double, 3> probs{0.3, 0.6, 0.9};
  for (int n = 2; n <= 8; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      SignedGraph g = randomSigned(n, probs[rep], rng());
      const int eta = nullity(g);
      auto fund = fundamentalCycles(g);
      std::vector<int> signs;
      for (const auto& c : fund) signs.push_back(c.sign);
      for (int k = 0; k < 20; ++k) {
        VertexSet u;
        for (int v = 0; v < n; ++v)
          if (rng() & 1) u.push_back(v);
        SignedGraph s = switchSigns(g, u);
        bool ok = nullity(s) == eta;
        auto fundS = fundamentalCycles(s);
        ok = ok && fundS.size() == fund.size();
        for (std::size_t i = 0; ok && i < fundS.size(); ++i)
          ok = ok && fundS[i].sign == signs[i] && fundS[i].vertices == fund[i].vertices;
        rec.check(ok, "switching changed the nullity or a cycle sign", &s);
      }
    }
  return rec.take();
}

PropertyResult runBicyclicIff(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int p = 3; p <= 7; ++p)
    for (int q = p; q <= 7; ++q)
      for (int l = 1; l <= 5; ++l)
        for (int sp : {1, -1})
          for (int sq : {1, -1}) {
            SignedGraph g = infty(p, q, l, sp, sq);
            const bool extremal = nullity(g) == 3;
            const bool matched =
                recognizeBicyclicExtremal(g).form == ExtremalForm::BicyclicExtremal;
            rec.check(extremal == matched, "bicyclic extremality mismatch", &g);
          }
  for (int a = 1; a <= 6; ++a)
    for (int b = std::max(a, 2); b <= 6; ++b)
      for (int c = b; c <= 6; ++c)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            SignedGraph g = theta(a, b, c, s1, s2);
            const bool extremal = nullity(g) == 3;
            const bool matched =
                recognizeBicyclicExtremal(g).form == ExtremalForm::BicyclicExtremal;
            rec.check(extremal == matched, "bicyclic extremality mismatch", &g);
          }
  return rec.take();
}

std::vector<SignedGraph> spiderBases() {
  std::vector<SignedGraph> out;
  for (int k : {3, 4, 5}) {
    std::vector<int> all1(k, 1), all3(k, 3), alt(k);
    for (int i = 0; i < k; ++i) alt[i] = i % 2 ? 3 : 1;
    out.push_back(spider(all1));
    out.push_back(spider(all3));
    out.push_back(spider(alt));
  }
  return out;
}

std::vector<int> leavesOf(const SignedGraph& t) {
  std::vector<int> out;
  auto deg = t.degrees();
  for (int v = 0; v < t.order(); ++v)
    if (deg[v] == 1) out.push_back(v);
  return out;
}

PropertyResult runLeafFreeAttachmentIff(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  const std::vector<std::pair<int, int>> good{{4, 1}, {6, -1}, {8, 1}, {10, -1}};
  auto iffHolds = [&](const SignedGraph& g) {
    const bool extremal = nullity(g) == 2 * cyclomaticNumber(g) - 1;
    const bool matched = recognizeLeafFreeAttachment(g).form != ExtremalForm::None;
    return extremal == matched;
  };
  for (const auto& t : spiderBases()) {
    auto leaves = leavesOf(t);
    std::vector<std::pair<int, int>> specs;
    for (std::size_t i = 0; i < leaves.size(); ++i) specs.push_back(good[i % good.size()]);
    SignedGraph g = form1(t, leaves, specs);
    rec.check(iffHolds(g) && recognizeLeafFreeAttachment(g).form ==
                                 ExtremalForm::LeafFreeFullAttachment,
              "full attachment family member not recognized as extremal", &g);
    specs[0] = {6, 1};  // a nullity-0 cycle poisons the family membership
    SignedGraph bad = attachCycles(t, leaves, specs);
    rec.check(iffHolds(bad), "near-miss with a nullity-0 cycle misclassified", &bad);
  }
  SignedGraph evenSpider = spider({2, 2, 2});
  auto leaves = leavesOf(evenSpider);
  SignedGraph miss = attachCycles(evenSpider, leaves, {{4, 1}, {4, 1}, {4, 1}});
  rec.check(iffHolds(miss), "near-miss with a non-deficient tree misclassified", &miss);
  return rec.take();
}

PropertyResult runExtremalStructureSpotChecks(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  const std::vector<std::pair<int, int>> good{{4, 1}, {6, -1}, {8, 1}, {10, -1}};
  for (const auto& t : spiderBases()) {
    auto leaves = leavesOf(t);
    std::vector<std::pair<int, int>> specs;
    for (std::size_t i = 0; i < leaves.size(); ++i) specs.push_back(good[i % good.size()]);
    SignedGraph g = form1(t, leaves, specs);
    bool ok = nullity(g) == 2 * cyclomaticNumber(g) - 1;
    auto blockList = blocks(g);
    ok = ok && blockList.size() >= 2;  // at least one cut vertex
    // At least one attached cycle must reach the rest of the graph through a
    // path with an odd number of edges.
    bool odd = false;
    auto deg = g.degrees();
    auto adj = g.adjacency();
    for (auto [idx, attach] : pendantCycles(g, blockList)) {
      std::set<int> inBlock(blockList[idx].vertices.begin(), blockList[idx].vertices.end());
      int next = -1;
      for (auto [w, s] : adj[attach]) {
        (void)s;
        if (!inBlock.count(w)) next = w;
      }
      if (next == -1) continue;
      int prev = attach, cur = next, edges = 1, guard = 0;
      while (deg[cur] == 2 && guard++ < g.order()) {
        int w = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
        prev = cur;
        cur = w;
        ++edges;
      }
      odd = odd || edges % 2 == 1;
    }
    rec.check(ok && odd, "extremal attachment family lost its structural features", &g);
  }
  return rec.take();
}

PropertyResult runCoalescenceBounds(const std::string& name, std::uint64_t seed, int cap) {
  Recorder rec(name, cap);
  std::mt19937_64 rng(seed ^ 0xc0a1e5ceULL);
  const std::array<double, 3> probs{0.3, 0.5, 0.8};
  for (int i = 0; i < 150; ++i) {
    SignedGraph h = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
    SignedGraph k = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
    const int v = randInt(rng, 0, h.order() - 1);
    const int u = randInt(rng, 0, k.order() - 1);
    SignedGraph merged = coalesce(h, v, k, u);
    const int cap1 = nullity(k) + nullity(deleteVertices(h, {v}).graph) + 1;
    rec.check(nullity(merged) <= cap1, "identification nullity bound fails", &merged);
    SignedGraph joined = pathJoin(h, v, k, u, randInt(rng, 2, 5));
    const int cap2 = nullity(h) + nullity(k) + 1;
    rec.check(nullity(joined) <= cap2, "path-join nullity bound fails", &joined);
  }
  return rec.take();
}

PropertyResult runAttachmentMultiplicityBounds(const std::string& name, std::uint64_t seed,
                                               int cap) {
  Recorder rec(name, cap);
  std::mt19937_64 rng(seed ^ 0xa77ac4ULL);
  const std::array<double, 3> probs{0.3, 0.5, 0.8};
  std::vector<Rational> lambdas{Rational(0), Rational(1), Rational(-1),
                                Rational(2), Rational(-2), Rational(1) / 2};
  auto signedPath = [&](int m) {
    std::vector<int> signs(m - 1);
    for (int& s : signs) s = rng() & 1 ? -1 : 1;
    return pathGraph(m, signs);
  };
  for (int i = 0; i < 50; ++i) {
    SignedGraph h = randomSigned(randInt(rng, 2, 6), probs[rng() % 3], rng());
    const int v = randInt(rng, 0, h.order() - 1);

    // One pendant path never raises a multiplicity by more than one.
    SignedGraph g1 = coalesce(h, v, signedPath(randInt(rng, 2, 5)), 0);
    // One cycle reached through a path raises it by at most two.
    const int s = randInt(rng, 3, 6);
    const int m = randInt(rng, 1, 4);
    SignedGraph tail = cycleGraph(s, rng() & 1 ? -1 : 1);
    int tailEnd = 0;
    if (m >= 2) {
      tail = coalesce(tail, 0, signedPath(m), 0);
      tailEnd = s + m - 2;
    }
    SignedGraph g2 = coalesce(h, v, tail, tailEnd);
    // A path glued at both ends raises it by at most two.
    std::optional<SignedGraph> g3;
    if (h.order() >= 2) {
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
      g3 = SignedGraph(h.order() + mm - 2, edges);
    }

    for (const auto& lam : lambdas) {
      const int base = multiplicity(h, lam);
      rec.check(multiplicity(g1, lam) <= base + 1, "pendant path multiplicity bound fails", &g1);
      rec.check(multiplicity(g2, lam) <= base + 2, "attached cycle multiplicity bound fails",
                &g2);
      if (g3)
        rec.check(multiplicity(*g3, lam) <= base + 2,
                  "two-point path multiplicity bound fails", &*g3);
    }
  }
  return rec.take();
}

PropertyResult runCycleSignAndNullity(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int n = 3; n <= 16; ++n)
    for (int cls : {1, -1}) {
      SignedGraph g = cycleGraph(n, cls);
      int sign = 1;
      for (const auto& e : g.edges()) sign *= e.sign;
      auto deg = g.degrees();
      bool ok = g.order() == n && static_cast<int>(g.edges().size()) == n && sign == cls &&
                std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }) &&
                nullity(g) == cycleNullity(n, cls);
      rec.check(ok, "cycle builder broke its contract", &g);
    }
  for (int n = 1; n <= 16; ++n) {
    SignedGraph g = pathGraph(n);
    rec.check(g.order() == n && static_cast<int>(g.edges().size()) == n - 1 &&
                  nullity(g) == pathNullity(n),
              "path builder broke its contract", &g);
  }
  return rec.take();
}

PropertyResult runShapeProfiles(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int p = 3; p <= 6; ++p)
    for (int q = 3; q <= 6; ++q)
      for (int l = 1; l <= 4; ++l)
        for (int sp : {1, -1})
          for (int sq : {1, -1}) {
            SignedGraph g = infty(p, q, l, sp, sq);
            bool ok = g.order() == p + q + l - 2 && componentCount(g) == 1 &&
                      cyclomaticNumber(g) == 2 && pendantCount(g) == 0;
            auto shape = matchInfty(g);
            ok = ok && shape.has_value();
            if (ok) {
              std::multiset<std::pair<int, int>> want{{p, sp}, {q, sq}};
              std::multiset<std::pair<int, int>> got{
                  {static_cast<int>(shape->cycleA.size()), shape->signA},
                  {static_cast<int>(shape->cycleB.size()), shape->signB}};
              ok = shape->pathOrder == l && want == got;
            }
            rec.check(ok, "two-cycle shape profile mismatch", &g);
          }
  for (int a = 1; a <= 5; ++a)
    for (int b = std::max(a, 2); b <= 5; ++b)
      for (int c = b; c <= 5; ++c)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            SignedGraph g = theta(a, b, c, s1, s2);
            bool ok = g.order() == a + b + c - 1 && componentCount(g) == 1 &&
                      cyclomaticNumber(g) == 2 && pendantCount(g) == 0;
            auto shape = matchTheta(g);
            ok = ok && shape.has_value();
            if (ok) {
              std::array<int, 3> want{a, b, c};
              std::array<int, 3> got = shape->lengths;
              std::sort(want.begin(), want.end());
              std::sort(got.begin(), got.end());
              std::multiset<int> wantSigns{s1, s2, s1 * s2};
              std::multiset<int> gotSigns{shape->pathSigns[0] * shape->pathSigns[1],
                                          shape->pathSigns[0] * shape->pathSigns[2],
                                          shape->pathSigns[1] * shape->pathSigns[2]};
              ok = want == got && wantSigns == gotSigns;
            }
            rec.check(ok, "three-path shape profile mismatch", &g);
          }
  return rec.take();
}

PropertyResult runForm1OneDeficient(const std::string& name, std::uint64_t seed, int cap) {
  Recorder rec(name, cap);
  const std::vector<std::pair<int, int>> good{{4, 1}, {6, -1}, {8, 1}, {10, -1}, {12, 1}};
  std::mt19937_64 rng(seed ^ 0xf0f0f0f0ULL);
  std::vector<SignedGraph> bases = spiderBases();
  int made = 0, attempts = 0;
  while (made < 120 && attempts < 4000) {
    ++attempts;
    SignedGraph t = bases[rng() % bases.size()];
    if (attempts % 2 == 0) {  // alternate with random one-deficient trees
      SignedGraph cand = randomTree(randInt(rng, 4, 10), rng());
      if (treeNullity(cand) != pendantCount(cand) - 1) continue;
      t = cand;
    }
    auto leaves = leavesOf(t);
    auto perm = randomPermutation(static_cast<int>(leaves.size()), rng);
    const int keep = randInt(rng, 1, static_cast<int>(leaves.size()));
    std::vector<int> picked;
    for (int j = 0; j < keep; ++j) picked.push_back(leaves[perm[j]]);
    std::sort(picked.begin(), picked.end());
    leaves = std::move(picked);
    std::vector<std::pair<int, int>> specs;
    int order = t.order();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      auto spec = good[rng() % good.size()];
      if (order + spec.first - 1 > 20) spec = {4, 1};
      specs.push_back(spec);
      order += spec.first - 1;
    }
    if (order > 20) continue;
    SignedGraph g = form1(t, leaves, specs);
    bool ok = g.order() <= 20 && componentCount(g) == 1 &&
              cyclomaticNumber(g) == static_cast<int>(leaves.size()) && isOneDeficient(g);
    ok = ok && classify(g).form != ExtremalForm::None;
    rec.check(ok, "attachment construction missed extremality", &g);
    ++made;
  }
  return rec.take();
}

PropertyResult runSwitchingClassCoverage(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  for (int n = 2; n <= 5; ++n) {
    auto ke = completeEdges(n);
    for (std::uint64_t mask = 0; mask < (1ULL << ke.size()); ++mask) {
      if (!maskOk(n, mask, ke, Connectivity::Connected)) continue;
      std::vector<int> all, reps;
      forEachSigning(n, mask, ke, SignMode::AllSignings,
                     [&](const SignedGraph& g) { all.push_back(nullity(g)); });
      forEachSigning(n, mask, ke, SignMode::SwitchingClasses, [&](const SignedGraph& g) {
        const int eta = nullity(g);
        for (int copies = 0; copies < (1 << (n - 1)); ++copies) reps.push_back(eta);
      });
      std::sort(all.begin(), all.end());
      std::sort(reps.begin(), reps.end());
      rec.check(all == reps,
                "class representatives times orbit size do not reproduce all signings "
                "(order " +
                    std::to_string(n) + ", mask " + std::to_string(mask) + ")");
    }
  }
  return rec.take();
}

PropertyResult runEnumerationDeterminism(const std::string& name, std::uint64_t, int cap) {
  Recorder rec(name, cap);
  Universe u;
  u.minN = 2;
  u.maxN = 4;
  auto fingerprint = [&]() {
    std::uint64_t h = 14695981039346656037ULL;
    std::uint64_t count = 0;
    enumerateGraphs(u, [&](const SignedGraph& g) {
      h ^= graphHash(g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      ++count;
    });
    return std::pair{h, count};
  };
  auto [h1, c1] = fingerprint();
  auto [h2, c2] = fingerprint();
  rec.check(h1 == h2 && c1 == c2, "two enumerations of the same universe differ");
  rec.check(c1 == countGraphs(u), "enumeration count disagrees with countGraphs");
  Universe r = u;
  r.mode = SignMode::RandomSample;
  r.sampleCount = 50;
  r.seed = 7;
  std::vector<std::string> s1, s2;
  enumerateGraphs(r, [&](const SignedGraph& g) { s1.push_back(serializeGraph(g)); });
  enumerateGraphs(r, [&](const SignedGraph& g) { s2.push_back(serializeGraph(g)); });
  rec.check(s1 == s2 && s1.size() == 50, "random sampling is not reproducible");
  return rec.take();
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

Property perGraphProperty(std::string name, GraphCheck (*fn)(const SignedGraph&)) {
  Property p;
  p.name = std::move(name);
  p.perGraph = true;
  p.checkGraph = fn;
  return p;
}

Property standaloneProperty(std::string name,
                            PropertyResult (*fn)(const std::string&, std::uint64_t, int)) {
  Property p;
  p.name = name;
  p.perGraph = false;
  p.run = [name, fn](std::uint64_t seed, int cap) { return fn(name, seed, cap); };
  return p;
}

}  // namespace

const std::vector<std::string>& propertyManifest() {
  static const std::vector<std::string> names{
      "core.roundtrip",
      "core.components-partition",
      "core.delete-none-identity",
      "linalg.rank-pivot-invariance",
      "linalg.nullity-component-additive",
      "linalg.deletion-interlacing",
      "linalg.path-closed-form",
      "linalg.cycle-closed-form",
      "linalg.multiplicity-at-zero",
      "structure.counting-at-vertex",
      "structure.cycle-deletion-count",
      "structure.cycle-disjoint-bruteforce",
      "structure.cycle-sign-recompute",
      "matching.tree-nullity-vs-rank",
      "matching.covered-vs-enumeration",
      "matching.one-deficient-recursion",
      "matching.join-formula",
      "transforms.switch-preserves-nullity",
      "transforms.pendant-pair-preserves",
      "transforms.p6-preserves",
      "transforms.pendant-cycle-preserves",
      "transforms.blowup-preserves-rank",
      "transforms.reduce-trace",
      "classify.upper-bound",
      "classify.cycle-union-iff",
      "classify.one-deficient-forms-iff",
      "classify.bicyclic-iff",
      "classify.leaf-free-attachment-iff",
      "classify.one-deficient-cycles-all-two",
      "classify.extremal-structure-spot-checks",
      "classify.coalescence-bounds",
      "classify.attachment-multiplicity-bounds",
      "generators.cycle-sign-and-nullity",
      "generators.shape-profiles",
      "generators.form1-one-deficient",
      "generators.tree-join-formula",
      "harness.switching-class-coverage",
      "harness.enumeration-determinism",
  };
  return names;
}

std::vector<Property> buildRegistry() {
  std::vector<Property> props;
  props.push_back(perGraphProperty("core.roundtrip", chkRoundtrip));
  props.push_back(perGraphProperty("core.components-partition", chkComponentsPartition));
  props.push_back(perGraphProperty("core.delete-none-identity", chkDeleteNoneIdentity));
  props.push_back(perGraphProperty("linalg.rank-pivot-invariance", chkRankPivotInvariance));
  props.push_back(
      perGraphProperty("linalg.nullity-component-additive", chkNullityComponentAdditive));
  props.push_back(perGraphProperty("linalg.deletion-interlacing", chkDeletionInterlacing));
  props.push_back(standaloneProperty("linalg.path-closed-form", runPathClosedForm));
  props.push_back(standaloneProperty("linalg.cycle-closed-form", runCycleClosedForm));
  props.push_back(perGraphProperty("linalg.multiplicity-at-zero", chkMultiplicityAtZero));
  props.push_back(perGraphProperty("structure.counting-at-vertex", chkCountingAtVertex));
  props.push_back(perGraphProperty("structure.cycle-deletion-count", chkCycleDeletionCount));
  props.push_back(
      perGraphProperty("structure.cycle-disjoint-bruteforce", chkCycleDisjointBruteforce));
  props.push_back(perGraphProperty("structure.cycle-sign-recompute", chkCycleSignRecompute));
  props.push_back(standaloneProperty("matching.tree-nullity-vs-rank", runTreeNullityVsRank));
  props.push_back(standaloneProperty("matching.covered-vs-enumeration", runCoveredVsEnumeration));
  props.push_back(
      standaloneProperty("matching.one-deficient-recursion", runOneDeficientRecursion));
  props.push_back(standaloneProperty("matching.join-formula", runJoinFormulaOnGallery));
  props.push_back(
      standaloneProperty("transforms.switch-preserves-nullity", runSwitchPreservesNullity));
  props.push_back(perGraphProperty("transforms.pendant-pair-preserves", chkPendantPairPreserves));
  props.push_back(perGraphProperty("transforms.p6-preserves", chkP6Preserves));
  props.push_back(
      perGraphProperty("transforms.pendant-cycle-preserves", chkPendantCyclePreserves));
  props.push_back(perGraphProperty("transforms.blowup-preserves-rank", chkBlowupPreservesRank));
  props.push_back(perGraphProperty("transforms.reduce-trace", chkReduceTrace));
  props.push_back(perGraphProperty("classify.upper-bound", chkUpperBound));
  props.push_back(perGraphProperty("classify.cycle-union-iff", chkCycleUnionIff));
  props.push_back(perGraphProperty("classify.one-deficient-forms-iff", chkOneDeficientFormsIff));
  props.push_back(standaloneProperty("classify.bicyclic-iff", runBicyclicIff));
  props.push_back(
      standaloneProperty("classify.leaf-free-attachment-iff", runLeafFreeAttachmentIff));
  props.push_back(
      perGraphProperty("classify.one-deficient-cycles-all-two", chkOneDeficientCyclesAllTwo));
  props.push_back(standaloneProperty("classify.extremal-structure-spot-checks",
                                     runExtremalStructureSpotChecks));
  props.push_back(standaloneProperty("classify.coalescence-bounds", runCoalescenceBounds));
  props.push_back(standaloneProperty("classify.attachment-multiplicity-bounds",
                                     runAttachmentMultiplicityBounds));
  props.push_back(standaloneProperty("generators.cycle-sign-and-nullity", runCycleSignAndNullity));
  props.push_back(standaloneProperty("generators.shape-profiles", runShapeProfiles));
  props.push_back(standaloneProperty("generators.form1-one-deficient", runForm1OneDeficient));
  props.push_back(standaloneProperty("generators.tree-join-formula", runTreeJoinFormulaRandom));
  props.push_back(
      standaloneProperty("harness.switching-class-coverage", runSwitchingClassCoverage));
  props.push_back(
      standaloneProperty("harness.enumeration-determinism", runEnumerationDeterminism));

  const auto& manifest = propertyManifest();
  if (props.size() != manifest.size())
    throw std::logic_error("property registry size disagrees with the manifest");
  for (std::size_t i = 0; i < props.size(); ++i)
    if (props[i].name != manifest[i])
      throw std::logic_error("property registry entry '" + props[i].name +
                             "' disagrees with manifest entry '" + manifest[i] + "'");
  std::set<std::string> uniq(manifest.begin(), manifest.end());
  if (uniq.size() != manifest.size()) throw std::logic_error("duplicate property names");
  return props;
}

// ---------------------------------------------------------------------------
// Enumeration entry points
// ---------------------------------------------------------------------------

void enumerateGraphs(const Universe& u, const std::function<void(const SignedGraph&)>& yield) {
  validateUniverse(u);
  if (u.mode == SignMode::RandomSample) {
    for (const auto& g : sampleUniverse(u)) yield(g);
    return;
  }
  for (int n = u.minN; n <= u.maxN; ++n) {
    auto ke = completeEdges(n);
    for (std::uint64_t mask = 0; mask < (1ULL << ke.size()); ++mask) {
      if (!maskOk(n, mask, ke, u.connectivity)) continue;
      forEachSigning(n, mask, ke, u.mode, yield);
    }
  }
}

std::uint64_t countGraphs(const Universe& u) {
  validateUniverse(u);
  if (u.mode == SignMode::RandomSample) return static_cast<std::uint64_t>(u.sampleCount);
  std::uint64_t count = 0;
  for (int n = u.minN; n <= u.maxN; ++n) {
    auto ke = completeEdges(n);
    for (std::uint64_t mask = 0; mask < (1ULL << ke.size()); ++mask) {
      if (!maskOk(n, mask, ke, u.connectivity)) continue;
      int m = 0, c = 0;
      std::vector<std::pair<int, int>> present;
      for (std::size_t i = 0; i < ke.size(); ++i)
        if ((mask >> i) & 1) present.push_back(ke[i]);
      m = static_cast<int>(present.size());
      if (u.mode == SignMode::AllSignings) {
        count += 1ULL << m;
      } else {
        auto inTree = spanningForestFlags(n, present);
        c = m - static_cast<int>(std::count(inTree.begin(), inTree.end(), 1));
        count += 1ULL << c;
      }
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Verification driver
// ---------------------------------------------------------------------------

namespace {

struct Partial {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;
};

void applyCheck(const Property& prop, const SignedGraph& g, Partial& part, int cap) {
  GraphCheck check = GraphCheck::pass();
  try {
    check = prop.checkGraph(g);
  } catch (const std::exception& e) {
    check = GraphCheck::fail(std::string("unexpected exception: ") + e.what());
  }
  if (!check.applicable) return;
  ++part.checked;
  if (!check.violation) return;
  ++part.violations;
  if (static_cast<int>(part.counterexamples.size()) < cap)
    part.counterexamples.push_back(*check.violation + " :: " + inlineGraph(g));
}

}  // namespace

VerificationReport verify(const Universe& u, const std::vector<std::string>& selection, int jobs,
                          int counterexampleCap) {
  const auto t0 = std::chrono::steady_clock::now();
  validateUniverse(u);
  auto registry = buildRegistry();

  std::vector<const Property*> selected;
  if (selection.empty()) {
    for (const auto& p : registry) selected.push_back(&p);
  } else {
    std::set<const Property*> chosen;
    for (const auto& token : selection) {
      bool matched = false;
      for (const auto& p : registry) {
        const auto dot = p.name.find('.');
        const bool moduleMatch = p.name.substr(0, dot) == token;
        if (p.name == token || moduleMatch) {
          matched = true;
          chosen.insert(&p);
        }
      }
      if (!matched) throw std::invalid_argument("unknown property selector '" + token + "'");
    }
    for (const auto& p : registry)
      if (chosen.count(&p)) selected.push_back(&p);
  }

  std::vector<const Property*> perGraph, standalone;
  for (const Property* p : selected) (p->perGraph ? perGraph : standalone).push_back(p);

  VerificationReport report;
  report.properties.resize(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) report.properties[i].name = selected[i]->name;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < selected.size(); ++i) slot[selected[i]->name] = i;

  if (!perGraph.empty()) {
    const int cap = counterexampleCap;
    std::vector<std::vector<Partial>> chunkParts;

    if (u.mode == SignMode::RandomSample) {
      auto graphs = sampleUniverse(u);
      const std::size_t chunkSize = 64;
      const std::size_t chunkCount = (graphs.size() + chunkSize - 1) / chunkSize;
      chunkParts.assign(chunkCount, std::vector<Partial>(perGraph.size()));
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          const std::size_t c = next.fetch_add(1);
          if (c >= chunkCount) return;
          const std::size_t lo = c * chunkSize;
          const std::size_t hi = std::min(graphs.size(), lo + chunkSize);
          for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t pi = 0; pi < perGraph.size(); ++pi)
              applyCheck(*perGraph[pi], graphs[i], chunkParts[c][pi], cap);
        }
      };
      const int threadCount = std::max(1, std::min<int>(jobs, static_cast<int>(chunkCount)));
      if (threadCount == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threadCount; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
    } else {
      struct Item {
        int n;
        std::uint64_t mask;
      };
      std::vector<Item> items;
      for (int n = u.minN; n <= u.maxN; ++n) {
        auto ke = completeEdges(n);
        for (std::uint64_t mask = 0; mask < (1ULL << ke.size()); ++mask)
          if (maskOk(n, mask, ke, u.connectivity)) items.push_back({n, mask});
      }
      std::map<int, std::vector<std::pair<int, int>>> keByOrder;
      for (int n = u.minN; n <= u.maxN; ++n) keByOrder[n] = completeEdges(n);
      const std::size_t chunkSize = 64;
      const std::size_t chunkCount = (items.size() + chunkSize - 1) / chunkSize;
      chunkParts.assign(chunkCount, std::vector<Partial>(perGraph.size()));
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          const std::size_t c = next.fetch_add(1);
          if (c >= chunkCount) return;
          const std::size_t lo = c * chunkSize;
          const std::size_t hi = std::min(items.size(), lo + chunkSize);
          for (std::size_t i = lo; i < hi; ++i) {
            const auto& item = items[i];
            forEachSigning(item.n, item.mask, keByOrder[item.n], u.mode,
                           [&](const SignedGraph& g) {
                             for (std::size_t pi = 0; pi < perGraph.size(); ++pi)
                               applyCheck(*perGraph[pi], g, chunkParts[c][pi], cap);
                           });
          }
        }
      };
      const int threadCount = std::max(1, std::min<int>(jobs, static_cast<int>(chunkCount)));
      if (threadCount == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threadCount; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
    }

    // Merge in chunk order so the report is independent of the thread count.
    for (std::size_t pi = 0; pi < perGraph.size(); ++pi) {
      PropertyResult& out = report.properties[slot[perGraph[pi]->name]];
      for (const auto& parts : chunkParts) {
        out.checked += parts[pi].checked;
        out.violations += parts[pi].violations;
        for (const auto& ce : parts[pi].counterexamples)
          if (static_cast<int>(out.counterexamples.size()) < counterexampleCap)
            out.counterexamples.push_back(ce);
      }
    }
  }

  for (const Property* p : standalone) {
    PropertyResult r;
    try {
      r = p->run(u.seed, counterexampleCap);
    } catch (const std::exception& e) {
      ++r.checked;
      ++r.violations;
      r.counterexamples.push_back(std::string("unexpected exception: ") + e.what());
    }
    r.name = p->name;
    report.properties[slot[p->name]] = std::move(r);
  }

  for (const auto& r : report.properties) {
    report.totalChecked += r.checked;
    report.totalViolations += r.violations;
  }
  report.wallSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

std::string VerificationReport::toText(bool includeTiming) const {
  std::ostringstream out;
  for (const auto& r : properties) {
    out << r.name << ": checked " << r.checked << ", violations " << r.violations << "\n";
    for (const auto& ce : r.counterexamples) out << "  counterexample: " << ce << "\n";
  }
  out << "total: properties " << properties.size() << ", checked " << totalChecked
      << ", violations " << totalViolations << "\n";
  if (includeTiming) {
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "wall_seconds " << wallSeconds << "\n";
  }
  return out.str();
}

std::string VerificationReport::toKeyValue() const {
  std::ostringstream out;
  for (const auto& r : properties)
    out << "property " << r.name << ' ' << r.checked << ' ' << r.violations << "\n";
  out << "total_checked " << totalChecked << "\n";
  out << "total_violations " << totalViolations << "\n";
  return out.str();
}

}  // namespace sgt

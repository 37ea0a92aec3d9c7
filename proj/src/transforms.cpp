#include "sgt/transforms.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sgt/exact_rank.hpp"

namespace sgt {

SignedGraph switchSigns(const SignedGraph& g, const VertexSet& u) {
  VertexSet set = normalizeVertexSet(u, g.order());
  std::vector<bool> in(g.order(), false);
  for (int v : set) in[v] = true;
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges)
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph deletePendantPair(const SignedGraph& g, int pendant) {
  if (pendant < 0 || pendant >= g.order()) throw std::out_of_range("vertex id out of range");
  if (g.degree(pendant) != 1) throw std::invalid_argument("vertex is not pendant");
  const int neighbor = g.adjacency()[pendant].front().first;
  return deleteVertices(g, {pendant, neighbor}).graph;
}

SignedGraph contractP6(const SignedGraph& g, const std::array<int, 6>& path) {
  for (int v : path)
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex id out of range");
  if (std::set<int>(path.begin(), path.end()).size() != 6)
    throw std::invalid_argument("path vertices must be distinct");
  int sign = 1;
  for (int i = 0; i < 5; ++i) {
    const int s = g.sign(path[i], path[i + 1]);
    if (s == 0) throw std::invalid_argument("given vertices do not form a path");
    sign *= s;
  }
  for (int i = 1; i <= 4; ++i)
    if (g.degree(path[i]) != 2)
      throw std::invalid_argument("interior path vertex must have degree 2");
  if (g.adjacent(path[0], path[5]))
    throw std::invalid_argument("path endpoints already adjacent");

  auto del = deleteVertices(g, {path[1], path[2], path[3], path[4]});
  std::vector<SignedEdge> edges = del.graph.edges();
  edges.push_back({del.oldToNew[path[0]], del.oldToNew[path[5]], sign});
  return SignedGraph(del.graph.order(), std::move(edges));
}

SignedGraph pendantCycleToC4(const SignedGraph& g, const Cycle& c) {
  const int len = c.length();
  if (len < 3) throw std::invalid_argument("cycle needs at least three vertices");
  for (int v : c.vertices)
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex id out of range");
  if (std::set<int>(c.vertices.begin(), c.vertices.end()).size() !=
      static_cast<std::size_t>(len))
    throw std::invalid_argument("cycle vertices must be distinct");
  int sign = 1;
  for (int i = 0; i < len; ++i) {
    const int s = g.sign(c.vertices[i], c.vertices[(i + 1) % len]);
    if (s == 0) throw std::invalid_argument("given vertices do not form a cycle");
    sign *= s;
  }
  if (sign != c.sign) throw std::invalid_argument("cycle sign does not match the graph");

  auto deg = g.degrees();
  int major = -1, majorCount = 0;
  for (int v : c.vertices) {
    if (deg[v] >= 3) {
      major = v;
      ++majorCount;
    } else if (deg[v] != 2) {
      throw std::invalid_argument("cycle is not pendant");
    }
  }
  if (majorCount != 1) throw std::invalid_argument("cycle is not pendant");
  if (cycleNullity(len, sign) != 2) throw std::invalid_argument("cycle nullity is not 2");

  VertexSet others;
  for (int v : c.vertices)
    if (v != major) others.push_back(v);
  auto del = deleteVertices(g, others);
  const int a = del.oldToNew[major];
  const int base = del.graph.order();
  std::vector<SignedEdge> edges = del.graph.edges();
  edges.push_back({a, base, 1});
  edges.push_back({base, base + 1, 1});
  edges.push_back({base + 1, base + 2, 1});
  edges.push_back({a, base + 2, 1});
  return SignedGraph(base + 3, std::move(edges));
}

SignedGraph blowUp(const SignedGraph& g, const std::vector<int>& multiplicities) {
  if (static_cast<int>(multiplicities.size()) != g.order())
    throw std::invalid_argument("need one multiplicity per vertex");
  std::vector<int> offset(g.order() + 1, 0);
  for (int v = 0; v < g.order(); ++v) {
    if (multiplicities[v] < 1) throw std::invalid_argument("multiplicities must be positive");
    offset[v + 1] = offset[v] + multiplicities[v];
  }
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges())
    for (int i = offset[e.u]; i < offset[e.u + 1]; ++i)
      for (int j = offset[e.v]; j < offset[e.v + 1]; ++j) edges.push_back({i, j, e.sign});
  return SignedGraph(offset.back(), std::move(edges));
}

std::string ruleName(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::PendantPairDelete: return "pendant_pair_delete";
    case ReductionRule::P6Contract: return "p6_contract";
    case ReductionRule::PendantCycleToC4: return "pendant_cycle_to_c4";
    case ReductionRule::Switch: return "switch";
  }
  throw std::logic_error("unknown rule");
}

std::vector<std::array<int, 6>> contractibleP6Segments(const SignedGraph& g) {
  auto adj = g.adjacency();
  auto deg = g.degrees();
  auto other = [&](int v, int avoid) {
    return adj[v][0].first == avoid ? adj[v][1].first : adj[v][0].first;
  };
  std::vector<std::array<int, 6>> out;
  for (int v1 = 0; v1 < g.order(); ++v1) {
    for (auto [v2, sign] : adj[v1]) {
      (void)sign;
      if (deg[v2] != 2) continue;
      std::array<int, 6> p{v1, v2, 0, 0, 0, 0};
      bool ok = true;
      for (int i = 2; i <= 5 && ok; ++i) {
        p[i] = other(p[i - 1], p[i - 2]);
        if (i < 5 && deg[p[i]] != 2) ok = false;
      }
      if (!ok) continue;
      if (p[0] > p[5]) continue;  // the walk from the far end finds the mirror
      std::set<int> uniq(p.begin(), p.end());
      if (uniq.size() != 6) continue;
      if (g.adjacent(p[0], p[5])) continue;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedGraph applyStep(const SignedGraph& g, const ReductionStep& step) {
  switch (step.rule) {
    case ReductionRule::PendantPairDelete: {
      if (step.vertices.size() != 2) throw std::invalid_argument("step needs two vertices");
      if (!g.adjacent(step.vertices[0], step.vertices[1]))
        throw std::invalid_argument("recorded pair is not an edge");
      return deletePendantPair(g, step.vertices[0]);
    }
    case ReductionRule::P6Contract: {
      if (step.vertices.size() != 6) throw std::invalid_argument("step needs six vertices");
      std::array<int, 6> path;
      std::copy(step.vertices.begin(), step.vertices.end(), path.begin());
      return contractP6(g, path);
    }
    case ReductionRule::PendantCycleToC4: {
      Cycle c;
      c.vertices = step.vertices;
      c.sign = 1;
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        c.sign *= g.sign(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
      return pendantCycleToC4(g, c);
    }
    case ReductionRule::Switch: return switchSigns(g, step.vertices);
  }
  throw std::logic_error("unknown rule");
}

namespace {

std::optional<ReductionStep> findPendantPair(const SignedGraph& g) {
  auto deg = g.degrees();
  for (int v = 0; v < g.order(); ++v)
    if (deg[v] == 1) {
      ReductionStep step;
      step.rule = ReductionRule::PendantPairDelete;
      step.vertices = {v, g.adjacency()[v].front().first};
      return step;
    }
  return std::nullopt;
}

std::optional<ReductionStep> findP6(const SignedGraph& g) {
  auto segments = contractibleP6Segments(g);
  if (segments.empty()) return std::nullopt;
  ReductionStep step;
  step.rule = ReductionRule::P6Contract;
  step.vertices.assign(segments.front().begin(), segments.front().end());
  return step;
}

std::optional<ReductionStep> findPendantCycle(const SignedGraph& g) {
  auto blockList = blocks(g);
  auto pend = pendantCycles(g, blockList);
  std::optional<ReductionStep> best;
  int bestAttach = -1;
  for (auto [idx, attach] : pend) {
    const Block& b = blockList[idx];
    const int len = static_cast<int>(b.vertices.size());
    if (len == 4) continue;
    int sign = 1;
    for (const auto& e : b.edges) sign *= e.sign;
    if (cycleNullity(len, sign) != 2) continue;
    if (best && attach >= bestAttach) continue;
    ReductionStep step;
    step.rule = ReductionRule::PendantCycleToC4;
    step.vertices = cycleBlockOrder(b, attach);
    step.etaBefore = step.etaAfter = 0;
    best = std::move(step);
    bestAttach = attach;
  }
  return best;
}

}  // namespace

ReductionTrace reduce(const SignedGraph& g) {
  ReductionTrace trace;
  trace.initial = g;
  SignedGraph cur = g;
  for (;;) {
    std::optional<ReductionStep> step = findPendantPair(cur);
    if (!step) step = findP6(cur);
    if (!step) step = findPendantCycle(cur);
    if (!step) break;
    step->etaBefore = nullity(cur);
    SignedGraph next = applyStep(cur, *step);
    step->etaAfter = nullity(next);
    trace.steps.push_back(std::move(*step));
    cur = std::move(next);
  }
  trace.reduced = std::move(cur);
  return trace;
}

std::string serializeTrace(const ReductionTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << ruleName(step.rule);
    for (int v : step.vertices) out << ' ' << v;
    out << ' ' << step.etaAfter << "\n";
  }
  return out.str();
}

}  // namespace sgt

#include "sgt/signed_graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace sgt {

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("edge sign must be +1 or -1");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v &&
        edges[i - 1].sign != edges[i].sign) {
      throw std::invalid_argument("conflicting signs for edge (" + std::to_string(edges[i].u) +
                                  ", " + std::to_string(edges[i].v) + ")");
    }
  }
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

int SignedGraph::sign(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const SignedEdge& e, const std::pair<int, int>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->sign;
  return 0;
}

int SignedGraph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  int d = 0;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

std::vector<int> SignedGraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::vector<std::pair<int, int>>> SignedGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].emplace_back(e.v, e.sign);
    adj[e.v].emplace_back(e.u, e.sign);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

VertexSet normalizeVertexSet(std::vector<int> ids, int n) {
  for (int v : ids)
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

DeletionResult deleteVertices(const SignedGraph& g, const VertexSet& toRemove) {
  VertexSet removed = normalizeVertexSet(toRemove, g.order());
  std::vector<int> oldToNew(g.order(), -1);
  int next = 0;
  std::size_t r = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (r < removed.size() && removed[r] == v) {
      ++r;
      continue;
    }
    oldToNew[v] = next++;
  }
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges()) {
    int u = oldToNew[e.u], v = oldToNew[e.v];
    if (u >= 0 && v >= 0) edges.push_back({u, v, e.sign});
  }
  return {SignedGraph(next, std::move(edges)), std::move(oldToNew)};
}

std::vector<Component> components(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  auto adj = g.adjacency();
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, sign] : adj[v]) {
        (void)sign;
        if (label[w] == -1) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> originalIds(count);
  std::vector<int> newId(n, -1);
  for (int v = 0; v < n; ++v) {
    newId[v] = static_cast<int>(originalIds[label[v]].size());
    originalIds[label[v]].push_back(v);
  }
  std::vector<std::vector<SignedEdge>> edgeSets(count);
  for (const auto& e : g.edges())
    edgeSets[label[e.u]].push_back({newId[e.u], newId[e.v], e.sign});
  std::vector<Component> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    out.push_back({SignedGraph(static_cast<int>(originalIds[c].size()), std::move(edgeSets[c])),
                   std::move(originalIds[c])});
  }
  return out;
}

SignedGraph parseGraph(std::istream& in) {
  std::string line;
  int lineNo = 0;
  int n = -1;
  std::vector<SignedEdge> edges;
  std::vector<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (tok[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(lineNo) + ": " + what);
    };
    if (tok == "n") {
      if (n != -1) fail("duplicate vertex-count line");
      long long value;
      if (!(ls >> value) || value < 0) fail("expected nonnegative vertex count");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after vertex count");
      n = static_cast<int>(value);
    } else if (tok == "e") {
      if (n == -1) fail("edge before vertex-count line");
      long long u, v;
      std::string s;
      if (!(ls >> u >> v >> s)) fail("expected 'e <u> <v> <+|->'");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after edge");
      if (s != "+" && s != "-") fail("edge sign must be '+' or '-'");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
      if (u == v) fail("loops are not allowed");
      int a = static_cast<int>(u), b = static_cast<int>(v);
      if (a > b) std::swap(a, b);
      if (std::find(seen.begin(), seen.end(), std::pair{a, b}) != seen.end())
        fail("duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      seen.emplace_back(a, b);
      edges.push_back({a, b, s == "+" ? 1 : -1});
    } else {
      fail("unknown line type '" + tok + "'");
    }
  }
  if (n == -1) throw ParseError("missing vertex-count line");
  return SignedGraph(n, std::move(edges));
}

SignedGraph parseGraph(const std::string& text) {
  std::istringstream in(text);
  return parseGraph(in);
}

std::string serializeGraph(const SignedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& e : g.edges())
    out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-') << "\n";
  return out.str();
}

}  // namespace sgt

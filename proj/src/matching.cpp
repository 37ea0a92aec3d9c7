#include "sgt/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgt/structure.hpp"

namespace sgt {

int matchingNumber(const SignedGraph& forest) {
  if (cyclomaticNumber(forest) != 0) throw std::invalid_argument("input has a cycle");
  const int n = forest.order();
  auto adj = forest.adjacency();
  auto deg = forest.degrees();
  std::vector<bool> alive(n, true);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push_back(v);
  int matched = 0;
  for (std::size_t head = 0; head < leaves.size(); ++head) {
    const int v = leaves[head];
    if (!alive[v] || deg[v] != 1) continue;
    int partner = -1;
    for (auto [w, sign] : adj[v]) {
      (void)sign;
      if (alive[w]) {
        partner = w;
        break;
      }
    }
    ++matched;
    alive[v] = alive[partner] = false;
    for (auto [w, sign] : adj[partner]) {
      (void)sign;
      if (!alive[w]) continue;
      if (--deg[w] == 1) leaves.push_back(w);
    }
  }
  return matched;
}

bool isCovered(const SignedGraph& forest, int u) {
  if (u < 0 || u >= forest.order()) throw std::out_of_range("vertex id out of range");
  const int whole = matchingNumber(forest);
  const int without = matchingNumber(deleteVertices(forest, {u}).graph);
  return without == whole - 1;
}

int treeNullity(const SignedGraph& forest) {
  return forest.order() - 2 * matchingNumber(forest);
}

namespace {

/// Pendant path from leaf u to the nearest vertex of degree >= 3,
/// inclusive. Requires such a vertex to exist (leaf count >= 3).
std::vector<int> pathToMajor(const std::vector<std::vector<std::pair<int, int>>>& adj,
                             const std::vector<int>& deg, int leaf) {
  std::vector<int> path{leaf};
  int prev = -1, cur = leaf;
  while (deg[cur] < 3) {
    int next = -1;
    for (auto [w, sign] : adj[cur]) {
      (void)sign;
      if (w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

std::pair<bool, TreeCertificate> isOneDeficientTree(const SignedGraph& tree) {
  if (tree.order() < 2 || componentCount(tree) != 1 || cyclomaticNumber(tree) != 0)
    throw std::invalid_argument("input must be a tree with at least two vertices");

  const bool direct = treeNullity(tree) == pendantCount(tree) - 1;

  TreeCertificate cert;
  SignedGraph t = tree;
  for (;;) {
    auto deg = t.degrees();
    std::vector<int> leaves;
    for (int v = 0; v < t.order(); ++v)
      if (deg[v] == 1) leaves.push_back(v);

    if (leaves.size() == 2) {
      cert.basePathOddOrder = t.order() % 2 == 1;
      cert.recursiveVerdict = cert.basePathOddOrder;
      break;
    }

    auto adj = t.adjacency();
    bool allOdd = true;
    for (int leaf : leaves) {
      auto path = pathToMajor(adj, deg, leaf);
      if ((path.size() - 1) % 2 == 0) allOdd = false;
    }
    if (!allOdd) {
      cert.recursiveVerdict = false;
      break;
    }

    LeafReduction step;
    step.leaf = leaves.front();
    step.path = pathToMajor(adj, deg, step.leaf);
    step.major = step.path.back();
    step.oddParity = true;
    VertexSet removal(step.path.begin(), step.path.end() - 1);
    auto residual = deleteVertices(t, removal);
    step.majorCovered = isCovered(residual.graph, residual.oldToNew[step.major]);
    const bool covered = step.majorCovered;
    cert.steps.push_back(std::move(step));
    if (!covered) {
      cert.recursiveVerdict = false;
      break;
    }
    t = residual.graph;
  }
  return {direct, cert};
}

}  // namespace sgt

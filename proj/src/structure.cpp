#include "sgt/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgt {

int componentCount(const SignedGraph& g) { return static_cast<int>(components(g).size()); }

int cyclomaticNumber(const SignedGraph& g) {
  return g.size() - g.order() + componentCount(g);
}

int pendantCount(const SignedGraph& g) {
  int p = 0;
  for (int d : g.degrees())
    if (d == 1) ++p;
  return p;
}

namespace {

BlockKind kindOf(std::size_t vertexCount, std::size_t edgeCount) {
  if (edgeCount == 1) return BlockKind::Bridge;
  if (edgeCount == vertexCount) return BlockKind::Cycle;
  return BlockKind::Complex;
}

bool isCycleDisjoint(const std::vector<Block>& blockList, int n) {
  std::vector<int> cycleHits(n, 0);
  for (const auto& b : blockList) {
    if (b.kind == BlockKind::Complex) return false;
    if (b.kind == BlockKind::Cycle)
      for (int v : b.vertices)
        if (++cycleHits[v] > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<Block> blocks(const SignedGraph& g) {
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<int> disc(n, -1), low(n, 0), parentOf(n, -1);
  std::vector<std::pair<int, int>> edgeStack;
  std::vector<std::vector<std::pair<int, int>>> rawBlocks;
  int timer = 0;

  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const int v = f.v;
      if (f.next < adj[v].size()) {
        const int w = adj[v][f.next++].first;
        if (disc[w] == -1) {
          parentOf[w] = v;
          disc[w] = low[w] = timer++;
          edgeStack.emplace_back(v, w);
          stack.push_back({w, 0});
        } else if (w != parentOf[v] && disc[w] < disc[v]) {
          edgeStack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        const int u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<std::pair<int, int>> picked;
          while (true) {
            auto e = edgeStack.back();
            edgeStack.pop_back();
            picked.push_back(e);
            if (e == std::pair{u, v}) break;
          }
          rawBlocks.push_back(std::move(picked));
        }
      }
    }
  }

  std::vector<Block> out;
  out.reserve(rawBlocks.size());
  for (auto& raw : rawBlocks) {
    Block b;
    std::vector<int> verts;
    for (auto [u, v] : raw) {
      if (u > v) std::swap(u, v);
      b.edges.push_back({u, v, g.sign(u, v)});
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    b.vertices = std::move(verts);
    b.kind = kindOf(b.vertices.size(), b.edges.size());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return out;
}

bool cycleDisjoint(const SignedGraph& g) { return isCycleDisjoint(blocks(g), g.order()); }

bool liesOnCycle(const SignedGraph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex id out of range");
  for (const auto& b : blocks(g))
    if (b.kind != BlockKind::Bridge &&
        std::binary_search(b.vertices.begin(), b.vertices.end(), v))
      return true;
  return false;
}

StructureSummary summarize(const SignedGraph& g) {
  StructureSummary s;
  s.componentCount = componentCount(g);
  s.cyclomatic = g.size() - g.order() + s.componentCount;
  s.degrees = g.degrees();
  for (int d : s.degrees)
    if (d == 1) ++s.pendantCount;
  s.blocks = blocks(g);
  s.cycleDisjoint = isCycleDisjoint(s.blocks, g.order());
  return s;
}

namespace {

/// Rotate/reflect a cyclic vertex sequence into canonical form: start at the
/// minimal vertex, then the lexicographically smaller of the two directions.
std::vector<int> canonicalCycle(const std::vector<int>& cyc) {
  const int len = static_cast<int>(cyc.size());
  int start = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::vector<int> fwd(len), rev(len);
  for (int i = 0; i < len; ++i) {
    fwd[i] = cyc[(start + i) % len];
    rev[i] = cyc[(start - i + len) % len];
  }
  return std::min(fwd, rev);
}

}  // namespace

std::vector<Cycle> fundamentalCycles(const SignedGraph& g) {
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    queue.push_back(root);
    for (std::size_t head = queue.size() - 1; head < queue.size(); ++head) {
      int v = queue[head];
      for (auto [w, sign] : adj[v]) {
        (void)sign;
        if (depth[w] == -1) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<Cycle> out;
  for (const auto& e : g.edges()) {
    if (parent[e.v] == e.u || parent[e.u] == e.v) continue;  // tree edge
    // Walk both endpoints up to their lowest common ancestor.
    int a = e.u, b = e.v;
    std::vector<int> fromA{a}, fromB{b};
    while (depth[a] > depth[b]) fromA.push_back(a = parent[a]);
    while (depth[b] > depth[a]) fromB.push_back(b = parent[b]);
    while (a != b) {
      fromA.push_back(a = parent[a]);
      fromB.push_back(b = parent[b]);
    }
    // fromA ends at the LCA; append the b-side path in reverse, LCA excluded.
    std::vector<int> cyc = fromA;
    for (auto it = fromB.rbegin() + 1; it != fromB.rend(); ++it) cyc.push_back(*it);
    Cycle c;
    c.vertices = canonicalCycle(cyc);
    c.sign = 1;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      c.sign *= g.sign(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) {
    if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
    return x.vertices < y.vertices;
  });
  return out;
}

std::vector<std::pair<int, int>> pendantCycles(const SignedGraph& g,
                                               const std::vector<Block>& blockList) {
  auto deg = g.degrees();
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < blockList.size(); ++i) {
    if (blockList[i].kind != BlockKind::Cycle) continue;
    int attach = -1, count = 0;
    for (int v : blockList[i].vertices)
      if (deg[v] >= 3) {
        attach = v;
        ++count;
      }
    if (count == 1) out.emplace_back(static_cast<int>(i), attach);
  }
  return out;
}

std::vector<int> cycleBlockOrder(const Block& b, int start) {
  if (b.kind != BlockKind::Cycle) throw std::invalid_argument("block is not a cycle");
  if (!std::binary_search(b.vertices.begin(), b.vertices.end(), start))
    throw std::invalid_argument("start vertex not in block");
  std::vector<int> index(b.vertices.back() + 1, -1);
  for (std::size_t i = 0; i < b.vertices.size(); ++i) index[b.vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> nbr(b.vertices.size());
  for (const auto& e : b.edges) {
    nbr[index[e.u]].push_back(e.v);
    nbr[index[e.v]].push_back(e.u);
  }
  for (auto& row : nbr) std::sort(row.begin(), row.end());
  std::vector<int> order{start};
  int prev = start, cur = nbr[index[start]].front();
  while (cur != start) {
    order.push_back(cur);
    const auto& row = nbr[index[cur]];
    const int next = row[0] == prev ? row[1] : row[0];
    prev = cur;
    cur = next;
  }
  return order;
}

CutVertexStats cutVertexStats(const SignedGraph& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("vertex id out of range");
  if (componentCount(g) != 1) throw std::invalid_argument("graph must be connected");
  CutVertexStats st;
  st.x = x;
  st.d = g.degree(x);
  auto deg = g.degrees();
  auto adj = g.adjacency();
  std::vector<int> degreeTwoNeighbors;
  for (auto [w, sign] : adj[x]) {
    (void)sign;
    if (deg[w] == 2) {
      ++st.m;
      degreeTwoNeighbors.push_back(w);
    }
  }
  auto removed = deleteVertices(g, {x});
  auto parts = components(removed.graph);
  st.s = static_cast<int>(parts.size());
  std::vector<int> partOf(removed.graph.order(), -1);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (int v : parts[c].originalIds) partOf[v] = static_cast<int>(c);
  std::vector<bool> hit(parts.size(), false);
  for (int w : degreeTwoNeighbors) hit[partOf[removed.oldToNew[w]]] = true;
  st.r = static_cast<int>(std::count(hit.begin(), hit.end(), true));
  st.onCycle = liesOnCycle(g, x);
  return st;
}

int pathNullity(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  return n % 2;
}

int cycleNullity(int length, int sign) {
  if (length < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (sign != 1 && sign != -1) throw std::invalid_argument("cycle sign must be +1 or -1");
  const int residue = length % 4;
  if ((sign == 1 && residue == 0) || (sign == -1 && residue == 2)) return 2;
  return 0;
}

}  // namespace sgt

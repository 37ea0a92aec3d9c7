#include "sgt/reference.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace sgt {

int rankByRationalElimination(SquareMatrix<Rational> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    Rational best(0);
    for (Eigen::Index i = row; i < rows; ++i) {
      Rational a = static_cast<Rational>(boost::multiprecision::abs(m(i, col)));
      if (a > best) {
        best = a;
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = static_cast<Rational>(m(i, col) / m(row, col));
      for (Eigen::Index j = col; j < cols; ++j)
        m(i, j) = static_cast<Rational>(m(i, j) - f * m(row, j));
    }
    ++row;
    ++rank;
  }
  return rank;
}

int rankByRationalElimination(const SignedGraph& g) {
  return rankByRationalElimination(adjacencyMatrix<Rational>(g));
}

std::vector<Cycle> allSimpleCycles(const SignedGraph& g) {
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<bool> onPath(n, false);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (auto [w, sign] : adj[v]) {
      (void)sign;
      if (w == start && path.size() >= 3) {
        // Start is minimal on the cycle; keeping second < last picks one of
        // the two traversal directions, so each cycle lands exactly once.
        if (path[1] < path.back()) {
          Cycle c;
          c.vertices = path;
          c.sign = 1;
          for (std::size_t i = 0; i < path.size(); ++i)
            c.sign *= g.sign(path[i], path[(i + 1) % path.size()]);
          out.push_back(std::move(c));
        }
      } else if (w > start && !onPath[w]) {
        path.push_back(w);
        onPath[w] = true;
        dfs(start, w);
        onPath[w] = false;
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    onPath[s] = true;
    dfs(s, s);
    onPath[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<std::vector<SignedEdge>> allMaximumMatchings(const SignedGraph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<SignedEdge>> best;
  std::vector<SignedEdge> current;
  std::vector<bool> used(g.order(), false);
  std::function<void(std::size_t)> search = [&](std::size_t idx) {
    if (idx == edges.size()) {
      if (best.empty() || current.size() > best.front().size()) {
        best.assign(1, current);
      } else if (current.size() == best.front().size()) {
        best.push_back(current);
      }
      return;
    }
    search(idx + 1);
    const auto& e = edges[idx];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      current.push_back(e);
      search(idx + 1);
      current.pop_back();
      used[e.u] = used[e.v] = false;
    }
  };
  search(0);
  for (auto& m : best) std::sort(m.begin(), m.end());
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end()), best.end());
  return best;
}

bool coveredByEnumeration(const SignedGraph& g, int u) {
  for (const auto& m : allMaximumMatchings(g)) {
    bool covers = false;
    for (const auto& e : m)
      if (e.u == u || e.v == u) covers = true;
    if (!covers) return false;
  }
  return true;
}

namespace {

std::string rootedCanon(const std::vector<std::vector<std::pair<int, int>>>& adj, int v,
                        int parent) {
  std::vector<std::string> kids;
  for (auto [w, sign] : adj[v]) {
    (void)sign;
    if (w != parent) kids.push_back(rootedCanon(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

std::string freeTreeCanon(const SignedGraph& t) {
  const int n = t.order();
  if (n == 1) return "()";
  auto adj = t.adjacency();
  auto deg = t.degrees();
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  int remaining = n;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (auto [w, sign] : adj[v]) {
        (void)sign;
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  if (centers.size() == 1) return rootedCanon(adj, centers[0], -1);
  std::string a = rootedCanon(adj, centers[0], centers[1]);
  std::string b = rootedCanon(adj, centers[1], centers[0]);
  return a <= b ? a + "|" + b : b + "|" + a;
}

}  // namespace

std::vector<SignedGraph> enumerateFreeTrees(int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  std::vector<SignedGraph> level{SignedGraph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<SignedGraph> next;
    std::set<std::string> seen;
    for (const auto& t : level) {
      for (int v = 0; v < t.order(); ++v) {
        std::vector<SignedEdge> edges = t.edges();
        edges.push_back({v, t.order(), 1});
        SignedGraph grown(t.order() + 1, std::move(edges));
        if (seen.insert(freeTreeCanon(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace sgt

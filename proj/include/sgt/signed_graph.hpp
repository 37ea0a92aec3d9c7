#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

/// Thrown by parseGraph on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Undirected edge with u < v and sign in {-1, +1}.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Immutable signed graph value: vertex count plus a normalized edge set.
/// Vertices are dense 0-based ids; no loops, no parallel edges.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Normalizes edge orientation to u < v, deduplicates repeated edges and
  /// throws std::invalid_argument on loops, out-of-range ids, or two copies
  /// of the same edge with conflicting signs.
  SignedGraph(int n, std::vector<SignedEdge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return sign(u, v) != 0; }
  /// Edge sign, or 0 when u and v are not adjacent.
  int sign(int u, int v) const;
  int degree(int v) const;
  std::vector<int> degrees() const;

  /// Per-vertex (neighbor, sign) lists, neighbors ascending.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;  // sorted by (u, v)
};

/// Validates that ids are in [0, n); returns them sorted and deduplicated.
VertexSet normalizeVertexSet(std::vector<int> ids, int n);

struct DeletionResult {
  SignedGraph graph;
  /// old id -> new id, -1 for deleted vertices.
  std::vector<int> oldToNew;
};

/// Induced subgraph on V minus the given set, relabeled contiguously.
DeletionResult deleteVertices(const SignedGraph& g, const VertexSet& toRemove);

struct Component {
  SignedGraph graph;
  /// new id -> original id, ascending.
  std::vector<int> originalIds;
};

/// Maximal connected pieces; their vertex sets partition V and edge sets
/// partition E.
std::vector<Component> components(const SignedGraph& g);

/// Text format, line oriented:
///   n <count>
///   e <u> <v> <+|->
/// '#' begins a comment line; blank lines are ignored.
SignedGraph parseGraph(std::istream& in);
SignedGraph parseGraph(const std::string& text);
std::string serializeGraph(const SignedGraph& g);

}  // namespace sgt

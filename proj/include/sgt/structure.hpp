#pragma once

#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

enum class BlockKind {
  Bridge,   // single edge
  Cycle,    // |E| == |V|, one cycle
  Complex,  // |E| > |V|, several cycles sharing edges
};

/// Biconnected component: a maximal set of edges any two of which lie on a
/// common cycle, plus the incident vertices.
struct Block {
  VertexSet vertices;
  std::vector<SignedEdge> edges;  // sorted by (u, v)
  BlockKind kind = BlockKind::Bridge;
};

/// Simple cycle given by its vertices in traversal order.
struct Cycle {
  std::vector<int> vertices;
  int sign = 1;  // product of edge signs around the cycle

  int length() const { return static_cast<int>(vertices.size()); }
};

struct StructureSummary {
  int componentCount = 0;
  int cyclomatic = 0;    // |E| - |V| + components
  int pendantCount = 0;  // vertices of degree 1
  std::vector<int> degrees;
  std::vector<Block> blocks;
  bool cycleDisjoint = false;  // no two cycles share a vertex
};

StructureSummary summarize(const SignedGraph& g);

int componentCount(const SignedGraph& g);
int cyclomaticNumber(const SignedGraph& g);
int pendantCount(const SignedGraph& g);

/// Biconnected components, deterministic: vertices and edges of each block
/// sorted, blocks sorted by their vertex sets.
std::vector<Block> blocks(const SignedGraph& g);

/// True when no two distinct cycles share a vertex, i.e. every block is a
/// bridge or a single cycle and no vertex lies in two cycle blocks.
bool cycleDisjoint(const SignedGraph& g);

/// Whether v lies on some cycle (equivalently: v belongs to a non-bridge
/// block).
bool liesOnCycle(const SignedGraph& g, int v);

/// One fundamental cycle per non-tree edge of a BFS forest (roots and
/// neighbor order by ascending id). Each cycle starts at its minimal vertex
/// and takes the lexicographically smaller direction.
std::vector<Cycle> fundamentalCycles(const SignedGraph& g);

/// Cycle blocks attached to the rest of the graph through exactly one
/// vertex; that vertex has degree >= 3 in g. Returns (block index, vertex).
/// A bare cycle component does not count.
std::vector<std::pair<int, int>> pendantCycles(const SignedGraph& g,
                                               const std::vector<Block>& blockList);

/// Traversal order of a cycle block starting at `start`, heading toward the
/// smaller of its two neighbors.
std::vector<int> cycleBlockOrder(const Block& b, int start);

/// Counting data at a vertex of a connected graph:
///   d: degree of x,
///   m: neighbors of x having degree 2,
///   r: components of g - x that contain such a neighbor,
///   s: number of components of g - x.
struct CutVertexStats {
  int x = 0;
  int d = 0;
  int m = 0;
  int r = 0;
  int s = 0;
  bool onCycle = false;
};

CutVertexStats cutVertexStats(const SignedGraph& g, int x);

/// Closed forms for the two basic families.
int pathNullity(int n);
/// Nullity of a cycle of given length whose edge signs multiply to `sign`.
int cycleNullity(int length, int sign);

}  // namespace sgt

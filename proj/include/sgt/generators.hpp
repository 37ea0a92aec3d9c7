#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

/// Path 0-1-...-(n-1). signs[i] is the sign of edge (i, i+1); empty means
/// all positive.
SignedGraph pathGraph(int n, const std::vector<int>& signs = {});

/// Cycle 0-1-...-(n-1)-0, all edges positive except (0, n-1), which carries
/// signClass -- the canonical representative of that switching class.
SignedGraph cycleGraph(int n, int signClass);

/// Disjoint union of h and k with v (in h) identified with u (in k).
/// h keeps its vertex ids; k's remaining vertices follow in order.
SignedGraph coalesce(const SignedGraph& h, int v, const SignedGraph& k, int u);

/// h and k joined by an all-positive path of order m >= 2 whose endpoints
/// are v (in h) and u (in k). m = 2 is a direct edge.
SignedGraph pathJoin(const SignedGraph& h, int v, const SignedGraph& k, int u, int m);

/// Disjoint union of tree t and graph g plus positive edges from u (in t)
/// to every target (in g).
SignedGraph treeJoin(const SignedGraph& t, int u, const SignedGraph& g,
                     const VertexSet& targets);

/// Two cycles of lengths p and q with the given sign classes, joined by an
/// all-positive path of order l (l = 1: the cycles share one vertex).
SignedGraph infty(int p, int q, int l, int signP, int signQ);

/// Two vertices joined by three internally disjoint all-positive paths of
/// lengths p, q, l (at most one may be 1). The last edge of the p-path
/// carries signPQ and the last edge of the l-path carries signQL, so the
/// p+q and q+l cycles have exactly those sign classes.
SignedGraph theta(int p, int q, int l, int signPQ, int signQL);

/// Cycles with the given (length, signClass) specs coalesced onto distinct
/// leaves of a tree t that satisfies nullity(t) = leafCount(t) - 1. Each
/// spec must describe a nullity-2 cycle.
SignedGraph form1(const SignedGraph& t, const VertexSet& leaves,
                  const std::vector<std::pair<int, int>>& cycleSpecs);

/// Erdos-Renyi-style underlying graph with uniform random signs;
/// deterministic for a fixed seed.
SignedGraph randomSigned(int n, double edgeProb, std::uint64_t seed);

/// Uniform random labeled tree (Prufer decoding), all edges positive;
/// deterministic for a fixed seed.
SignedGraph randomTree(int n, std::uint64_t seed);

/// Flat text form used by the CLI: `family key=value ...`. Graph-valued
/// values name files holding the text graph format.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::string> params;
};

FamilySpec parseFamilySpec(const std::vector<std::string>& tokens);
SignedGraph buildFamily(const FamilySpec& spec);

}  // namespace sgt

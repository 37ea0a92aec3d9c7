#pragma once

#include <vector>

#include "sgt/exact_rank.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/structure.hpp"

namespace sgt {

/// Cross-check oracles, deliberately independent of the production
/// algorithms: different elimination scheme, brute-force enumeration where
/// the fast path uses structure.

/// Rank by ordinary Gaussian elimination over the rationals with
/// largest-absolute-value pivoting (vs the fraction-free integer scheme).
int rankByRationalElimination(const SignedGraph& g);
int rankByRationalElimination(SquareMatrix<Rational> m);

/// Every simple cycle, each in canonical orientation (minimal start vertex,
/// lexicographically smaller direction), sorted. Exponential; small n only.
std::vector<Cycle> allSimpleCycles(const SignedGraph& g);

/// All maximum matchings, each a sorted list of edges. Exponential.
std::vector<std::vector<SignedEdge>> allMaximumMatchings(const SignedGraph& g);

/// Covered-vertex test by enumerating every maximum matching.
bool coveredByEnumeration(const SignedGraph& g, int u);

/// All free (unlabeled) trees with n vertices, one labeled representative
/// per isomorphism class, all edges positive.
std::vector<SignedGraph> enumerateFreeTrees(int n);

}  // namespace sgt

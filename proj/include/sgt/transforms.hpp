#pragma once

#include <array>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/structure.hpp"

namespace sgt {

/// Flip the sign of every edge with exactly one endpoint in U. Spectrum
/// preserving: conjugation by a diagonal +/-1 matrix.
SignedGraph switchSigns(const SignedGraph& g, const VertexSet& u);

/// Delete a pendant vertex together with its unique neighbor. Nullity
/// preserving.
SignedGraph deletePendantPair(const SignedGraph& g, int pendant);

/// Replace a 6-vertex path segment whose four interior vertices have degree
/// exactly 2 by a single new edge between its endpoints, signed with the
/// product of the five replaced edge signs. Nullity preserving. Refuses when
/// the endpoints are already adjacent (the rewrite would need a multi-edge).
SignedGraph contractP6(const SignedGraph& g, const std::array<int, 6>& path);

/// Every segment eligible for contractP6, in canonical orientation (first
/// endpoint smaller than last), sorted lexicographically.
std::vector<std::array<int, 6>> contractibleP6Segments(const SignedGraph& g);

/// Replace a pendant cycle of nullity 2 by an all-positive quadrangle
/// hanging off the same attachment vertex. Nullity preserving. The new
/// quadrangle vertices take the highest ids of the result.
SignedGraph pendantCycleToC4(const SignedGraph& g, const Cycle& c);

/// Replace vertex i by an independent set of multiplicities[i] >= 1 copies;
/// copies are adjacent across classes exactly when the originals were, with
/// the original sign. Rank preserving. Class of vertex i occupies a
/// contiguous id range, classes in original vertex order.
SignedGraph blowUp(const SignedGraph& g, const std::vector<int>& multiplicities);

enum class ReductionRule { PendantPairDelete, P6Contract, PendantCycleToC4, Switch };

std::string ruleName(ReductionRule rule);

struct ReductionStep {
  ReductionRule rule = ReductionRule::Switch;
  /// Pre-step vertex ids: {pendant, neighbor} / the 6-path / the cycle in
  /// traversal order starting at its attachment vertex / the switching set.
  std::vector<int> vertices;
  int etaBefore = 0;
  int etaAfter = 0;
};

struct ReductionTrace {
  SignedGraph initial;
  std::vector<ReductionStep> steps;
  SignedGraph reduced;
};

/// Apply one recorded step to a graph (used for replay).
SignedGraph applyStep(const SignedGraph& g, const ReductionStep& step);

/// Drive the nullity-preserving rewrites to a fixpoint, deterministically:
/// pendant-pair deletion at the lowest-id pendant vertex first, then the
/// lexicographically least eligible 6-path contraction, then the
/// quadrangle rewrite at the pendant nullity-2 cycle (length != 4) with the
/// least attachment vertex. Every applied step shrinks the vertex count.
ReductionTrace reduce(const SignedGraph& g);

/// One line per step: `<rule> <vertices...> <eta>`.
std::string serializeTrace(const ReductionTrace& trace);

}  // namespace sgt

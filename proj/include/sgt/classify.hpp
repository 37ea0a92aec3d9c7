#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/structure.hpp"

namespace sgt {

/// Which branch of the nullity upper bound applies.
enum class BoundCase {
  PendantsPresent,        // p >= 1:              eta <= 2c + p - 1
  LeafFreeCycleDisjoint,  // p = 0, cycles apart: eta <= 2c
  LeafFreeSharedCycles,   // p = 0, cycles meet:  eta <= 2c - 1
};

std::string boundCaseName(BoundCase c);

struct BoundVerdict {
  BoundCase caseKind = BoundCase::PendantsPresent;
  int bound = 0;
  int eta = 0;
  int slack = 0;  // bound - eta; nonnegative when the hypothesis holds
};

/// Evaluate the nullity upper bound. Requires every component to have at
/// least two vertices (throws std::invalid_argument otherwise).
BoundVerdict bound(const SignedGraph& g);

/// eta = 2c + p - 1, the extremal value for connected graphs with a cycle.
bool isOneDeficient(const SignedGraph& g);
/// eta <= 2c + p - 2.
bool isTwoPlusDeficient(const SignedGraph& g);

/// Two cycles joined by a path (shared vertex when pathOrder == 1).
struct InftyShape {
  std::vector<int> cycleA, cycleB;  // traversal order, attachment first
  int signA = 1, signB = 1;
  std::vector<int> path;  // connecting path, cycleA attachment ... cycleB attachment
  int pathOrder = 1;      // vertex count of the path; 1 = shared vertex
};

/// Two branch vertices joined by three internally disjoint paths.
struct ThetaShape {
  int u = -1, v = -1;                      // the degree-3 vertices, u < v
  std::array<std::vector<int>, 3> paths;   // each u ... v inclusive
  std::array<int, 3> lengths{};            // edge counts, sorted with paths
  std::array<int, 3> pathSigns{};          // edge-sign products per path
};

/// Shape matchers; nullopt when the graph is not of that shape.
std::optional<InftyShape> matchInfty(const SignedGraph& g);
std::optional<ThetaShape> matchTheta(const SignedGraph& g);

enum class ExtremalForm {
  None,
  CycleUnion,              // disjoint nullity-2 cycles (eta = 2c + p)
  TreeWithCycleLeaves,     // nullity-2 cycles on leaves of a deficient tree
  InftySharedVertex,       // two nullity-2 cycles sharing one vertex
  Theta,                   // theta with all three cycles of nullity 2
  LeafFreeFullAttachment,  // leaf-free: a cycle on every leaf of the tree
  BicyclicExtremal,        // leaf-free c=2 graph attaining eta = 3
};

std::string extremalFormName(ExtremalForm f);

struct Witness {
  std::optional<SignedGraph> tree;   // contracted tree T, relabeled
  std::vector<int> treeOriginalIds;  // T id -> original id
  std::vector<int> attachmentLeaves; // original ids carrying a cycle
  std::vector<Cycle> cycles;         // attached / component cycles, original ids
  std::optional<InftyShape> infty;
  std::optional<ThetaShape> theta;
  std::optional<int> thirdCycleNullity;  // theta: the cycle not covered by the test
};

struct ClassificationResult {
  BoundVerdict verdict;
  ExtremalForm form = ExtremalForm::None;
  Witness witness;
};

/// Every component a cycle of nullity 2 (the eta = 2c + p characterization).
/// Requires every component to have >= 2 vertices.
bool recognizeCycleUnion(const SignedGraph& g);

/// Form recognition for connected graphs with c >= 1 attaining
/// eta = 2c + p - 1: nullity-2 cycles hung on leaves of a tree T with
/// eta(T) = p(T) - 1, or two nullity-2 cycles sharing a vertex, or a theta
/// whose three cycles all have nullity 2.
ClassificationResult recognizeOneDeficientForms(const SignedGraph& g);

/// Leaf-free specialization, c >= 3: every leaf of T carries a cycle, so
/// p(T) = c.
ClassificationResult recognizeLeafFreeAttachment(const SignedGraph& g);

/// Leaf-free bicyclic (c = 2) extremal test: infty with both cycles of
/// nullity 2 and odd path order, or theta with all even path lengths whose
/// two tested cycles have nullity 2.
ClassificationResult recognizeBicyclicExtremal(const SignedGraph& g);

/// Combined entry point: cycle union first, then the shape recognizers
/// appropriate to (p, c), otherwise form None.
ClassificationResult classify(const SignedGraph& g);

/// Key-value text block: case, bound, eta, slack, form, witness lines.
std::string serializeClassification(const ClassificationResult& r);

}  // namespace sgt

#include "sgt/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgt/exact_rank.hpp"
#include "sgt/matching.hpp"

namespace sgt {

std::string boundCaseName(BoundCase c) {
  switch (c) {
    case BoundCase::PendantsPresent: return "p_ge_1";
    case BoundCase::LeafFreeCycleDisjoint: return "p0_cycle_disjoint";
    case BoundCase::LeafFreeSharedCycles: return "p0_shared_cycles";
  }
  throw std::logic_error("unknown bound case");
}

std::string extremalFormName(ExtremalForm f) {
  switch (f) {
    case ExtremalForm::None: return "none";
    case ExtremalForm::CycleUnion: return "cycle_union";
    case ExtremalForm::TreeWithCycleLeaves: return "tree_with_cycle_leaves";
    case ExtremalForm::InftySharedVertex: return "infty_shared_vertex";
    case ExtremalForm::Theta: return "theta";
    case ExtremalForm::LeafFreeFullAttachment: return "leaf_free_full_attachment";
    case ExtremalForm::BicyclicExtremal: return "bicyclic_extremal";
  }
  throw std::logic_error("unknown extremal form");
}

namespace {

void requireNoIsolatedVertices(const SignedGraph& g) {
  for (int d : g.degrees())
    if (d == 0) throw std::invalid_argument("every component needs at least two vertices");
}

int blockSign(const Block& b) {
  int s = 1;
  for (const auto& e : b.edges) s *= e.sign;
  return s;
}

}  // namespace

BoundVerdict bound(const SignedGraph& g) {
  requireNoIsolatedVertices(g);
  const int c = cyclomaticNumber(g);
  const int p = pendantCount(g);
  BoundVerdict v;
  if (p >= 1) {
    v.caseKind = BoundCase::PendantsPresent;
    v.bound = 2 * c + p - 1;
  } else if (cycleDisjoint(g)) {
    v.caseKind = BoundCase::LeafFreeCycleDisjoint;
    v.bound = 2 * c;
  } else {
    v.caseKind = BoundCase::LeafFreeSharedCycles;
    v.bound = 2 * c - 1;
  }
  v.eta = nullity(g);
  v.slack = v.bound - v.eta;
  return v;
}

bool isOneDeficient(const SignedGraph& g) {
  return nullity(g) == 2 * cyclomaticNumber(g) + pendantCount(g) - 1;
}

bool isTwoPlusDeficient(const SignedGraph& g) {
  return nullity(g) <= 2 * cyclomaticNumber(g) + pendantCount(g) - 2;
}

bool recognizeCycleUnion(const SignedGraph& g) {
  requireNoIsolatedVertices(g);
  for (const auto& comp : components(g)) {
    const SignedGraph& h = comp.graph;
    if (h.size() != h.order()) return false;
    for (int d : h.degrees())
      if (d != 2) return false;
    int sign = 1;
    for (const auto& e : h.edges()) sign *= e.sign;
    if (cycleNullity(h.order(), sign) != 2) return false;
  }
  return true;
}

std::optional<InftyShape> matchInfty(const SignedGraph& g) {
  if (g.order() == 0 || componentCount(g) != 1) return std::nullopt;
  for (int d : g.degrees())
    if (d <= 1) return std::nullopt;

  auto blockList = blocks(g);
  std::vector<const Block*> cycleBlocksFound;
  int bridgeCount = 0;
  for (const auto& b : blockList) {
    if (b.kind == BlockKind::Complex) return std::nullopt;
    if (b.kind == BlockKind::Cycle)
      cycleBlocksFound.push_back(&b);
    else
      ++bridgeCount;
  }
  if (cycleBlocksFound.size() != 2) return std::nullopt;
  const Block& blockA = *cycleBlocksFound[0];
  const Block& blockB = *cycleBlocksFound[1];
  auto deg = g.degrees();

  InftyShape shape;
  shape.signA = blockSign(blockA);
  shape.signB = blockSign(blockB);

  if (bridgeCount == 0) {
    VertexSet shared;
    std::set_intersection(blockA.vertices.begin(), blockA.vertices.end(),
                          blockB.vertices.begin(), blockB.vertices.end(),
                          std::back_inserter(shared));
    if (shared.size() != 1) return std::nullopt;
    const int x = shared.front();
    if (static_cast<std::size_t>(g.order()) != blockA.vertices.size() + blockB.vertices.size() - 1)
      return std::nullopt;
    shape.cycleA = cycleBlockOrder(blockA, x);
    shape.cycleB = cycleBlockOrder(blockB, x);
    shape.path = {x};
    shape.pathOrder = 1;
    return shape;
  }

  // Separated cycles: each must attach through exactly one degree-3 vertex.
  auto attachmentOf = [&](const Block& b) {
    int attach = -1;
    for (int v : b.vertices) {
      if (deg[v] == 2) continue;
      if (deg[v] != 3 || attach != -1) return -1;
      attach = v;
    }
    return attach;
  };
  const int a = attachmentOf(blockA);
  const int b = attachmentOf(blockB);
  if (a < 0 || b < 0) return std::nullopt;

  std::vector<bool> inCycle(g.order(), false);
  std::vector<bool> inA(g.order(), false);
  for (int v : blockA.vertices) inCycle[v] = inA[v] = true;
  for (int v : blockB.vertices) inCycle[v] = true;

  auto adj = g.adjacency();
  std::vector<int> path{a};
  int prev = a, cur = -1;
  for (auto [w, s] : adj[a]) {
    (void)s;
    if (!inA[w]) cur = w;  // when the cycles are one edge apart, this is b itself
  }
  if (cur < 0) return std::nullopt;
  for (int guard = 0; cur != b; ++guard) {
    if (guard > g.order() || deg[cur] != 2 || inCycle[cur]) return std::nullopt;
    path.push_back(cur);
    const auto& row = adj[cur];
    const int next = row[0].first == prev ? row[1].first : row[0].first;
    prev = cur;
    cur = next;
  }
  path.push_back(b);
  if (blockA.vertices.size() + blockB.vertices.size() + path.size() - 2 !=
      static_cast<std::size_t>(g.order()))
    return std::nullopt;

  shape.cycleA = cycleBlockOrder(blockA, a);
  shape.cycleB = cycleBlockOrder(blockB, b);
  shape.path = std::move(path);
  shape.pathOrder = static_cast<int>(shape.path.size());
  return shape;
}

std::optional<ThetaShape> matchTheta(const SignedGraph& g) {
  if (g.order() == 0 || componentCount(g) != 1) return std::nullopt;
  auto blockList = blocks(g);
  if (blockList.size() != 1 || blockList[0].kind != BlockKind::Complex) return std::nullopt;
  if (blockList[0].vertices.size() != static_cast<std::size_t>(g.order())) return std::nullopt;

  auto deg = g.degrees();
  std::vector<int> branch;
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] == 3)
      branch.push_back(v);
    else if (deg[v] != 2)
      return std::nullopt;
  }
  if (branch.size() != 2) return std::nullopt;

  ThetaShape shape;
  shape.u = branch[0];
  shape.v = branch[1];
  auto adj = g.adjacency();
  std::vector<bool> used(g.order(), false);
  int k = 0;
  for (auto [w, s] : adj[shape.u]) {
    (void)s;
    std::vector<int> path{shape.u};
    int prev = shape.u, cur = w;
    for (int guard = 0; cur != shape.v; ++guard) {
      if (guard > g.order() || deg[cur] != 2 || used[cur]) return std::nullopt;
      used[cur] = true;
      path.push_back(cur);
      const auto& row = adj[cur];
      const int next = row[0].first == prev ? row[1].first : row[0].first;
      prev = cur;
      cur = next;
    }
    path.push_back(shape.v);
    shape.paths[k++] = std::move(path);
  }
  int interior = 0;
  for (const auto& p : shape.paths) interior += static_cast<int>(p.size()) - 2;
  if (interior + 2 != g.order()) return std::nullopt;

  std::sort(shape.paths.begin(), shape.paths.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  for (int i = 0; i < 3; ++i) {
    shape.lengths[i] = static_cast<int>(shape.paths[i].size()) - 1;
    int s = 1;
    for (std::size_t j = 0; j + 1 < shape.paths[i].size(); ++j)
      s *= g.sign(shape.paths[i][j], shape.paths[i][j + 1]);
    shape.pathSigns[i] = s;
  }
  // Simple graphs admit at most one direct u-v edge.
  if (shape.lengths[0] == 1 && shape.lengths[1] == 1) return std::nullopt;
  return shape;
}

namespace {

Cycle cycleFromBlock(const Block& b, int start) {
  Cycle c;
  c.vertices = cycleBlockOrder(b, start);
  c.sign = blockSign(b);
  return c;
}

/// Shape test for the tree-with-cycle-leaves form: every cycle block is a
/// pendant nullity-2 cycle hanging on its own leaf of the residual tree T,
/// and T itself satisfies eta(T) = p(T) - 1.
std::optional<Witness> matchTreeWithCycleLeaves(const SignedGraph& g) {
  auto blockList = blocks(g);
  int cycleBlockCount = 0;
  for (const auto& b : blockList) {
    if (b.kind == BlockKind::Complex) return std::nullopt;
    if (b.kind == BlockKind::Cycle) ++cycleBlockCount;
  }
  auto pend = pendantCycles(g, blockList);
  if (cycleBlockCount < 1 || static_cast<int>(pend.size()) != cycleBlockCount)
    return std::nullopt;

  std::vector<int> majors;
  for (auto [idx, attach] : pend) majors.push_back(attach);
  std::vector<int> uniq = majors;
  std::sort(uniq.begin(), uniq.end());
  if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return std::nullopt;

  Witness w;
  VertexSet removal;
  for (auto [idx, attach] : pend) {
    const Block& b = blockList[idx];
    const int sign = blockSign(b);
    if (cycleNullity(static_cast<int>(b.vertices.size()), sign) != 2) return std::nullopt;
    w.cycles.push_back(cycleFromBlock(b, attach));
    for (int v : b.vertices)
      if (v != attach) removal.push_back(v);
  }

  auto del = deleteVertices(g, removal);
  const SignedGraph& tree = del.graph;
  if (tree.order() < 2 || componentCount(tree) != 1 || cyclomaticNumber(tree) != 0)
    return std::nullopt;
  auto tdeg = tree.degrees();
  for (int m : majors)
    if (tdeg[del.oldToNew[m]] != 1) return std::nullopt;
  if (!isOneDeficientTree(tree).first) return std::nullopt;

  w.tree = tree;
  w.treeOriginalIds.assign(tree.order(), -1);
  for (int v = 0; v < g.order(); ++v)
    if (del.oldToNew[v] >= 0) w.treeOriginalIds[del.oldToNew[v]] = v;
  w.attachmentLeaves = uniq;
  return w;
}

}  // namespace

ClassificationResult recognizeOneDeficientForms(const SignedGraph& g) {
  if (componentCount(g) != 1) throw std::invalid_argument("graph must be connected");
  if (cyclomaticNumber(g) < 1) throw std::invalid_argument("graph must contain a cycle");
  ClassificationResult r;
  r.verdict = bound(g);

  if (auto shape = matchInfty(g); shape && shape->pathOrder == 1) {
    const int lenA = static_cast<int>(shape->cycleA.size());
    const int lenB = static_cast<int>(shape->cycleB.size());
    if (cycleNullity(lenA, shape->signA) == 2 && cycleNullity(lenB, shape->signB) == 2) {
      r.form = ExtremalForm::InftySharedVertex;
      r.witness.infty = std::move(shape);
      return r;
    }
  }

  if (auto shape = matchTheta(g)) {
    const auto& len = shape->lengths;
    const auto& sgn = shape->pathSigns;
    const bool allTwo = cycleNullity(len[0] + len[1], sgn[0] * sgn[1]) == 2 &&
                        cycleNullity(len[1] + len[2], sgn[1] * sgn[2]) == 2 &&
                        cycleNullity(len[0] + len[2], sgn[0] * sgn[2]) == 2;
    if (allTwo) {
      r.form = ExtremalForm::Theta;
      r.witness.theta = std::move(shape);
      return r;
    }
  }

  if (auto w = matchTreeWithCycleLeaves(g)) {
    r.form = ExtremalForm::TreeWithCycleLeaves;
    r.witness = std::move(*w);
    return r;
  }
  return r;
}

ClassificationResult recognizeLeafFreeAttachment(const SignedGraph& g) {
  if (componentCount(g) != 1) throw std::invalid_argument("graph must be connected");
  if (pendantCount(g) != 0) throw std::invalid_argument("graph must be leaf-free");
  if (cyclomaticNumber(g) < 3) throw std::invalid_argument("need at least three independent cycles");
  ClassificationResult r;
  r.verdict = bound(g);
  if (auto w = matchTreeWithCycleLeaves(g)) {
    if (static_cast<int>(w->attachmentLeaves.size()) == pendantCount(*w->tree)) {
      r.form = ExtremalForm::LeafFreeFullAttachment;
      r.witness = std::move(*w);
    }
  }
  return r;
}

ClassificationResult recognizeBicyclicExtremal(const SignedGraph& g) {
  if (componentCount(g) != 1) throw std::invalid_argument("graph must be connected");
  if (pendantCount(g) != 0) throw std::invalid_argument("graph must be leaf-free");
  if (cyclomaticNumber(g) != 2) throw std::invalid_argument("need exactly two independent cycles");
  ClassificationResult r;
  r.verdict = bound(g);

  if (auto shape = matchInfty(g)) {
    const int lenA = static_cast<int>(shape->cycleA.size());
    const int lenB = static_cast<int>(shape->cycleB.size());
    const bool extremal = cycleNullity(lenA, shape->signA) == 2 &&
                          cycleNullity(lenB, shape->signB) == 2 && shape->pathOrder % 2 == 1;
    r.witness.infty = std::move(shape);
    if (extremal) r.form = ExtremalForm::BicyclicExtremal;
    return r;
  }

  if (auto shape = matchTheta(g)) {
    const auto& len = shape->lengths;
    const auto& sgn = shape->pathSigns;
    const bool allEven = len[0] % 2 == 0 && len[1] % 2 == 0 && len[2] % 2 == 0;
    const bool named = cycleNullity(len[0] + len[1], sgn[0] * sgn[1]) == 2 &&
                       cycleNullity(len[1] + len[2], sgn[1] * sgn[2]) == 2;
    r.witness.thirdCycleNullity = cycleNullity(len[0] + len[2], sgn[0] * sgn[2]);
    r.witness.theta = std::move(shape);
    if (allEven && named) r.form = ExtremalForm::BicyclicExtremal;
    return r;
  }
  return r;
}

ClassificationResult classify(const SignedGraph& g) {
  ClassificationResult r;
  r.verdict = bound(g);
  if (recognizeCycleUnion(g)) {
    r.form = ExtremalForm::CycleUnion;
    for (const auto& comp : components(g)) {
      Cycle c;
      c.vertices = comp.originalIds;  // placeholder order fixed below
      auto blockList = blocks(comp.graph);
      c.vertices = cycleBlockOrder(blockList.front(), 0);
      for (int& v : c.vertices) v = comp.originalIds[v];
      c.sign = 1;
      for (const auto& e : comp.graph.edges()) c.sign *= e.sign;
      r.witness.cycles.push_back(std::move(c));
    }
    return r;
  }
  const int c = cyclomaticNumber(g);
  const int p = pendantCount(g);
  if (componentCount(g) != 1 || c < 1) return r;
  if (p == 0 && c == 2) return recognizeBicyclicExtremal(g);
  if (p == 0 && c >= 3) return recognizeLeafFreeAttachment(g);
  return recognizeOneDeficientForms(g);
}

namespace {

void writeVertexList(std::ostream& out, const std::vector<int>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

void writeCycleLine(std::ostream& out, const char* key, const Cycle& c) {
  out << key << ' ' << (c.sign > 0 ? '+' : '-') << ' ';
  writeVertexList(out, c.vertices);
  out << "\n";
}

}  // namespace

std::string serializeClassification(const ClassificationResult& r) {
  std::ostringstream out;
  out << "case " << boundCaseName(r.verdict.caseKind) << "\n";
  out << "bound " << r.verdict.bound << "\n";
  out << "eta " << r.verdict.eta << "\n";
  out << "slack " << r.verdict.slack << "\n";
  out << "form " << extremalFormName(r.form) << "\n";
  const Witness& w = r.witness;
  if (!w.attachmentLeaves.empty()) {
    out << "attachment_leaves ";
    writeVertexList(out, w.attachmentLeaves);
    out << "\n";
  }
  for (const auto& c : w.cycles) writeCycleLine(out, "cycle", c);
  if (w.tree) {
    out << "tree_order " << w.tree->order() << "\n";
    out << "tree_vertices ";
    writeVertexList(out, w.treeOriginalIds);
    out << "\n";
  }
  if (w.infty) {
    out << "infty path_order " << w.infty->pathOrder << "\n";
    Cycle a{w.infty->cycleA, w.infty->signA};
    Cycle b{w.infty->cycleB, w.infty->signB};
    writeCycleLine(out, "infty_cycle_a", a);
    writeCycleLine(out, "infty_cycle_b", b);
    out << "infty_path ";
    writeVertexList(out, w.infty->path);
    out << "\n";
  }
  if (w.theta) {
    out << "theta u " << w.theta->u << " v " << w.theta->v << "\n";
    for (int i = 0; i < 3; ++i) {
      out << "theta_path " << w.theta->lengths[i] << ' '
          << (w.theta->pathSigns[i] > 0 ? '+' : '-') << ' ';
      writeVertexList(out, w.theta->paths[i]);
      out << "\n";
    }
  }
  if (w.thirdCycleNullity) out << "third_cycle_nullity " << *w.thirdCycleNullity << "\n";
  return out.str();
}

}  // namespace sgt

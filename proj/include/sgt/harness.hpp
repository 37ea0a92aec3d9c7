#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

enum class SignMode {
  SwitchingClasses,  // spanning-forest edges positive: one signing per class
  AllSignings,       // every one of the 2^|E| sign vectors
  RandomSample,      // sampleCount seeded random signed graphs
};

enum class Connectivity {
  Connected,
  NoIsolatedVertices,  // every component has >= 2 vertices
};

struct Universe {
  int minN = 2;
  int maxN = 6;
  Connectivity connectivity = Connectivity::Connected;
  SignMode mode = SignMode::SwitchingClasses;
  int sampleCount = 0;        // RandomSample only
  std::uint64_t seed = 1;     // RandomSample and seeded sub-checks
};

/// Stream every signed graph of the universe, deterministically: n
/// ascending, underlying edge mask ascending (edges of K_n in (u,v) order),
/// sign vectors ascending.
void enumerateGraphs(const Universe& u, const std::function<void(const SignedGraph&)>& yield);

std::uint64_t countGraphs(const Universe& u);

/// Outcome of one per-graph check.
struct GraphCheck {
  bool applicable = true;
  std::optional<std::string> violation;

  static GraphCheck skip() { return {false, std::nullopt}; }
  static GraphCheck pass() { return {true, std::nullopt}; }
  static GraphCheck fail(std::string why) { return {true, std::move(why)}; }
};

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;  // capped
};

/// A registered check: either evaluated on every universe graph
/// (checkGraph) or self-driving over its own instance supply (run).
struct Property {
  std::string name;
  bool perGraph = false;
  std::function<GraphCheck(const SignedGraph&)> checkGraph;
  std::function<PropertyResult(std::uint64_t seed, int counterexampleCap)> run;
};

/// Names every check is registered under; the registry constructor verifies
/// itself against this list and throws on any mismatch.
const std::vector<std::string>& propertyManifest();

/// Build all registered properties, in manifest order.
std::vector<Property> buildRegistry();

struct VerificationReport {
  std::vector<PropertyResult> properties;
  std::uint64_t totalChecked = 0;
  std::uint64_t totalViolations = 0;
  double wallSeconds = 0.0;

  bool clean() const { return totalViolations == 0; }
  std::string toText(bool includeTiming = true) const;
  std::string toKeyValue() const;
};

/// Run the selected properties (empty selection = all) over the universe.
/// Per-graph properties sweep the enumerated stream, in parallel when
/// jobs > 1; the merge order is fixed, so reports do not depend on jobs.
VerificationReport verify(const Universe& u, const std::vector<std::string>& selection = {},
                          int jobs = 1, int counterexampleCap = 10);

}  // namespace sgt

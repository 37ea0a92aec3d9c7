#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sgt/classify.hpp"
#include "sgt/exact_rank.hpp"
#include "sgt/generators.hpp"
#include "sgt/harness.hpp"
#include "sgt/structure.hpp"
#include "sgt/transforms.hpp"

namespace {

sgt::SignedGraph readGraph(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return sgt::parseGraph(buf.str());
}

void writeText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

/// Exact rational: `p/q` or a plain integer. Decimal floats are rejected to
/// keep every computation exact.
sgt::Rational parseLambda(const std::string& text) {
  auto bad = [&] {
    throw std::invalid_argument("lambda must be an integer or p/q rational, got '" + text + "'");
  };
  const auto slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits = [&](const std::string& s, bool allowSign) {
    std::size_t i = allowSign && !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) bad();
  sgt::Int d(den);
  if (d == 0) bad();
  return sgt::Rational(sgt::Int(num), d);
}

std::string kindToken(sgt::BlockKind k) {
  switch (k) {
    case sgt::BlockKind::Bridge: return "bridge";
    case sgt::BlockKind::Cycle: return "cycle";
    case sgt::BlockKind::Complex: return "complex";
  }
  return "?";
}

std::string boundText(const sgt::BoundVerdict& v) {
  std::ostringstream out;
  out << "case " << sgt::boundCaseName(v.caseKind) << "\n"
      << "bound " << v.bound << "\n"
      << "eta " << v.eta << "\n"
      << "slack " << v.slack << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-graph nullity toolkit"};
  app.require_subcommand(1);

  std::string nullityFile;
  auto* cmdNullity = app.add_subcommand("nullity", "order, adjacency rank and nullity");
  cmdNullity->add_option("file", nullityFile, "graph file ('-' reads stdin)")->required();

  std::string multFile, multLambda;
  auto* cmdMult =
      app.add_subcommand("multiplicity", "eigenvalue multiplicity at an exact rational");
  cmdMult->add_option("file", multFile, "graph file ('-' reads stdin)")->required();
  cmdMult->add_option("lambda", multLambda, "rational eigenvalue, 'p/q' or integer")->required();

  std::string invFile;
  auto* cmdInv = app.add_subcommand("invariants", "components, cycles, pendants and blocks");
  cmdInv->add_option("file", invFile, "graph file ('-' reads stdin)")->required();

  std::string boundFile;
  auto* cmdBound = app.add_subcommand("bound", "nullity upper bound and slack");
  cmdBound->add_option("file", boundFile, "graph file ('-' reads stdin)")->required();

  std::string classifyFile;
  auto* cmdClassify = app.add_subcommand("classify", "bound case and extremal form");
  cmdClassify->add_option("file", classifyFile, "graph file ('-' reads stdin)")->required();

  std::string reduceFile, reduceOut;
  auto* cmdReduce = app.add_subcommand("reduce", "apply nullity-preserving reductions");
  cmdReduce->add_option("file", reduceFile, "graph file ('-' reads stdin)")->required();
  cmdReduce->add_option("-o,--output", reduceOut, "write the reduced graph here");

  std::vector<std::string> genTokens;
  std::string genOut;
  auto* cmdGen = app.add_subcommand("gen", "emit a graph from a family spec");
  cmdGen->add_option("spec", genTokens, "family name followed by key=value parameters")
      ->required()
      ->expected(-1);
  cmdGen->add_option("-o,--output", genOut, "write the graph here instead of stdout");

  int vMinN = 2, vMaxN = 6, vSamples = 0, vJobs = 1, vCap = 10;
  std::uint64_t vSeed = 1;
  bool vAllSignings = false, vNoIsolated = false, vKeyValue = false;
  std::vector<std::string> vProps;
  auto* cmdVerify = app.add_subcommand("verify", "run the property harness over a universe");
  cmdVerify->add_option("--min-n", vMinN, "smallest order (default 2)");
  cmdVerify->add_option("--max-n", vMaxN, "largest order (default 6)");
  cmdVerify->add_option("--samples", vSamples,
                        "sample this many random graphs instead of enumerating");
  cmdVerify->add_option("--seed", vSeed, "seed for sampling and seeded sub-checks");
  cmdVerify->add_flag("--all-signings", vAllSignings,
                      "enumerate every sign vector instead of switching classes");
  cmdVerify->add_flag("--no-isolated", vNoIsolated,
                      "allow disconnected graphs (components of order >= 2)");
  cmdVerify->add_option("--props", vProps, "comma-separated property names or module prefixes")
      ->delimiter(',');
  cmdVerify->add_option("--jobs", vJobs, "worker threads (0 = hardware)");
  cmdVerify->add_option("--counterexamples", vCap, "counterexamples kept per property");
  cmdVerify->add_flag("--key-value", vKeyValue, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cmdNullity->parsed()) {
      sgt::SignedGraph g = readGraph(nullityFile);
      const int eta = sgt::nullity(g);
      std::cout << "n " << g.order() << "\n"
                << "rank " << g.order() - eta << "\n"
                << "eta " << eta << "\n";
      return 0;
    }
    if (cmdMult->parsed()) {
      sgt::SignedGraph g = readGraph(multFile);
      const sgt::Rational lambda = parseLambda(multLambda);
      std::cout << "lambda " << multLambda << "\n"
                << "multiplicity " << sgt::multiplicity(g, lambda) << "\n";
      return 0;
    }
    if (cmdInv->parsed()) {
      sgt::SignedGraph g = readGraph(invFile);
      const auto s = sgt::summarize(g);
      std::cout << "order " << g.order() << "\n"
                << "size " << g.edges().size() << "\n"
                << "components " << s.componentCount << "\n"
                << "cyclomatic " << s.cyclomatic << "\n"
                << "pendants " << s.pendantCount << "\n";
      std::cout << "degrees";
      for (int d : s.degrees) std::cout << ' ' << d;
      std::cout << "\n";
      std::cout << "cycle_disjoint " << (s.cycleDisjoint ? "true" : "false") << "\n";
      for (const auto& b : s.blocks) {
        std::cout << "block " << kindToken(b.kind);
        for (int v : b.vertices) std::cout << ' ' << v;
        std::cout << "\n";
      }
      return 0;
    }
    if (cmdBound->parsed()) {
      std::cout << boundText(sgt::bound(readGraph(boundFile)));
      return 0;
    }
    if (cmdClassify->parsed()) {
      std::cout << sgt::serializeClassification(sgt::classify(readGraph(classifyFile)));
      return 0;
    }
    if (cmdReduce->parsed()) {
      sgt::SignedGraph g = readGraph(reduceFile);
      const sgt::ReductionTrace trace = sgt::reduce(g);
      std::cout << sgt::serializeTrace(trace);
      if (reduceOut.empty()) {
        std::cout << "# reduced graph\n" << sgt::serializeGraph(trace.reduced);
      } else {
        writeText(reduceOut, sgt::serializeGraph(trace.reduced));
      }
      return 0;
    }
    if (cmdGen->parsed()) {
      const sgt::SignedGraph g = sgt::buildFamily(sgt::parseFamilySpec(genTokens));
      writeText(genOut, sgt::serializeGraph(g));
      return 0;
    }
    if (cmdVerify->parsed()) {
      sgt::Universe u;
      u.minN = vMinN;
      u.maxN = vMaxN;
      u.connectivity =
          vNoIsolated ? sgt::Connectivity::NoIsolatedVertices : sgt::Connectivity::Connected;
      u.mode = sgt::SignMode::SwitchingClasses;
      if (vAllSignings) u.mode = sgt::SignMode::AllSignings;
      if (vSamples > 0) {
        u.mode = sgt::SignMode::RandomSample;
        u.sampleCount = vSamples;
      }
      u.seed = vSeed;
      int jobs = vJobs;
      if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      const sgt::VerificationReport report = sgt::verify(u, vProps, jobs, vCap);
      std::cout << (vKeyValue ? report.toKeyValue() : report.toText());
      return report.clean() ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}

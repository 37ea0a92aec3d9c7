#include "sgt/generators.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sgt/matching.hpp"
#include "sgt/structure.hpp"

namespace sgt {

SignedGraph pathGraph(int n, const std::vector<int>& signs) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  if (!signs.empty() && static_cast<int>(signs.size()) != n - 1)
    throw std::invalid_argument("need one sign per path edge");
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, signs.empty() ? 1 : signs[i]});
  return SignedGraph(n, std::move(edges));
}

SignedGraph cycleGraph(int n, int signClass) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (signClass != 1 && signClass != -1)
    throw std::invalid_argument("sign class must be +1 or -1");
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({0, n - 1, signClass});
  return SignedGraph(n, std::move(edges));
}

SignedGraph coalesce(const SignedGraph& h, int v, const SignedGraph& k, int u) {
  if (v < 0 || v >= h.order() || u < 0 || u >= k.order())
    throw std::out_of_range("vertex id out of range");
  auto mapK = [&](int w) { return w == u ? v : (w < u ? h.order() + w : h.order() + w - 1); };
  std::vector<SignedEdge> edges = h.edges();
  for (const auto& e : k.edges()) edges.push_back({mapK(e.u), mapK(e.v), e.sign});
  return SignedGraph(h.order() + k.order() - 1, std::move(edges));
}

SignedGraph pathJoin(const SignedGraph& h, int v, const SignedGraph& k, int u, int m) {
  if (v < 0 || v >= h.order() || u < 0 || u >= k.order())
    throw std::out_of_range("vertex id out of range");
  if (m < 2) throw std::invalid_argument("connecting path needs order at least 2");
  const int offset = h.order();
  const int base = h.order() + k.order();
  std::vector<SignedEdge> edges = h.edges();
  for (const auto& e : k.edges()) edges.push_back({offset + e.u, offset + e.v, e.sign});
  int prev = v;
  for (int i = 0; i < m - 2; ++i) {
    edges.push_back({prev, base + i, 1});
    prev = base + i;
  }
  edges.push_back({prev, offset + u, 1});
  return SignedGraph(base + m - 2, std::move(edges));
}

SignedGraph treeJoin(const SignedGraph& t, int u, const SignedGraph& g,
                     const VertexSet& targets) {
  if (componentCount(t) != 1 || cyclomaticNumber(t) != 0)
    throw std::invalid_argument("first argument must be a tree");
  if (u < 0 || u >= t.order()) throw std::out_of_range("vertex id out of range");
  VertexSet picked = normalizeVertexSet(targets, g.order());
  if (picked.empty()) throw std::invalid_argument("need at least one target vertex");
  const int offset = t.order();
  std::vector<SignedEdge> edges = t.edges();
  for (const auto& e : g.edges()) edges.push_back({offset + e.u, offset + e.v, e.sign});
  for (int w : picked) edges.push_back({u, offset + w, 1});
  return SignedGraph(offset + g.order(), std::move(edges));
}

SignedGraph infty(int p, int q, int l, int signP, int signQ) {
  if (p < 3 || q < 3) throw std::invalid_argument("cycle lengths must be at least 3");
  if (l < 1) throw std::invalid_argument("connecting path order must be at least 1");
  SignedGraph cp = cycleGraph(p, signP);
  SignedGraph cq = cycleGraph(q, signQ);
  if (l == 1) return coalesce(cp, 0, cq, 0);
  return pathJoin(cp, 0, cq, 0, l);
}

SignedGraph theta(int p, int q, int l, int signPQ, int signQL) {
  if (p < 1 || q < 1 || l < 1) throw std::invalid_argument("path lengths must be at least 1");
  if ((p == 1) + (q == 1) + (l == 1) > 1)
    throw std::invalid_argument("at most one path may have length 1");
  if (signPQ != 1 && signPQ != -1)
    throw std::invalid_argument("sign class must be +1 or -1");
  if (signQL != 1 && signQL != -1)
    throw std::invalid_argument("sign class must be +1 or -1");
  const int u = 0, v = 1;
  std::vector<SignedEdge> edges;
  int next = 2;
  auto addPath = [&](int len, int lastSign) {
    int prev = u;
    for (int i = 1; i < len; ++i) {
      edges.push_back({prev, next, 1});
      prev = next++;
    }
    edges.push_back({prev, v, lastSign});
  };
  addPath(p, signPQ);
  addPath(q, 1);
  addPath(l, signQL);
  return SignedGraph(next, std::move(edges));
}

SignedGraph form1(const SignedGraph& t, const VertexSet& leaves,
                  const std::vector<std::pair<int, int>>& cycleSpecs) {
  if (componentCount(t) != 1 || cyclomaticNumber(t) != 0 || t.order() < 2)
    throw std::invalid_argument("first argument must be a tree with at least two vertices");
  if (treeNullity(t) != pendantCount(t) - 1)
    throw std::invalid_argument("tree nullity must be one less than its leaf count");
  if (normalizeVertexSet(leaves, t.order()).size() != leaves.size())
    throw std::invalid_argument("attachment leaves must be distinct");
  if (leaves.size() != cycleSpecs.size())
    throw std::invalid_argument("need one cycle spec per leaf");
  if (leaves.empty()) throw std::invalid_argument("need at least one attachment");
  auto deg = t.degrees();
  for (int leaf : leaves)
    if (deg[leaf] != 1) throw std::invalid_argument("attachment vertices must be leaves");
  for (auto [len, sign] : cycleSpecs)
    if (cycleNullity(len, sign) != 2)
      throw std::invalid_argument("every attached cycle must have nullity 2");
  SignedGraph out = t;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    out = coalesce(out, leaves[i], cycleGraph(cycleSpecs[i].first, cycleSpecs[i].second), 0);
  return out;
}

SignedGraph randomSigned(int n, double edgeProb, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (edgeProb < 0.0 || edgeProb > 1.0)
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // Threshold comparison on raw draws keeps results identical across
  // platforms (distribution objects are not portable).
  const double scaled = edgeProb * 18446744073709551616.0;  // 2^64
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t draw = rng();
      const bool keep = edgeProb >= 1.0 || static_cast<double>(draw) < scaled;
      if (!keep) continue;
      const int sign = (rng() & 1) ? 1 : -1;
      edges.push_back({u, v, sign});
    }
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph randomTree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return SignedGraph(1, {});
  if (n == 2) return SignedGraph(2, {{0, 1, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> remaining(n, 0);
  for (int x : prufer) ++remaining[x];
  std::vector<SignedEdge> edges;
  // Standard Prufer decoding with an explicit min-leaf scan; n is small.
  std::vector<bool> used(n, false);
  for (int x : prufer) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && remaining[v] == 0) {
        leaf = v;
        break;
      }
    edges.push_back({std::min(leaf, x), std::max(leaf, x), 1});
    used[leaf] = true;
    --remaining[x];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (!used[v] && remaining[v] == 0) last.push_back(v);
  edges.push_back({last[0], last[1], 1});
  return SignedGraph(n, std::move(edges));
}

namespace {

int parseIntValue(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key + "' needs an integer, got '" + value + "'");
  }
}

int parseSignValue(const std::string& key, const std::string& value) {
  if (value == "+") return 1;
  if (value == "-") return -1;
  throw std::invalid_argument("parameter '" + key + "' needs '+' or '-', got '" + value + "'");
}

double parseProbValue(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key + "' needs a number, got '" + value + "'");
  }
}

std::uint64_t parseSeedValue(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key + "' needs an integer, got '" + value + "'");
  }
}

std::vector<std::string> splitList(const std::string& value) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : value) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

SignedGraph loadGraphFile(const std::string& key, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("parameter '" + key + "': cannot open file '" + path + "'");
  return parseGraph(in);
}

class ParamReader {
 public:
  explicit ParamReader(const FamilySpec& spec) : spec_(spec) {}

  const std::string& raw(const std::string& key) {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end())
      throw std::invalid_argument("family '" + spec_.family + "' needs parameter '" + key + "'");
    seen_.push_back(key);
    return it->second;
  }
  int intValue(const std::string& key) { return parseIntValue(key, raw(key)); }
  int signValue(const std::string& key) { return parseSignValue(key, raw(key)); }
  double probValue(const std::string& key) { return parseProbValue(key, raw(key)); }
  std::uint64_t seedValue(const std::string& key) { return parseSeedValue(key, raw(key)); }
  SignedGraph graphValue(const std::string& key) { return loadGraphFile(key, raw(key)); }
  VertexSet idListValue(const std::string& key) {
    VertexSet ids;
    for (const auto& part : splitList(raw(key))) ids.push_back(parseIntValue(key, part));
    return ids;
  }
  bool has(const std::string& key) {
    if (!spec_.params.count(key)) return false;
    seen_.push_back(key);
    return true;
  }

  void rejectUnknown() const {
    for (const auto& [key, value] : spec_.params) {
      (void)value;
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
        throw std::invalid_argument("family '" + spec_.family + "': unknown parameter '" + key +
                                    "'");
    }
  }

 private:
  const FamilySpec& spec_;
  std::vector<std::string> seen_;
};

}  // namespace

FamilySpec parseFamilySpec(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("family spec is empty");
  FamilySpec spec;
  spec.family = tokens.front();
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("expected key=value, got '" + tokens[i] + "'");
    const std::string key = tokens[i].substr(0, eq);
    if (spec.params.count(key)) throw std::invalid_argument("duplicate parameter '" + key + "'");
    spec.params[key] = tokens[i].substr(eq + 1);
  }
  return spec;
}

SignedGraph buildFamily(const FamilySpec& spec) {
  ParamReader p(spec);
  if (spec.family == "path") {
    const int n = p.intValue("n");
    std::vector<int> signs;
    if (p.has("signs")) {
      const std::string& text = p.raw("signs");
      for (char ch : text) {
        if (ch != '+' && ch != '-')
          throw std::invalid_argument("parameter 'signs' needs a string of '+'/'-'");
        signs.push_back(ch == '+' ? 1 : -1);
      }
    }
    p.rejectUnknown();
    return pathGraph(n, signs);
  }
  if (spec.family == "cycle") {
    const int n = p.intValue("n");
    const int s = p.signValue("sign");
    p.rejectUnknown();
    return cycleGraph(n, s);
  }
  auto signPair = [&p](const std::string& first, const std::string& second) {
    if (p.has("signs")) {
      const std::string& text = p.raw("signs");
      if (text.size() != 2 || (text[0] != '+' && text[0] != '-') ||
          (text[1] != '+' && text[1] != '-'))
        throw std::invalid_argument("parameter 'signs' needs exactly two of '+'/'-'");
      return std::pair{text[0] == '+' ? 1 : -1, text[1] == '+' ? 1 : -1};
    }
    return std::pair{p.signValue(first), p.signValue(second)};
  };
  if (spec.family == "infty") {
    const int a = p.intValue("p"), b = p.intValue("q"), l = p.intValue("l");
    const auto [sp, sq] = signPair("sign_p", "sign_q");
    p.rejectUnknown();
    return infty(a, b, l, sp, sq);
  }
  if (spec.family == "theta") {
    const int a = p.intValue("p"), b = p.intValue("q"), l = p.intValue("l");
    const auto [s1, s2] = signPair("sign_pq", "sign_ql");
    p.rejectUnknown();
    return theta(a, b, l, s1, s2);
  }
  if (spec.family == "coalesce") {
    SignedGraph h = p.graphValue("h"), k = p.graphValue("k");
    const int v = p.intValue("v"), u = p.intValue("u");
    p.rejectUnknown();
    return coalesce(h, v, k, u);
  }
  if (spec.family == "path_join") {
    SignedGraph h = p.graphValue("h"), k = p.graphValue("k");
    const int v = p.intValue("v"), u = p.intValue("u"), m = p.intValue("m");
    p.rejectUnknown();
    return pathJoin(h, v, k, u, m);
  }
  if (spec.family == "tree_join") {
    SignedGraph t = p.graphValue("t"), g = p.graphValue("g");
    const int u = p.intValue("u");
    VertexSet targets = p.idListValue("targets");
    p.rejectUnknown();
    return treeJoin(t, u, g, targets);
  }
  if (spec.family == "form1") {
    SignedGraph t = p.graphValue("t");
    VertexSet leaves = p.idListValue("leaves");
    std::vector<std::pair<int, int>> specs;
    for (const auto& part : splitList(p.raw("cycles"))) {
      const auto colon = part.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("parameter 'cycles' needs entries like '4:+'");
      specs.emplace_back(parseIntValue("cycles", part.substr(0, colon)),
                         parseSignValue("cycles", part.substr(colon + 1)));
    }
    p.rejectUnknown();
    return form1(t, leaves, specs);
  }
  if (spec.family == "random") {
    const int n = p.intValue("n");
    const double prob = p.probValue("prob");
    const std::uint64_t seed = p.seedValue("seed");
    p.rejectUnknown();
    return randomSigned(n, prob, seed);
  }
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

}  // namespace sgt

#pragma once

// Quiver text format, hashing, DOT output and the on-disk catalog cache.
//
// Quiver files:
//   # comment
//   type A3 rank 3        (optional header)
//   1 -> 2                (simply-laced arrow, vertices numbered from 1)
//   2 -> 3 [1 2]          (valued arrow: d_ij d_ji, Cartan a_ij = -d_ij)

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "clustercat/algebra.hpp"
#include "clustercat/orbit_functors.hpp"
#include "clustercat/tilting.hpp"

namespace clustercat {

struct ParseOptions {
  bool require_dynkin = true;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] inline void parse_error(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

inline int parse_vertex(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected a vertex number, got '" + tok + "'");
  }
  if (used != tok.size() || v < 1) parse_error(line, "expected a positive vertex number, got '" + tok + "'");
  return v;
}

}  // namespace detail

/// Parses the quiver text format; errors carry line numbers.
inline ValuedQuiver parse_quiver(const std::string& text, const ParseOptions& opt = {}) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::optional<std::string> type;
  std::optional<int> rank;
  struct Edge {
    int from, to, dij, dji;
    std::size_t line;
  };
  std::vector<Edge> edges;
  int max_vertex = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = detail::trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string first;
    ls >> first;
    if (first == "type") {
      if (!edges.empty() || type) detail::parse_error(line, "header must come first and only once");
      std::string label, kw;
      int n = 0;
      if (!(ls >> label >> kw >> n) || kw != "rank" || n < 1) detail::parse_error(line, "expected 'type <LABEL> rank <n>'");
      std::string extra;
      if (ls >> extra) detail::parse_error(line, "unexpected '" + extra + "'");
      type = label;
      rank = n;
      continue;
    }
    std::string arrow, second;
    if (!(ls >> arrow >> second) || arrow != "->") detail::parse_error(line, "expected 'i -> j'");
    Edge e{detail::parse_vertex(first, line), detail::parse_vertex(second, line), 1, 1, line};
    std::string rest;
    std::getline(ls, rest);
    rest = detail::trim(rest);
    if (!rest.empty()) {
      if (rest.front() != '[' || rest.back() != ']') detail::parse_error(line, "expected '[dij dji]'");
      std::istringstream vs(rest.substr(1, rest.size() - 2));
      std::string extra;
      if (!(vs >> e.dij >> e.dji) || (vs >> extra) || e.dij < 1 || e.dji < 1)
        detail::parse_error(line, "valuation must be two positive integers");
    }
    if (e.from == e.to) detail::parse_error(line, "loops are not allowed");
    max_vertex = std::max({max_vertex, e.from, e.to});
    edges.push_back(e);
  }
  const int n = rank.value_or(max_vertex);
  if (n < 1) throw InputError("empty quiver: give at least one arrow or a 'type ... rank n' header");
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  std::vector<Arrow> arrows;
  for (const auto& e : edges) {
    if (e.from > n || e.to > n) detail::parse_error(e.line, "vertex exceeds the declared rank " + std::to_string(n));
    int i = e.from - 1, j = e.to - 1;
    if (a[i][j] != 0) {
      bool reverse = std::any_of(arrows.begin(), arrows.end(), [&](const Arrow& x) { return x.source == j && x.target == i; });
      detail::parse_error(e.line, reverse ? "oriented cycle " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                                                " -> " + std::to_string(e.from)
                                          : "second arrow on the same edge");
    }
    a[i][j] = -e.dij;
    a[j][i] = -e.dji;
    arrows.push_back({i, j});
  }
  CartanData cartan;
  try {
    cartan = CartanData(a);
  } catch (const InputError& err) {
    throw InputError(std::string("invalid valuation: ") + err.what());
  }
  ValuedQuiver q(cartan, arrows);
  if (opt.require_dynkin && !cartan.is_dynkin()) throw InputError("Cartan data is not of Dynkin type");
  if (type && cartan.is_dynkin() && *type != cartan.type_label())
    throw InputError("header says type " + *type + " but the arrows give " + cartan.type_label());
  return q;
}

inline ValuedQuiver read_quiver_file(const std::string& path, const ParseOptions& opt = {}) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str(), opt);
}

/// Canonical text form; parse_quiver(print_quiver(q)) == q.
inline std::string print_quiver(const ValuedQuiver& q) {
  std::ostringstream os;
  if (q.is_dynkin()) os << "type " << q.cartan().type_label() << " rank " << q.rank() << "\n";
  for (const auto& a : q.arrows()) {
    os << a.source + 1 << " -> " << a.target + 1;
    int dij = -q.cartan()(a.source, a.target), dji = -q.cartan()(a.target, a.source);
    if (dij != 1 || dji != 1) os << " [" << dij << " " << dji << "]";
    os << "\n";
  }
  if (!q.is_dynkin() && q.arrows().empty()) os << "# rank " << q.rank() << "\n";
  return os.str();
}

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
inline std::string quiver_hash(const ValuedQuiver& q) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : print_quiver(q)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// DOT output. Node order is vertex order; edges are emitted sorted.

inline std::string dot_quiver(const ValuedQuiver& q, const std::string& name = "quiver") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < q.rank(); ++i) os << "  " << i + 1 << ";\n";
  std::vector<Arrow> arrows = q.arrows();
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) {
    return std::pair(x.source, x.target) < std::pair(y.source, y.target);
  });
  for (const auto& a : arrows) {
    os << "  " << a.source + 1 << " -> " << a.target + 1;
    int dij = -q.cartan()(a.source, a.target), dji = -q.cartan()(a.target, a.source);
    if (dij != 1 || dji != 1) os << " [label=\"" << dij << "," << dji << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string dot_gabriel(const GabrielQuiver& g, const std::string& name = "gabriel") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < g.vertices; ++i) os << "  " << i + 1 << ";\n";
  for (const auto& [k, v] : g.arrows)
    for (std::size_t m = 0; m < v; ++m) os << "  " << k.first + 1 << " -> " << k.second + 1 << ";\n";
  os << "}\n";
  return os.str();
}

/// Undirected graph on ind C with an edge when Ext^1_C vanishes.
inline std::string dot_compatibility(const ClusterCategory& c, const std::string& name = "compatibility") {
  CompatibilityGraph g = compatibility_graph(c);
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t x = 0; x < c.size(); ++x) os << "  n" << x << " [label=\"" << c.object(x).label() << "\"];\n";
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x + 1; y < c.size(); ++y)
      if (g.adjacent[x][y]) os << "  n" << x << " -- n" << y << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string tilting_set_label(const ClusterCategory& c, const TiltingSet& t) {
  std::string s;
  for (std::size_t x : t) s += (s.empty() ? "" : " ") + c.object(x).label();
  return s;
}

/// Tilting sets joined when they share all but one member.
inline std::string dot_exchange(const ClusterCategory& c, const std::vector<TiltingSet>& sets,
                                const std::string& name = "exchange") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < sets.size(); ++i)
    os << "  t" << i << " [label=\"" << tilting_set_label(c, sets[i]) << "\"];\n";
  for (auto [a, b] : exchange_graph(sets)) os << "  t" << a << " -- t" << b << ";\n";
  os << "}\n";
  return os.str();
}

/// Catalog listing stored on disk, keyed by quiver hash.
struct CatalogSummary {
  std::string hash;
  std::vector<RootVec> keys;
  std::vector<int> projective_vertex;  // -1 when not projective
  std::vector<int> injective_vertex;
  std::vector<long> tau;  // -1 when projective
  bool from_cache = false;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["hash"] = hash;
    j["entries"] = nlohmann::json::array();
    for (std::size_t i = 0; i < keys.size(); ++i)
      j["entries"].push_back({{"dims", keys[i].coords},
                              {"projective", projective_vertex[i]},
                              {"injective", injective_vertex[i]},
                              {"tau", tau[i]}});
    return j;
  }
  static CatalogSummary from_json(const nlohmann::json& j) {
    CatalogSummary s;
    s.hash = j.at("hash").get<std::string>();
    for (const auto& e : j.at("entries")) {
      s.keys.emplace_back(e.at("dims").get<std::vector<int>>());
      s.projective_vertex.push_back(e.at("projective").get<int>());
      s.injective_vertex.push_back(e.at("injective").get<int>());
      s.tau.push_back(e.at("tau").get<long>());
    }
    return s;
  }
};

inline CatalogSummary summarize(const Catalog& c) {
  CatalogSummary s;
  s.hash = quiver_hash(*c.quiver());
  for (const auto& e : c.entries()) {
    s.keys.push_back(e.key);
    s.projective_vertex.push_back(e.projective_vertex.value_or(-1));
    s.injective_vertex.push_back(e.injective_vertex.value_or(-1));
    s.tau.push_back(e.tau ? static_cast<long>(*e.tau) : -1);
  }
  return s;
}

/// Reads <dir>/<hash>.json if present and valid, else builds the catalog and
/// writes it through a temporary file and a rename.
inline CatalogSummary cached_catalog(const QuiverPtr& q, const std::optional<std::filesystem::path>& dir) {
  namespace fs = std::filesystem;
  const std::string hash = quiver_hash(*q);
  if (dir) {
    fs::path file = *dir / (hash + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        CatalogSummary s = CatalogSummary::from_json(nlohmann::json::parse(in));
        if (s.hash == hash && s.keys.size() == enumerate_positive_roots(q->cartan()).size()) {
          s.from_cache = true;
          return s;
        }
      } catch (const nlohmann::json::exception&) {
        // rebuild below
      }
    }
  }
  CatalogSummary s = summarize(Catalog(q));
  if (dir) {
    fs::create_directories(*dir);
    fs::path file = *dir / (hash + ".json");
    fs::path tmp = *dir / (hash + ".json.tmp" + std::to_string(static_cast<unsigned long>(::getpid())));
    {
      std::ofstream out(tmp);
      if (!out) throw InputError("cannot write to cache directory " + dir->string());
      out << s.to_json().dump(1) << "\n";
    }
    fs::rename(tmp, file);
  }
  return s;
}

/// Object names: "(1,1,0)", "(1,1,0)[1]", "S2", "P1", "I3", "P2[1]".
inline Label parse_label(const ValuedQuiver& q, const std::string& text) {
  std::string s = detail::trim(text);
  const std::size_t n = q.rank();
  bool shifted = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "[1]") == 0) {
    shifted = true;
    s = s.substr(0, s.size() - 3);
  }
  if (s.empty()) throw InputError("empty object name");
  RootVec dims;
  if (s.front() == '(') {
    if (s.back() != ')') throw InputError("bad object '" + text + "'");
    std::vector<int> coords;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stoi(detail::trim(item), &used));
        if (used != detail::trim(item).size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad dimension vector '" + text + "'");
      }
    }
    if (coords.size() != n) throw InputError("dimension vector '" + text + "' has the wrong length");
    dims = RootVec(coords);
  } else {
    char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
    int v = 0;
    try {
      v = detail::parse_vertex(s.substr(1), 0) - 1;
    } catch (const InputError&) {
      throw InputError("bad object '" + text + "'");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("vertex out of range in '" + text + "'");
    if (kind == 'P' && shifted) return Label::shifted_projective(n, v);
    if (kind == 'P') dims = projective_dimension(q, v);
    else if (kind == 'I') dims = projective_dimension(q, v, true);
    else if (kind == 'S' || kind == 'E') dims = RootVec::simple(n, v);
    else throw InputError("bad object '" + text + "'");
  }
  return shifted ? Label::shifted_module(dims) : Label::module(dims);
}

}  // namespace clustercat

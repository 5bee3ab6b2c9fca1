// clustercat: command-line front end for the cluster-category library.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clustercat/io.hpp"
#include "clustercat/verify.hpp"

using namespace clustercat;
using nlohmann::json;

namespace {

constexpr int schema_version = 1;

struct Options {
  std::string quiver_file;
  std::string type;
  std::string format = "text";
  std::size_t rank_cap = default_rank_cap;
  std::string cache_dir;
  std::vector<std::string> objects;
  int vertex = 0;
  std::string category = "cluster";
  std::string automorphism = "F";
  std::string graph = "quiver";
};

// Text, JSON or DOT output of one command.
struct Output {
  json result = json::object();
  std::ostringstream text;
  std::optional<std::string> dot;
  std::vector<VerificationReport> reports;
};

ValuedQuiver load_quiver(const Options& o) {
  if (!o.quiver_file.empty() && !o.type.empty()) throw InputError("give either --quiver or --type, not both");
  if (!o.quiver_file.empty()) return read_quiver_file(o.quiver_file);
  if (!o.type.empty()) return standard_orientation(cartan_of_type(o.type));
  throw InputError("no quiver: use --quiver FILE or --type LABEL");
}

std::optional<std::filesystem::path> cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return std::filesystem::path(o.cache_dir);
  if (const char* env = std::getenv("CLUSTERCAT_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

int vertex_index(const ValuedQuiver& q, int one_based) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > q.rank())
    throw InputError("--vertex must be between 1 and " + std::to_string(q.rank()));
  return one_based - 1;
}

json arrows_json(const GabrielQuiver& g) {
  json a = json::array();
  for (const auto& [k, v] : g.arrows) a.push_back({{"from", k.first + 1}, {"to", k.second + 1}, {"count", v}});
  return a;
}

std::string arrows_text(const GabrielQuiver& g) {
  std::string s;
  for (const auto& [k, v] : g.arrows)
    for (std::size_t m = 0; m < v; ++m) s += (s.empty() ? "" : ", ") + std::to_string(k.first + 1) + "->" + std::to_string(k.second + 1);
  return s.empty() ? "(none)" : s;
}

std::vector<std::size_t> parse_objects(const ClusterCategory& c, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(index_of(c, parse_label(*c.quiver(), n)));
  return out;
}

void write_matrix(std::ostream& os, const std::vector<std::string>& labels, const std::vector<std::vector<std::size_t>>& m) {
  std::size_t w = 4;
  for (const auto& l : labels) w = std::max(w, l.size() + 1);
  os << std::string(w, ' ');
  for (const auto& l : labels) os << std::setw(static_cast<int>(w)) << l;
  os << "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << std::setw(static_cast<int>(w)) << labels[r];
    for (auto v : m[r]) os << std::setw(static_cast<int>(w)) << v;
    os << "\n";
  }
}

void cmd_roots(const ValuedQuiver& q, Output& out) {
  json pos = json::array(), almost = json::array();
  out.text << "positive roots:";
  for (const auto& r : enumerate_positive_roots(q.cartan())) {
    pos.push_back(r.str());
    out.text << " " << r.str();
  }
  out.text << "\nalmost positive roots:";
  for (const auto& a : almost_positive_roots(q.cartan())) {
    almost.push_back(a.str());
    out.text << " " << a.str();
  }
  out.text << "\n";
  out.result = {{"positive", pos}, {"almost_positive", almost}};
}

void cmd_ind(const ValuedQuiver& q, const Options& o, Output& out) {
  json objs = json::array();
  if (o.category == "root") {
    for (const auto& x : root_domain(q)) {
      objs.push_back({{"object", x.str()}, {"dim", root_dim(x).str()}});
      out.text << x.str() << "  dim " << root_dim(x).str() << "\n";
    }
    out.result = {{"category", "root"}, {"objects", objs}};
    return;
  }
  if (o.category != "cluster") throw InputError("--category must be cluster or root");
  std::optional<CatalogSummary> summary;
  if (q.simply_laced()) summary = cached_catalog(make_quiver(q), cache_dir(o));
  for (const auto& x : cluster_domain(q)) {
    json e = {{"object", x.str()}, {"gamma", gamma(q, x).str()}};
    out.text << x.str() << "  gamma " << gamma(q, x).str();
    if (summary && x.is_module()) {
      auto it = std::find(summary->keys.begin(), summary->keys.end(), x.dims);
      const std::size_t i = static_cast<std::size_t>(it - summary->keys.begin());
      if (summary->projective_vertex[i] >= 0) {
        e["projective"] = summary->projective_vertex[i] + 1;
        out.text << "  P" << summary->projective_vertex[i] + 1;
      }
      if (summary->injective_vertex[i] >= 0) {
        e["injective"] = summary->injective_vertex[i] + 1;
        out.text << "  I" << summary->injective_vertex[i] + 1;
      }
      if (summary->tau[i] >= 0) {
        e["tau"] = summary->keys[static_cast<std::size_t>(summary->tau[i])].str();
        out.text << "  tau " << summary->keys[static_cast<std::size_t>(summary->tau[i])].str();
      }
    }
    out.text << "\n";
    objs.push_back(e);
  }
  out.result = {{"category", "cluster"}, {"objects", objs}};
  if (summary) out.result["catalog_cache"] = summary->from_cache ? "hit" : "miss";
}

void cmd_homs(const ValuedQuiver& q, const Options& o, Output& out) {
  auto qp = make_quiver(q);
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> hom, ext;
  if (o.category == "cluster") {
    ClusterCategory c(qp);
    for (std::size_t x = 0; x < c.size(); ++x) labels.push_back(c.object(x).label());
    for (std::size_t x = 0; x < c.size(); ++x) {
      hom.emplace_back();
      ext.emplace_back();
      for (std::size_t y = 0; y < c.size(); ++y) {
        hom.back().push_back(c.hom(x, y).dim());
        ext.back().push_back(c.ext1(x, y));
      }
    }
  } else if (o.category == "module") {
    Catalog cat(qp);
    for (const auto& e : cat.entries()) labels.push_back(e.key.str());
    for (const auto& x : cat.entries()) {
      hom.emplace_back();
      ext.emplace_back();
      for (const auto& y : cat.entries()) {
        auto he = hom_ext(x.rep, y.rep);
        hom.back().push_back(he.hom.dim());
        ext.back().push_back(he.ext.dim());
      }
    }
  } else if (o.category == "root") {
    RootCategory r(qp);
    for (std::size_t x = 0; x < r.size(); ++x) labels.push_back(r.object(x).str());
    for (std::size_t x = 0; x < r.size(); ++x) {
      hom.emplace_back();
      for (std::size_t y = 0; y < r.size(); ++y) hom.back().push_back(r.hom(x, y));
    }
  } else {
    throw InputError("--category must be cluster, module or root");
  }
  out.result = {{"category", o.category}, {"objects", labels}, {"hom", hom}};
  out.text << "dim Hom (row -> column):\n";
  write_matrix(out.text, labels, hom);
  if (!ext.empty()) {
    out.result["ext1"] = ext;
    out.text << "dim Ext^1:\n";
    write_matrix(out.text, labels, ext);
  }
}

void cmd_tilting(const ValuedQuiver& q, const Options& o, Output& out) {
  ClusterCategory c(make_quiver(q));
  auto sets = enumerate_tilting_sets(c, o.rank_cap);
  json js = json::array();
  out.text << sets.size() << " tilting sets\n";
  for (const auto& t : sets) {
    std::vector<std::string> names;
    for (std::size_t x : t) names.push_back(c.object(x).label());
    js.push_back(names);
    out.text << "  " << tilting_set_label(c, t) << "\n";
  }
  auto edges = exchange_graph(sets);
  out.result = {{"count", sets.size()}, {"sets", js}, {"exchange_edges", edges.size()}};
  out.dot = dot_exchange(c, sets);
}

void cmd_complete(const ValuedQuiver& q, const Options& o, Output& out) {
  ClusterCategory c(make_quiver(q));
  if (q.rank() > o.rank_cap) throw InputError("rank exceeds the cap; raise --rank-cap");
  auto b = parse_objects(c, o.objects);
  auto comp = complete_almost_tilting(c, b);
  json js = json::array();
  for (std::size_t x : comp) {
    js.push_back(c.object(x).label());
    out.text << c.object(x).label() << "\n";
  }
  out.result = {{"completions", js}};
}

void describe_cta(const CtaResult& r, Output& out) {
  json refl = json::array();
  for (int v : r.normalized.reflections) refl.push_back(v + 1);
  json mods = json::array();
  for (const auto& l : r.normalized.labels) mods.push_back(l.str());
  out.result["reflections"] = refl;
  out.result["modules"] = mods;
  out.result["dim_A"] = r.algebra.A.dim();
  out.result["dim_Lambda"] = r.algebra.Lambda.dim();
  out.result["bimodule_dim"] = r.algebra.bimodule_dim;
  out.result["quiver_A"] = arrows_json(r.quiver_A);
  out.result["quiver_Lambda"] = arrows_json(r.quiver_Lambda);
  json extra = json::array();
  for (auto [a, b] : r.extra) extra.push_back({{"from", a + 1}, {"to", b + 1}});
  out.result["extra_arrows"] = extra;
  if (!r.normalized.reflections.empty()) {
    out.text << "reflected at:";
    for (int v : r.normalized.reflections) out.text << " " << v + 1;
    out.text << "\nas modules over\n" << print_quiver(r.normalized.quiver);
  }
  out.text << "dim A = " << r.algebra.A.dim() << "\n"
           << "dim Lambda = " << r.algebra.Lambda.dim() << "\n"
           << "dim D Hom(T, tau^2 T) = " << r.algebra.bimodule_dim << "\n"
           << "quiver of A: " << arrows_text(r.quiver_A) << "\n"
           << "quiver of Lambda: " << arrows_text(r.quiver_Lambda) << "\n";
  if (!r.extra.empty()) {
    out.text << "arrows not in A:";
    for (auto [a, b] : r.extra) out.text << " " << a + 1 << "->" << b + 1;
    out.text << "\n";
  }
  out.dot = dot_gabriel(r.quiver_Lambda, "lambda");
}

void cmd_cta(const ValuedQuiver& q, const Options& o, Output& out) {
  ClusterCategory c(make_quiver(q));
  auto t = parse_objects(c, o.objects);
  if (!is_tilting(c, t) || t.size() != c.rank()) throw InputError("the objects do not form a tilting set");
  describe_cta(cluster_tilted_algebra(c, t), out);
}

void cmd_apr(const ValuedQuiver& q, const Options& o, Output& out) {
  auto qp = make_quiver(q);
  ClusterCategory c(qp);
  const int k = vertex_index(q, o.vertex);
  auto t = apr_tilting(c, k);
  json names = json::array();
  out.text << "T(" << k + 1 << "):";
  for (std::size_t x : t) {
    names.push_back(c.object(x).label());
    out.text << " " << c.object(x).label();
  }
  out.text << "\n";
  out.result["tilting_set"] = names;
  const bool boundary = q.is_sink(k) || q.is_source(k);
  auto tau_ek = boundary ? std::nullopt : coxeter_translate(build_simple(qp, k), 1);
  if (tau_ek) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < q.rank(); ++i)
      if (static_cast<int>(i) != k) d += hom_space(build_projective(qp, static_cast<int>(i)), *tau_ek).dim();
    out.result["hom_to_tau_simple"] = d;
    out.text << "dim Hom(T'(" << k + 1 << "), tau E" << k + 1 << ") = " << d << "\n";
  }
  auto r = cluster_tilted_algebra(c, t);
  describe_cta(r, out);
  bool hereditary = is_hereditary_path_algebra(r.algebra.Lambda);
  out.result["hereditary"] = hereditary;
  out.text << "Lambda hereditary: " << (hereditary ? "yes" : "no") << "\n";
  if (boundary) {
    bool same = r.quiver_Lambda == as_gabriel(q.reflect_orientation(k));
    out.result["quiver_is_reflected"] = same;
    out.text << "quiver of Lambda equals s" << k + 1 << "Q: " << (same ? "yes" : "no") << "\n";
  }
}

void cmd_k0(const ValuedQuiver& q, const Options& o, Output& out) {
  K0Auto which;
  if (o.automorphism == "F") which = K0Auto::F;
  else if (o.automorphism == "2" || o.automorphism == "[2]") which = K0Auto::shift2;
  else if (o.automorphism == "id") which = K0Auto::identity;
  else throw InputError("--auto must be F, 2 or id");
  auto g = k0_quotient(q, which);
  json factors = json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(d.get_str());
  json rel = json::array();
  for (const auto& row : g.relations) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rel.push_back(r);
  }
  out.result = {{"automorphism", o.automorphism}, {"group", g.description()}, {"invariant_factors", factors}, {"relations", rel}};
  out.text << g.description() << "\ninvariant factors:";
  for (const auto& d : g.invariant_factors) out.text << " " << d.get_str();
  out.text << "\n";
}

void cmd_reflect(const ValuedQuiver& q, const Options& o, Output& out) {
  const int k = vertex_index(q, o.vertex);
  const ValuedQuiver q2 = q.reflect_orientation(k);
  std::vector<Label> xs;
  for (const auto& n : o.objects) xs.push_back(parse_label(q, n));
  const bool root = o.category == "root";
  if (!root && o.category != "cluster") throw InputError("--category must be cluster or root");
  if (xs.empty()) xs = root ? root_domain(q) : cluster_domain(q);
  json rows = json::array();
  for (const auto& x : xs) {
    Label y = root ? root_reflect(q, k, x) : cluster_reflect(q, k, x);
    json row = {{"object", x.str()}, {"image", y.str()}};
    out.text << x.str() << " -> " << y.str();
    if (root) {
      row["dim"] = root_dim(y).str();
      out.text << "  dim " << root_dim(y).str();
    } else {
      row["gamma"] = gamma(q2, y).str();
      out.text << "  gamma " << gamma(q2, y).str();
    }
    out.text << "\n";
    rows.push_back(row);
  }
  out.result = {{"vertex", k + 1}, {"category", o.category}, {"reflected_quiver", print_quiver(q2)}, {"map", rows}};
}

void cmd_verify(const ValuedQuiver& q, const Options& o, Output& out) {
  VerifyOptions vo;
  vo.rank_cap = o.rank_cap;
  out.reports = verify_all(q, vo);
  for (const auto& r : out.reports) {
    out.text << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
      out.text << "     " << r.failures[i].object << ": expected " << r.failures[i].expected << ", got "
               << r.failures[i].actual << "\n";
  }
}

void cmd_dot(const ValuedQuiver& q, const Options& o, Output& out) {
  if (o.graph == "quiver") {
    out.dot = dot_quiver(q);
  } else if (o.graph == "compatibility") {
    out.dot = dot_compatibility(ClusterCategory(make_quiver(q)));
  } else if (o.graph == "exchange") {
    ClusterCategory c(make_quiver(q));
    out.dot = dot_exchange(c, enumerate_tilting_sets(c, o.rank_cap));
  } else if (o.graph == "lambda") {
    ClusterCategory c(make_quiver(q));
    auto t = parse_objects(c, o.objects);
    if (!is_tilting(c, t) || t.size() != c.rank()) throw InputError("the objects do not form a tilting set");
    out.dot = dot_gabriel(cluster_tilted_algebra(c, t).quiver_Lambda, "lambda");
  } else {
    throw InputError("--graph must be quiver, compatibility, exchange or lambda");
  }
  out.text << *out.dot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster and root categories of Dynkin quivers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-q,--quiver", o.quiver_file, "quiver file");
  app.add_option("-t,--type", o.type, "Dynkin type in standard orientation, e.g. A3");
  app.add_option("-f,--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--rank-cap", o.rank_cap, "largest rank for enumeration");
  app.add_option("--cache-dir", o.cache_dir, "catalog cache directory (default $CLUSTERCAT_CACHE_DIR)");

  auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };
  add("roots", "positive and almost positive roots");
  add("ind", "indecomposables with gamma labels")->add_option("--category", o.category, "cluster or root");
  add("homs", "Hom and Ext^1 dimension matrices")->add_option("--category", o.category, "cluster, module or root");
  add("tilting", "enumerate tilting sets");
  add("complete", "completions of an almost complete tilting set")
      ->add_option("-o,--object", o.objects, "member, e.g. P1, S2, (1,1,0), P2[1]");
  add("cta", "cluster-tilted algebra of a tilting set")->add_option("-o,--object", o.objects, "member")->required();
  add("apr", "APR-tilting set T(k) and its algebra")->add_option("-k,--vertex", o.vertex, "vertex k")->required();
  add("k0", "Grothendieck group of an orbit category")->add_option("--auto", o.automorphism, "F, 2 or id");
  auto reflect = add("reflect", "induced reflection functor at a sink or source");
  reflect->add_option("-k,--vertex", o.vertex, "vertex k")->required();
  reflect->add_option("--category", o.category, "cluster or root");
  reflect->add_option("-o,--object", o.objects, "object (default: all)");
  add("verify", "run every invariant suite");
  auto dot = add("dot", "graph output");
  dot->add_option("--graph", o.graph, "quiver, compatibility, exchange or lambda");
  dot->add_option("-o,--object", o.objects, "tilting set members for --graph lambda");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Output out;
  ValuedQuiver q;
  try {
    q = load_quiver(o);
    if (name == "roots") cmd_roots(q, out);
    else if (name == "ind") cmd_ind(q, o, out);
    else if (name == "homs") cmd_homs(q, o, out);
    else if (name == "tilting") cmd_tilting(q, o, out);
    else if (name == "complete") cmd_complete(q, o, out);
    else if (name == "cta") cmd_cta(q, o, out);
    else if (name == "apr") cmd_apr(q, o, out);
    else if (name == "k0") cmd_k0(q, o, out);
    else if (name == "reflect") cmd_reflect(q, o, out);
    else if (name == "verify") cmd_verify(q, o, out);
    else if (name == "dot") cmd_dot(q, o, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  bool passed = true;
  for (const auto& r : out.reports) passed = passed && r.ok();

  if (o.format == "dot") {
    if (!out.dot) {
      std::cerr << "error: " << name << " has no graph output\n";
      return 2;
    }
    std::cout << *out.dot;
  } else if (o.format == "json") {
    json report = {{"schema_version", schema_version},
                   {"command", name},
                   {"quiver", {{"text", print_quiver(q)}, {"hash", quiver_hash(q)}, {"type", q.cartan().type_label()}, {"rank", q.rank()}}},
                   {"result", out.result},
                   {"timing_ms", ms}};
    if (name == "verify") {
      json suites = json::array();
      for (const auto& r : out.reports) {
        json fails = json::array();
        for (const auto& f : r.failures) fails.push_back({{"object", f.object}, {"expected", f.expected}, {"actual", f.actual}});
        suites.push_back({{"name", r.name}, {"checked", r.checked}, {"passed", r.ok()}, {"counterexamples", fails}});
      }
      report["verification"] = {{"passed", passed}, {"suites", suites}};
    }
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return passed ? 0 : 1;
}

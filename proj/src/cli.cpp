#include "flowpoly/cli.hpp"

#include "flowpoly/bounds.hpp"
#include "flowpoly/canonical.hpp"
#include "flowpoly/enumerate.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/families.hpp"
#include "flowpoly/flow.hpp"
#include "flowpoly/io.hpp"
#include "flowpoly/memo_store.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace flowpoly {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "human";
  std::size_t jobs = 1;
  std::string cache_dir;
  std::size_t oracle_limit = 20;
};

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  FlowOptions flow;
};

std::vector<Multigraph> load_graphs(Context& ctx, const std::string& path) {
  std::vector<Multigraph> graphs;
  if (path == "-") {
    graphs = read_graphs(ctx.in);
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file '" + path + "'");
    graphs = read_graphs(file);
  }
  if (graphs.empty()) throw ParseError("no graphs in input '" + path + "'");
  return graphs;
}

Json decimal_array(std::span<const BigInt> v) {
  auto arr = Json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

std::string degree_text(const IntPoly& p) { return p.is_zero() ? "none" : std::to_string(p.degree()); }

std::string roots_text(const std::vector<RationalRoot>& roots) {
  std::string s = "[";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) s += ",";
    s += "(" + to_string(roots[i].value) + "," + std::to_string(roots[i].multiplicity) + ")";
  }
  return s + "]";
}

Json roots_json(const RootSummary& r) {
  auto arr = Json::array();
  for (const auto& root : r.rational) {
    arr.push_back(Json{{"value", to_string(root.value)}, {"multiplicity", std::to_string(root.multiplicity)}});
  }
  return arr;
}

/// Short name for graphs the families module knows by shape.
std::string known_name(const Multigraph& g) {
  static const std::vector<std::pair<std::string, CanonicalKey>> known = {
      {"Z3", canonical_key(make_z3())},     {"K4", canonical_key(make_k4())},
      {"L4", canonical_key(make_l4())},     {"K3,3", canonical_key(make_k33())},
      {"prism", canonical_key(make_prism())},
  };
  const auto key = canonical_key(g);
  for (const auto& [name, k] : known) {
    if (k == key) return name;
  }
  return "";
}

std::string graph_line(const Multigraph& g, const std::string& graph_format) {
  if (graph_format == "graph6" || (graph_format == "auto" && is_simple(g) && g.order() > 0)) return to_graph6(g);
  return to_text_line(g);
}

// ------------------------------------------------------------------- compute

int cmd_compute(Context& ctx, const std::string& path, const std::string& method_name) {
  const Method method = parse_method(method_name);
  const auto graphs = load_graphs(ctx, path);
  if (ctx.config.format == "tsv") ctx.out << "key\tn\tm\tengine\tcoefficients\ttau\n";
  std::size_t index = 0;
  for (const auto& g : graphs) {
    ++index;
    const FlowResult r = flow(g, method, ctx.flow);
    std::optional<IntPoly> t;
    if (is_connected(g)) {
      t = tau_transform(r.poly, static_cast<long long>(g.size()), static_cast<long long>(g.order()));
    }
    const RootSummary roots = summarize_roots(r.poly);
    const std::string key = canonical_key(g).hex();
    if (ctx.config.format == "json") {
      Json j;
      j["key"] = key;
      j["n"] = std::to_string(g.order());
      j["m"] = std::to_string(g.size());
      j["engine"] = std::string(to_string(r.engine));
      j["coefficients"] = decimal_array(r.poly.coeffs());
      j["polynomial"] = r.poly.pretty();
      j["tau"] = t ? decimal_array(t->coeffs()) : Json(nullptr);
      j["degree"] = r.poly.is_zero() ? Json(nullptr) : Json(std::to_string(r.poly.degree()));
      j["rational_roots"] = roots_json(roots);
      j["real_roots_distinct"] = std::to_string(roots.distinct_real);
      j["real_roots_with_multiplicity"] = std::to_string(roots.real_with_multiplicity);
      ctx.out << j.dump() << '\n';
    } else if (ctx.config.format == "tsv") {
      ctx.out << key << '\t' << g.order() << '\t' << g.size() << '\t' << to_string(r.engine) << '\t'
              << r.poly.to_string() << '\t' << (t ? t->to_string() : "") << '\n';
    } else {
      ctx.out << "graph " << index << ": n=" << g.order() << " m=" << g.size() << '\n'
              << "  F(t)         " << r.poly.pretty() << '\n'
              << "  coefficients " << r.poly.to_string() << '\n';
      if (t) ctx.out << "  tau(t)       " << t->pretty() << '\n';
      ctx.out << "  degree       " << degree_text(r.poly) << '\n';
      if (!r.poly.is_zero()) {
        ctx.out << "  roots        rational " << roots_text(roots.rational) << ", real " << roots.distinct_real
                << " distinct / " << roots.real_with_multiplicity << " with multiplicity\n";
      }
      ctx.out << "  engine       " << to_string(r.engine) << '\n';
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------------- roots

int cmd_roots(Context& ctx, const std::string& path) {
  const auto graphs = load_graphs(ctx, path);
  std::size_t index = 0;
  for (const auto& g : graphs) {
    ++index;
    const IntPoly f = flow(g, Method::automatic, ctx.flow).poly;
    const RootSummary roots = summarize_roots(f);
    const bool real = is_real_rooted(f);
    std::optional<bool> vieta;
    std::vector<Rational> all;
    for (const auto& r : roots.rational) all.insert(all.end(), r.multiplicity, r.value);
    if (!f.is_zero() && all.size() == static_cast<std::size_t>(f.degree())) vieta = vieta_check(f, all);
    if (ctx.config.format == "json") {
      Json j;
      j["key"] = canonical_key(g).hex();
      j["coefficients"] = decimal_array(f.coeffs());
      j["rational_roots"] = roots_json(roots);
      j["real_roots_distinct"] = std::to_string(roots.distinct_real);
      j["real_roots_with_multiplicity"] = std::to_string(roots.real_with_multiplicity);
      j["real_rooted"] = real;
      j["vieta"] = vieta ? Json(*vieta) : Json(nullptr);
      ctx.out << j.dump() << '\n';
    } else if (ctx.config.format == "tsv") {
      if (index == 1) ctx.out << "key\trational_roots\treal_distinct\treal_with_multiplicity\treal_rooted\n";
      ctx.out << canonical_key(g).hex() << '\t' << roots_text(roots.rational) << '\t' << roots.distinct_real << '\t'
              << roots.real_with_multiplicity << '\t' << (real ? "yes" : "no") << '\n';
    } else {
      ctx.out << "graph " << index << ": F(t) = " << f.pretty() << '\n'
              << "  rational roots " << roots_text(roots.rational) << '\n'
              << "  real roots     " << roots.distinct_real << " distinct, " << roots.real_with_multiplicity
              << " with multiplicity of " << degree_text(f) << '\n'
              << "  real-rooted    " << (real ? "yes" : "no") << '\n';
      if (vieta) ctx.out << "  vieta          " << (*vieta ? "consistent" : "INCONSISTENT") << '\n';
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------------- audit

int cmd_audit(Context& ctx, const std::string& path) {
  const auto graphs = load_graphs(ctx, path);
  bool failed = false;
  std::size_t index = 0;
  if (ctx.config.format == "tsv") ctx.out << "key\tclause\tstatus\tdetail\n";
  for (const auto& g : graphs) {
    ++index;
    const RootAudit audit = root_location_audit(g, ctx.flow);
    failed = failed || !audit.passed();
    const std::string key = canonical_key(g).hex();
    if (ctx.config.format == "json") {
      ctx.out << Json{{"key", key}, {"passed", audit.passed()}, {"audit", to_json(audit)}}.dump() << '\n';
    } else if (ctx.config.format == "tsv") {
      for (const auto& c : audit.clauses) ctx.out << key << '\t' << c.name << '\t' << c.status << '\t' << c.detail << '\n';
    } else {
      ctx.out << "graph " << index << ": " << (audit.passed() ? "all clauses hold" : "CLAUSE FAILED") << '\n';
      for (const auto& c : audit.clauses) ctx.out << "  " << c.name << ": " << c.status << " (" << c.detail << ")\n";
    }
  }
  return failed ? kExitCounterexample : kExitOk;
}

// ----------------------------------------------------------------- decompose

int cmd_decompose(Context& ctx, const std::string& path) {
  const auto graphs = load_graphs(ctx, path);
  std::size_t index = 0;
  if (ctx.config.format == "tsv") ctx.out << "graph\tk\tpiece\tname\tn\tm\tgraph_text\tcoefficients\n";
  for (const auto& g : graphs) {
    ++index;
    const Decomposition d = two_edge_cut_decomposition(g);
    if (ctx.config.format == "json") {
      auto pieces = Json::array();
      for (const auto& p : d.pieces) {
        pieces.push_back(Json{{"name", known_name(p)},
                              {"n", std::to_string(p.order())},
                              {"m", std::to_string(p.size())},
                              {"graph", to_text_line(p)},
                              {"coefficients", decimal_array(flow(p, Method::automatic, ctx.flow).poly.coeffs())}});
      }
      ctx.out << Json{{"key", canonical_key(g).hex()}, {"k", std::to_string(d.k)}, {"pieces", pieces}}.dump() << '\n';
    } else if (ctx.config.format == "tsv") {
      std::size_t i = 0;
      for (const auto& p : d.pieces) {
        ctx.out << index << '\t' << d.k << '\t' << ++i << '\t' << known_name(p) << '\t' << p.order() << '\t'
                << p.size() << '\t' << to_text_line(p) << '\t' << flow(p, Method::automatic, ctx.flow).poly.to_string()
                << '\n';
      }
    } else {
      ctx.out << "graph " << index << ": k=" << d.k << ", " << d.pieces.size() << " pieces\n";
      for (const auto& p : d.pieces) {
        const std::string name = known_name(p);
        ctx.out << "  " << (name.empty() ? "piece" : name) << "  n=" << p.order() << "  F(t) = "
                << flow(p, Method::automatic, ctx.flow).poly.pretty() << "  [" << to_text_line(p) << "]\n";
      }
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- enumerate

EnumSpec make_spec(std::size_t n, bool simple, bool bridgeless, unsigned connectivity, std::size_t jobs) {
  EnumSpec spec;
  spec.n = n;
  spec.allow_multiedges = !simple;
  spec.require_bridgeless = bridgeless;
  spec.min_edge_connectivity = connectivity;
  spec.jobs = jobs;
  return spec;
}

int cmd_enumerate(Context& ctx, const EnumSpec& spec, const std::string& graph_format) {
  const auto graphs = enumerate_cubic(spec);
  if (ctx.config.format == "tsv") ctx.out << "key\tn\tm\tgraph\n";
  for (const auto& g : graphs) {
    if (ctx.config.format == "json") {
      Json j{{"key", canonical_key(g).hex()},
             {"n", std::to_string(g.order())},
             {"m", std::to_string(g.size())},
             {"graph", to_text_line(g)}};
      if (is_simple(g)) j["graph6"] = to_graph6(g);
      ctx.out << j.dump() << '\n';
    } else if (ctx.config.format == "tsv") {
      ctx.out << canonical_key(g).hex() << '\t' << g.order() << '\t' << g.size() << '\t' << graph_line(g, graph_format)
              << '\n';
    } else {
      ctx.out << graph_line(g, graph_format) << '\n';
    }
  }
  ctx.err << "# " << graphs.size() << " graphs\n";
  return kExitOk;
}

// -------------------------------------------------------------------- family

int cmd_family(Context& ctx, const std::string& name, std::size_t n, const std::string& graph_format) {
  const Multigraph g = make_family(name, n);
  if (ctx.config.format == "json") {
    Json j{{"family", name},
           {"key", canonical_key(g).hex()},
           {"n", std::to_string(g.order())},
           {"m", std::to_string(g.size())},
           {"graph", to_text_line(g)}};
    if (is_simple(g) && g.order() > 0) j["graph6"] = to_graph6(g);
    ctx.out << j.dump() << '\n';
  } else if (graph_format == "graph6") {
    ctx.out << to_graph6(g) << '\n';
  } else {
    ctx.out << to_text(g);
  }
  return kExitOk;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
  int theorem = 0;
  std::size_t n = 0;
  bool simple = false;
  bool with_bridges = false;
  bool original = false;
  std::string input;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  const Check check = check_from_id(a.theorem);
  std::vector<Multigraph> graphs;
  if (!a.input.empty()) {
    graphs = load_graphs(ctx, a.input);
  } else {
    if (a.n == 0) throw UsageError("verify needs --n or --input");
    if (check == Check::simple_real_rooted_lower && a.n < 8) {
      throw UsageError("the simple real-rooted lower bound is stated for n >= 8");
    }
    graphs = enumerate_cubic(make_spec(a.n, a.simple, !a.with_bridges, 1, ctx.config.jobs));
  }
  SweepOptions opts;
  opts.jobs = ctx.config.jobs;
  opts.near = a.original ? NearCubicVersion::original : NearCubicVersion::improved;
  opts.flow = ctx.flow;
  const SweepReport report = sweep(check, graphs, opts);
  const auto& s = report.summary;

  if (ctx.config.format == "json") {
    ctx.out << to_json_lines(report);
  } else if (ctx.config.format == "tsv") {
    ctx.out << "key\tn\tm\ttheorem\tverdict\tequality\treal_rooted\taudit\tnote\n";
    for (const auto& r : report.records) {
      ctx.out << r.key.hex() << '\t' << r.n << '\t' << r.m << '\t' << r.check << '\t' << to_string(r.verdict) << '\t'
              << (r.equality ? "yes" : "no") << '\t' << (r.real_rooted ? "yes" : "no") << '\t'
              << (r.audit.passed() ? "pass" : "fail") << '\t' << r.note << '\n';
    }
  } else {
    ctx.out << "check " << a.theorem << ": " << check_title(check) << '\n';
    for (std::size_t i = 0; i < report.records.size(); ++i) {
      const auto& r = report.records[i];
      ctx.out << "  " << r.key.hex() << "  n=" << r.n << " m=" << r.m << "  " << to_string(r.verdict)
              << (r.equality ? "  equality" : "") << (r.audit.passed() ? "" : "  audit-failed")
              << (r.note.empty() ? "" : "  (" + r.note + ")") << '\n';
    }
    ctx.out << "graphs " << s.graphs << ", pass " << s.pass << ", fail " << s.fail << ", not applicable "
            << s.not_applicable << ", equality " << s.equality << ", audit failures " << s.audit_failures << '\n';
  }
  if (s.fail == 0 && s.audit_failures == 0) return kExitOk;
  for (const auto& r : report.records) {
    if (r.verdict == Verdict::fail || !r.audit.passed()) {
      ctx.err << "counterexample: " << to_text_line(graph_from_key(r.key)) << '\n';
    }
  }
  return kExitCounterexample;
}

int dispatch(const std::vector<std::string>& args, Context& ctx) {
  CLI::App app{"Exact flow polynomials, coefficient bounds and cubic graph sweeps", "flowpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.config.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "human"}))
      ->capture_default_str();
  app.add_option("-j,--jobs", ctx.config.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--cache-dir", ctx.config.cache_dir,
                 "Directory of the persistent memo file (FLOWPOLY_CACHE overrides)");

  std::string path = "-";
  std::string method = "auto";
  auto* compute = app.add_subcommand("compute", "Flow polynomial, tau, degree and roots of each input graph");
  compute->add_option("input", path, "Graph file (text format or graph6, '-' for stdin)")->capture_default_str();
  compute->add_option("--method", method, "auto|oracle|dc|decompose")
      ->check(CLI::IsMember({"auto", "oracle", "dc", "decompose"}))
      ->capture_default_str();
  compute->add_option("--oracle-limit", ctx.config.oracle_limit, "Largest edge count the oracle accepts")
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a coefficient bound over enumerated cubic graphs");
  verify->add_option("--theorem", va.theorem, "Bound to check (1-7)")->required()->check(CLI::Range(1, 7));
  verify->add_option("--n", va.n, "Vertex count of the enumerated graphs");
  auto* v_simple = verify->add_flag("--simple", va.simple, "Simple graphs only");
  bool multi = false;
  auto* v_multi = verify->add_flag("--multi", multi, "Allow parallel edges (default)");
  v_simple->excludes(v_multi);
  bool bridgeless_flag = false;
  auto* v_bridgeless = verify->add_flag("--bridgeless", bridgeless_flag, "Bridgeless graphs only (default)");
  auto* v_bridges = verify->add_flag("--with-bridges", va.with_bridges, "Include graphs with bridges");
  v_bridgeless->excludes(v_bridges);
  verify->add_flag("--original", va.original, "Use the original near-cubic bound instead of the improved one");
  verify->add_option("--input", va.input, "Check the graphs in this file instead of enumerating");

  std::size_t en = 0;
  bool e_simple = false, e_multi = false, e_bridgeless = false;
  unsigned connectivity = 1;
  std::string graph_format = "auto";
  auto* enumerate = app.add_subcommand("enumerate", "List connected cubic graphs up to isomorphism");
  enumerate->add_option("--n", en, "Vertex count")->required();
  auto* e_s = enumerate->add_flag("--simple", e_simple, "Simple graphs only");
  auto* e_m = enumerate->add_flag("--multi", e_multi, "Allow parallel edges and loops (default)");
  e_s->excludes(e_m);
  enumerate->add_flag("--bridgeless", e_bridgeless, "Bridgeless graphs only");
  enumerate->add_option("--min-connectivity", connectivity, "Minimum edge connectivity (1-3)")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  enumerate->add_option("--graph-format", graph_format, "auto|text|graph6 (auto: graph6 for simple graphs)")
      ->check(CLI::IsMember({"auto", "text", "graph6"}))
      ->capture_default_str();

  std::string family;
  std::size_t fn = 0;
  std::string family_format = "text";
  auto* fam = app.add_subcommand("family", "Print a named graph");
  std::string names;
  for (const auto& nm : family_names()) names += (names.empty() ? "" : "|") + nm;
  fam->add_option("--name", family, names)->required()->check(CLI::IsMember(family_names()));
  fam->add_option("--n", fn, "Size parameter (vertices; h for k2h; loop count for *-loops)");
  fam->add_option("--graph-format", family_format, "text|graph6")
      ->check(CLI::IsMember({"text", "graph6"}))
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Split cubic graphs along 2-edge cuts");
  decompose->add_option("input", path, "Graph file ('-' for stdin)")->capture_default_str();
  auto* roots = app.add_subcommand("roots", "Rational roots and real-root counts of the flow polynomial");
  roots->add_option("input", path, "Graph file ('-' for stdin)")->capture_default_str();
  auto* audit = app.add_subcommand("audit", "Exact root-location checks");
  audit->add_option("input", path, "Graph file ('-' for stdin)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, ctx.out, ctx.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ctx.flow.oracle_limit = ctx.config.oracle_limit;
  std::unique_ptr<MemoStore> store;
  std::string cache_dir = ctx.config.cache_dir;
  if (const char* env = std::getenv("FLOWPOLY_CACHE"); env != nullptr && *env != '\0') cache_dir = env;
  if (!cache_dir.empty()) {
    store = std::make_unique<MemoStore>(cache_dir);
    store->load(*ctx.flow.cache, ctx.err);
  }

  int code = kExitOk;
  if (*compute) code = cmd_compute(ctx, path, method);
  if (*verify) code = cmd_verify(ctx, va);
  if (*enumerate) code = cmd_enumerate(ctx, make_spec(en, e_simple, e_bridgeless, connectivity, ctx.config.jobs),
                                       graph_format);
  if (*fam) code = cmd_family(ctx, family, fn, family_format);
  if (*decompose) code = cmd_decompose(ctx, path);
  if (*roots) code = cmd_roots(ctx, path);
  if (*audit) code = cmd_audit(ctx, path);

  if (store) store->flush(*ctx.flow.cache);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Context ctx{RunConfig{}, out, err, in, FlowOptions{}};
  try {
    return dispatch(args, ctx);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidEdge& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidOperation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace flowpoly

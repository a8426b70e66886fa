#include "flowpoly/bounds.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace flowpoly {

namespace {

using Factor = BoundSpec::Factor;

unsigned as_exponent(long long e, bool& clamped) {
  if (e < 0) {
    clamped = true;
    return 0;
  }
  return static_cast<unsigned>(e);
}

BoundSpec rising(long long count) {
  BoundSpec spec;
  for (long long j = 1; j <= count; ++j) spec.factors.push_back({j, 1});
  return spec;
}

long long floor_div2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void require_cubic_order(long long n, long long min, const char* what) {
  if (n < min || n % 2 != 0) {
    throw DomainError(std::string(what) + ": n must be even and at least " + std::to_string(min));
  }
}

}  // namespace

BoundSpec upper_general(long long n, long long m) {
  if (m < n) throw DomainError("upper_general: needs m >= n");
  const long long r = m - n;
  if (r <= 1) return rising(r + 1);
  return BoundSpec{{{1, 1}, {2, 1}, {3, 1}, {4, static_cast<unsigned>(r - 2)}}, false};
}

BoundSpec upper_general_improved(long long n, long long m) {
  if (m < n) throw DomainError("upper_general_improved: needs m >= n");
  const long long r = m - n;
  if (r <= 3) return rising(r + 1);
  return BoundSpec{{{1, 1}, {2, 1}, {3, 2}, {4, static_cast<unsigned>(r - 3)}}, false};
}

BoundSpec upper_cubic(long long n) {
  require_cubic_order(n, 2, "upper_cubic");
  if (n == 2) return rising(2);
  return BoundSpec{{{1, 1}, {2, 1}, {3, 1}, {4, static_cast<unsigned>((n - 4) / 2)}}, false};
}

BoundSpec upper_cubic_improved(long long n) {
  require_cubic_order(n, 2, "upper_cubic_improved");
  if (n <= 6) return rising(n / 2 + 1);
  return BoundSpec{{{1, 1}, {2, 1}, {3, 2}, {4, static_cast<unsigned>((n - 6) / 2)}}, false};
}

BoundSpec upper_near_cubic(long long n, long long dx, NearCubicVersion version) {
  if (n < 1) throw DomainError("upper_near_cubic: n must be positive");
  if (dx < 2) throw DomainError("upper_near_cubic: dx must be at least 2");
  BoundSpec spec;
  const unsigned ones = as_exponent(floor_div2(dx - 1), spec.clamped);
  if (version == NearCubicVersion::original) {
    const unsigned fours = as_exponent(floor_div2(n - 1), spec.clamped);
    spec.factors = {{1, ones}, {2, 1}, {4, fours}};
  } else {
    const unsigned fours = as_exponent(floor_div2(n - 3), spec.clamped);
    spec.factors = {{1, ones}, {2, 1}, {3, 1}, {4, fours}};
  }
  return spec;
}

BoundSpec lower_real_rooted_cubic(long long n) {
  require_cubic_order(n, 2, "lower_real_rooted_cubic");
  return BoundSpec{{{1, 1}, {2, static_cast<unsigned>(n / 2)}}, false};
}

BoundSpec lower_simple_real_rooted_cubic(long long n) {
  require_cubic_order(n, 8, "lower_simple_real_rooted_cubic");
  return BoundSpec{{{1, 1}, {2, static_cast<unsigned>(n / 2 - 2)}, {3, 2}}, false};
}

// ----------------------------------------------------------------- check ids

Check check_from_id(int id) {
  if (id < 1 || id > 7) throw DomainError("check id must be between 1 and 7, got " + std::to_string(id));
  return static_cast<Check>(id);
}

int check_id(Check c) { return static_cast<int>(c); }

std::string_view check_title(Check c) {
  switch (c) {
    case Check::general_upper: return "upper bound, general graphs";
    case Check::general_upper_improved: return "improved upper bound, general graphs";
    case Check::cubic_upper: return "upper bound, cubic graphs";
    case Check::real_rooted_lower: return "lower bound, real-rooted cubic graphs";
    case Check::simple_real_rooted_lower: return "lower bound, simple real-rooted cubic graphs";
    case Check::near_cubic_upper: return "upper bound, near-cubic graphs";
    case Check::cubic_upper_improved: return "improved upper bound, cubic graphs";
  }
  return "unknown";
}

bool is_lower_check(Check c) { return c == Check::real_rooted_lower || c == Check::simple_real_rooted_lower; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

bool RootAudit::passed() const {
  return std::none_of(clauses.begin(), clauses.end(), [](const AuditClause& c) { return c.status == "fail"; });
}

// ------------------------------------------------------------- verification

namespace {

std::vector<BigInt> padded(std::span<const BigInt> c, std::size_t len) {
  std::vector<BigInt> out(c.begin(), c.end());
  out.resize(len);
  return out;
}

VerificationReport compare(const Multigraph& g, const BoundSpec& spec, bool upper, const FlowOptions& opts) {
  VerificationReport r;
  r.key = canonical_key(g);
  r.n = g.order();
  r.m = g.size();
  r.bound = spec;
  if (!is_connected(g)) {
    r.note = "disconnected";
    return r;
  }
  if (!is_bridgeless(g)) {
    r.note = "has a bridge";
    return r;
  }
  const IntPoly f = flow(g, Method::automatic, opts).poly;
  const IntPoly t = tau_transform(f, static_cast<long long>(r.m), static_cast<long long>(r.n));
  const IntPoly b = expand(spec);
  r.flow.assign(f.coeffs().begin(), f.coeffs().end());
  r.computed.assign(t.coeffs().begin(), t.coeffs().end());
  r.bound_coeffs.assign(b.coeffs().begin(), b.coeffs().end());
  r.real_rooted = is_real_rooted(f);

  bool alternating = f.coeffs().size() == t.coeffs().size();
  for (std::size_t i = 0; alternating && i < f.coeffs().size(); ++i) {
    alternating = abs(f.coeffs()[i]) == t.coeffs()[i] && t.coeffs()[i] > 0;
  }

  const std::size_t len = std::max(r.computed.size(), r.bound_coeffs.size());
  const auto c = padded(r.computed, len);
  const auto d = padded(r.bound_coeffs, len);
  bool holds = true;
  r.slack.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    r.slack[i] = upper ? d[i] - c[i] : c[i] - d[i];
    holds = holds && r.slack[i] >= 0;
  }
  r.equality = c == d;
  r.verdict = holds && alternating ? Verdict::pass : Verdict::fail;
  if (!alternating) r.note = "coefficients do not alternate in sign";
  if (spec.clamped) r.note = "small case: exponent clamped to zero, checked directly";
  return r;
}

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

AuditClause clause(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? "pass" : "fail", std::move(detail)};
}

AuditClause not_applicable(std::string name, std::string why) { return {std::move(name), "n/a", std::move(why)}; }

}  // namespace

VerificationReport verify_upper(const Multigraph& g, const BoundSpec& spec, const FlowOptions& opts) {
  return compare(g, spec, true, opts);
}

VerificationReport verify_lower(const Multigraph& g, const BoundSpec& spec, const FlowOptions& opts) {
  return compare(g, spec, false, opts);
}

bool is_real_rooted(const IntPoly& p) {
  if (p.is_zero()) return false;
  return real_root_count_with_multiplicity(p) == static_cast<std::size_t>(p.degree());
}

bool is_real_rooted_flow(const Multigraph& g, const FlowOptions& opts) {
  return is_real_rooted(flow(g, Method::automatic, opts).poly);
}

RootAudit root_location_audit(const Multigraph& g, const IntPoly& f) {
  RootAudit audit;
  auto& out = audit.clauses;
  const char* names[] = {"sign-below-1", "root-1-multiplicity", "sign-above-1", "near-cubic-gap-1-2",
                         "cubic-3ec-sign-1-2", "cubic-3ec-simple-root-2", "cubic-3ec-gap-2-2.54"};
  if (!is_connected(g) || !is_bridgeless(g) || f.is_zero()) {
    for (const char* name : names) out.push_back(not_applicable(name, "needs a connected bridgeless graph"));
    out.push_back({"root-2-vs-3-connected", "observed", "not applicable"});
    return audit;
  }
  const auto n = static_cast<long long>(g.order());
  const auto m = static_cast<long long>(g.size());
  const int base = (m - n + 1) % 2 == 0 ? 1 : -1;

  {
    bool ok = true;
    std::string detail;
    for (const Rational& x : {rat(0), rat(1, 2), rat(-1)}) {
      const int s = base * sign_at(f, x);
      ok = ok && s > 0;
      detail += "sign at " + to_string(x) + ": " + std::to_string(s) + "; ";
    }
    const auto below = sturm_real_root_count(f, Interval{std::nullopt, rat(1)});
    ok = ok && below == 0;
    detail += "roots below 1: " + std::to_string(below);
    out.push_back(clause(names[0], ok, detail));
  }

  const std::size_t b = blocks(g);
  const unsigned mult1 = root_multiplicity(f, rat(1));
  if (m == 0) {
    out.push_back(not_applicable(names[1], "edgeless graph"));
  } else {
    out.push_back(clause(names[1], mult1 == b,
                         "multiplicity " + std::to_string(mult1) + ", blocks " + std::to_string(b)));
  }

  {
    const int s = ((m - n + static_cast<long long>(b) + 1) % 2 == 0 ? 1 : -1) * sign_at(f, rat(32, 27));
    const auto inside = sturm_real_root_count(f, Interval{rat(1), rat(32, 27)});
    out.push_back(clause(names[2], s > 0 && inside == 0,
                         "sign at 32/27: " + std::to_string(s) + "; roots in (1, 32/27): " + std::to_string(inside)));
  }

  if (near_cubic_center(g)) {
    const auto inside = sturm_real_root_count(f, Interval{rat(1), rat(2)});
    out.push_back(clause(names[3], inside == 0, "roots in (1, 2): " + std::to_string(inside)));
  } else {
    out.push_back(not_applicable(names[3], "more than one vertex of degree other than 3"));
  }

  if (is_cubic(g) && is_k_edge_connected(g, 3)) {
    const int s = ((m - n) % 2 == 0 ? 1 : -1) * sign_at(f, rat(3, 2));
    const auto gap = sturm_real_root_count(f, Interval{rat(1), rat(2)});
    out.push_back(clause(names[4], s > 0 && gap == 0,
                         "sign at 3/2: " + std::to_string(s) + "; roots in (1, 2): " + std::to_string(gap)));
    const unsigned mult2 = root_multiplicity(f, rat(2));
    out.push_back(clause(names[5], mult2 == 1, "multiplicity of 2: " + std::to_string(mult2)));
    const auto above = sturm_real_root_count(f, Interval{rat(2), rat(127, 50)});
    out.push_back(clause(names[6], above == 0, "roots in (2, 2.54): " + std::to_string(above)));
  } else {
    for (int i = 4; i < 7; ++i) out.push_back(not_applicable(names[i], "not a 3-edge-connected cubic graph"));
  }

  out.push_back({"root-2-vs-3-connected", "observed",
                 "multiplicity of 2: " + std::to_string(root_multiplicity(f, rat(2))) +
                     "; 3-connected: " + yes_no(is_3_connected(g))});
  return audit;
}

RootAudit root_location_audit(const Multigraph& g, const FlowOptions& opts) {
  IntPoly f;
  if (is_connected(g) && is_bridgeless(g)) f = flow(g, Method::automatic, opts).poly;
  return root_location_audit(g, f);
}

VerificationReport run_check(Check check, const Multigraph& g, NearCubicVersion near, const FlowOptions& opts) {
  const auto n = static_cast<long long>(g.order());
  const auto m = static_cast<long long>(g.size());
  auto skip = [&](std::string why) {
    VerificationReport r;
    r.key = canonical_key(g);
    r.n = g.order();
    r.m = g.size();
    r.check = check_id(check);
    r.note = std::move(why);
    r.audit = root_location_audit(g, opts);
    return r;
  };
  if (!is_connected(g)) return skip("disconnected");
  if (!is_bridgeless(g)) return skip("has a bridge");

  const bool cubic = is_cubic(g);
  std::optional<BoundSpec> spec;
  switch (check) {
    case Check::general_upper:
      if (m < n) return skip("fewer edges than vertices");
      spec = upper_general(n, m);
      break;
    case Check::general_upper_improved:
      if (m < n) return skip("fewer edges than vertices");
      spec = upper_general_improved(n, m);
      break;
    case Check::cubic_upper:
      if (!cubic) return skip("not cubic");
      spec = upper_cubic(n);
      break;
    case Check::cubic_upper_improved:
      if (!cubic) return skip("not cubic");
      spec = upper_cubic_improved(n);
      break;
    case Check::near_cubic_upper: {
      const auto x = near_cubic_center(g);
      if (!x) return skip("not near-cubic");
      const long long dx = g.degree(*x);
      if (dx < 2) return skip("centre degree below 2");
      spec = upper_near_cubic(n, dx, near);
      break;
    }
    case Check::real_rooted_lower:
      if (!cubic) return skip("not cubic");
      spec = lower_real_rooted_cubic(n);
      break;
    case Check::simple_real_rooted_lower:
      if (!cubic) return skip("not cubic");
      if (!is_simple(g)) return skip("not simple");
      if (n < 8) return skip("fewer than 8 vertices");
      spec = lower_simple_real_rooted_cubic(n);
      break;
  }

  VerificationReport r = is_lower_check(check) ? verify_lower(g, *spec, opts) : verify_upper(g, *spec, opts);
  r.check = check_id(check);
  IntPoly f(r.flow);
  r.audit = root_location_audit(g, f);
  if (is_lower_check(check) && !r.real_rooted) {
    r.verdict = Verdict::not_applicable;
    r.equality = false;
    r.note = "not real-rooted";
  }
  return r;
}

SweepReport sweep(Check check, const std::vector<Multigraph>& graphs, const SweepOptions& opts) {
  SweepReport report;
  report.check = check_id(check);
  report.records.resize(graphs.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, graphs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        report.records[i] = run_check(check, graphs[i], opts.near, opts.flow);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(graphs.size());
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.key < b.key; });
  auto& s = report.summary;
  s.graphs = report.records.size();
  for (const auto& r : report.records) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::not_applicable: ++s.not_applicable; break;
    }
    if (r.equality) ++s.equality;
    if (!r.audit.passed()) ++s.audit_failures;
  }
  return report;
}

// ---------------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json decimal_array(const std::vector<BigInt>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const RootAudit& a) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : a.clauses) {
    arr.push_back(nlohmann::ordered_json{{"clause", c.name}, {"status", c.status}, {"detail", c.detail}});
  }
  return arr;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["key"] = r.key.hex();
  j["n"] = std::to_string(r.n);
  j["m"] = std::to_string(r.m);
  j["theorem"] = std::to_string(r.check);
  j["coefficients"] = decimal_array(r.flow);
  j["abs_coefficients"] = decimal_array(r.computed);
  j["bound"] = r.bound.factors.empty() ? std::string() : r.bound.to_string();
  j["bound_coefficients"] = decimal_array(r.bound_coeffs);
  j["slack"] = decimal_array(r.slack);
  j["verdict"] = std::string(to_string(r.verdict));
  j["equality"] = r.equality;
  j["real_rooted"] = r.real_rooted;
  j["note"] = r.note;
  j["audit"] = to_json(r.audit);
  return j;
}

nlohmann::ordered_json to_json(const SweepSummary& s, int check) {
  nlohmann::ordered_json j;
  j["summary"] = true;
  j["theorem"] = std::to_string(check);
  j["graphs"] = std::to_string(s.graphs);
  j["pass"] = std::to_string(s.pass);
  j["fail"] = std::to_string(s.fail);
  j["not_applicable"] = std::to_string(s.not_applicable);
  j["equality"] = std::to_string(s.equality);
  j["audit_failures"] = std::to_string(s.audit_failures);
  return j;
}

std::string to_json_lines(const SweepReport& report) {
  std::string out;
  for (const auto& r : report.records) out += to_json(r).dump() + "\n";
  out += to_json(report.summary, report.check).dump() + "\n";
  return out;
}

}  // namespace flowpoly

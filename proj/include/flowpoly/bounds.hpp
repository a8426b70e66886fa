#pragma once

#include "flowpoly/canonical.hpp"
#include "flowpoly/flow.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace flowpoly {

// ---------------------------------------------------------------- bound shapes
//
// Every bound is a product of linear factors (t + a)^e. Upper bounds cap the
// absolute flow coefficients |c_i| of a connected bridgeless graph, lower
// bounds sit under them.

/// prod_{j=1}^{m-n+1} (t+j) when m - n <= 1, else (t+1)(t+2)(t+3)(t+4)^(m-n-2).
BoundSpec upper_general(long long n, long long m);
/// prod_{j=1}^{m-n+1} (t+j) when m - n <= 3, else (t+1)(t+2)(t+3)^2(t+4)^(m-n-3).
BoundSpec upper_general_improved(long long n, long long m);
/// Cubic graphs: (t+1)(t+2) for n = 2, else (t+1)(t+2)(t+3)(t+4)^((n-4)/2).
BoundSpec upper_cubic(long long n);
/// Cubic graphs, sharper: n = 2, 4, 6 are the products of the first 2, 3, 4
/// factors (t+j); otherwise (t+1)(t+2)(t+3)^2(t+4)^((n-6)/2).
BoundSpec upper_cubic_improved(long long n);

enum class NearCubicVersion { original, improved };
/// Graphs whose vertices all have degree 3 except possibly x of degree dx.
/// original: (t+2)(t+1)^floor((dx-1)/2) (t+4)^floor((n-1)/2)
/// improved: (t+2)(t+3)(t+1)^floor((dx-1)/2) (t+4)^floor((n-3)/2)
/// Negative exponents (n <= 2) are clamped to zero and flagged.
BoundSpec upper_near_cubic(long long n, long long dx, NearCubicVersion version);

/// Real-rooted cubic graphs: (t+1)(t+2)^(n/2).
BoundSpec lower_real_rooted_cubic(long long n);
/// Simple real-rooted cubic graphs, n >= 8: (t+1)(t+2)^(n/2-2)(t+3)^2.
BoundSpec lower_simple_real_rooted_cubic(long long n);

// ------------------------------------------------------------- bound checks

/// The seven checks selectable from the command line, by their numeric id.
enum class Check {
  general_upper = 1,
  general_upper_improved = 2,
  cubic_upper = 3,
  real_rooted_lower = 4,
  simple_real_rooted_lower = 5,
  near_cubic_upper = 6,
  cubic_upper_improved = 7,
};

Check check_from_id(int id);
int check_id(Check c);
std::string_view check_title(Check c);
bool is_lower_check(Check c);

enum class Verdict { pass, fail, not_applicable };
std::string_view to_string(Verdict v);

struct AuditClause {
  std::string name;
  /// "pass", "fail", "n/a" or "observed" (recorded, never enforced)
  std::string status;
  std::string detail;
};

struct RootAudit {
  std::vector<AuditClause> clauses;
  /// No clause has status "fail".
  [[nodiscard]] bool passed() const;
};

struct VerificationReport {
  CanonicalKey key;
  std::size_t n = 0;
  std::size_t m = 0;
  int check = 0;
  BoundSpec bound;
  /// Flow polynomial coefficients, constant term first.
  std::vector<BigInt> flow;
  /// |c_i|, taken from tau(G).
  std::vector<BigInt> computed;
  std::vector<BigInt> bound_coeffs;
  /// bound - |c_i| for upper checks, |c_i| - bound for lower ones.
  std::vector<BigInt> slack;
  Verdict verdict = Verdict::not_applicable;
  bool equality = false;
  bool real_rooted = false;
  std::string note;
  RootAudit audit;
};

/// |c_i| <= d_i for every i. Disconnected or bridged graphs are not applicable.
VerificationReport verify_upper(const Multigraph& g, const BoundSpec& spec, const FlowOptions& opts = {});
/// b_i <= |c_i| for every i.
VerificationReport verify_lower(const Multigraph& g, const BoundSpec& spec, const FlowOptions& opts = {});

/// Real roots of F(G,t), counted with multiplicity, fill its degree.
bool is_real_rooted_flow(const Multigraph& g, const FlowOptions& opts = {});
bool is_real_rooted(const IntPoly& p);

/// Exact root-location checks on a connected bridgeless graph:
///  - (-1)^(m-n+1) F > 0 on (-inf, 1): signs at 0, 1/2, -1 plus an empty Sturm count
///  - root 1 has multiplicity equal to the number of blocks
///  - (-1)^(m-n+b+1) F > 0 on (1, 32/27]
///  - near-cubic graphs have no roots in (1, 2)
///  - cubic 3-edge-connected graphs: (-1)^(m-n) F > 0 on (1, 2), a simple
///    root at 2 and no roots in (2, 2.54)
///  - root-2 multiplicity next to vertex 3-connectivity (observed only)
RootAudit root_location_audit(const Multigraph& g, const IntPoly& flow_poly);
RootAudit root_location_audit(const Multigraph& g, const FlowOptions& opts = {});

/// Runs one check on one graph: picks the bound from the graph's (n, m) or
/// centre degree, gates lower checks on real-rootedness (and simplicity), and
/// attaches the root audit.
VerificationReport run_check(Check check, const Multigraph& g, NearCubicVersion near = NearCubicVersion::improved,
                             const FlowOptions& opts = {});

struct SweepOptions {
  std::size_t jobs = 1;
  NearCubicVersion near = NearCubicVersion::improved;
  FlowOptions flow;
};

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t equality = 0;
  std::size_t audit_failures = 0;
};

struct SweepReport {
  int check = 0;
  /// Sorted by canonical key.
  std::vector<VerificationReport> records;
  SweepSummary summary;
};

/// Checks every graph (in parallel when jobs > 1). The result does not
/// depend on the job count.
SweepReport sweep(Check check, const std::vector<Multigraph>& graphs, const SweepOptions& opts = {});

/// Serialization: every number is a decimal string.
nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const SweepSummary& s, int check);
nlohmann::ordered_json to_json(const RootAudit& a);
/// One JSON record per line, summary record last.
std::string to_json_lines(const SweepReport& report);

}  // namespace flowpoly

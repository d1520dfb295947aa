#pragma once

#include <optional>
#include <vector>

#include "ovp/geometry.hpp"

namespace ovp {

enum class LcpKind { Stable, Divergent };

// Complementarity solution: u, v >= 0, v = theta + R u, u.v = 0.
struct LcpSolution {
  Vec3 u = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  LcpKind kind = LcpKind::Stable;
  int support = 0;  // bitmask over {1,2,3}: bit i-1 set when u_i is free
};

struct LcpResult {
  std::vector<LcpSolution> solutions;
  std::vector<int> degenerate_supports;  // bitmasks whose system was singular
};

enum class StabilityRegion { C1, C2, C3, C4, SingularPoint };

struct StabilityReport {
  bool completely_s = false;
  bool p_matrix = false;
  StabilityRegion region = StabilityRegion::C4;
  std::optional<double> beta;
  LcpResult lcp;
  bool stable = false;              // decision-flow verdict
  bool closed_form_stable = false;  // theta0 < 0 and -1 < r1 + r2 < 2
};

// Every principal submatrix of R admits u > 0 with (submatrix) u > 0.
// Sizes 1 and 2 are decided exactly; the 3x3 case checks u = (1,1,1) and then
// falls back to vertex enumeration of the feasibility program
// max t s.t. u >= t, R u >= t, sum(u) = 1.
bool is_completely_s(const Mat3& r);

// All seven principal minors positive.
bool is_p_matrix(const Mat3& r);

// Enumerates the eight complementary supports, solves the induced linear
// systems, and keeps the solutions with u >= 0 and v >= 0. Singular support
// systems are recorded, not dropped.
LcpResult solve_lcp(const Vec3& theta, const Mat3& r);

// The cubed boundary-cycle ratio on the open regions C1 (r1<1, r2>1) and
// C2 (r1>1, r2<1); absent elsewhere or when theta0 >= 0. Stability in these
// regions is equivalent to the ratio being below 1.
std::optional<double> beta_ratio(double theta0, double r1, double r2);

// Full existence/stability decision flow plus the closed-form criterion; the
// two verdicts must agree.
StabilityReport classify_stability(const RsParams& params);

}  // namespace ovp

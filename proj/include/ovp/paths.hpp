#pragma once

#include <string>
#include <vector>

#include "ovp/geometry.hpp"

namespace ovp {

// One constant-rate piece of a piecewise-linear regulation triple. Rates are
// per unit time; z_start anchors the piece in the octant.
class Segment {
 public:
  Segment(double duration, const Vec3& z_start, const Vec3& xdot,
          const Vec3& ydot, const Vec3& zdot);

  double duration;
  Vec3 z_start;
  Vec3 xdot;
  Vec3 ydot;
  Vec3 zdot;

  Vec3 z_end() const { return z_start + duration * zdot; }
};

// Free segment: no pushing, z follows x.
Segment direct_segment(const Vec3& from, const Vec3& to, double duration);

// Pushed segment: z moves from `from` to `to` while y accumulates at rate
// `ydot`; the free rate is derived from z' = x' + R y'.
Segment reflected_segment(const ProblemData& data, const Vec3& from,
                          const Vec3& to, double duration, const Vec3& ydot);

struct RegulationTriple {
  Vec3 origin = Vec3::Zero();
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  Vec3 terminal() const {
    return segments.empty() ? origin : segments.back().z_end();
  }
  double total_duration() const;
};

struct Violation {
  int segment = -1;  // -1: whole-path condition
  std::string condition;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  const Violation* first() const {
    return violations.empty() ? nullptr : &violations.front();
  }
  std::string summary() const;
};

// Checks, per segment: the rate identity z' = x' + R y', octant membership of
// the endpoints, nondecreasing pushing, and complementarity (a pushed
// coordinate stays pinned at zero); plus continuity of z across segments.
ValidationReport validate_triple(const RegulationTriple& path,
                                 const ProblemData& data);

// Sum over segments of 1/2 ||x' - theta||^2 T. Throws std::invalid_argument
// (citing the validation report) on an invalid path.
double path_cost(const RegulationTriple& path, const ProblemData& data);

// Durations and positions scale by k, rates are unchanged. Requires k > 0.
RegulationTriple scale_path(const RegulationTriple& path, double k);

// Cyclic coordinate shift by 1 or 2: shift 1 maps (a,b,c) to (b,c,a).
// Cost-preserving only for rotationally symmetric data.
RegulationTriple rotate_path(const RegulationTriple& path, int shift);

// Concatenation; the first path's terminal must match the second's origin.
RegulationTriple merge_paths(const RegulationTriple& p1,
                             const RegulationTriple& p2);

}  // namespace ovp

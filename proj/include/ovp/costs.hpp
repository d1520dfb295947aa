#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ovp/geometry.hpp"
#include "ovp/paths.hpp"

namespace ovp {

// A subset of the coordinate indices {1,2,3}. |K|=1 names a two-dimensional
// face, |K|=2 an axis, empty the interior.
class FaceSet {
 public:
  FaceSet() = default;
  static FaceSet of(std::initializer_list<int> indices1);
  static FaceSet axis_to(int axis_index1);  // the two indices other than this

  int size() const { return int(idx_.size()); }
  bool contains(int index1) const;
  const std::vector<int>& indices0() const { return idx_; }
  std::string name() const;

 private:
  std::vector<int> idx_;  // sorted, 0-based
};

// B = (R_K' R_K)^-1 R_K' and A = I - R_K B, where R_K stacks the reflection
// columns named by K. A annihilates the stacked columns and is idempotent.
struct ProjectionPair {
  Mat3 a = Mat3::Identity();
  Eigen::Matrix<double, Eigen::Dynamic, 3> b;  // |K| x 3
};

// Requires identity covariance and an invertible Gram matrix.
ProjectionPair projection(const ProblemData& data, const FaceSet& k);

// ||theta|| ||v-w|| - <theta, v-w> in the weighted geometry; the optimal-time
// cost of a free segment. Valid for any covariance.
double direct_cost(const Vec3& w, const Vec3& v, const ProblemData& data);

struct ReflectedCost {
  double value = 0.0;
  // The closed form is attained (pushing on every face of K is active) only
  // when the reflectivity condition holds; otherwise it is a lower bound.
  bool attained = true;
  // Set when the value came from the numeric fallback rather than the
  // identity-covariance closed form.
  bool numeric = false;
};

// One-piece cost of a segment confined to F_K with displacement v - w. With
// identity covariance this is ||A d|| ||A theta|| - <A theta, A d>; for
// general covariance the numeric constrained minimization is used instead.
ReflectedCost reflected_cost(const FaceSet& k, const Vec3& w, const Vec3& v,
                             const ProblemData& data);

struct Reflectivity {
  Eigen::VectorXd vector;  // (||A theta|| / ||A v||) B v - B theta
  bool positive = false;   // all components strictly positive
};

// Positivity certificate that the one-piece closed form is attained with all
// reflection vectors of K active. Requires identity covariance and A v != 0.
Reflectivity reflectivity_check(const FaceSet& k, const Vec3& v,
                                const ProblemData& data);

// Attained one-piece optimum: cost together with the minimizing duration and
// pushing rates (zero outside K). Enforces y >= 0, so the cost is feasible
// for any covariance; equals the closed form whenever reflectivity holds.
struct SegmentPlan {
  double cost = 0.0;
  double duration = 0.0;
  Vec3 ydot = Vec3::Zero();
};
SegmentPlan plan_segment(const FaceSet& k, const Vec3& w, const Vec3& v,
                         const ProblemData& data);

// Builds the corresponding one-piece triple segment from w to v.
Segment planned_segment(const FaceSet& k, const Vec3& w, const Vec3& v,
                        const ProblemData& data);

struct Minimized {
  double value = 0.0;
  Vec3 argmin = Vec3::Zero();
};

// inf over w in F_K of  refl_K(0,w) + direct(w,v); |K|=1 searches the face,
// |K|=2 the axis. Requires v outside F_K.
Minimized two_piece_via_face(const FaceSet& k, const Vec3& v,
                             const ProblemData& data);

// inf over w in F_K of  refl_K(0,w) + refl_i(w,v) for an axis K, i in K and
// v on the face F_i.
Minimized two_piece_via_axis(const FaceSet& k, int i1, const Vec3& v,
                             const ProblemData& data);

// inf over u in F_i of  two_piece_via_axis(K,i,u) + direct(u,v) for interior
// targets; nested minimization.
Minimized three_piece_gradual(const FaceSet& k, int i1, const Vec3& v,
                              const ProblemData& data);

}  // namespace ovp

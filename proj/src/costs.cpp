#include "ovp/costs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ovp/detail/minimize.hpp"

namespace ovp {

namespace {

void require_identity_gamma(const ProblemData& data, const char* what) {
  if (!data.identity_gamma()) {
    std::ostringstream os;
    os << what << " requires identity covariance";
    throw std::invalid_argument(os.str());
  }
}

void require_face_displacement(const FaceSet& k, const Vec3& d) {
  for (int i : k.indices0())
    if (std::abs(d(i)) > tol::position) {
      std::ostringstream os;
      os << "displacement leaves " << FaceSet::of({i + 1}).name()
         << "-pinned coordinates: component " << (i + 1) << " moves by "
         << d(i);
      throw std::invalid_argument(os.str());
    }
}

Eigen::Matrix<double, 3, Eigen::Dynamic> stacked_columns(
    const ProblemData& data, const FaceSet& k) {
  Eigen::Matrix<double, 3, Eigen::Dynamic> rk(3, k.size());
  int col = 0;
  for (int i : k.indices0()) rk.col(col++) = data.r().col(i);
  return rk;
}

// Cost of a one-piece segment with pushing rates y (on the faces of K) after
// minimizing over the duration: ||theta + R_K y|| ||d|| - <theta + R_K y, d>.
double duration_minimized_cost(const Vec3& d, const Vec3& push,
                               const ProblemData& data) {
  Vec3 drift = data.theta() + push;
  return norm(drift, data) * norm(d, data) - inner(drift, d, data);
}

// Constrained minimization over y >= 0, one golden section per face of K,
// nested for |K| = 2, seeded by a coarse scan. The objective is convex in y.
SegmentPlan constrained_plan(const FaceSet& k, const Vec3& d,
                             const ProblemData& data) {
  auto rk = stacked_columns(data, k);
  double ymax = 64.0 * (1.0 + data.theta().cwiseAbs().maxCoeff());
  const double xtol = 1e-12;

  SegmentPlan plan;
  if (k.size() == 0) {
    plan.cost = duration_minimized_cost(d, Vec3::Zero(), data);
  } else if (k.size() == 1) {
    auto f = [&](double y) {
      return duration_minimized_cost(d, rk.col(0) * y, data);
    };
    for (int expand = 0; expand < 4; ++expand) {
      auto m = detail::scan_golden_min(f, 0.0, ymax, 64, xtol);
      if (m.x < ymax * 0.98 || expand == 3) {
        plan.cost = m.value;
        plan.ydot(k.indices0()[0]) = m.x;
        break;
      }
      ymax *= 8.0;
    }
  } else if (k.size() == 2) {
    auto f = [&](double y0, double y1) {
      return duration_minimized_cost(d, rk.col(0) * y0 + rk.col(1) * y1, data);
    };
    for (int expand = 0; expand < 4; ++expand) {
      auto m = detail::grid_golden_min(f, 0.0, ymax, 0.0, ymax, 16, xtol);
      if ((m.x < ymax * 0.98 && m.y < ymax * 0.98) || expand == 3) {
        plan.cost = m.value;
        plan.ydot(k.indices0()[0]) = m.x;
        plan.ydot(k.indices0()[1]) = m.y;
        break;
      }
      ymax *= 8.0;
    }
  } else {
    throw std::invalid_argument("one-piece cost is not defined for |K| = 3");
  }

  Vec3 drift = data.theta() + data.r() * plan.ydot;
  double dn = norm(drift, data);
  plan.duration = dn > tol::rate ? norm(d, data) / dn
                                 : std::numeric_limits<double>::infinity();
  // y rates are per unit time at the optimal duration.
  return plan;
}

}  // namespace

FaceSet FaceSet::of(std::initializer_list<int> indices1) {
  FaceSet k;
  for (int i : indices1) {
    if (i < 1 || i > 3)
      throw std::invalid_argument("face indices must lie in {1,2,3}");
    if (!k.contains(i)) k.idx_.push_back(i - 1);
  }
  std::sort(k.idx_.begin(), k.idx_.end());
  return k;
}

FaceSet FaceSet::axis_to(int axis_index1) {
  if (axis_index1 < 1 || axis_index1 > 3)
    throw std::invalid_argument("axis index must lie in {1,2,3}");
  FaceSet k;
  for (int i = 0; i < 3; ++i)
    if (i != axis_index1 - 1) k.idx_.push_back(i);
  return k;
}

bool FaceSet::contains(int index1) const {
  return std::find(idx_.begin(), idx_.end(), index1 - 1) != idx_.end();
}

std::string FaceSet::name() const {
  std::string s = "{";
  for (size_t i = 0; i < idx_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx_[i] + 1);
  }
  return s + "}";
}

ProjectionPair projection(const ProblemData& data, const FaceSet& k) {
  require_identity_gamma(data, "projection");
  ProjectionPair p;
  p.b.resize(k.size(), 3);
  if (k.size() == 0) return p;
  if (k.size() == 3)
    throw std::invalid_argument("projection is not defined for |K| = 3");
  auto rk = stacked_columns(data, k);
  Eigen::MatrixXd gram = rk.transpose() * rk;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible())
    throw std::invalid_argument(
        "reflection columns for " + k.name() +
        " are collinear; projection is undefined");
  p.b = lu.solve(rk.transpose());
  p.a = Mat3::Identity() - rk * p.b;
  return p;
}

double direct_cost(const Vec3& w, const Vec3& v, const ProblemData& data) {
  Vec3 d = v - w;
  return norm(data.theta(), data) * norm(d, data) - inner(data.theta(), d, data);
}

Reflectivity reflectivity_check(const FaceSet& k, const Vec3& v,
                                const ProblemData& data) {
  require_identity_gamma(data, "reflectivity_check");
  Reflectivity res;
  res.vector.resize(k.size());
  if (k.size() == 0) {
    res.positive = true;  // vacuous
    return res;
  }
  ProjectionPair p = projection(data, k);
  double av = (p.a * v).norm();
  if (av <= tol::rate)
    throw std::invalid_argument(
        "reflectivity_check: v lies in the kernel of the face projection");
  double at = (p.a * data.theta()).norm();
  res.vector = (at / av) * (p.b * v) - p.b * data.theta();
  res.positive = (res.vector.array() > tol::strict).all();
  return res;
}

ReflectedCost reflected_cost(const FaceSet& k, const Vec3& w, const Vec3& v,
                             const ProblemData& data) {
  Vec3 d = v - w;
  require_face_displacement(k, d);
  ReflectedCost out;
  if (k.size() == 0) {
    out.value = direct_cost(w, v, data);
    return out;
  }
  if (!data.identity_gamma()) {
    // The projection closed form is only available for identity covariance;
    // fall back to the constrained numeric optimum.
    out.value = constrained_plan(k, d, data).cost;
    out.numeric = true;
    return out;
  }
  ProjectionPair p = projection(data, k);
  Vec3 ad = p.a * d;
  Vec3 at = p.a * data.theta();
  out.value = ad.norm() * at.norm() - at.dot(ad);
  if (ad.norm() > tol::rate)
    out.attained = reflectivity_check(k, d, data).positive;
  else
    out.attained = false;
  return out;
}

SegmentPlan plan_segment(const FaceSet& k, const Vec3& w, const Vec3& v,
                         const ProblemData& data) {
  Vec3 d = v - w;
  require_face_displacement(k, d);
  if (k.size() > 0 && data.identity_gamma()) {
    ProjectionPair p = projection(data, k);
    Vec3 ad = p.a * d;
    double adn = ad.norm();
    if (adn > tol::rate) {
      Vec3 at = p.a * data.theta();
      Eigen::VectorXd y = (at.norm() / adn) * (p.b * d) - p.b * data.theta();
      if ((y.array() >= 0.0).all() && at.norm() > tol::rate) {
        SegmentPlan plan;
        plan.cost = adn * at.norm() - at.dot(ad);
        plan.duration = adn / at.norm();
        int col = 0;
        for (int i : k.indices0()) plan.ydot(i) = y(col++);
        return plan;
      }
    }
  }
  return constrained_plan(k, d, data);
}

Segment planned_segment(const FaceSet& k, const Vec3& w, const Vec3& v,
                        const ProblemData& data) {
  SegmentPlan plan = plan_segment(k, w, v, data);
  if (!std::isfinite(plan.duration) || plan.duration <= 0.0)
    throw std::runtime_error("one-piece segment has no finite optimal duration");
  return reflected_segment(data, w, v, plan.duration, plan.ydot);
}

namespace {

// Shared driver for the two-piece searches over a face (2 free coordinates)
// or an axis (1 free coordinate). `leg` maps the pivot w to the second-leg
// cost.
template <class Leg>
Minimized minimize_over_face(const FaceSet& k, const Vec3& v,
                             const ProblemData& data, Leg&& leg) {
  double box = 4.0 * v.norm();
  if (box <= 0.0) box = 1.0;
  const double xtol = 1e-10;
  Minimized out;
  if (k.size() == 1) {
    int pinned = k.indices0()[0];
    int f0 = (pinned + 1) % 3, f1 = (pinned + 2) % 3;
    auto obj = [&](double a, double b) {
      Vec3 w = Vec3::Zero();
      w(f0) = a;
      w(f1) = b;
      return reflected_cost(k, Vec3::Zero(), w, data).value + leg(w);
    };
    auto m = detail::grid_golden_min(obj, 0.0, box, 0.0, box, 32, xtol);
    out.value = m.value;
    out.argmin = Vec3::Zero();
    out.argmin(f0) = m.x;
    out.argmin(f1) = m.y;
  } else if (k.size() == 2) {
    int free_axis = 3 - k.indices0()[0] - k.indices0()[1];
    auto obj = [&](double c) {
      Vec3 w = Vec3::Zero();
      w(free_axis) = c;
      return reflected_cost(k, Vec3::Zero(), w, data).value + leg(w);
    };
    auto m = detail::scan_golden_min(obj, 0.0, box, 64, xtol);
    out.value = m.value;
    out.argmin = Vec3::Zero();
    out.argmin(free_axis) = m.x;
  } else {
    throw std::invalid_argument("pivot set must name a face or an axis");
  }
  if (!std::isfinite(out.value))
    throw std::runtime_error("two-piece minimization failed to converge");
  return out;
}

}  // namespace

Minimized two_piece_via_face(const FaceSet& k, const Vec3& v,
                             const ProblemData& data) {
  bool on_face = true;
  for (int i : k.indices0())
    if (std::abs(v(i)) > tol::position) on_face = false;
  if (k.size() == 0 || on_face)
    throw std::invalid_argument(
        "two-piece target must lie outside the pivot face");
  return minimize_over_face(k, v, data,
                            [&](const Vec3& w) { return direct_cost(w, v, data); });
}

namespace {

Minimized two_piece_axis_value(const FaceSet& k, int i1, const Vec3& v,
                               const ProblemData& data) {
  FaceSet face_i = FaceSet::of({i1});
  return minimize_over_face(k, v, data, [&](const Vec3& w) {
    return reflected_cost(face_i, w, v, data).value;
  });
}

}  // namespace

Minimized two_piece_via_axis(const FaceSet& k, int i1, const Vec3& v,
                             const ProblemData& data) {
  if (k.size() != 2 || !k.contains(i1))
    throw std::invalid_argument("axis pivot requires |K| = 2 with i in K");
  if (std::abs(v(i1 - 1)) > tol::position)
    throw std::invalid_argument("target must lie on the face F_i");
  bool on_axis = true;
  for (int i : k.indices0())
    if (std::abs(v(i)) > tol::position) on_axis = false;
  if (on_axis)
    throw std::invalid_argument("target on the pivot axis is degenerate");
  return two_piece_axis_value(k, i1, v, data);
}

Minimized three_piece_gradual(const FaceSet& k, int i1, const Vec3& v,
                              const ProblemData& data) {
  if (k.size() != 2 || !k.contains(i1))
    throw std::invalid_argument("escape route requires |K| = 2 with i in K");
  if ((v.array() <= tol::position).any())
    throw std::invalid_argument("three-piece target must be interior");
  double box = 4.0 * v.norm();
  const double xtol = 1e-10;
  int pinned = i1 - 1;
  int f0 = (pinned + 1) % 3, f1 = (pinned + 2) % 3;
  auto obj = [&](double a, double b) {
    Vec3 u = Vec3::Zero();
    u(f0) = a;
    u(f1) = b;
    return two_piece_axis_value(k, i1, u, data).value +
           direct_cost(u, v, data);
  };
  auto m = detail::grid_golden_min(obj, 0.0, box, 0.0, box, 32, xtol);
  if (!std::isfinite(m.value))
    throw std::runtime_error("three-piece minimization failed to converge");
  Minimized out;
  out.value = m.value;
  out.argmin = Vec3::Zero();
  out.argmin(f0) = m.x;
  out.argmin(f1) = m.y;
  return out;
}

}  // namespace ovp

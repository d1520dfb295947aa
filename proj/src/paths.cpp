#include "ovp/paths.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ovp {

namespace {

Vec3 shift_vec(const Vec3& v, int s) {
  // shift 1: (a,b,c) -> (b,c,a)
  Vec3 out;
  for (int i = 0; i < 3; ++i) out(i) = v((i + s) % 3);
  return out;
}

}  // namespace

Segment::Segment(double duration_, const Vec3& z_start_, const Vec3& xdot_,
                 const Vec3& ydot_, const Vec3& zdot_)
    : duration(duration_),
      z_start(z_start_),
      xdot(xdot_),
      ydot(ydot_),
      zdot(zdot_) {
  if (!(duration > 0.0))
    throw std::invalid_argument("segment duration must be positive");
}

Segment direct_segment(const Vec3& from, const Vec3& to, double duration) {
  Vec3 rate = (to - from) / duration;
  return Segment(duration, from, rate, Vec3::Zero(), rate);
}

Segment reflected_segment(const ProblemData& data, const Vec3& from,
                          const Vec3& to, double duration, const Vec3& ydot) {
  Vec3 zdot = (to - from) / duration;
  Vec3 xdot = zdot - data.r() * ydot;
  return Segment(duration, from, xdot, ydot, zdot);
}

double RegulationTriple::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  const Violation& v = violations.front();
  os << "violated " << v.condition << " at segment " << v.segment << ": "
     << v.detail << " (" << violations.size() << " violation(s) total)";
  return os.str();
}

ValidationReport validate_triple(const RegulationTriple& path,
                                 const ProblemData& data) {
  ValidationReport rep;
  auto add = [&](int seg, const char* cond, const std::string& detail) {
    rep.violations.push_back({seg, cond, detail});
  };

  if ((path.origin.array() < -tol::position).any())
    add(-1, "octant", "origin has a negative coordinate");

  Vec3 expected_start = path.origin;
  for (int i = 0; i < int(path.segments.size()); ++i) {
    const Segment& s = path.segments[i];
    std::ostringstream detail;

    if (!(s.duration > 0.0)) add(i, "duration", "non-positive duration");

    Vec3 residual = s.zdot - s.xdot - data.r() * s.ydot;
    if (residual.cwiseAbs().maxCoeff() > tol::rate) {
      detail << "z' - x' - R y' = " << residual.transpose();
      add(i, "rate identity", detail.str());
    }

    if ((s.z_start.array() < -tol::position).any() ||
        (s.z_end().array() < -tol::position).any())
      add(i, "octant", "segment leaves the nonnegative octant");

    if ((s.ydot.array() < -tol::rate).any())
      add(i, "monotone pushing", "negative pushing rate");

    for (int j = 0; j < 3; ++j) {
      if (s.ydot(j) > tol::rate &&
          (std::abs(s.z_start(j)) > tol::position ||
           std::abs(s.zdot(j)) > tol::rate)) {
        std::ostringstream d2;
        d2 << "coordinate " << (j + 1) << " is pushed while z is off the face";
        add(i, "complementarity", d2.str());
      }
    }

    if ((s.z_start - expected_start).cwiseAbs().maxCoeff() > tol::position)
      add(i, "continuity", "segment start does not match previous endpoint");
    expected_start = s.z_end();
  }
  return rep;
}

double path_cost(const RegulationTriple& path, const ProblemData& data) {
  ValidationReport rep = validate_triple(path, data);
  if (!rep.valid())
    throw std::invalid_argument("path_cost on invalid path: " + rep.summary());
  double cost = 0.0;
  for (const auto& s : path.segments) {
    Vec3 dev = s.xdot - data.theta();
    cost += 0.5 * inner(dev, dev, data) * s.duration;
  }
  return cost;
}

RegulationTriple scale_path(const RegulationTriple& path, double k) {
  if (!(k > 0.0))
    throw std::invalid_argument("scale factor must be positive");
  RegulationTriple out;
  out.origin = k * path.origin;
  out.segments.reserve(path.segments.size());
  for (const auto& s : path.segments)
    out.segments.emplace_back(k * s.duration, k * s.z_start, s.xdot, s.ydot,
                              s.zdot);
  return out;
}

RegulationTriple rotate_path(const RegulationTriple& path, int shift) {
  if (shift != 1 && shift != 2)
    throw std::invalid_argument("shift must be 1 or 2");
  RegulationTriple out;
  out.origin = shift_vec(path.origin, shift);
  out.segments.reserve(path.segments.size());
  for (const auto& s : path.segments)
    out.segments.emplace_back(s.duration, shift_vec(s.z_start, shift),
                              shift_vec(s.xdot, shift),
                              shift_vec(s.ydot, shift),
                              shift_vec(s.zdot, shift));
  return out;
}

RegulationTriple merge_paths(const RegulationTriple& p1,
                             const RegulationTriple& p2) {
  if ((p1.terminal() - p2.origin).cwiseAbs().maxCoeff() > tol::position) {
    std::ostringstream os;
    os << "cannot merge: first path ends at " << p1.terminal().transpose()
       << " but second starts at " << p2.origin.transpose();
    throw std::invalid_argument(os.str());
  }
  RegulationTriple out = p1;
  out.segments.insert(out.segments.end(), p2.segments.begin(),
                      p2.segments.end());
  return out;
}

}  // namespace ovp

#include "ovp/stability.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ovp {

namespace {

// Exact test for a 2x2 S-matrix [[a,b],[c,d]]: exists s > 0 with
// a + b s > 0 and c + d s > 0 (u = (1, s) after normalizing u_1).
// The u_1 = 0 limit is covered by s -> infinity, i.e. b > 0 and d > 0.
bool s_matrix_2x2(double a, double b, double c, double d) {
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  auto clip = [&](double p, double q) {  // p + q s > 0
    if (q > 0.0) {
      lo = std::max(lo, -p / q);
    } else if (q < 0.0) {
      hi = std::min(hi, -p / q);
    } else if (p <= 0.0) {
      lo = std::numeric_limits<double>::infinity();
    }
  };
  clip(a, b);
  clip(c, d);
  if (b > 0.0 && d > 0.0) return true;  // arbitrarily steep u works
  return lo < hi;
}

// max t s.t. u_i >= t, (R u)_i >= t, sum u = 1, by enumerating basic
// solutions (triples of active inequalities plus the normalization).
double s_matrix_3x3_margin(const Mat3& r) {
  // Constraint rows in the form g_k . (u, t) >= 0.
  Eigen::Matrix<double, 6, 4> g;
  g.setZero();
  for (int i = 0; i < 3; ++i) {
    g(i, i) = 1.0;
    g(i, 3) = -1.0;
    for (int j = 0; j < 3; ++j) g(3 + i, j) = r(i, j);
    g(3 + i, 3) = -1.0;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        Eigen::Matrix4d m;
        m.row(0) = g.row(a);
        m.row(1) = g.row(b);
        m.row(2) = g.row(c);
        m.row(3) << 1, 1, 1, 0;  // sum u = 1
        Eigen::Vector4d rhs(0, 0, 0, 1);
        Eigen::FullPivLU<Eigen::Matrix4d> lu(m);
        if (!lu.isInvertible()) continue;
        Eigen::Vector4d x = lu.solve(rhs);
        bool feasible = true;
        for (int k = 0; k < 6 && feasible; ++k)
          if (g.row(k).dot(x) < -1e-12) feasible = false;
        if (feasible) best = std::max(best, x(3));
      }
  return best;
}

bool s_matrix_3x3(const Mat3& r) {
  Vec3 ones = Vec3::Ones();
  if (((r * ones).array() > 0.0).all()) return true;
  return s_matrix_3x3_margin(r) > tol::strict;
}

double minor2(const Mat3& r, int i, int j) {
  return r(i, i) * r(j, j) - r(i, j) * r(j, i);
}

}  // namespace

bool is_completely_s(const Mat3& r) {
  for (int i = 0; i < 3; ++i)
    if (!(r(i, i) > 0.0)) {
      // 1x1 principal submatrix fails unless strictly positive.
      return false;
    }
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : pairs)
    if (!s_matrix_2x2(r(i, i), r(i, j), r(j, i), r(j, j))) return false;
  return s_matrix_3x3(r);
}

bool is_p_matrix(const Mat3& r) {
  for (int i = 0; i < 3; ++i)
    if (!(r(i, i) > 0.0)) return false;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : pairs)
    if (!(minor2(r, i, j) > 0.0)) return false;
  return r.determinant() > 0.0;
}

LcpResult solve_lcp(const Vec3& theta, const Mat3& r) {
  LcpResult result;
  for (int mask = 0; mask < 8; ++mask) {
    // u_i free for i in the support, v_i free off it; solve the square
    // system v = theta + R u with the complementary components pinned to 0.
    int n = 0;
    std::array<int, 3> idx{};
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) idx[n++] = i;

    Vec3 u = Vec3::Zero(), v = Vec3::Zero();
    if (n > 0) {
      Eigen::MatrixXd sys(n, n);
      Eigen::VectorXd rhs(n);
      for (int a = 0; a < n; ++a) {
        rhs(a) = -theta(idx[a]);
        for (int b = 0; b < n; ++b) sys(a, b) = r(idx[a], idx[b]);
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
      if (!lu.isInvertible()) {
        result.degenerate_supports.push_back(mask);
        continue;
      }
      Eigen::VectorXd sol = lu.solve(rhs);
      for (int a = 0; a < n; ++a) u(idx[a]) = sol(a);
    }
    v = theta + r * u;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) v(i) = 0.0;  // clear solver residue on the support

    if ((u.array() < -tol::boundary).any() || (v.array() < -tol::boundary).any())
      continue;
    LcpSolution s;
    s.u = u;
    s.v = v;
    s.support = mask;
    s.kind = (v.cwiseAbs().maxCoeff() <= tol::boundary) ? LcpKind::Stable
                                                        : LcpKind::Divergent;
    result.solutions.push_back(s);
  }
  return result;
}

std::optional<double> beta_ratio(double theta0, double r1, double r2) {
  if (!(theta0 < 0.0)) return std::nullopt;
  if (r1 < 1.0 && r2 > 1.0) {
    double q = (1.0 - r2) / (r1 - 1.0);
    return q * q * q;
  }
  if (r1 > 1.0 && r2 < 1.0) {
    double q = (r1 - 1.0) / (1.0 - r2);
    return q * q * q;
  }
  return std::nullopt;
}

StabilityReport classify_stability(const RsParams& params) {
  const double r1 = params.r1, r2 = params.r2, theta0 = params.theta0;
  StabilityReport rep;
  Mat3 r = rs_reflection(r1, r2);
  rep.completely_s = is_completely_s(r);
  rep.p_matrix = is_p_matrix(r);
  rep.closed_form_stable =
      theta0 < 0.0 && -1.0 < r1 + r2 && r1 + r2 < 2.0;
  rep.lcp = solve_lcp(Vec3::Constant(theta0), r);

  bool singular = std::abs(r1 - 1.0) <= tol::boundary &&
                  std::abs(r2 - 1.0) <= tol::boundary;
  if (singular)
    rep.region = StabilityRegion::SingularPoint;
  else if (r1 < 1.0 && r2 > 1.0)
    rep.region = StabilityRegion::C1;
  else if (r1 > 1.0 && r2 < 1.0)
    rep.region = StabilityRegion::C2;
  else if (r1 >= 1.0 && r2 >= 1.0)
    rep.region = StabilityRegion::C3;
  else
    rep.region = StabilityRegion::C4;

  rep.beta = beta_ratio(theta0, r1, r2);

  // Decision flow: existence first, then negative inward drift (R^-1 theta<0,
  // equivalent to theta0<0 once the matrix is completely-S and non-singular),
  // then the region test. The boundary-cycle ratio decides all of C1 and C2,
  // including the r1+r2=2 segment they contain; elsewhere stability is the
  // absence of a divergent complementarity solution.
  if (!rep.completely_s || singular) {
    rep.stable = false;
    return rep;
  }
  RInverse ri = rs_r_inverse(r1, r2);
  Vec3 r_inv_theta = ri.matrix() * Vec3::Constant(theta0);
  if (!(r_inv_theta.array() < 0.0).all()) {
    rep.stable = false;
    return rep;
  }
  if (rep.region == StabilityRegion::C1 || rep.region == StabilityRegion::C2) {
    rep.stable = rep.beta.has_value() && *rep.beta < 1.0;
  } else {
    bool divergent = false;
    for (const auto& s : rep.lcp.solutions)
      if (s.kind == LcpKind::Divergent) divergent = true;
    rep.stable = !divergent;
  }
  return rep;
}

}  // namespace ovp

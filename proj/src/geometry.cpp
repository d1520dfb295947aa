#include "ovp/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ovp {

namespace {

bool nearly(double a, double b, double scale) {
  return std::abs(a - b) <= tol::matrix_identity * std::max(1.0, scale);
}

std::optional<RsParams> detect_rs(const Vec3& theta, const Mat3& gamma,
                                  const Mat3& r) {
  double scale = r.cwiseAbs().maxCoeff() + gamma.cwiseAbs().maxCoeff() +
                 theta.cwiseAbs().maxCoeff();
  if (!nearly(r(0, 0), 1.0, scale) || !nearly(r(1, 1), 1.0, scale) ||
      !nearly(r(2, 2), 1.0, scale))
    return std::nullopt;
  double r2 = r(0, 1), r1 = r(0, 2);
  if (!nearly(r(1, 2), r2, scale) || !nearly(r(2, 0), r2, scale) ||
      !nearly(r(1, 0), r1, scale) || !nearly(r(2, 1), r1, scale))
    return std::nullopt;
  double th = theta(0);
  if (!nearly(theta(1), th, scale) || !nearly(theta(2), th, scale))
    return std::nullopt;
  double s2 = gamma(0, 0);
  if (!nearly(gamma(1, 1), s2, scale) || !nearly(gamma(2, 2), s2, scale))
    return std::nullopt;
  double off = gamma(0, 1);
  if (!nearly(gamma(0, 2), off, scale) || !nearly(gamma(1, 2), off, scale))
    return std::nullopt;
  RsParams p;
  p.theta0 = th;
  p.r1 = r1;
  p.r2 = r2;
  p.sigma2 = s2;
  p.rho = off / s2;
  return p;
}

}  // namespace

Mat3 rs_reflection(double r1, double r2) {
  Mat3 r;
  r << 1, r2, r1,
       r1, 1, r2,
       r2, r1, 1;
  return r;
}

Mat3 rs_covariance(double sigma2, double rho) {
  Mat3 g;
  g << 1, rho, rho,
       rho, 1, rho,
       rho, rho, 1;
  return sigma2 * g;
}

Mat3 GammaInverse::matrix() const {
  Mat3 m;
  m << gamma0, gamma1, gamma1,
       gamma1, gamma0, gamma1,
       gamma1, gamma1, gamma0;
  return m / sigma2;
}

Mat3 RInverse::matrix() const {
  Mat3 m;
  m << a, b, c,
       c, a, b,
       b, c, a;
  return m;
}

ProblemData::ProblemData(const Vec3& theta, const Mat3& gamma, const Mat3& r)
    : theta_(theta), gamma_(gamma), r_(r) {
  double scale = gamma.cwiseAbs().maxCoeff();
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() >
      tol::matrix_identity * std::max(1.0, scale))
    throw std::invalid_argument("covariance matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat3> es(gamma);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument(
        "covariance matrix is not strictly positive definite");
  gamma_inv_ = gamma.inverse();
  identity_gamma_ =
      (gamma - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol::matrix_identity;
  rs_ = detect_rs(theta, gamma, r);
}

ProblemData ProblemData::from_rs(const RsParams& p) {
  if (p.sigma2 <= 0.0)
    throw std::invalid_argument("sigma2 must be positive");
  if (p.rho <= -0.5 || p.rho >= 1.0)
    throw std::invalid_argument(
        "rho must lie in (-1/2, 1) for a positive definite covariance");
  ProblemData data(Vec3::Constant(p.theta0), rs_covariance(p.sigma2, p.rho),
                   rs_reflection(p.r1, p.r2));
  data.rs_ = p;
  return data;
}

double inner(const Vec3& v, const Vec3& w, const ProblemData& data) {
  return v.dot(data.gamma_inverse() * w);
}

double norm(const Vec3& v, const ProblemData& data) {
  return std::sqrt(std::max(0.0, inner(v, v, data)));
}

GammaInverse rs_gamma_inverse(double sigma2, double rho) {
  if (sigma2 <= 0.0)
    throw std::invalid_argument("sigma2 must be positive");
  if (rho <= -0.5 || rho >= 1.0)
    throw std::invalid_argument("covariance is singular or indefinite: rho "
                                "must lie in (-1/2, 1)");
  // Solve gamma0 + 2 rho gamma1 = 1, gamma1 + rho (gamma0 + gamma1) = 0.
  double den = (1.0 - rho) * (1.0 + 2.0 * rho);
  GammaInverse gi;
  gi.gamma0 = (1.0 + rho) / den;
  gi.gamma1 = -rho / den;
  gi.sigma2 = sigma2;
  return gi;
}

RInverse rs_r_inverse(double r1, double r2) {
  double det = 1.0 + r1 * r1 * r1 + r2 * r2 * r2 - 3.0 * r1 * r2;
  if (std::abs(det) <= tol::matrix_identity *
                           std::max(1.0, std::abs(r1) + std::abs(r2))) {
    std::ostringstream msg;
    msg << "reflection matrix is singular: 1 + r1^3 + r2^3 - 3 r1 r2 = " << det
        << " at r1=" << r1 << ", r2=" << r2;
    throw std::invalid_argument(msg.str());
  }
  RInverse ri;
  ri.a = (1.0 - r1 * r2) / det;
  ri.b = (r1 * r1 - r2) / det;
  ri.c = (r2 * r2 - r1) / det;
  return ri;
}

bool is_skew_symmetric(const ProblemData& data) {
  const Mat3& r = data.r();
  for (int i = 0; i < 3; ++i)
    if (std::abs(r(i, i)) <= tol::matrix_identity)
      throw std::invalid_argument("reflection matrix has a zero diagonal entry");
  Mat3 d_inv = Mat3::Zero();
  Mat3 lambda = Mat3::Zero();
  for (int i = 0; i < 3; ++i) {
    d_inv(i, i) = 1.0 / r(i, i);
    lambda(i, i) = data.gamma()(i, i);
  }
  Mat3 lhs = 2.0 * data.gamma();
  Mat3 rhs = r * d_inv * lambda + lambda * d_inv * r.transpose();
  double scale = lhs.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
  return (lhs - rhs).cwiseAbs().maxCoeff() <=
         tol::matrix_identity * std::max(1.0, scale);
}

}  // namespace ovp

#pragma once

#include <Eigen/Dense>
#include <optional>

#include "ovp/config.hpp"

namespace ovp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Rotationally symmetric parameterization: circulant reflection matrix with
// off-diagonals (r1, r2), constant drift theta0, equicorrelated covariance.
struct RsParams {
  double theta0 = -1.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double sigma2 = 1.0;
  double rho = 0.0;

  bool mirror_symmetric() const { return r1 == r2; }
};

Mat3 rs_reflection(double r1, double r2);
Mat3 rs_covariance(double sigma2, double rho);

// Circulant-symmetric inverse of the equicorrelated covariance:
// inverse = sigma^-2 * (gamma0 on the diagonal, gamma1 off it).
struct GammaInverse {
  double gamma0 = 1.0;
  double gamma1 = 0.0;
  double sigma2 = 1.0;
  Mat3 matrix() const;
};

// Circulant inverse of the rotationally symmetric reflection matrix; rows are
// (a,b,c), (c,a,b), (b,c,a).
struct RInverse {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  Mat3 matrix() const;
};

// The (theta, Gamma, R) triple. Construction validates that Gamma is
// symmetric positive definite and caches its inverse.
class ProblemData {
 public:
  ProblemData(const Vec3& theta, const Mat3& gamma, const Mat3& r);

  static ProblemData from_rs(const RsParams& p);

  const Vec3& theta() const { return theta_; }
  const Mat3& gamma() const { return gamma_; }
  const Mat3& r() const { return r_; }
  const Mat3& gamma_inverse() const { return gamma_inv_; }

  // i is 1-based; reflection vectors are the columns of R.
  Vec3 reflection_column(int i) const { return r_.col(i - 1); }

  bool identity_gamma() const { return identity_gamma_; }
  bool rotationally_symmetric() const { return rs_.has_value(); }
  const std::optional<RsParams>& rs() const { return rs_; }

 private:
  Vec3 theta_;
  Mat3 gamma_;
  Mat3 r_;
  Mat3 gamma_inv_;
  bool identity_gamma_ = false;
  std::optional<RsParams> rs_;
};

// Gamma-weighted inner product v' Gamma^-1 w and its norm.
double inner(const Vec3& v, const Vec3& w, const ProblemData& data);
double norm(const Vec3& v, const ProblemData& data);

// Closed-form inverses for the rotationally symmetric matrices. Both throw
// std::invalid_argument on singular / out-of-range input.
GammaInverse rs_gamma_inverse(double sigma2, double rho);
RInverse rs_r_inverse(double r1, double r2);

// Skew-symmetry of the data: 2*Gamma == R D^-1 L + L D^-1 R', with
// D = diag(R) and L = diag(Gamma), checked entrywise at the global relative
// tolerance. Throws if R has a zero diagonal entry.
bool is_skew_symmetric(const ProblemData& data);

}  // namespace ovp

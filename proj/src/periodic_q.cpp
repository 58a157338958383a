#include "pdgtd/periodic_q.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

PeriodicQ assemble_Q(const Material& mat, const IncidenceConfig& inc, const Units& units) {
  const double s2 = std::sin(inc.theta) * std::sin(inc.theta);
  if (!(mat.eps_r * mat.mu_r > s2))
    throw MaterialError("grazing-incidence breakdown: eps_r*mu_r <= sin^2(theta), Q singular");

  PeriodicQ pq;
  const Eigen::Vector3d kp = inc.k_par();
  pq.kappa_x = kp.x();
  pq.kappa_y = kp.y();

  const Eigen::Matrix3d kx = cross_matrix(kp) / units.c0;
  pq.Q.setZero();
  pq.Q.topLeftCorner<3, 3>() = units.eps0 * mat.eps_r * Eigen::Matrix3d::Identity();
  pq.Q.bottomRightCorner<3, 3>() = units.mu0 * mat.mu_r * Eigen::Matrix3d::Identity();
  pq.Q.topRightCorner<3, 3>() = kx;
  pq.Q.bottomLeftCorner<3, 3>() = -kx;
  pq.Qinv = pq.Q.inverse();
  return pq;
}

Eigen::MatrixXd expand_Q(const Matrix6d& Q, int np) {
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(6 * np, 6 * np);
  for (int c = 0; c < 6; ++c)
    for (int d = 0; d < 6; ++d)
      big.block(c * np, d * np, np, np) = Q(c, d) * Eigen::MatrixXd::Identity(np, np);
  return big;
}

}  // namespace pdgtd

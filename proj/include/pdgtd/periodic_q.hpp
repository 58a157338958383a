#ifndef PDGTD_PERIODIC_Q_HPP
#define PDGTD_PERIODIC_Q_HPP

#include <Eigen/Dense>

#include "pdgtd/incidence.hpp"
#include "pdgtd/materials.hpp"

namespace pdgtd {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Periodic/materials matrix coupling the transformed fields:
//   Q = [ eps I           c0^-1 [k_par]x ]
//       [ -c0^-1 [k_par]x      mu I      ]
// Symmetric, and positive definite whenever eps_r mu_r > sin^2(theta).
struct PeriodicQ {
  Matrix6d Q;
  Matrix6d Qinv;
  double kappa_x = 0.0;
  double kappa_y = 0.0;
};

PeriodicQ assemble_Q(const Material& mat, const IncidenceConfig& inc, const Units& units);

// Cross-product matrix [v]x with [v]x w = v x w.
Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& v);

// The 6Np x 6Np node-expanded form (block c,c' is Q(c,c') * I_Np), for
// checking equivalence with the per-node application.
Eigen::MatrixXd expand_Q(const Matrix6d& Q, int np);

}  // namespace pdgtd

#endif

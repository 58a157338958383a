#ifndef PDGTD_FLUX_HPP
#define PDGTD_FLUX_HPP

#include <Eigen/Dense>

#include "pdgtd/incidence.hpp"

namespace pdgtd {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// Periodic upwind flux, n.(F - F*):
//   upper = -(Z+ + Z-)^-1 n x (Z+ [S] - n x [P])
//   lower =  (Y+ + Y-)^-1 n x (Y+ [P] + n x [S])
// with [P] = P+ - P-. Identical in form to the untransformed Maxwell flux.
inline Vector6d numerical_flux(const Eigen::Vector3d& jump_p, const Eigen::Vector3d& jump_s,
                               double z_plus, double z_minus, double y_plus, double y_minus,
                               const Eigen::Vector3d& n) {
  const double zbar = z_plus + z_minus;
  const double ybar = y_plus + y_minus;
  Vector6d out;
  out.head<3>() = -(n.cross(z_plus * jump_s - n.cross(jump_p))) / zbar;
  out.tail<3>() = (n.cross(y_plus * jump_p + n.cross(jump_s))) / ybar;
  return out;
}

enum class BcKind { Pec, Abc, Tfsf };

// Boundary-condition jumps. For TF/SF the caller supplies exterior traces and
// incident values; `total_side` is true when the face belongs to a total-field
// element (incident added to the exterior trace) and false on the scattered
// side (incident subtracted).
void bc_jump(BcKind kind, Polarization pol, const Eigen::Vector3d& p_minus,
             const Eigen::Vector3d& s_minus, const Eigen::Vector3d& p_plus,
             const Eigen::Vector3d& s_plus, const Eigen::Vector3d& p_inc,
             const Eigen::Vector3d& s_inc, double theta, bool total_side,
             Eigen::Vector3d& jump_p, Eigen::Vector3d& jump_s);

}  // namespace pdgtd

#endif

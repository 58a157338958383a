#include "pdgtd/flux.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

void bc_jump(BcKind kind, Polarization pol, const Eigen::Vector3d& p_minus,
             const Eigen::Vector3d& s_minus, const Eigen::Vector3d& p_plus,
             const Eigen::Vector3d& s_plus, const Eigen::Vector3d& p_inc,
             const Eigen::Vector3d& s_inc, double theta, bool total_side,
             Eigen::Vector3d& jump_p, Eigen::Vector3d& jump_s) {
  switch (kind) {
    case BcKind::Pec:
      jump_p = -2.0 * p_minus;
      jump_s.setZero();
      return;
    case BcKind::Abc: {
      const double ct = std::abs(std::cos(theta));
      if (pol == Polarization::TE) {
        jump_p = -2.0 * ct * p_minus;
        jump_s = -2.0 * s_minus;
      } else {
        jump_p = -2.0 * p_minus;
        jump_s = -2.0 * ct * s_minus;
      }
      return;
    }
    case BcKind::Tfsf: {
      // The stored exterior trace lives in the other region's convention; the
      // incident wave converts it: total side adds, scattered side subtracts.
      const double sign = total_side ? 1.0 : -1.0;
      jump_p = p_plus - p_minus + sign * p_inc;
      jump_s = s_plus - s_minus + sign * s_inc;
      return;
    }
  }
  throw NumericsError("unreachable bc kind");
}

}  // namespace pdgtd

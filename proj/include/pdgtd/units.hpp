#ifndef PDGTD_UNITS_HPP
#define PDGTD_UNITS_HPP

#include <cmath>

namespace pdgtd {

// Physical constants of the background medium. SI by default; the natural
// system (c0 = eps0 = mu0 = Z0 = 1) is used by many unit tests.
struct Units {
  double c0;    // speed of light, m/s
  double eps0;  // vacuum permittivity, F/m
  double mu0;   // vacuum permeability, H/m

  double z0() const { return std::sqrt(mu0 / eps0); }

  static Units si() {
    Units u;
    u.c0 = 2.99792458e8;
    u.mu0 = 4.0e-7 * M_PI;
    u.eps0 = 1.0 / (u.mu0 * u.c0 * u.c0);
    return u;
  }

  static Units natural() { return Units{1.0, 1.0, 1.0}; }
};

}  // namespace pdgtd

#endif

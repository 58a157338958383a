#ifndef PDGTD_INCIDENCE_HPP
#define PDGTD_INCIDENCE_HPP

#include <complex>
#include <Eigen/Dense>

#include "pdgtd/units.hpp"

namespace pdgtd {

enum class Polarization { TE, TM };

// Obliquely incident planewave: direction, polarization and the modulated
// Gaussian waveform g(u) = exp(-u^2/tau^2) sin(2 pi f_c u).
struct IncidenceConfig {
  double theta = 0.0;  // radians, [0, pi/2)
  double phi = 0.0;    // radians
  Polarization pol = Polarization::TE;
  bool downward = true;  // propagation toward -z (illumination from above)

  double f_c = 0.0;      // Hz
  double tau = 0.0;      // s
  double t0 = 0.0;       // s
  double amplitude = 1.0;  // V/m

  void validate() const;

  // Waveform and its closed-form Fourier transform (per unit amplitude).
  double waveform(double u) const;
  std::complex<double> waveform_transform(double f) const;

  Eigen::Vector3d k_hat() const;   // unit propagation direction
  Eigen::Vector3d k_par() const;   // in-plane part (kappa_x, kappa_y, 0)
  Eigen::Vector3d k_perp() const;  // out-of-plane part
  Eigen::Vector3d e_pol() const;   // unit polarization vector of P

  // Chooses f_c, tau, t0 from a band: f_c at band center, tau so the spectrum
  // at the band edges is 10% of peak, t0 = 4.5 tau.
  static IncidenceConfig from_band(double theta, double phi, Polarization pol, double f_min,
                                   double f_max, double amplitude, bool downward = true);
};

// Transformed incident fields at a point: the transverse phase is removed, so
// P_inc depends on z (and t) only; S_inc = k_hat x P_inc / Z.
void incident_fields(const Eigen::Vector3d& r, double t, const IncidenceConfig& inc,
                     double medium_z, const Units& units, Eigen::Vector3d& p_inc,
                     Eigen::Vector3d& s_inc);

}  // namespace pdgtd

#endif

#include "pdgtd/incidence.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

void IncidenceConfig::validate() const {
  if (theta < 0.0 || theta >= M_PI / 2.0)
    throw ConfigError("incidence angle theta must be in [0, 90) degrees");
  if (tau <= 0.0 || f_c <= 0.0) throw ConfigError("waveform requires positive f_c and tau");
}

double IncidenceConfig::waveform(double u) const {
  return std::exp(-(u * u) / (tau * tau)) * std::sin(2.0 * M_PI * f_c * u);
}

std::complex<double> IncidenceConfig::waveform_transform(double f) const {
  // G(f) = e^{-j 2 pi f t0} (tau sqrt(pi) / 2j) [e^{-pi^2 tau^2 (f-fc)^2} - e^{-pi^2 tau^2 (f+fc)^2}]
  const double a = M_PI * tau;
  const double gm = std::exp(-a * a * (f - f_c) * (f - f_c));
  const double gp = std::exp(-a * a * (f + f_c) * (f + f_c));
  const std::complex<double> jj(0.0, 1.0);
  return std::exp(-jj * (2.0 * M_PI * f * t0)) * (tau * std::sqrt(M_PI) / (2.0 * jj)) * (gm - gp);
}

Eigen::Vector3d IncidenceConfig::k_hat() const {
  const double st = std::sin(theta), ct = std::cos(theta);
  return {st * std::cos(phi), st * std::sin(phi), downward ? -ct : ct};
}

Eigen::Vector3d IncidenceConfig::k_par() const {
  Eigen::Vector3d k = k_hat();
  k.z() = 0.0;
  return k;
}

Eigen::Vector3d IncidenceConfig::k_perp() const {
  Eigen::Vector3d k = k_hat();
  return {0.0, 0.0, k.z()};
}

Eigen::Vector3d IncidenceConfig::e_pol() const {
  // TE: perpendicular to the incidence plane; z_hat x u_hat, well defined for
  // all theta with e_TE = y_hat at phi = 0. TM: k_hat x e_TE, in-plane, giving
  // e_TM = x_hat at theta = 0, phi = 0 for downward propagation.
  const Eigen::Vector3d e_te(-std::sin(phi), std::cos(phi), 0.0);
  if (pol == Polarization::TE) return e_te;
  return k_hat().cross(e_te);
}

IncidenceConfig IncidenceConfig::from_band(double theta, double phi, Polarization pol,
                                           double f_min, double f_max, double amplitude,
                                           bool downward) {
  if (!(f_max > f_min) || f_min <= 0.0) throw ConfigError("need 0 < f_min < f_max");
  IncidenceConfig inc;
  inc.theta = theta;
  inc.phi = phi;
  inc.pol = pol;
  inc.downward = downward;
  inc.amplitude = amplitude;
  inc.f_c = 0.5 * (f_min + f_max);
  const double half_band = 0.5 * (f_max - f_min);
  inc.tau = std::sqrt(std::log(10.0)) / (M_PI * half_band);
  inc.t0 = 4.5 * inc.tau;
  inc.validate();
  return inc;
}

void incident_fields(const Eigen::Vector3d& r, double t, const IncidenceConfig& inc,
                     double medium_z, const Units& units, Eigen::Vector3d& p_inc,
                     Eigen::Vector3d& s_inc) {
  const double u = t - inc.k_perp().dot(r) / units.c0 - inc.t0;
  p_inc = inc.e_pol() * (inc.amplitude * inc.waveform(u));
  s_inc = inc.k_hat().cross(p_inc) / medium_z;
}

}  // namespace pdgtd

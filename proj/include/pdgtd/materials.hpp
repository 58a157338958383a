#ifndef PDGTD_MATERIALS_HPP
#define PDGTD_MATERIALS_HPP

#include <map>

#include "pdgtd/units.hpp"

namespace pdgtd {

struct Material {
  double eps_r = 1.0;
  double mu_r = 1.0;
};

// Lossless isotropic material table keyed by mesh material id.
class MaterialTable {
 public:
  MaterialTable() = default;
  explicit MaterialTable(Units units) : units_(units) {}

  void set(int id, Material m);
  const Material& get(int id) const;
  bool has(int id) const { return table_.count(id) > 0; }

  double eps(int id) const { return units_.eps0 * get(id).eps_r; }
  double mu(int id) const { return units_.mu0 * get(id).mu_r; }
  double impedance(int id) const;   // Z = Z0 sqrt(mu_r/eps_r)
  double admittance(int id) const { return 1.0 / impedance(id); }

  const Units& units() const { return units_; }
  const std::map<int, Material>& entries() const { return table_; }

 private:
  Units units_ = Units::si();
  std::map<int, Material> table_;
};

}  // namespace pdgtd

#endif

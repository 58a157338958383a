#include "pdgtd/materials.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

void MaterialTable::set(int id, Material m) {
  if (m.eps_r < 1.0 || m.mu_r < 1.0)
    throw MaterialError("material " + std::to_string(id) +
                        ": eps_r and mu_r must be >= 1 (lossless dielectrics only)");
  table_[id] = m;
}

const Material& MaterialTable::get(int id) const {
  auto it = table_.find(id);
  if (it == table_.end()) throw MaterialError("material id " + std::to_string(id) + " not defined");
  return it->second;
}

double MaterialTable::impedance(int id) const {
  const Material& m = get(id);
  return units_.z0() * std::sqrt(m.mu_r / m.eps_r);
}

}  // namespace pdgtd

#ifndef PDGTD_PROBES_HPP
#define PDGTD_PROBES_HPP

#include <vector>

#include "pdgtd/geometry.hpp"
#include "pdgtd/mesh.hpp"
#include "pdgtd/reference_element.hpp"

namespace pdgtd {

// Recording plane z = z_rt tiled by element faces, with per-face nodal
// quadrature weights for integrating the trace of P over the unit cell.
struct PlaneProbe {
  double z = 0.0;
  double area = 0.0;               // sum of face areas
  std::vector<int> elems, faces;
  Eigen::MatrixXd node_weights;    // nfaces x Nfp, physical m^2
};

// Collects the faces tiling the plane (taken from the elements below it, or
// above when the plane is the bottom boundary) and checks full coverage
// against cell_area to 1e-10 relative. Throws ConfigError on mismatch.
PlaneProbe build_plane_probe(const Mesh& mesh, const ReferenceElement& ref,
                             const GeometricFactors& geo, double z, double cell_area, double tol);

// Fundamental Floquet coefficient: cell average of P over the probe plane.
Eigen::Vector3d record_A00(const Eigen::MatrixXd& q, const PlaneProbe& probe,
                           const ReferenceElement& ref);

}  // namespace pdgtd

#endif

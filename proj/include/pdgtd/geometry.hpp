#ifndef PDGTD_GEOMETRY_HPP
#define PDGTD_GEOMETRY_HPP

#include <Eigen/Dense>

#include "pdgtd/mesh.hpp"
#include "pdgtd/reference_element.hpp"

namespace pdgtd {

// Per-element affine map data: constant metric terms, Jacobian, and per-face
// surface Jacobians with outward unit normals.
struct GeometricFactors {
  Eigen::VectorXd J;                  // K, det of the volume map (>0)
  Eigen::MatrixXd drst_dxyz;          // K x 9: rx ry rz sx sy sz tx ty tz
  Eigen::MatrixXd sJ;                 // K x 4
  Eigen::MatrixXd normals;            // K x 12 (face-major nx ny nz)
  Eigen::MatrixXd fscale;             // K x 4: sJ / J

  Eigen::Vector3d normal(int k, int f) const { return normals.row(k).segment<3>(3 * f); }
};

GeometricFactors geometric_factors(const Mesh& mesh, const ReferenceElement& ref);

// Physical coordinates of all reference nodes of element k (Np x 3).
Eigen::MatrixXd physical_nodes(const Mesh& mesh, const ReferenceElement& ref, int k);

// Physical coordinates of the face nodes of (k, f) in fmask order (Nfp x 3).
Eigen::MatrixXd face_node_positions(const Mesh& mesh, const ReferenceElement& ref, int k, int f);

// Reference coordinates of a physical point inside element k.
Eigen::Vector3d reference_coords(const Mesh& mesh, int k, const Eigen::Vector3d& x);

}  // namespace pdgtd

#endif

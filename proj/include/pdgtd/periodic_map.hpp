#ifndef PDGTD_PERIODIC_MAP_HPP
#define PDGTD_PERIODIC_MAP_HPP

#include <vector>

#include "pdgtd/clipping.hpp"
#include "pdgtd/mesh.hpp"
#include "pdgtd/reference_element.hpp"

namespace pdgtd {

// A conformal periodic face pair: translating face A by `translation` lands
// exactly on face B. node_map[i] is the face-node index on B matching face
// node i of A.
struct ConformalPair {
  int elem_a, face_a;
  int elem_b, face_b;
  Eigen::Vector3d translation;
  Eigen::VectorXi node_map;
};

// A clipped overlap between one minus-side and one plus-side face, with the
// quadrature embedding into both parents. Quadrature points live on side A's
// plane; adding `translation` moves them onto side B.
struct PeriodicFragment {
  int elem_a, face_a;
  int elem_b, face_b;
  Eigen::Vector3d translation;
  std::vector<Eigen::Vector3d> poly;  // 3..6 vertices, side A plane
  double area;                        // m^2
  Eigen::MatrixXd points;             // Nq x 3, side A plane
  Eigen::VectorXd w;                  // Nq physical weights, sum = area
  Eigen::MatrixXd la;                 // Nfp x Nq: A's face-nodal basis at points
  Eigen::MatrixXd lb;                 // Nfp x Nq: B's face-nodal basis at points+translation
};

struct PlaneStats {
  FaceTag tag;
  double plane_area;
  double conformal_area;
  double fragment_area;
  double residual;  // |conformal+fragment-plane| / plane
};

struct PeriodicMap {
  std::vector<ConformalPair> pairs;       // both directions (A->B and B->A entries)
  std::vector<PeriodicFragment> fragments;  // each overlap listed once
  std::vector<PlaneStats> stats;
};

// Builds conformal pairs and non-conformal fragments for every periodic
// direction present in the mesh. Quadrature on fragments is a centroid fan
// with a degree-2P triangle rule per sub-triangle. Throws MeshError when a
// periodic face has neither a conformal partner nor full fragment coverage.
PeriodicMap pair_periodic_faces(const Mesh& mesh, const ReferenceElement& ref,
                                const Lattice2& lattice, double tol);

}  // namespace pdgtd

#endif

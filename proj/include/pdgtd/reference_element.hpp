#ifndef PDGTD_REFERENCE_ELEMENT_HPP
#define PDGTD_REFERENCE_ELEMENT_HPP

#include <array>
#include <Eigen/Dense>

#include "pdgtd/quadrature.hpp"

namespace pdgtd {

// Nodal basis on the reference tetrahedron with vertices
//   v1=(-1,-1,-1) v2=(1,-1,-1) v3=(-1,1,-1) v4=(-1,-1,1).
// Faces follow the usual convention:
//   face 0: t=-1 (v1 v2 v3)   face 1: s=-1 (v1 v2 v4)
//   face 2: r+s+t=-1 (v2 v3 v4)   face 3: r=-1 (v1 v3 v4)
// Each face, seen in its local 2-D coordinates, carries the same warped
// triangular node pattern, so opposing element faces match node-for-node
// under the face map.
class ReferenceElement {
 public:
  int P = 0;    // polynomial order
  int Np = 0;   // (P+1)(P+2)(P+3)/6 volume nodes
  int Nfp = 0;  // (P+1)(P+2)/2 nodes per face

  Eigen::VectorXd r, s, t;            // node coordinates
  Eigen::MatrixXd V;                  // modal Vandermonde, Np x Np
  Eigen::MatrixXd invV;               // V^-1
  Eigen::MatrixXd Dr, Ds, Dt;         // nodal differentiation matrices
  Eigen::MatrixXd invMass;            // V V^T  (inverse of reference mass matrix)
  Eigen::MatrixXd mass;               // (V V^T)^-1
  Eigen::MatrixXd lift;               // invMass * Emat, Np x 4*Nfp
  std::array<Eigen::VectorXi, 4> fmask;          // volume node ids per face
  std::array<Eigen::MatrixXd, 4> face_mass;      // Nfp x Nfp, in fmask ordering
  std::array<Eigen::MatrixXd, 4> face_mass_inv;
  std::array<Eigen::MatrixXd, 4> face_v2d;       // face Vandermonde (2-D basis at face nodes)
  double cond_V = 0.0;                // 2-norm condition number of V

  // Local 2-D coordinates of a point on the given face of the reference tet.
  static Eigen::Vector2d face_coords(int face, const Eigen::Vector3d& rst);

  // Values of the Nfp face-nodal (2-D Lagrange) basis functions at a point
  // given in the face's local coordinates.
  Eigen::VectorXd face_basis_at(int face, const Eigen::Vector2d& rs) const;

  // Interpolate nodal volume data to an arbitrary point of the element.
  Eigen::VectorXd basis_at(const Eigen::Vector3d& rst) const;
};

// Builds the order-P element: warp-and-blend nodes for P >= 3, equidistant
// nodes for P <= 2 (where both coincide). Throws ConfigError for P outside 1..8.
ReferenceElement build_reference(int P);

// Modal (orthonormal Koornwinder-Dubiner) Vandermonde at arbitrary points.
Eigen::MatrixXd vandermonde3d(int P, const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                              const Eigen::VectorXd& t);
void grad_vandermonde3d(int P, const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                        const Eigen::VectorXd& t, Eigen::MatrixXd& Vr, Eigen::MatrixXd& Vs,
                        Eigen::MatrixXd& Vt);
Eigen::MatrixXd vandermonde2d(int P, const Eigen::VectorXd& r, const Eigen::VectorXd& s);

// Warp-and-blend node set (equidistant for P <= 2).
void nodes3d(int P, Eigen::VectorXd& r, Eigen::VectorXd& s, Eigen::VectorXd& t);

}  // namespace pdgtd

#endif

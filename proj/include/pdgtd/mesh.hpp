#ifndef PDGTD_MESH_HPP
#define PDGTD_MESH_HPP

#include <array>
#include <optional>
#include <vector>
#include <Eigen/Dense>

namespace pdgtd {

// Orthogonal 2-lattice spanning the unit cell; both basis vectors lie in the
// z = 0 plane and are axis-aligned in this work.
struct Lattice2 {
  Eigen::Vector3d a1{0, 0, 0};
  Eigen::Vector3d a2{0, 0, 0};

  Lattice2() = default;
  Lattice2(double lx, double ly) : a1(lx, 0, 0), a2(0, ly, 0) {}

  void validate() const;
  double tol() const { return 1e-8 * std::max(a1.norm(), a2.norm()); }
};

enum class FaceTag : int {
  Interior = 0,
  Pec,
  AbcTop,
  AbcBottom,
  PeriodicX,
  PeriodicY,
  PeriodicZ,
};

const char* to_string(FaceTag tag);

// Local faces of a tetrahedron (v0 v1 v2 v3):
//   face 0: v0 v1 v2,  face 1: v0 v1 v3,  face 2: v1 v2 v3,  face 3: v0 v2 v3
// matching the reference element's face ordering.
inline const std::array<std::array<int, 3>, 4>& tet_face_vertices() {
  static const std::array<std::array<int, 3>, 4> fv = {
      {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {0, 2, 3}}};
  return fv;
}

struct Mesh {
  Eigen::MatrixXd vertices;              // Nv x 3, meters
  Eigen::MatrixXi tets;                  // K x 4 vertex ids
  std::vector<int> material;             // K
  std::vector<std::array<FaceTag, 4>> face_tag;  // K x 4
  Eigen::VectorXd h;                     // K, min edge length

  // Face connectivity: neighbor element / neighbor local face, -1 on boundary.
  Eigen::MatrixXi etoe;  // K x 4
  Eigen::MatrixXi etof;  // K x 4

  std::optional<Lattice2> lattice;
  bool periodic_z = false;

  int num_elements() const { return int(tets.rows()); }
  int num_vertices() const { return int(vertices.rows()); }

  Eigen::Vector3d vertex(int v) const { return vertices.row(v).transpose(); }
  Eigen::Vector3d centroid(int k) const;
  double signed_volume(int k) const;
  std::array<Eigen::Vector3d, 3> face_corners(int k, int f) const;

  // Orients elements, drops unreferenced vertices, computes h, builds
  // connectivity and classifies boundary faces. Throws MeshError on
  // degenerate elements or unclassifiable boundary faces.
  void finalize(double geom_tol);

  // Re-tags every boundary face (used by cavity tests).
  void retag_all_boundaries(FaceTag tag);
};

// Validates the full set of Mesh invariants, throwing on violation.
void validate_mesh(const Mesh& mesh, double geom_tol);

}  // namespace pdgtd

#endif

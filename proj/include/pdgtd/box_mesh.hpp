#ifndef PDGTD_BOX_MESH_HPP
#define PDGTD_BOX_MESH_HPP

#include <vector>

#include "pdgtd/mesh.hpp"

namespace pdgtd {

// Structured unit-cell generator: an nx x ny grid of hexahedral columns with
// layer boundaries at z_breaks, each layer divided into nz slabs of one
// material. Every z_break is a flat plane of faces, as required by TF/SF and
// recording planes.
//
// Each hex splits into 6 tetrahedra (Kuhn split, conformal periodic planes)
// or, with stagger on, into 5 tetrahedra with checkerboard parity; an odd
// transverse division count then produces opposing periodic triangulations
// with crossed diagonals, exercising the non-conformal fragment machinery.
struct BoxMeshSpec {
  Lattice2 lattice;
  std::vector<double> z_breaks;   // strictly increasing, size = layers+1
  int nx = 1;
  int ny = 1;
  std::vector<int> nz;            // per layer
  std::vector<int> layer_material;  // per layer
  bool stagger = false;
  bool periodic_z = false;        // tag z boundaries periodic (torus tests)
  bool pec_all = false;           // tag every boundary PEC (cavity tests)
};

Mesh generate_box_mesh(const BoxMeshSpec& spec);

// Re-tags interior faces lying inside the given axis-aligned rectangle of the
// plane z = z_plane as PEC, modeling an infinitesimally thin conducting sheet.
// Returns the number of faces tagged.
int tag_pec_plate(Mesh& mesh, double z_plane, double x0, double x1, double y0, double y1,
                  double tol);

// Assigns a material id to every element whose centroid falls in the box.
int assign_material_box(Mesh& mesh, const Eigen::Vector3d& lo, const Eigen::Vector3d& hi, int mat);

}  // namespace pdgtd

#endif

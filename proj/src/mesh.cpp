#include "pdgtd/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "pdgtd/errors.hpp"

namespace pdgtd {

void Lattice2::validate() const {
  if (a1.norm() <= 0.0 || a2.norm() <= 0.0) throw ConfigError("lattice vectors must be nonzero");
  if (std::abs(a1.z()) > 1e-14 * a1.norm() || std::abs(a2.z()) > 1e-14 * a2.norm())
    throw ConfigError("lattice vectors must have zero z-component");
  if (std::abs(a1.dot(a2)) > 1e-12 * a1.norm() * a2.norm())
    throw ConfigError("lattice vectors must be orthogonal");
}

const char* to_string(FaceTag tag) {
  switch (tag) {
    case FaceTag::Interior: return "INTERIOR";
    case FaceTag::Pec: return "PEC";
    case FaceTag::AbcTop: return "ABC_TOP";
    case FaceTag::AbcBottom: return "ABC_BOTTOM";
    case FaceTag::PeriodicX: return "PERIODIC_X";
    case FaceTag::PeriodicY: return "PERIODIC_Y";
    case FaceTag::PeriodicZ: return "PERIODIC_Z";
  }
  return "?";
}

Eigen::Vector3d Mesh::centroid(int k) const {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (int i = 0; i < 4; ++i) c += vertex(tets(k, i));
  return c / 4.0;
}

double Mesh::signed_volume(int k) const {
  Eigen::Vector3d v0 = vertex(tets(k, 0));
  Eigen::Vector3d e1 = vertex(tets(k, 1)) - v0;
  Eigen::Vector3d e2 = vertex(tets(k, 2)) - v0;
  Eigen::Vector3d e3 = vertex(tets(k, 3)) - v0;
  return e1.cross(e2).dot(e3) / 6.0;
}

std::array<Eigen::Vector3d, 3> Mesh::face_corners(int k, int f) const {
  const auto& fv = tet_face_vertices()[f];
  return {vertex(tets(k, fv[0])), vertex(tets(k, fv[1])), vertex(tets(k, fv[2]))};
}

void Mesh::retag_all_boundaries(FaceTag tag) {
  for (int k = 0; k < num_elements(); ++k)
    for (int f = 0; f < 4; ++f)
      if (etoe(k, f) < 0) face_tag[k][f] = tag;
}

void Mesh::finalize(double geom_tol) {
  const int K = num_elements();
  if (K == 0) throw MeshError("mesh has no elements");
  if (int(material.size()) != K) material.resize(K, 1);
  if (int(face_tag.size()) != K)
    face_tag.assign(K, {FaceTag::Interior, FaceTag::Interior, FaceTag::Interior, FaceTag::Interior});

  // Drop unreferenced vertices.
  std::vector<int> remap(num_vertices(), -1);
  int nused = 0;
  for (int k = 0; k < K; ++k)
    for (int i = 0; i < 4; ++i) {
      int v = tets(k, i);
      if (v < 0 || v >= num_vertices()) throw MeshError("element " + std::to_string(k) + " references missing vertex");
      if (remap[v] < 0) remap[v] = nused++;
    }
  if (nused < num_vertices()) {
    Eigen::MatrixXd nv(nused, 3);
    for (int v = 0; v < num_vertices(); ++v)
      if (remap[v] >= 0) nv.row(remap[v]) = vertices.row(v);
    vertices = nv;
  }
  for (int k = 0; k < K; ++k)
    for (int i = 0; i < 4; ++i) tets(k, i) = remap[tets(k, i)];

  // Consistent positive orientation. Swapping the last two vertices flips the
  // sign; face tags are per local face so they must be swapped along with the
  // face ordering (faces 1<->3 keep their vertex sets under this swap).
  double vol_tol = geom_tol * geom_tol * geom_tol;
  for (int k = 0; k < K; ++k) {
    double vol = signed_volume(k);
    if (std::abs(vol) <= vol_tol)
      throw MeshError("element " + std::to_string(k) + " is degenerate (volume " +
                      std::to_string(vol) + ")");
    if (vol < 0.0) {
      std::swap(tets(k, 2), tets(k, 3));
      // faces by vertex sets: {012}<->{013} i.e. local faces 0<->1; {123},{023} stay
      std::swap(face_tag[k][0], face_tag[k][1]);
    }
  }

  // Minimum edge length per element.
  h.resize(K);
  static const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int k = 0; k < K; ++k) {
    double hmin = std::numeric_limits<double>::max();
    for (auto& e : edges)
      hmin = std::min(hmin, (vertex(tets(k, e[0])) - vertex(tets(k, e[1]))).norm());
    h[k] = hmin;
  }

  // Face-to-face connectivity via sorted vertex triples.
  etoe = Eigen::MatrixXi::Constant(K, 4, -1);
  etof = Eigen::MatrixXi::Constant(K, 4, -1);
  std::map<std::tuple<int, int, int>, std::pair<int, int>> open;
  for (int k = 0; k < K; ++k) {
    for (int f = 0; f < 4; ++f) {
      const auto& fv = tet_face_vertices()[f];
      std::array<int, 3> tri = {tets(k, fv[0]), tets(k, fv[1]), tets(k, fv[2])};
      std::sort(tri.begin(), tri.end());
      auto key = std::make_tuple(tri[0], tri[1], tri[2]);
      auto it = open.find(key);
      if (it == open.end()) {
        open[key] = {k, f};
      } else {
        auto [k2, f2] = it->second;
        if (etoe(k2, f2) >= 0)
          throw MeshError("face shared by more than two elements near element " + std::to_string(k));
        etoe(k, f) = k2;
        etof(k, f) = f2;
        etoe(k2, f2) = k;
        etof(k2, f2) = f;
      }
    }
  }

  // Classify untagged boundary faces by plane membership against the mesh
  // bounding box. z-plane faces must already be tagged (ABC/PEC) unless the
  // cell is z-periodic.
  Eigen::Vector3d lo = vertices.colwise().minCoeff().transpose();
  Eigen::Vector3d hi = vertices.colwise().maxCoeff().transpose();
  if (lattice) {
    lattice->validate();
    if (std::abs((hi.x() - lo.x()) - lattice->a1.norm()) > geom_tol)
      throw MeshError("mesh x-extent does not match |a1|");
    if (std::abs((hi.y() - lo.y()) - lattice->a2.norm()) > geom_tol)
      throw MeshError("mesh y-extent does not match |a2|");
  }
  for (int k = 0; k < K; ++k) {
    for (int f = 0; f < 4; ++f) {
      if (etoe(k, f) >= 0) continue;  // interior faces keep their tag (PEC sheets allowed)
      if (face_tag[k][f] != FaceTag::Interior) continue;  // explicit tag from input
      auto c = face_corners(k, f);
      auto on_plane = [&](int axis, double value) {
        return std::abs(c[0][axis] - value) <= geom_tol && std::abs(c[1][axis] - value) <= geom_tol &&
               std::abs(c[2][axis] - value) <= geom_tol;
      };
      if (on_plane(0, lo.x()) || on_plane(0, hi.x()))
        face_tag[k][f] = FaceTag::PeriodicX;
      else if (on_plane(1, lo.y()) || on_plane(1, hi.y()))
        face_tag[k][f] = FaceTag::PeriodicY;
      else if (periodic_z && (on_plane(2, lo.z()) || on_plane(2, hi.z())))
        face_tag[k][f] = FaceTag::PeriodicZ;
      else
        throw MeshError("untagged boundary face " + std::to_string(f) + " of element " +
                        std::to_string(k) + " lies on no recognized plane");
    }
  }
}

void validate_mesh(const Mesh& mesh, double geom_tol) {
  const int K = mesh.num_elements();
  for (int k = 0; k < K; ++k) {
    if (mesh.signed_volume(k) <= 0.0)
      throw MeshError("element " + std::to_string(k) + " has non-positive volume");
  }
  Eigen::Vector3d lo = mesh.vertices.colwise().minCoeff().transpose();
  Eigen::Vector3d hi = mesh.vertices.colwise().maxCoeff().transpose();
  for (int k = 0; k < K; ++k) {
    for (int f = 0; f < 4; ++f) {
      FaceTag tag = mesh.face_tag[k][f];
      bool boundary = mesh.etoe(k, f) < 0;
      if (boundary && tag == FaceTag::Interior)
        throw MeshError("boundary face of element " + std::to_string(k) + " is untagged");
      if (tag == FaceTag::PeriodicX || tag == FaceTag::PeriodicY) {
        int axis = (tag == FaceTag::PeriodicX) ? 0 : 1;
        auto c = mesh.face_corners(k, f);
        for (const auto& p : c) {
          if (std::abs(p[axis] - lo[axis]) > geom_tol && std::abs(p[axis] - hi[axis]) > geom_tol)
            throw MeshError("periodic face of element " + std::to_string(k) +
                            " is off the lattice planes");
        }
      }
    }
  }
}

}  // namespace pdgtd

#include "pdgtd/box_mesh.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

namespace {

// Kuhn split: six tets around the main diagonal c000-c111. All cube faces get
// diagonals in the same direction, so translated periodic planes match.
const int kKuhn[6][4] = {{0, 1, 3, 7}, {0, 3, 2, 7}, {0, 2, 6, 7},
                         {0, 6, 4, 7}, {0, 4, 5, 7}, {0, 5, 1, 7}};

// Five-tet split, even parity: central tet spanned by corners 0,3,5,6 plus
// four corner tets. Odd parity mirrors it so shared interior faces conform.
const int kFive0[5][4] = {{1, 0, 3, 5}, {2, 3, 0, 6}, {4, 5, 6, 0}, {7, 6, 5, 3}, {0, 3, 6, 5}};
const int kFive1[5][4] = {{0, 1, 2, 4}, {3, 2, 1, 7}, {5, 4, 7, 1}, {6, 7, 4, 2}, {1, 2, 4, 7}};

}  // namespace

Mesh generate_box_mesh(const BoxMeshSpec& spec) {
  spec.lattice.validate();
  const size_t layers = spec.nz.size();
  if (layers == 0) throw ConfigError("box mesh needs at least one layer");
  if (spec.z_breaks.size() != layers + 1)
    throw ConfigError("z_breaks must have one more entry than nz");
  if (spec.layer_material.size() != layers)
    throw ConfigError("layer_materials must have one entry per layer");
  for (size_t l = 0; l + 1 < spec.z_breaks.size(); ++l)
    if (!(spec.z_breaks[l + 1] > spec.z_breaks[l]))
      throw ConfigError("z_breaks must be strictly increasing");
  if (spec.nx < 1 || spec.ny < 1) throw ConfigError("divisions must be >= 1");
  for (int n : spec.nz)
    if (n < 1) throw ConfigError("divisions must be >= 1");

  const double lx = spec.lattice.a1.norm();
  const double ly = spec.lattice.a2.norm();

  // z planes: concatenated layer subdivisions.
  std::vector<double> zs;
  std::vector<int> mat_of_slab;
  zs.push_back(spec.z_breaks[0]);
  for (size_t l = 0; l < layers; ++l) {
    double z0 = spec.z_breaks[l], z1 = spec.z_breaks[l + 1];
    for (int i = 1; i <= spec.nz[l]; ++i) {
      zs.push_back(z0 + (z1 - z0) * i / spec.nz[l]);
      mat_of_slab.push_back(spec.layer_material[l]);
    }
  }
  const int nztot = int(zs.size()) - 1;

  Mesh mesh;
  const int nvx = spec.nx + 1, nvy = spec.ny + 1, nvz = nztot + 1;
  mesh.vertices.resize(long(nvx) * nvy * nvz, 3);
  auto vid = [&](int i, int j, int k) { return (k * nvy + j) * nvx + i; };
  for (int k = 0; k < nvz; ++k)
    for (int j = 0; j < nvy; ++j)
      for (int i = 0; i < nvx; ++i)
        mesh.vertices.row(vid(i, j, k)) << lx * i / spec.nx, ly * j / spec.ny, zs[k];

  const int tets_per_hex = spec.stagger ? 5 : 6;
  const long nhex = long(spec.nx) * spec.ny * nztot;
  mesh.tets.resize(nhex * tets_per_hex, 4);
  mesh.material.resize(nhex * tets_per_hex);

  long kt = 0;
  for (int kz = 0; kz < nztot; ++kz) {
    for (int j = 0; j < spec.ny; ++j) {
      for (int i = 0; i < spec.nx; ++i) {
        int c[8];
        for (int dz = 0; dz < 2; ++dz)
          for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) c[dz * 4 + dy * 2 + dx] = vid(i + dx, j + dy, kz + dz);
        if (!spec.stagger) {
          for (auto& tv : kKuhn) {
            for (int n = 0; n < 4; ++n) mesh.tets(kt, n) = c[tv[n]];
            mesh.material[kt++] = mat_of_slab[kz];
          }
        } else {
          const auto& split = ((i + j + kz) % 2 == 0) ? kFive0 : kFive1;
          for (int tt = 0; tt < 5; ++tt) {
            for (int n = 0; n < 4; ++n) mesh.tets(kt, n) = c[split[tt][n]];
            mesh.material[kt++] = mat_of_slab[kz];
          }
        }
      }
    }
  }

  mesh.lattice = spec.lattice;
  mesh.periodic_z = spec.periodic_z;
  const double tol = spec.lattice.tol();

  // Tag z boundaries before finalize so classification does not reject them.
  mesh.face_tag.assign(mesh.num_elements(),
                       {FaceTag::Interior, FaceTag::Interior, FaceTag::Interior, FaceTag::Interior});
  if (!spec.periodic_z) {
    const double zlo = zs.front(), zhi = zs.back();
    for (int k = 0; k < mesh.num_elements(); ++k) {
      for (int f = 0; f < 4; ++f) {
        auto fc = mesh.face_corners(k, f);
        bool bot = true, top = true;
        for (auto& p : fc) {
          bot = bot && std::abs(p.z() - zlo) <= tol;
          top = top && std::abs(p.z() - zhi) <= tol;
        }
        if (bot) mesh.face_tag[k][f] = FaceTag::AbcBottom;
        if (top) mesh.face_tag[k][f] = FaceTag::AbcTop;
      }
    }
  }

  mesh.finalize(tol);
  if (spec.pec_all) mesh.retag_all_boundaries(FaceTag::Pec);
  return mesh;
}

int tag_pec_plate(Mesh& mesh, double z_plane, double x0, double x1, double y0, double y1,
                  double tol) {
  int count = 0;
  for (int k = 0; k < mesh.num_elements(); ++k) {
    for (int f = 0; f < 4; ++f) {
      if (mesh.etoe(k, f) < 0) continue;
      auto c = mesh.face_corners(k, f);
      bool in = true;
      for (auto& p : c) {
        in = in && std::abs(p.z() - z_plane) <= tol && p.x() >= x0 - tol && p.x() <= x1 + tol &&
             p.y() >= y0 - tol && p.y() <= y1 + tol;
      }
      if (in) {
        mesh.face_tag[k][f] = FaceTag::Pec;
        ++count;
      }
    }
  }
  return count;
}

int assign_material_box(Mesh& mesh, const Eigen::Vector3d& lo, const Eigen::Vector3d& hi, int mat) {
  int count = 0;
  for (int k = 0; k < mesh.num_elements(); ++k) {
    Eigen::Vector3d c = mesh.centroid(k);
    if ((c.array() >= lo.array()).all() && (c.array() <= hi.array()).all()) {
      mesh.material[k] = mat;
      ++count;
    }
  }
  return count;
}

}  // namespace pdgtd

#include "pdgtd/periodic_map.hpp"

#include <algorithm>
#include <cmath>

#include "pdgtd/errors.hpp"
#include "pdgtd/geometry.hpp"
#include "pdgtd/quadrature.hpp"

namespace pdgtd {

namespace {

struct PlaneFace {
  int elem, face;
  Eigen::Vector3d c[3];  // corners
  Eigen::Vector3d centroid;
  double area;
};

double tri_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

// Face-nodal basis values of (elem, face) at a set of physical points lying
// on that face: rows index face nodes (fmask order), columns the points.
Eigen::MatrixXd face_interp_matrix(const Mesh& mesh, const ReferenceElement& ref, int elem,
                                   int face, const Eigen::MatrixXd& pts) {
  const Eigen::Index nq = pts.rows();
  Eigen::MatrixXd psi(nq, ref.Nfp);
  Eigen::VectorXd fr(nq), fs(nq);
  for (Eigen::Index q = 0; q < nq; ++q) {
    Eigen::Vector3d rst = reference_coords(mesh, elem, pts.row(q).transpose());
    Eigen::Vector2d rs = ReferenceElement::face_coords(face, rst);
    fr[q] = rs[0];
    fs[q] = rs[1];
  }
  psi = vandermonde2d(ref.P, fr, fs);  // nq x Nfp
  // l(x) = V2d^{-T} psi(x)
  return ref.face_v2d[face].transpose().partialPivLu().solve(psi.transpose());
}

}  // namespace

PeriodicMap pair_periodic_faces(const Mesh& mesh, const ReferenceElement& ref,
                                const Lattice2& lattice, double tol) {
  lattice.validate();
  PeriodicMap map;

  Eigen::Vector3d lo = mesh.vertices.colwise().minCoeff().transpose();
  Eigen::Vector3d hi = mesh.vertices.colwise().maxCoeff().transpose();

  struct Direction {
    FaceTag tag;
    int axis;
    Eigen::Vector3d translation;
  };
  std::vector<Direction> dirs = {{FaceTag::PeriodicX, 0, lattice.a1},
                                 {FaceTag::PeriodicY, 1, lattice.a2}};
  if (mesh.periodic_z)
    dirs.push_back({FaceTag::PeriodicZ, 2, Eigen::Vector3d(0, 0, hi.z() - lo.z())});

  const TriangleQuadrature quad = triangle_quadrature(2 * ref.P);

  for (const auto& dir : dirs) {
    std::vector<PlaneFace> minus, plus;
    for (int k = 0; k < mesh.num_elements(); ++k) {
      for (int f = 0; f < 4; ++f) {
        if (mesh.face_tag[k][f] != dir.tag) continue;
        auto corners = mesh.face_corners(k, f);
        PlaneFace pf;
        pf.elem = k;
        pf.face = f;
        for (int i = 0; i < 3; ++i) pf.c[i] = corners[i];
        pf.centroid = (corners[0] + corners[1] + corners[2]) / 3.0;
        pf.area = tri_area(corners[0], corners[1], corners[2]);
        bool on_lo = std::abs(pf.centroid[dir.axis] - lo[dir.axis]) <= tol;
        (on_lo ? minus : plus).push_back(pf);
      }
    }
    if (minus.empty() && plus.empty()) continue;
    if (minus.size() != plus.size() && (minus.empty() || plus.empty()))
      throw MeshError(std::string("periodic direction ") + to_string(dir.tag) +
                      " has faces on only one plane");

    double plane_area = 0.0;
    for (auto& f : minus) plane_area += f.area;
    double plane_area_plus = 0.0;
    for (auto& f : plus) plane_area_plus += f.area;
    if (std::abs(plane_area - plane_area_plus) > 1e-9 * plane_area)
      throw MeshError(std::string("periodic planes of ") + to_string(dir.tag) +
                      " have mismatched areas");

    // Conformal pass: translated vertex sets must coincide.
    std::vector<bool> minus_done(minus.size(), false), plus_done(plus.size(), false);
    double conformal_area = 0.0;
    for (size_t ia = 0; ia < minus.size(); ++ia) {
      for (size_t ib = 0; ib < plus.size(); ++ib) {
        if (plus_done[ib]) continue;
        if ((minus[ia].centroid + dir.translation - plus[ib].centroid).norm() > tol) continue;
        bool all_match = true;
        for (int i = 0; i < 3 && all_match; ++i) {
          bool found = false;
          for (int j = 0; j < 3; ++j)
            if ((minus[ia].c[i] + dir.translation - plus[ib].c[j]).norm() <= tol) found = true;
          all_match = found;
        }
        if (!all_match) continue;

        ConformalPair ab;
        ab.elem_a = minus[ia].elem;
        ab.face_a = minus[ia].face;
        ab.elem_b = plus[ib].elem;
        ab.face_b = plus[ib].face;
        ab.translation = dir.translation;
        Eigen::MatrixXd xa = face_node_positions(mesh, ref, ab.elem_a, ab.face_a);
        Eigen::MatrixXd xb = face_node_positions(mesh, ref, ab.elem_b, ab.face_b);
        ab.node_map.resize(ref.Nfp);
        for (int i = 0; i < ref.Nfp; ++i) {
          int match = -1;
          for (int j = 0; j < ref.Nfp; ++j)
            if ((xa.row(i) + dir.translation.transpose() - xb.row(j)).norm() <= tol) {
              match = j;
              break;
            }
          if (match < 0)
            throw MeshError("conformal periodic faces with non-matching node sets (element " +
                            std::to_string(ab.elem_a) + ")");
          ab.node_map[i] = match;
        }
        map.pairs.push_back(ab);

        ConformalPair ba;
        ba.elem_a = ab.elem_b;
        ba.face_a = ab.face_b;
        ba.elem_b = ab.elem_a;
        ba.face_b = ab.face_a;
        ba.translation = -dir.translation;
        ba.node_map.resize(ref.Nfp);
        for (int i = 0; i < ref.Nfp; ++i) ba.node_map[ab.node_map[i]] = i;
        map.pairs.push_back(ba);

        minus_done[ia] = true;
        plus_done[ib] = true;
        conformal_area += minus[ia].area;
        break;
      }
    }

    // Clip the remaining faces pairwise (plus side pulled back by -T).
    std::vector<FaceTri> trisA, trisB;
    std::vector<size_t> idxA, idxB;
    for (size_t ia = 0; ia < minus.size(); ++ia) {
      if (minus_done[ia]) continue;
      FaceTri t;
      for (int i = 0; i < 3; ++i) t.v[i] = minus[ia].c[i];
      t.elem = minus[ia].elem;
      t.face = minus[ia].face;
      trisA.push_back(t);
      idxA.push_back(ia);
    }
    for (size_t ib = 0; ib < plus.size(); ++ib) {
      if (plus_done[ib]) continue;
      FaceTri t;
      for (int i = 0; i < 3; ++i) t.v[i] = plus[ib].c[i];
      t.elem = plus[ib].elem;
      t.face = plus[ib].face;
      trisB.push_back(t);
      idxB.push_back(ib);
    }
    if (trisA.size() != trisB.size() && (trisA.empty() || trisB.empty()))
      throw MeshError(std::string("periodic faces of ") + to_string(dir.tag) +
                      " unmatched after conformal pass");

    double fragment_area = 0.0;
    std::vector<double> cover_a(trisA.size(), 0.0), cover_b(trisB.size(), 0.0);
    if (!trisA.empty()) {
      Eigen::Vector3d origin, u, v;
      auto frags = clip_faces(trisA, trisB, -dir.translation, tol, &origin, &u, &v);
      for (const auto& cf : frags) {
        fragment_area += cf.area;
        cover_a[cf.ia] += cf.area;
        cover_b[cf.ib] += cf.area;

        const double face_area = tri_area(trisA[cf.ia].v[0], trisA[cf.ia].v[1], trisA[cf.ia].v[2]);
        if (cf.area < 1e-12 * face_area) continue;  // sliver: bookkeeping only

        PeriodicFragment frag;
        frag.elem_a = trisA[cf.ia].elem;
        frag.face_a = trisA[cf.ia].face;
        frag.elem_b = trisB[cf.ib].elem;
        frag.face_b = trisB[cf.ib].face;
        frag.translation = dir.translation;
        frag.area = cf.area;
        for (const auto& p2 : cf.poly) frag.poly.push_back(origin + p2.x() * u + p2.y() * v);

        // Centroid fan with a degree-2P rule per sub-triangle.
        Eigen::Vector2d cen = polygon_centroid(cf.poly);
        const size_t nv = cf.poly.size();
        const Eigen::Index nq_sub = quad.size();
        frag.points.resize(Eigen::Index(nv) * nq_sub, 3);
        frag.w.resize(Eigen::Index(nv) * nq_sub);
        Eigen::Index qi = 0;
        for (size_t e = 0; e < nv; ++e) {
          Eigen::Vector2d p0 = cen, p1 = cf.poly[e], p2 = cf.poly[(e + 1) % nv];
          double sub_area = 0.5 * std::abs((p1 - p0).x() * (p2 - p0).y() -
                                           (p2 - p0).x() * (p1 - p0).y());
          for (Eigen::Index q = 0; q < nq_sub; ++q) {
            Eigen::Vector2d p = quad.bary(q, 0) * p0 + quad.bary(q, 1) * p1 + quad.bary(q, 2) * p2;
            frag.points.row(qi) = (origin + p.x() * u + p.y() * v).transpose();
            frag.w[qi] = quad.w[q] * (sub_area / 0.5);
            ++qi;
          }
        }

        frag.la = face_interp_matrix(mesh, ref, frag.elem_a, frag.face_a, frag.points);
        Eigen::MatrixXd pts_b = frag.points;
        pts_b.rowwise() += dir.translation.transpose();
        frag.lb = face_interp_matrix(mesh, ref, frag.elem_b, frag.face_b, pts_b);
        map.fragments.push_back(std::move(frag));
      }

      for (size_t i = 0; i < trisA.size(); ++i) {
        double a = tri_area(trisA[i].v[0], trisA[i].v[1], trisA[i].v[2]);
        if (std::abs(cover_a[i] - a) > 1e-9 * a)
          throw MeshError("periodic face of element " + std::to_string(trisA[i].elem) +
                          " is not fully covered by fragments (uncovered area " +
                          std::to_string(a - cover_a[i]) + " m^2)");
      }
      for (size_t i = 0; i < trisB.size(); ++i) {
        double a = tri_area(trisB[i].v[0], trisB[i].v[1], trisB[i].v[2]);
        if (std::abs(cover_b[i] - a) > 1e-9 * a)
          throw MeshError("periodic face of element " + std::to_string(trisB[i].elem) +
                          " is not fully covered by fragments (uncovered area " +
                          std::to_string(a - cover_b[i]) + " m^2)");
      }
    }

    PlaneStats st;
    st.tag = dir.tag;
    st.plane_area = plane_area;
    st.conformal_area = conformal_area;
    st.fragment_area = fragment_area;
    st.residual = std::abs(conformal_area + fragment_area - plane_area) / plane_area;
    if (st.residual > 1e-12)
      throw MeshError(std::string("periodic plane area conservation violated for ") +
                      to_string(dir.tag) + ": residual " + std::to_string(st.residual));
    map.stats.push_back(st);
  }

  return map;
}

}  // namespace pdgtd

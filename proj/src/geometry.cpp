#include "pdgtd/geometry.hpp"

#include "pdgtd/errors.hpp"

namespace pdgtd {

GeometricFactors geometric_factors(const Mesh& mesh, const ReferenceElement& ref) {
  const int K = mesh.num_elements();
  GeometricFactors g;
  g.J.resize(K);
  g.drst_dxyz.resize(K, 9);
  g.sJ.resize(K, 4);
  g.normals.resize(K, 12);
  g.fscale.resize(K, 4);

  for (int k = 0; k < K; ++k) {
    Eigen::Vector3d v0 = mesh.vertex(mesh.tets(k, 0));
    Eigen::Matrix3d A;  // dx/dr columns
    A.col(0) = (mesh.vertex(mesh.tets(k, 1)) - v0) / 2.0;
    A.col(1) = (mesh.vertex(mesh.tets(k, 2)) - v0) / 2.0;
    A.col(2) = (mesh.vertex(mesh.tets(k, 3)) - v0) / 2.0;
    double det = A.determinant();
    if (det <= 0.0) throw GeometryError("element " + std::to_string(k) + " has non-positive Jacobian");
    g.J[k] = det;
    Eigen::Matrix3d Ai = A.inverse();  // rows are (rx ry rz; sx sy sz; tx ty tz)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.drst_dxyz(k, 3 * i + j) = Ai(i, j);

    // Outward normals from the metric: faces t=-1, s=-1, r+s+t=-1, r=-1.
    Eigen::Vector3d grad_r = Ai.row(0).transpose();
    Eigen::Vector3d grad_s = Ai.row(1).transpose();
    Eigen::Vector3d grad_t = Ai.row(2).transpose();
    Eigen::Vector3d nf[4] = {-grad_t, -grad_s, grad_r + grad_s + grad_t, -grad_r};
    for (int f = 0; f < 4; ++f) {
      double len = nf[f].norm();
      g.sJ(k, f) = len * det;
      g.normals.row(k).segment<3>(3 * f) = (nf[f] / len).transpose();
      g.fscale(k, f) = g.sJ(k, f) / det;
    }
  }
  return g;
}

Eigen::MatrixXd physical_nodes(const Mesh& mesh, const ReferenceElement& ref, int k) {
  Eigen::Vector3d v0 = mesh.vertex(mesh.tets(k, 0));
  Eigen::Vector3d v1 = mesh.vertex(mesh.tets(k, 1));
  Eigen::Vector3d v2 = mesh.vertex(mesh.tets(k, 2));
  Eigen::Vector3d v3 = mesh.vertex(mesh.tets(k, 3));
  Eigen::MatrixXd x(ref.Np, 3);
  for (int i = 0; i < ref.Np; ++i) {
    x.row(i) = (-(1.0 + ref.r[i] + ref.s[i] + ref.t[i]) / 2.0 * v0 +
                (1.0 + ref.r[i]) / 2.0 * v1 + (1.0 + ref.s[i]) / 2.0 * v2 +
                (1.0 + ref.t[i]) / 2.0 * v3)
                   .transpose();
  }
  return x;
}

Eigen::MatrixXd face_node_positions(const Mesh& mesh, const ReferenceElement& ref, int k, int f) {
  Eigen::MatrixXd xall = physical_nodes(mesh, ref, k);
  Eigen::MatrixXd x(ref.Nfp, 3);
  for (int i = 0; i < ref.Nfp; ++i) x.row(i) = xall.row(ref.fmask[f][i]);
  return x;
}

Eigen::Vector3d reference_coords(const Mesh& mesh, int k, const Eigen::Vector3d& x) {
  Eigen::Vector3d v0 = mesh.vertex(mesh.tets(k, 0));
  Eigen::Matrix3d A;
  A.col(0) = (mesh.vertex(mesh.tets(k, 1)) - v0) / 2.0;
  A.col(1) = (mesh.vertex(mesh.tets(k, 2)) - v0) / 2.0;
  A.col(2) = (mesh.vertex(mesh.tets(k, 3)) - v0) / 2.0;
  Eigen::Vector3d rst = A.inverse() * (x - v0);
  return rst - Eigen::Vector3d::Ones();
}

}  // namespace pdgtd

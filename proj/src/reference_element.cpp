#include "pdgtd/reference_element.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"
#include "pdgtd/jacobi.hpp"

namespace pdgtd {

namespace {

constexpr double kNodeTol = 1e-8;

// Collapsed coordinates of the reference tetrahedron.
void rst_to_abc(double r, double s, double t, double& a, double& b, double& c) {
  a = (std::abs(s + t) > 1e-12) ? 2.0 * (1.0 + r) / (-s - t) - 1.0 : -1.0;
  b = (std::abs(1.0 - t) > 1e-12) ? 2.0 * (1.0 + s) / (1.0 - t) - 1.0 : -1.0;
  c = t;
}

double simplex3dp(double a, double b, double c, int i, int j, int k) {
  double h1 = jacobi_p(a, 0.0, 0.0, i);
  double h2 = jacobi_p(b, 2.0 * i + 1.0, 0.0, j);
  double h3 = jacobi_p(c, 2.0 * (i + j) + 2.0, 0.0, k);
  return 2.0 * std::sqrt(2.0) * h1 * h2 * std::pow(1.0 - b, i) * h3 * std::pow(1.0 - c, i + j);
}

void grad_simplex3dp(double a, double b, double c, int id, int jd, int kd, double& dr, double& ds,
                     double& dt) {
  const double fa = jacobi_p(a, 0.0, 0.0, id);
  const double dfa = grad_jacobi_p(a, 0.0, 0.0, id);
  const double gb = jacobi_p(b, 2.0 * id + 1.0, 0.0, jd);
  const double dgb = grad_jacobi_p(b, 2.0 * id + 1.0, 0.0, jd);
  const double hc = jacobi_p(c, 2.0 * (id + jd) + 2.0, 0.0, kd);
  const double dhc = grad_jacobi_p(c, 2.0 * (id + jd) + 2.0, 0.0, kd);
  const double hb = 0.5 * (1.0 - b);
  const double hcc = 0.5 * (1.0 - c);

  double vr = dfa * gb * hc;
  if (id > 0) vr *= std::pow(hb, id - 1);
  if (id + jd > 0) vr *= std::pow(hcc, id + jd - 1);

  double vs = 0.5 * (1.0 + a) * vr;
  double tmp = dgb * std::pow(hb, id);
  if (id > 0) tmp += (-0.5 * id) * gb * std::pow(hb, id - 1);
  if (id + jd > 0) tmp *= std::pow(hcc, id + jd - 1);
  tmp = fa * tmp * hc;
  vs += tmp;

  double vt = 0.5 * (1.0 + a) * vr + 0.5 * (1.0 + b) * tmp;
  double tmp2 = dhc * std::pow(hcc, id + jd);
  if (id + jd > 0) tmp2 -= 0.5 * (id + jd) * hc * std::pow(hcc, id + jd - 1);
  tmp2 = fa * gb * tmp2 * std::pow(hb, id);
  vt += tmp2;

  const double scale = std::pow(2.0, 2.0 * id + jd + 1.5);
  dr = vr * scale;
  ds = vs * scale;
  dt = vt * scale;
}

double simplex2dp(double a, double b, int i, int j) {
  double h1 = jacobi_p(a, 0.0, 0.0, i);
  double h2 = jacobi_p(b, 2.0 * i + 1.0, 0.0, j);
  return std::sqrt(2.0) * h1 * h2 * std::pow(1.0 - b, i);
}

void equidistant_nodes(int P, Eigen::VectorXd& r, Eigen::VectorXd& s, Eigen::VectorXd& t) {
  const int Np = (P + 1) * (P + 2) * (P + 3) / 6;
  r.resize(Np);
  s.resize(Np);
  t.resize(Np);
  int sk = 0;
  for (int n = 0; n <= P; ++n)
    for (int m = 0; m <= P - n; ++m)
      for (int q = 0; q <= P - n - m; ++q) {
        r[sk] = -1.0 + 2.0 * q / P;
        s[sk] = -1.0 + 2.0 * m / P;
        t[sk] = -1.0 + 2.0 * n / P;
        ++sk;
      }
}

// One-dimensional edge warp: moves equidistant edge nodes onto the
// Gauss-Lobatto distribution, deflated at the endpoints.
Eigen::VectorXd evalwarp(int p, const Eigen::VectorXd& xnodes, const Eigen::VectorXd& xout) {
  Eigen::VectorXd xeq(p + 1);
  for (int i = 0; i <= p; ++i) xeq[i] = -1.0 + 2.0 * (p - i) / double(p);

  Eigen::VectorXd warp = Eigen::VectorXd::Zero(xout.size());
  for (int i = 0; i <= p; ++i) {
    Eigen::VectorXd d = Eigen::VectorXd::Constant(xout.size(), xnodes[i] - xeq[i]);
    for (int j = 1; j < p; ++j) {
      if (i != j)
        d = d.cwiseProduct((xout.array() - xeq[j]).matrix()) / (xeq[i] - xeq[j]);
    }
    if (i != 0) d = -d / (xeq[i] - xeq[0]);
    if (i != p) d = d / (xeq[i] - xeq[p]);
    warp += d;
  }
  return warp;
}

// Tangential warp of a face node set, in the equilateral face frame.
void evalshift(int p, double pval, const Eigen::VectorXd& L1, const Eigen::VectorXd& L2,
               const Eigen::VectorXd& L3, Eigen::VectorXd& dx, Eigen::VectorXd& dy) {
  Eigen::VectorXd gauss_x = -jacobi_gl(0.0, 0.0, p);

  Eigen::VectorXd blend1 = L2.cwiseProduct(L3);
  Eigen::VectorXd blend2 = L1.cwiseProduct(L3);
  Eigen::VectorXd blend3 = L1.cwiseProduct(L2);

  Eigen::VectorXd wf1 = 4.0 * evalwarp(p, gauss_x, L3 - L2);
  Eigen::VectorXd wf2 = 4.0 * evalwarp(p, gauss_x, L1 - L3);
  Eigen::VectorXd wf3 = 4.0 * evalwarp(p, gauss_x, L2 - L1);

  Eigen::ArrayXd warp1 =
      blend1.array() * wf1.array() * (1.0 + (pval * L1.array()).square());
  Eigen::ArrayXd warp2 =
      blend2.array() * wf2.array() * (1.0 + (pval * L2.array()).square());
  Eigen::ArrayXd warp3 =
      blend3.array() * wf3.array() * (1.0 + (pval * L3.array()).square());

  dx = (warp1 + std::cos(2.0 * M_PI / 3.0) * warp2 + std::cos(4.0 * M_PI / 3.0) * warp3).matrix();
  dy = (std::sin(2.0 * M_PI / 3.0) * warp2 + std::sin(4.0 * M_PI / 3.0) * warp3).matrix();
}

}  // namespace

void nodes3d(int P, Eigen::VectorXd& r, Eigen::VectorXd& s, Eigen::VectorXd& t) {
  static const double alpha_store[15] = {0.0,    0.0,    0.0,    0.1002, 1.1332,
                                         1.5608, 1.3413, 1.2577, 1.1603, 1.10153,
                                         0.6080, 0.4523, 0.8856, 0.8717, 0.9655};
  const double alpha = (P <= 15) ? alpha_store[P - 1] : 1.0;
  const int Np = (P + 1) * (P + 2) * (P + 3) / 6;
  const double tol = 1e-10;

  equidistant_nodes(P, r, s, t);
  // For P <= 2 the Gauss-Lobatto edge distribution is already equidistant,
  // so the warp vanishes and the equidistant set is returned unchanged.

  Eigen::VectorXd L1 = (1.0 + t.array()) / 2.0;
  Eigen::VectorXd L2 = (1.0 + s.array()) / 2.0;
  Eigen::VectorXd L3 = (-(1.0 + r.array() + s.array() + t.array()) / 2.0).matrix();
  Eigen::VectorXd L4 = (1.0 + r.array()) / 2.0;

  const Eigen::Vector3d v1(-1.0, -1.0 / std::sqrt(3.0), -1.0 / std::sqrt(6.0));
  const Eigen::Vector3d v2(1.0, -1.0 / std::sqrt(3.0), -1.0 / std::sqrt(6.0));
  const Eigen::Vector3d v3(0.0, 2.0 / std::sqrt(3.0), -1.0 / std::sqrt(6.0));
  const Eigen::Vector3d v4(0.0, 0.0, 3.0 / std::sqrt(6.0));

  Eigen::Vector3d t1[4] = {v2 - v1, v2 - v1, v3 - v2, v3 - v1};
  Eigen::Vector3d t2[4] = {v3 - 0.5 * (v1 + v2), v4 - 0.5 * (v1 + v2), v4 - 0.5 * (v2 + v3),
                           v4 - 0.5 * (v1 + v3)};
  for (int f = 0; f < 4; ++f) {
    t1[f].normalize();
    t2[f].normalize();
  }

  Eigen::MatrixXd xyz(Np, 3);
  for (int i = 0; i < Np; ++i)
    xyz.row(i) = (L3[i] * v1 + L4[i] * v2 + L2[i] * v3 + L1[i] * v4).transpose();

  Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(Np, 3);
  for (int face = 0; face < 4; ++face) {
    Eigen::VectorXd La, Lb, Lc, Ld;
    switch (face) {
      case 0: La = L1; Lb = L2; Lc = L3; Ld = L4; break;
      case 1: La = L2; Lb = L1; Lc = L3; Ld = L4; break;
      case 2: La = L3; Lb = L1; Lc = L4; Ld = L2; break;
      default: La = L4; Lb = L1; Lc = L3; Ld = L2; break;
    }

    Eigen::VectorXd warp1, warp2;
    evalshift(P, alpha, Lb, Lc, Ld, warp1, warp2);

    Eigen::ArrayXd blend = Lb.array() * Lc.array() * Ld.array();
    Eigen::ArrayXd denom =
        (Lb.array() + 0.5 * La.array()) * (Lc.array() + 0.5 * La.array()) *
        (Ld.array() + 0.5 * La.array());
    for (int i = 0; i < Np; ++i) {
      if (denom[i] > tol)
        blend[i] = (1.0 + std::pow(alpha * La[i], 2)) * blend[i] / denom[i];
    }

    for (int i = 0; i < Np; ++i)
      shift.row(i) += (blend[i] * warp1[i]) * t1[face].transpose() +
                      (blend[i] * warp2[i]) * t2[face].transpose();

    // Points on this face but not interior to it (edges/vertices) take the
    // raw face warp, replacing any accumulated contribution.
    for (int i = 0; i < Np; ++i) {
      int interior = (Lb[i] > tol) + (Lc[i] > tol) + (Ld[i] > tol);
      if (La[i] < tol && interior < 3)
        shift.row(i) =
            warp1[i] * t1[face].transpose() + warp2[i] * t2[face].transpose();
    }
  }
  xyz += shift;

  // Back from the equilateral frame to reference (r,s,t).
  Eigen::Matrix3d A;
  A.col(0) = 0.5 * (v2 - v1);
  A.col(1) = 0.5 * (v3 - v1);
  A.col(2) = 0.5 * (v4 - v1);
  Eigen::Vector3d mid = 0.5 * (v2 + v3 + v4 - v1);
  Eigen::Matrix3d Ai = A.inverse();
  for (int i = 0; i < Np; ++i) {
    Eigen::Vector3d rst = Ai * (xyz.row(i).transpose() - mid);
    r[i] = rst[0];
    s[i] = rst[1];
    t[i] = rst[2];
  }
}

Eigen::MatrixXd vandermonde3d(int P, const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                              const Eigen::VectorXd& t) {
  const int Np = (P + 1) * (P + 2) * (P + 3) / 6;
  Eigen::MatrixXd V(r.size(), Np);
  for (Eigen::Index n = 0; n < r.size(); ++n) {
    double a, b, c;
    rst_to_abc(r[n], s[n], t[n], a, b, c);
    int sk = 0;
    for (int i = 0; i <= P; ++i)
      for (int j = 0; j <= P - i; ++j)
        for (int k = 0; k <= P - i - j; ++k) V(n, sk++) = simplex3dp(a, b, c, i, j, k);
  }
  return V;
}

void grad_vandermonde3d(int P, const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                        const Eigen::VectorXd& t, Eigen::MatrixXd& Vr, Eigen::MatrixXd& Vs,
                        Eigen::MatrixXd& Vt) {
  const int Np = (P + 1) * (P + 2) * (P + 3) / 6;
  Vr.resize(r.size(), Np);
  Vs.resize(r.size(), Np);
  Vt.resize(r.size(), Np);
  for (Eigen::Index n = 0; n < r.size(); ++n) {
    double a, b, c;
    rst_to_abc(r[n], s[n], t[n], a, b, c);
    int sk = 0;
    for (int i = 0; i <= P; ++i)
      for (int j = 0; j <= P - i; ++j)
        for (int k = 0; k <= P - i - j; ++k) {
          grad_simplex3dp(a, b, c, i, j, k, Vr(n, sk), Vs(n, sk), Vt(n, sk));
          ++sk;
        }
  }
}

Eigen::MatrixXd vandermonde2d(int P, const Eigen::VectorXd& r, const Eigen::VectorXd& s) {
  const int Nfp = (P + 1) * (P + 2) / 2;
  Eigen::MatrixXd V(r.size(), Nfp);
  for (Eigen::Index n = 0; n < r.size(); ++n) {
    double a = (std::abs(1.0 - s[n]) > 1e-12) ? 2.0 * (1.0 + r[n]) / (1.0 - s[n]) - 1.0 : -1.0;
    double b = s[n];
    int sk = 0;
    for (int i = 0; i <= P; ++i)
      for (int j = 0; j <= P - i; ++j) V(n, sk++) = simplex2dp(a, b, i, j);
  }
  return V;
}

Eigen::Vector2d ReferenceElement::face_coords(int face, const Eigen::Vector3d& rst) {
  switch (face) {
    case 0: return {rst[0], rst[1]};  // t = -1
    case 1: return {rst[0], rst[2]};  // s = -1
    case 2: return {rst[1], rst[2]};  // r+s+t = -1
    default: return {rst[1], rst[2]};  // r = -1
  }
}

Eigen::VectorXd ReferenceElement::face_basis_at(int face, const Eigen::Vector2d& rs) const {
  Eigen::VectorXd pr(1), ps(1);
  pr[0] = rs[0];
  ps[0] = rs[1];
  Eigen::MatrixXd psi = vandermonde2d(P, pr, ps);  // 1 x Nfp
  return face_v2d[face].transpose().fullPivLu().solve(psi.row(0).transpose());
}

Eigen::VectorXd ReferenceElement::basis_at(const Eigen::Vector3d& rst) const {
  Eigen::VectorXd pr(1), ps(1), pt(1);
  pr[0] = rst[0];
  ps[0] = rst[1];
  pt[0] = rst[2];
  Eigen::MatrixXd psi = vandermonde3d(P, pr, ps, pt);
  return invV.transpose() * psi.row(0).transpose();
}

ReferenceElement build_reference(int P) {
  if (P < 1 || P > 8) throw ConfigError("polynomial order P must be in 1..8, got " + std::to_string(P));

  ReferenceElement el;
  el.P = P;
  el.Np = (P + 1) * (P + 2) * (P + 3) / 6;
  el.Nfp = (P + 1) * (P + 2) / 2;

  nodes3d(P, el.r, el.s, el.t);

  el.V = vandermonde3d(P, el.r, el.s, el.t);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(el.V);
  if (!lu.isInvertible()) throw NumericsError("Vandermonde matrix is singular: node set not unisolvent");
  el.invV = lu.inverse();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(el.V);
  el.cond_V = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);

  Eigen::MatrixXd Vr, Vs, Vt;
  grad_vandermonde3d(P, el.r, el.s, el.t, Vr, Vs, Vt);
  el.Dr = Vr * el.invV;
  el.Ds = Vs * el.invV;
  el.Dt = Vt * el.invV;

  el.invMass = el.V * el.V.transpose();
  el.mass = el.invMass.inverse();

  // Face node masks.
  auto mask_of = [&](auto pred) {
    std::vector<int> ids;
    for (int i = 0; i < el.Np; ++i)
      if (pred(el.r[i], el.s[i], el.t[i])) ids.push_back(i);
    Eigen::VectorXi m(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) m[i] = ids[i];
    return m;
  };
  el.fmask[0] = mask_of([](double, double, double t) { return std::abs(1.0 + t) < kNodeTol; });
  el.fmask[1] = mask_of([](double, double s, double) { return std::abs(1.0 + s) < kNodeTol; });
  el.fmask[2] =
      mask_of([](double r, double s, double t) { return std::abs(1.0 + r + s + t) < kNodeTol; });
  el.fmask[3] = mask_of([](double r, double, double) { return std::abs(1.0 + r) < kNodeTol; });
  for (int f = 0; f < 4; ++f)
    if (el.fmask[f].size() != el.Nfp)
      throw NumericsError("face node mask has wrong size on face " + std::to_string(f));

  // Face mass matrices and the lift operator.
  Eigen::MatrixXd emat = Eigen::MatrixXd::Zero(el.Np, 4 * el.Nfp);
  for (int f = 0; f < 4; ++f) {
    Eigen::VectorXd fr(el.Nfp), fs(el.Nfp);
    for (int i = 0; i < el.Nfp; ++i) {
      int vid = el.fmask[f][i];
      Eigen::Vector2d rs =
          ReferenceElement::face_coords(f, {el.r[vid], el.s[vid], el.t[vid]});
      fr[i] = rs[0];
      fs[i] = rs[1];
    }
    el.face_v2d[f] = vandermonde2d(P, fr, fs);
    el.face_mass[f] = (el.face_v2d[f] * el.face_v2d[f].transpose()).inverse();
    el.face_mass_inv[f] = el.face_v2d[f] * el.face_v2d[f].transpose();
    for (int i = 0; i < el.Nfp; ++i)
      for (int j = 0; j < el.Nfp; ++j) emat(el.fmask[f][i], f * el.Nfp + j) += el.face_mass[f](i, j);
  }
  el.lift = el.invMass * emat;

  return el;
}

}  // namespace pdgtd

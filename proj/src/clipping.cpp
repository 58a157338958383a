#include "pdgtd/clipping.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

double polygon_area(const Polygon2& p) {
  double a = 0.0;
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % n];
    a += u.x() * v.y() - v.x() * u.y();
  }
  return 0.5 * a;
}

Eigen::Vector2d polygon_centroid(const Polygon2& p) {
  double a = 0.0;
  Eigen::Vector2d c(0, 0);
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % n];
    double cross = u.x() * v.y() - v.x() * u.y();
    a += cross;
    c += cross * (u + v);
  }
  if (std::abs(a) < 1e-300) return p.empty() ? c : p[0];
  return c / (3.0 * a);
}

Polygon2 clip_convex(const Polygon2& subject, const Polygon2& clip) {
  Polygon2 out = subject;
  const size_t nc = clip.size();
  for (size_t e = 0; e < nc && !out.empty(); ++e) {
    const Eigen::Vector2d a = clip[e];
    const Eigen::Vector2d b = clip[(e + 1) % nc];
    const Eigen::Vector2d edge = b - a;
    auto inside = [&](const Eigen::Vector2d& p) {
      return edge.x() * (p.y() - a.y()) - edge.y() * (p.x() - a.x()) >= 0.0;
    };
    auto intersect = [&](const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
      const Eigen::Vector2d d = q - p;
      double denom = edge.x() * d.y() - edge.y() * d.x();
      double u = (edge.x() * (a.y() - p.y()) - edge.y() * (a.x() - p.x())) / denom;
      return Eigen::Vector2d(p + u * d);
    };
    Polygon2 in;
    in.swap(out);
    const size_t ns = in.size();
    for (size_t i = 0; i < ns; ++i) {
      const Eigen::Vector2d& cur = in[i];
      const Eigen::Vector2d& nxt = in[(i + 1) % ns];
      bool cin = inside(cur), nin = inside(nxt);
      if (cin) out.push_back(cur);
      if (cin != nin) out.push_back(intersect(cur, nxt));
    }
  }
  return out;
}

namespace {

Polygon2 dedupe(const Polygon2& p, double tol) {
  Polygon2 out;
  for (const auto& v : p) {
    if (out.empty() || (v - out.back()).norm() > tol) out.push_back(v);
  }
  while (out.size() > 1 && (out.front() - out.back()).norm() <= tol) out.pop_back();
  return out;
}

Polygon2 ccw_triangle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                      const Eigen::Vector2d& c) {
  Polygon2 t = {a, b, c};
  if (polygon_area(t) < 0.0) std::swap(t[1], t[2]);
  return t;
}

}  // namespace

std::vector<ClipFragment> clip_faces(const std::vector<FaceTri>& trianglesA,
                                     const std::vector<FaceTri>& trianglesB,
                                     const Eigen::Vector3d& translation, double tol,
                                     Eigen::Vector3d* plane_origin, Eigen::Vector3d* plane_u,
                                     Eigen::Vector3d* plane_v) {
  std::vector<ClipFragment> frags;
  if (trianglesA.empty() || trianglesB.empty()) return frags;

  // Build a 2-D frame on side A's plane from the first triangle.
  const Eigen::Vector3d origin = trianglesA[0].v[0];
  Eigen::Vector3d n = (trianglesA[0].v[1] - trianglesA[0].v[0])
                          .cross(trianglesA[0].v[2] - trianglesA[0].v[0]);
  if (n.norm() < tol * tol) throw GeometryError("degenerate triangle on clip side A");
  n.normalize();
  Eigen::Vector3d u = (trianglesA[0].v[1] - trianglesA[0].v[0]).normalized();
  Eigen::Vector3d v = n.cross(u);
  if (plane_origin) *plane_origin = origin;
  if (plane_u) *plane_u = u;
  if (plane_v) *plane_v = v;

  auto project = [&](const Eigen::Vector3d& p) {
    Eigen::Vector3d d = p - origin;
    if (std::abs(d.dot(n)) > 100.0 * tol)
      throw GeometryError("clip input not coplanar: off-plane distance " +
                          std::to_string(d.dot(n)));
    return Eigen::Vector2d(d.dot(u), d.dot(v));
  };

  std::vector<Polygon2> pa(trianglesA.size()), pb(trianglesB.size());
  std::vector<Eigen::AlignedBox2d> ba(trianglesA.size()), bb(trianglesB.size());
  for (size_t i = 0; i < trianglesA.size(); ++i) {
    pa[i] = ccw_triangle(project(trianglesA[i].v[0]), project(trianglesA[i].v[1]),
                         project(trianglesA[i].v[2]));
    for (const auto& p : pa[i]) ba[i].extend(p);
  }
  for (size_t i = 0; i < trianglesB.size(); ++i) {
    pb[i] = ccw_triangle(project(trianglesB[i].v[0] + translation),
                         project(trianglesB[i].v[1] + translation),
                         project(trianglesB[i].v[2] + translation));
    for (const auto& p : pb[i]) bb[i].extend(p);
  }

  const double area_tol = tol * tol;
  for (size_t i = 0; i < pa.size(); ++i) {
    for (size_t j = 0; j < pb.size(); ++j) {
      if (!ba[i].intersects(bb[j])) continue;
      Polygon2 inter = dedupe(clip_convex(pa[i], pb[j]), tol);
      if (inter.size() < 3) continue;
      double area = polygon_area(inter);
      if (area < area_tol) continue;
      if (inter.size() > 6)
        throw GeometryError("triangle-triangle overlap with more than 6 vertices");
      ClipFragment f;
      f.poly = std::move(inter);
      f.ia = int(i);
      f.ib = int(j);
      f.area = area;
      frags.push_back(std::move(f));
    }
  }
  return frags;
}

}  // namespace pdgtd

#ifndef PDGTD_CLIPPING_HPP
#define PDGTD_CLIPPING_HPP

#include <vector>
#include <Eigen/Dense>

namespace pdgtd {

// Convex polygon in a common 2-D frame, vertices counter-clockwise.
using Polygon2 = std::vector<Eigen::Vector2d>;

double polygon_area(const Polygon2& p);
Eigen::Vector2d polygon_centroid(const Polygon2& p);

// Sutherland-Hodgman clip of a convex subject polygon against a convex clip
// polygon (both CCW). Result is convex; empty when the overlap is degenerate.
Polygon2 clip_convex(const Polygon2& subject, const Polygon2& clip);

// A planar triangle embedded in 3-D, tied back to a mesh face.
struct FaceTri {
  Eigen::Vector3d v[3];
  int elem = -1;
  int face = -1;
};

// One clipped overlap: a convex 3..6-vertex polygon (in the 2-D frame of the
// interface plane) together with the indices of the generating triangles.
struct ClipFragment {
  Polygon2 poly;
  int ia = -1;  // index into trianglesA
  int ib = -1;  // index into trianglesB
  double area = 0.0;
};

// Pairwise intersections of trianglesA with trianglesB translated by
// `translation` (side B is moved into side A's plane). All input triangles
// must be coplanar after the translation; fragments with area below
// tol*tol are discarded.
std::vector<ClipFragment> clip_faces(const std::vector<FaceTri>& trianglesA,
                                     const std::vector<FaceTri>& trianglesB,
                                     const Eigen::Vector3d& translation, double tol,
                                     Eigen::Vector3d* plane_origin = nullptr,
                                     Eigen::Vector3d* plane_u = nullptr,
                                     Eigen::Vector3d* plane_v = nullptr);

}  // namespace pdgtd

#endif

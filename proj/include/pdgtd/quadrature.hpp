#ifndef PDGTD_QUADRATURE_HPP
#define PDGTD_QUADRATURE_HPP

#include <Eigen/Dense>

namespace pdgtd {

// Quadrature on the unit right triangle {x >= 0, y >= 0, x + y <= 1}.
// Points are stored as barycentric triples (l1,l2,l3) with
// (x,y) = l2*(1,0) + l3*(0,1); weights sum to the triangle area 1/2.
struct TriangleQuadrature {
  Eigen::MatrixXd bary;  // n x 3
  Eigen::VectorXd w;     // n
  int degree = 0;        // exactness degree (total polynomial degree)

  Eigen::Index size() const { return w.size(); }
  // Cartesian point on the unit right triangle.
  Eigen::Vector2d point(Eigen::Index q) const {
    return Eigen::Vector2d(bary(q, 1), bary(q, 2));
  }
};

// Collapsed-coordinate (Duffy) tensor-product Gauss rule, exact for total
// degree <= degree, all weights positive for any degree.
TriangleQuadrature triangle_quadrature(int degree);

// Same construction on the reference tetrahedron with vertices
// (-1,-1,-1),(1,-1,-1),(-1,1,-1),(-1,-1,1); weights sum to 4/3.
struct TetQuadrature {
  Eigen::MatrixXd rst;  // n x 3
  Eigen::VectorXd w;    // n
  int degree = 0;
};

TetQuadrature tet_quadrature(int degree);

}  // namespace pdgtd

#endif

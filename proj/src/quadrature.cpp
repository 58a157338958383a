#include "pdgtd/quadrature.hpp"

#include "pdgtd/errors.hpp"
#include "pdgtd/jacobi.hpp"

namespace pdgtd {

TriangleQuadrature triangle_quadrature(int degree) {
  if (degree < 1) throw ConfigError("triangle quadrature degree must be >= 1");
  if (degree > 40) throw ConfigError("triangle quadrature degree > 40 unsupported");
  // n Gauss points per direction integrate degree 2n-1 exactly; the Duffy map
  // keeps total degree, and the (1-b) area factor is absorbed into the
  // Gauss-Jacobi(1,0) weight.
  const int n = (degree + 2) / 2;
  Eigen::VectorXd a, wa, b, wb;
  jacobi_gq(0.0, 0.0, n - 1, a, wa);
  jacobi_gq(1.0, 0.0, n - 1, b, wb);

  TriangleQuadrature q;
  q.degree = 2 * n - 1;
  q.bary.resize(n * n, 3);
  q.w.resize(n * n);
  Eigen::Index idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double x = (1.0 + a[i]) * (1.0 - b[j]) / 4.0;
      double y = (1.0 + b[j]) / 2.0;
      q.bary(idx, 0) = 1.0 - x - y;
      q.bary(idx, 1) = x;
      q.bary(idx, 2) = y;
      q.w[idx] = wa[i] * wb[j] / 8.0;
      ++idx;
    }
  }
  return q;
}

TetQuadrature tet_quadrature(int degree) {
  if (degree < 1) throw ConfigError("tet quadrature degree must be >= 1");
  const int n = (degree + 2) / 2;
  Eigen::VectorXd a, wa, b, wb, c, wc;
  jacobi_gq(0.0, 0.0, n - 1, a, wa);
  jacobi_gq(1.0, 0.0, n - 1, b, wb);
  jacobi_gq(2.0, 0.0, n - 1, c, wc);

  TetQuadrature q;
  q.degree = 2 * n - 1;
  q.rst.resize(n * n * n, 3);
  q.w.resize(n * n * n);
  Eigen::Index idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // Collapsed map from the cube [-1,1]^3 onto the reference tet.
        double r = (1.0 + a[i]) * (1.0 - b[j]) * (1.0 - c[k]) / 4.0 - 1.0;
        double s = (1.0 + b[j]) * (1.0 - c[k]) / 2.0 - 1.0;
        double t = c[k];
        q.rst(idx, 0) = r;
        q.rst(idx, 1) = s;
        q.rst(idx, 2) = t;
        q.w[idx] = wa[i] * wb[j] * wc[k] / 8.0;
        ++idx;
      }
    }
  }
  return q;
}

}  // namespace pdgtd

#ifndef PDGTD_JACOBI_HPP
#define PDGTD_JACOBI_HPP

#include <Eigen/Dense>

namespace pdgtd {

// Orthonormal Jacobi polynomials P_n^(alpha,beta) on [-1,1] with weight
// (1-x)^alpha (1+x)^beta, their derivatives, and Gauss / Gauss-Lobatto rules.
// These back the collapsed-coordinate simplex bases.

double jacobi_p(double x, double alpha, double beta, int n);
double grad_jacobi_p(double x, double alpha, double beta, int n);

Eigen::VectorXd jacobi_p(const Eigen::VectorXd& x, double alpha, double beta, int n);

// Gauss-Jacobi rule with n+1 points, exact for polynomials of degree 2n+1
// against the Jacobi weight.
void jacobi_gq(double alpha, double beta, int n, Eigen::VectorXd& x, Eigen::VectorXd& w);

// Gauss-Lobatto points (endpoints included), n+1 points, n >= 1.
Eigen::VectorXd jacobi_gl(double alpha, double beta, int n);

}  // namespace pdgtd

#endif

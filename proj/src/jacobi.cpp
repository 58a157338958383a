#include "pdgtd/jacobi.hpp"

#include <cmath>

#include "pdgtd/errors.hpp"

namespace pdgtd {

double jacobi_p(double x, double alpha, double beta, int n) {
  // Three-term recurrence for the orthonormal Jacobi polynomials.
  const double ab = alpha + beta;
  double gamma0 = std::pow(2.0, ab + 1.0) / (ab + 1.0) * std::tgamma(alpha + 1.0) *
                  std::tgamma(beta + 1.0) / std::tgamma(ab + 1.0);
  double p_prev = 1.0 / std::sqrt(gamma0);
  if (n == 0) return p_prev;

  double gamma1 = (alpha + 1.0) * (beta + 1.0) / (ab + 3.0) * gamma0;
  double p_cur = ((ab + 2.0) * x / 2.0 + (alpha - beta) / 2.0) / std::sqrt(gamma1);
  if (n == 1) return p_cur;

  double aold = 2.0 / (2.0 + ab) * std::sqrt((alpha + 1.0) * (beta + 1.0) / (ab + 3.0));
  for (int i = 1; i <= n - 1; ++i) {
    double h1 = 2.0 * i + ab;
    double anew = 2.0 / (h1 + 2.0) *
                  std::sqrt((i + 1.0) * (i + 1.0 + ab) * (i + 1.0 + alpha) * (i + 1.0 + beta) /
                            ((h1 + 1.0) * (h1 + 3.0)));
    double bnew = -(alpha * alpha - beta * beta) / (h1 * (h1 + 2.0));
    double p_next = (-aold * p_prev + (x - bnew) * p_cur) / anew;
    p_prev = p_cur;
    p_cur = p_next;
    aold = anew;
  }
  return p_cur;
}

double grad_jacobi_p(double x, double alpha, double beta, int n) {
  if (n == 0) return 0.0;
  return std::sqrt(n * (n + alpha + beta + 1.0)) * jacobi_p(x, alpha + 1.0, beta + 1.0, n - 1);
}

Eigen::VectorXd jacobi_p(const Eigen::VectorXd& x, double alpha, double beta, int n) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = jacobi_p(x[i], alpha, beta, n);
  return out;
}

void jacobi_gq(double alpha, double beta, int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  if (n == 0) {
    x.resize(1);
    w.resize(1);
    x[0] = (alpha - beta) / (alpha + beta + 2.0);
    w[0] = 2.0;
    return;
  }
  // Golub-Welsch: symmetric tridiagonal Jacobi matrix.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n + 1, n + 1);
  const double ab = alpha + beta;
  for (int i = 0; i <= n; ++i) {
    double h1 = 2.0 * i + ab;
    J(i, i) = -0.5 * (alpha * alpha - beta * beta) / ((h1 + 2.0) * h1);
  }
  if (ab < 10.0 * std::numeric_limits<double>::epsilon()) J(0, 0) = 0.0;
  for (int i = 1; i <= n; ++i) {
    double h1 = 2.0 * (i - 1.0) + ab;
    double off = 2.0 / (h1 + 2.0) *
                 std::sqrt(i * (i + ab) * (i + alpha) * (i + beta) / ((h1 + 1.0) * (h1 + 3.0)));
    J(i - 1, i) = off;
    J(i, i - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw NumericsError("Gauss-Jacobi eigensolve failed");
  x = es.eigenvalues();
  w.resize(n + 1);
  double mu0 = std::pow(2.0, ab + 1.0) / (ab + 1.0) * std::tgamma(alpha + 1.0) *
               std::tgamma(beta + 1.0) / std::tgamma(ab + 1.0);
  for (int i = 0; i <= n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    w[i] = v0 * v0 * mu0;
  }
}

Eigen::VectorXd jacobi_gl(double alpha, double beta, int n) {
  if (n < 1) throw NumericsError("jacobi_gl requires n >= 1");
  Eigen::VectorXd x(n + 1);
  x[0] = -1.0;
  x[n] = 1.0;
  if (n == 1) return x;
  Eigen::VectorXd xi, wi;
  jacobi_gq(alpha + 1.0, beta + 1.0, n - 2, xi, wi);
  for (int i = 0; i < n - 1; ++i) x[i + 1] = xi[i];
  return x;
}

}  // namespace pdgtd

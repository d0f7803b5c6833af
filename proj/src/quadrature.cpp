#include "zonal/quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "zonal/error.hpp"

namespace zonal {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first components of the eigenvectors.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    t(i, i) = diag(i);
    if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = offdiag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  if (solver.info() != Eigen::Success) throw Error("quadrature eigensolver failed");
  QuadratureRule rule;
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.nodes.push_back(solver.eigenvalues()(i));
    const double v = solver.eigenvectors()(0, i);
    rule.weights.push_back(mu0 * v * v);
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_laguerre(int n, double c) {
  if (n < 1) throw Error("quadrature order must be positive");
  if (!(c > -1)) throw Error("Laguerre parameter must exceed -1");
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2 * k + c + 1;
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(k * (k + c));
  return golub_welsch(diag, off, std::tgamma(c + 1));
}

QuadratureRule gauss_jacobi01(int n, double a, double b) {
  if (n < 1) throw Error("quadrature order must be positive");
  if (!(a > -1) || !(b > -1)) throw Error("Jacobi parameters must exceed -1");
  // Recurrence on [-1, 1] for (1-x)^a (1+x)^b, then x = 2v - 1.
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  const double s = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      diag(k) = (b - a) / (s + 2);
    } else {
      diag(k) = (b * b - a * a) / ((2 * k + s) * (2 * k + s + 2));
    }
  }
  for (int k = 1; k < n; ++k) {
    double beta;
    if (k == 1) {
      beta = 4 * (1 + a) * (1 + b) / (std::pow(2 + s, 2) * (3 + s));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + s) / (std::pow(2 * k + s, 2) * (2 * k + s + 1) * (2 * k + s - 1));
    }
    off(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(s + 2));
  auto rule = golub_welsch(diag, off, 1.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * (rule.nodes[i] + 1);
    rule.weights[i] *= mu0;
  }
  return rule;
}

}  // namespace zonal

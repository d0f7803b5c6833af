#include "zonal/ensembles.hpp"

#include <cmath>
#include <random>

#include "zonal/error.hpp"

namespace zonal {

namespace {

constexpr double kTol = 1e-10;

Matrix real_block(int rows, int cols, Philox& rng) {
  std::normal_distribution<double> normal;
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = normal(rng);
  return g;
}

Matrix complex_block(int rows, int cols, Philox& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      g(i, j) = cplx(re, normal(rng));
    }
  return g;
}

Matrix quaternion_block(int rows, int cols, Philox& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(2 * rows, 2 * cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double z0 = normal(rng);
      const cplx z(z0, normal(rng));
      const double w0 = normal(rng);
      const cplx w(w0, normal(rng));
      g(2 * i, 2 * j) = z;
      g(2 * i, 2 * j + 1) = w;
      g(2 * i + 1, 2 * j) = -std::conj(w);
      g(2 * i + 1, 2 * j + 1) = std::conj(z);
    }
  return g;
}

// Fixes the phase of each column so the R factor has a positive diagonal.
Matrix normalized_q(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Matrix symplectic_q(const Matrix& g) {
  const Eigen::Index dim = g.rows();
  const Matrix j = structure_j(static_cast<int>(dim / 2));
  Matrix q(dim, dim);
  for (Eigen::Index c = 0; c < dim; c += 2) {
    Eigen::VectorXcd v = g.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index p = 0; p < c; ++p) v -= q.col(p).dot(v) * q.col(p);
    v /= v.norm();
    q.col(c) = v;
    q.col(c + 1) = -j * v.conjugate();
  }
  return q;
}

}  // namespace

Matrix ginibre_block(Field f, int rows, int cols, Philox& rng) {
  if (rows < 1 || cols < 1) throw Error("matrix dimension must be positive");
  switch (f) {
    case Field::real:
      return real_block(rows, cols, rng);
    case Field::complex:
      return complex_block(rows, cols, rng);
    case Field::quaternion:
      return quaternion_block(rows, cols, rng);
  }
  throw Error("unknown field");
}

GinibreSampler::GinibreSampler(Field f, int n, const Matrix& sigma)
    : field_(f), n_(n), sigma_(ensemble_sigma(f, n, sigma)) {
  root_ = hermitian_sqrt(sigma_);
  if (f == Field::real) root_ = root_.real().cast<cplx>();
  identity_ = (sigma_ - Matrix::Identity(sigma_.rows(), sigma_.cols())).cwiseAbs().maxCoeff() == 0;
}

Matrix GinibreSampler::operator()(Philox& rng) const {
  Matrix g = ginibre_block(field_, n_, n_, rng);
  if (identity_) return g;
  return root_ * g;
}

Matrix sample_ginibre(const EnsembleSpec& spec, Philox& rng) { return GinibreSampler(spec)(rng); }

Group parse_group(std::string_view name) {
  if (name == "O") return Group::O;
  if (name == "U") return Group::U;
  if (name == "Sp") return Group::Sp;
  throw Error("unknown group");
}

std::string to_string(Group g) {
  switch (g) {
    case Group::O:
      return "O";
    case Group::U:
      return "U";
    case Group::Sp:
      return "Sp";
  }
  return "?";
}

Field group_field(Group g) {
  switch (g) {
    case Group::O:
      return Field::real;
    case Group::U:
      return Field::complex;
    case Group::Sp:
      return Field::quaternion;
  }
  throw Error("unknown group");
}

Matrix sample_haar(Group g, int n, Philox& rng) {
  const Matrix x = ginibre_block(group_field(g), n, n, rng);
  return g == Group::Sp ? symplectic_q(x) : normalized_q(x);
}

Matrix sample_wishart(Field f, int rows, int cols, Philox& rng) {
  const Matrix g = ginibre_block(f, rows, cols, rng);
  return g * g.adjoint();
}

std::vector<double> laguerre_spectrum(const JackParam& alpha, int n, const Rational& a, Philox& rng) {
  Field f;
  if (alpha.value() == 2)
    f = Field::real;
  else if (alpha.value() == 1)
    f = Field::complex;
  else if (alpha.value() == make_rational(1, 2))
    f = Field::quaternion;
  else
    throw Error("no matrix model for a");
  // a = (beta/2)(M - n + 1) - 1
  const Rational half_beta = 1 / alpha.value();
  const Rational m = (a + 1) / half_beta + n - 1;
  if (!is_integer(m) || m < n) throw Error("no matrix model for a");
  const Matrix w = sample_wishart(f, n, static_cast<int>(m.get_num().get_si()), rng);
  if (f == Field::quaternion) return quaternion_hermitian_eigenvalues(w);
  return hermitian_eigenvalues(w);
}

cplx qtrace(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2) throw Error("not self-dual");
  return m.trace() / 2.0;
}

double qdet_charpoly(const Matrix& m, double x) {
  if (m.rows() != m.cols() || m.rows() % 2 || self_dual_defect(m) > kTol * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw Error("not self-dual");
  const cplx d = (Matrix::Identity(m.rows(), m.cols()) - x * m).determinant();
  if (std::abs(d.imag()) > kTol * std::max(1.0, std::abs(d))) throw Error("determinant not real");
  return d.real();
}

}  // namespace zonal

#include "zonal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "zonal/error.hpp"

namespace zonal {

JackParam jack_param(Field f) {
  switch (f) {
    case Field::real:
      return JackParam::real();
    case Field::complex:
      return JackParam::complex();
    case Field::quaternion:
      return JackParam::quaternion();
  }
  throw Error("unknown field");
}

std::string to_string(Field f) {
  switch (f) {
    case Field::real:
      return "real";
    case Field::complex:
      return "complex";
    case Field::quaternion:
      return "quaternion";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  if (name == "quaternion") return Field::quaternion;
  throw Error("unknown ensemble '" + std::string(name) + "'");
}

std::vector<cplx> eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("matrix must be square");
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue routine failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> hermitian_eigenvalues(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error("matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * scale) throw Error("matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue routine failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Matrix hermitian_sqrt(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) throw Error("sigma not positive definite");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue routine failed");
  if (solver.eigenvalues().minCoeff() <= 0) throw Error("sigma not positive definite");
  return solver.operatorSqrt();
}

Matrix structure_j(int n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  for (int b = 0; b < n; ++b) {
    j(2 * b, 2 * b + 1) = 1;
    j(2 * b + 1, 2 * b) = -1;
  }
  return j;
}

double self_dual_defect(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2) throw Error("quaternion matrix must be 2n x 2n");
  const Matrix j = structure_j(static_cast<int>(m.rows() / 2));
  // J^-1 = -J
  return (-(j * m.conjugate() * j) - m).cwiseAbs().maxCoeff();
}

Matrix quaternion_embed(const Matrix& s) {
  const Eigen::Index n = s.rows();
  Matrix out = Matrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < s.cols(); ++k) {
      out(2 * i, 2 * k) = s(i, k);
      out(2 * i + 1, 2 * k + 1) = std::conj(s(i, k));
    }
  return out;
}

std::vector<double> quaternion_hermitian_eigenvalues(const Matrix& m) {
  auto all = hermitian_eigenvalues(m);
  std::vector<double> out;
  for (std::size_t i = 0; i < all.size(); i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
  return out;
}

std::vector<cplx> quaternion_eigenvalues(const Matrix& m) {
  auto values = eigenvalues(m);
  std::sort(values.begin(), values.end(), [](cplx a, cplx b) { return a.imag() > b.imag(); });
  std::vector<bool> used(values.size(), false);
  std::vector<cplx> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t arg = i;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = i + 1; k < values.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(values[k] - std::conj(values[i]));
      if (d < best) {
        best = d;
        arg = k;
      }
    }
    if (arg == i) throw Error("eigenvalues do not pair under conjugation");
    used[arg] = true;
    cplx rep = 0.5 * (values[i] + std::conj(values[arg]));
    if (rep.imag() < 0) rep = std::conj(rep);
    out.push_back(rep);
  }
  return out;
}

double conjugate_pairing_error(std::vector<cplx> values) {
  double worst = 0;
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = i;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(values[k] - std::conj(values[i]));
      if (d < best) {
        best = d;
        arg = k;
      }
    }
    if (arg == i) return std::numeric_limits<double>::infinity();
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

Matrix ensemble_sigma(Field f, int n, const Matrix& sigma) {
  if (sigma.rows() != sigma.cols()) throw Error("sigma must be square");
  if (f == Field::quaternion) {
    if (sigma.rows() == 2 * n) {
      if (self_dual_defect(sigma) > 1e-10) throw Error("quaternion sigma must be self-dual");
      hermitian_sqrt(sigma);
      return sigma;
    }
    if (sigma.rows() != n) throw Error("sigma dimension mismatch");
    hermitian_sqrt(sigma);
    return quaternion_embed(sigma);
  }
  if (sigma.rows() != n) throw Error("sigma dimension mismatch");
  if (f == Field::real && sigma.imag().cwiseAbs().maxCoeff() > 0) throw Error("real ensemble needs a real sigma");
  hermitian_sqrt(sigma);
  return sigma;
}

std::vector<double> sigma_spectrum(Field f, int n, const Matrix& sigma) {
  const Matrix s = ensemble_sigma(f, n, sigma);
  return f == Field::quaternion ? quaternion_hermitian_eigenvalues(s) : hermitian_eigenvalues(s);
}

Matrix sigma_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto& data = j.at("data");
    if (n < 1 || !data.is_array() || static_cast<int>(data.size()) != n) throw Error("sigma JSON: bad shape");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
      const auto& row = data[r];
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw Error("sigma JSON: bad shape");
      for (int c = 0; c < n; ++c) {
        const auto& e = row[c];
        m(r, c) = e.is_object() ? cplx(e.at("re").get<double>(), e.value("im", 0.0)) : cplx(e.get<double>(), 0.0);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("sigma JSON: ") + e.what());
  }
}

Matrix load_sigma(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open sigma file " + file.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("sigma JSON: ") + e.what());
  }
  return sigma_from_json(j);
}

}  // namespace zonal

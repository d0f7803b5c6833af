#pragma once

#include <complex>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "zonal/field.hpp"

namespace zonal {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Eigenvalues of a general square matrix, in the order returned by the solver.
std::vector<cplx> eigenvalues(const Matrix& m);

/// Eigenvalues of a Hermitian matrix in ascending order. Throws "matrix not
/// Hermitian" when ||M - M^dag||_max > tol * max(1, ||M||_max).
std::vector<double> hermitian_eigenvalues(const Matrix& m, double tol = 1e-10);

/// Positive square root of a Hermitian positive-definite matrix. Throws
/// "sigma not positive definite" when the smallest eigenvalue is <= 0.
Matrix hermitian_sqrt(const Matrix& m);

/// J = diag of n blocks [[0,1],[-1,0]] (2n x 2n).
Matrix structure_j(int n);

/// max |J conj(M) J^-1 - M|, zero for self-dual embeddings of quaternion matrices.
double self_dual_defect(const Matrix& m);

/// Embeds an n x n complex matrix S as the quaternion matrix with blocks
/// [[s_ij, 0], [0, conj(s_ij)]].
Matrix quaternion_embed(const Matrix& s);

/// The n eigenvalues of a Hermitian self-dual 2n x 2n matrix (each complex
/// eigenvalue is doubled; one copy of each is returned, ascending).
std::vector<double> quaternion_hermitian_eigenvalues(const Matrix& m);

/// The n quaternion eigenvalues of a self-dual 2n x 2n matrix: one member of
/// each conjugate pair, the one with nonnegative imaginary part.
std::vector<cplx> quaternion_eigenvalues(const Matrix& m);

/// Largest distance between an eigenvalue list and its complex conjugate,
/// after optimal greedy pairing. Zero for spectra of self-dual matrices.
double conjugate_pairing_error(std::vector<cplx> values);

/// Variance matrix for an N-dimensional ensemble of the given field, from
/// either an N x N Hermitian matrix (real symmetric for Field::real) or, for
/// quaternion, a 2N x 2N self-dual matrix. Returns the matrix in the
/// dimension the sampler works in (2N embedding for quaternion).
Matrix ensemble_sigma(Field f, int n, const Matrix& sigma);

/// The eigenvalues of Sigma that enter C_kappa arguments: N values for every
/// field (quaternion eigenvalues for Field::quaternion).
std::vector<double> sigma_spectrum(Field f, int n, const Matrix& sigma);

/// Reads {"n": N, "data": [[...], ...]} with entries numbers or {"re","im"}.
Matrix sigma_from_json(const nlohmann::json& j);
Matrix load_sigma(const std::filesystem::path& file);

}  // namespace zonal

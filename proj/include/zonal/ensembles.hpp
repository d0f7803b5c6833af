#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "zonal/field.hpp"
#include "zonal/linalg.hpp"
#include "zonal/rng.hpp"

namespace zonal {

/// Gaussian ensemble with variance matrix Sigma. Real entries have variance
/// 1, complex entries E|x|^2 = 1, quaternion blocks [[z, w], [-conj w, conj z]]
/// with E|z|^2 = E|w|^2 = 1. Sigma is given as for ensemble_sigma().
struct EnsembleSpec {
  Field field = Field::complex;
  int n = 1;
  Matrix sigma;
  std::uint64_t seed = 0;
};

/// Draws X = Sigma^{1/2} G with Sigma^{1/2} computed once. Matrices are n x n,
/// or 2n x 2n self-dual embeddings for quaternion.
class GinibreSampler {
 public:
  GinibreSampler(Field f, int n, const Matrix& sigma);
  explicit GinibreSampler(const EnsembleSpec& spec) : GinibreSampler(spec.field, spec.n, spec.sigma) {}

  Field field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return field_ == Field::quaternion ? 2 * n_ : n_; }
  const Matrix& sigma() const { return sigma_; }

  Matrix operator()(Philox& rng) const;

 private:
  Field field_;
  int n_;
  Matrix sigma_;
  Matrix root_;
  bool identity_;
};

/// Ginibre block G with Sigma = I: rows x cols (quaternion: 2rows x 2cols).
Matrix ginibre_block(Field f, int rows, int cols, Philox& rng);

Matrix sample_ginibre(const EnsembleSpec& spec, Philox& rng);

enum class Group { O, U, Sp };

/// "O", "U", "Sp"; throws Error otherwise.
Group parse_group(std::string_view name);
std::string to_string(Group g);
/// Field whose Ginibre samples generate the group.
Field group_field(Group g);

/// Haar-distributed O(n), U(n), or Sp(2n) (as a 2n x 2n unitary self-dual matrix).
Matrix sample_haar(Group g, int n, Philox& rng);

/// W = G G^dag for a rows x cols Ginibre block G.
Matrix sample_wishart(Field f, int rows, int cols, Philox& rng);

/// Eigenvalues of an n x n Wishart matrix realizing the Laguerre weight
/// prod t^a e^{-t} |Delta|^{2/alpha} (alpha = 1, 1/2) or prod t^a e^{-t/2}
/// |Delta| (alpha = 2). Throws "no matrix model for a" unless
/// a = (beta/2)(M - n + 1) - 1 for an integer M >= n, beta = 2/alpha.
std::vector<double> laguerre_spectrum(const JackParam& alpha, int n, const Rational& a, Philox& rng);

/// Half the complex trace of a self-dual matrix.
cplx qtrace(const Matrix& m);

/// det(I_2n - x M) for self-dual M; throws "not self-dual" or "determinant
/// not real" beyond 1e-10.
double qdet_charpoly(const Matrix& m, double x);

}  // namespace zonal

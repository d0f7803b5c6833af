#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "zonal/field.hpp"
#include "zonal/jack.hpp"
#include "zonal/linalg.hpp"

namespace zonal {

/// pFq^(alpha)(a_1..a_p; b_1..b_q; x_1..x_N), summed over partitions of
/// length <= N and weight <= max_weight unless the series terminates.
struct HyperSpec {
  std::vector<Rational> a;
  std::vector<Rational> b;
  JackParam alpha = JackParam::complex();
  int nvars = 1;
  int max_weight = 30;
};

struct HyperValue {
  cplx value;
  /// Magnitude of the last weight shell summed; 0 for terminating series.
  double tail_estimate = 0;
  bool terminating = false;
  int terms = 0;
};

/// r when some a_i equals -r for a nonnegative integer r (the series then
/// lives on partitions with kappa_1 <= r).
std::optional<int> termination_order(const HyperSpec& spec);

/// The partitions the series runs over: the r x N box when terminating,
/// otherwise every partition of weight <= max_weight with length <= N.
std::vector<Partition> series_support(const HyperSpec& spec);

/// prod [a_i]_kappa / prod [b_j]_kappa / |kappa|!, the coefficient of C_kappa.
/// Zero when a numerator Pochhammer vanishes; throws "b-parameter pole" when
/// only a denominator does.
Rational hyper_coefficient(const HyperSpec& spec, const Partition& kappa);

HyperValue pFq(const HyperSpec& spec, std::span<const cplx> x);
inline HyperValue pFq(const HyperSpec& spec, const Spectrum& x) { return pFq(spec, x.values()); }

/// Exact sum over series_support (exact value when terminating).
Rational pFq_exact(const HyperSpec& spec, std::span<const Rational> x);

/// Coefficients of P_kappa^(alpha) in the series (hyper_coefficient times
/// the C-to-P factor alpha^|kappa| |kappa|! / d'_kappa), zeros dropped.
std::map<Partition, Rational> pFq_jack_coefficients(const HyperSpec& spec);

// ---------------------------------------------------------------------------
// Characteristic polynomial and Wishart moments

/// <det(I - xX)^r> (real), <|det(I - xX)|^{2r}> (complex), and
/// <det(I_2N - xX)^r> (quaternion) for Gaussian X with variance matrix Sigma:
///   real:       2F0^(2)(-r/2, (-r+1)/2; 2 x^2 Sigma)
///   complex:    2F0^(1)(-r, -r; |x|^2 Sigma)
///   quaternion: 2F0^(1/2)(-r, -r-1; |x|^2 q(Sigma))
/// where q(Sigma) are the N quaternion eigenvalues. Sigma is given as in
/// ensemble_sigma(); n defaults to the row count of Sigma (pass N to hand a
/// quaternion Sigma over as its 2N x 2N embedding).
double charpoly_moment(Field f, int r, cplx x, const Matrix& sigma, int n = -1);

/// The quaternion form with second parameter -r+1, kept for comparison.
double charpoly_moment_quaternion_printed(int r, cplx x, const Matrix& sigma, int n = -1);

/// |x|^{2Ns} <(det W)^s> for W = (X - I/x)(X - I/x)^dag:
///   real:       2F0^(2)(-s, -s+1/2; 2 x^2 Sigma)
///   complex:    2F0^(1)(-s, -s; |x|^2 Sigma)
///   quaternion: |x|^{2Ns} <(det W)^{s/2}> over the 2N embedding,
///               2F0^(1/2)(-s, -s-1; |x|^2 q(Sigma))
double wishart_det_moment(Field f, int s, cplx x, const Matrix& sigma, int n = -1);

/// Real noncentral Wishart moment <(det W)^s> in the form
/// (det Sigma)^s 2^{Ns} Gamma_N(N/2+s)/Gamma_N(N/2) 1F1^(2)(-s; N/2; -Sigma^-1/(2x^2)).
double muirhead_form(int s, double x, const Matrix& sigma);

struct IdentityTerm {
  Partition lambda;
  Rational lhs;
  Rational rhs;
};

/// Both sides of
///   2F0^(2)(-s, -s+1/2; Y) = [N/2]_{s^N} (det Y)^s 1F1^(2)(-s; N/2; -Y^-1)
/// expanded in P_lambda^(2)(Y), lambda in the s x N box.
std::vector<IdentityTerm> identity_id_terms(int n, int s);

/// Evaluates both sides of the identity exactly at a diagonal Y.
std::pair<Rational, Rational> identity_id_values(int s, std::span<const Rational> y);

// ---------------------------------------------------------------------------
// Duality integral

enum class DualityRule { automatic, tensor, sector };

/// Ratio of r-dimensional integrals
///   int prod_l t_l^{a-1} e^{-t_l} det(I + (t_l/alpha) Y) prod_{j<k} |t_k - t_j|^{2 alpha} dt
///   / (same integral with det = 1),
/// by Gauss quadrature with quad_order nodes per axis. The tensor rule is
/// exact when 2 alpha is an even integer; otherwise the ordered-sector rule
/// (radial Laguerre times Jacobi in ratio coordinates) is used.
cplx duality_integral(int r, const Rational& a, const JackParam& alpha, std::span<const cplx> y,
                      int quad_order = 80, DualityRule rule = DualityRule::automatic);

/// 2F0^(alpha)(-r, -a/alpha - (r-1); Y), the closed form of the duality integral.
cplx duality_closed(int r, const Rational& a, const JackParam& alpha, std::span<const cplx> y);

// ---------------------------------------------------------------------------
// Eigenvalue density for the variance matrix diag(sigma, 1^N)

double density_rank1(cplx z, int n, double sigma);
double density_bulk(cplx z, int n, double sigma);
double density_edge(double r);

/// The same density at sigma = 1 as (1/pi) e^{-|z|^2} sum_{k<=N} |z|^{2k}/k!.
double density_truncated_exponential(cplx z, int n);

// ---------------------------------------------------------------------------
// Closed-form averages

/// C_kappa((1)^N) [a + (N-1)/alpha + 1]_kappa.
Rational kaneko_closed(const Rational& a, const JackParam& alpha, const Partition& kappa, int n);

/// <s_mu(AX)> for real or quaternion Ginibre X (A is N x N, or for
/// quaternion either 2N x 2N self-dual or N x N complex to be embedded):
///   real:       2^|k| [N/2]^(2)_k C^(2)_k(AA^T) / C^(2)_k((1)^N), mu = 2k
///   quaternion: [2N]^(1/2)_k C^(1/2)_k(AA^dag) / C^(1/2)_k((1)^N), mu = k^2
/// and 0 otherwise.
double schur_average_closed(Field f, const Partition& mu, const Matrix& a, int n);

/// <s_mu(AX) s_kappa(X^dag A^dag)> for complex Ginibre X.
double schur_pair_average_closed(const Partition& mu, const Partition& kappa, const Matrix& a);

/// Exact A = I value of the real case: 2^|k| [N/2]^(2)_k for mu = 2k, else 0.
Rational real_schur_identity_exact(const Partition& mu, int n);

/// The gamma-ratio product 2^{|mu|/2} prod_n Gamma((N-n+mu_n+1)/2)/Gamma((N-n+1)/2)
/// for mu with all parts even, else 0, as an exact rational.
Rational real_schur_gamma_product(const Partition& mu, int n);

/// Haar averages <s_lambda(AO)>, <s_lambda(AU) s_kappa(U^dag A^dag)>, <s_lambda(AS)>.
double group_average_closed(Field f, const Partition& lambda, const Matrix& a, int n);
double unitary_pair_average_closed(const Partition& lambda, const Partition& kappa, const Matrix& a);

/// <C_kappa(XX^dag)> / C_kappa((1)^N) for unit-variance Ginibre X:
/// 2^|k| [N/2]^(2), [N]^(1), [2N]^(1/2).
Rational ginibre_C_ratio(Field f, const Partition& kappa, int n);

/// <C_kappa(A X B X^dag)> = C_kappa(A) C_kappa(B) / C_kappa((1)^N)^2 <C_kappa(XX^dag)>.
double splitting_closed(Field f, const Partition& kappa, const Matrix& a, const Matrix& b);

struct DPrimeForms {
  std::array<Rational, 3> lhs;
  std::array<Rational, 3> rhs;
};

/// Left sides 2^|k|[N/2]^(2)/C^(2)((1)^N), [N]^(1)/C^(1)((1)^N),
/// 2^-|k|[2N]^(1/2)/C^(1/2)((1)^N) and right sides d'_{2k}/(|k|! 2^|k|),
/// (d'_k)^2/|k|!, d'_{k^2}/(2^|k| |k|!) with d' at alpha = 1.
DPrimeForms d_prime_ratio_forms(const Partition& kappa, int n);

/// Spectrum entering C_kappa(A A^dag) for the given field (N values).
std::vector<double> gram_spectrum(Field f, int n, const Matrix& a);

/// Closed forms for the power-sum averages <p_k(X)> (real, quaternion) and
/// <p_k(X) p_k(X^dag)> (complex), assembled from the hook expansion of p_k
/// and the Schur averages above. Only hooks of the form 2k (real) or k^2
/// (quaternion) survive, so the real case keeps l = 0 and the quaternion
/// case keeps l = k-1 with sign (-1)^{k-1}.
double power_sum_closed(Field f, int k, const Matrix& sigma, int n = -1);

/// The printed corollary forms: the real sum over hooks (k/2-l, 1^l),
/// l < k/2, and the quaternion form without the hook sign (evaluated with
/// the variance matrix 2 Sigma of the weight e^{-Tr XX^dag Sigma^-1/2}).
double power_sum_printed(Field f, int k, const Matrix& sigma, int n = -1);

/// Complex case: sum over pairs of hooks of the signed Schur pair averages,
/// exact at Sigma = I; and the printed single hook sum.
Rational complex_power_sum_from_pairs(int k, int n);
Rational complex_power_sum_printed(int k, int n);

/// A in the dimension the sampler uses (quaternion: 2N embedding).
Matrix ensemble_matrix(Field f, int n, const Matrix& a);

}  // namespace zonal

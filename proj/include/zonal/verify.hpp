#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zonal/ensembles.hpp"
#include "zonal/hyper.hpp"
#include "zonal/mc.hpp"

namespace zonal {

/// A second value the estimate is held against (the printed form of a
/// corollary, or the duality integral). Alternates never change the verdict
/// unless marked binding.
struct Alternate {
  std::string name;
  double value = 0;
  double z = 0;
  bool binding = false;
  bool agrees = true;
};

struct ComparisonReport {
  std::string id;
  double closed = 0;
  MCEstimate estimate;
  double z = 0;
  double threshold = 4;
  double warn = 3;
  std::vector<Alternate> alternates;

  /// "pass", "warn" (threshold not exceeded but z > warn), or "fail".
  std::string verdict() const;
  bool passed() const { return verdict() != "fail"; }
};

/// max(|Re mean - closed| / se_re, |Im mean| / se_im); exact estimates give
/// 0 on agreement and infinity otherwise.
double z_score(double closed, const MCEstimate& e);

ComparisonReport make_report(std::string id, double closed, const MCEstimate& e);

nlohmann::ordered_json to_json(const ComparisonReport& r);

// ---------------------------------------------------------------------------
// Estimators. Matrices A, B, Sigma are given as for ensemble_sigma().

/// <s_mu(AX)> over real or quaternion Ginibre X.
ComparisonReport mc_schur_average(Field f, const Matrix& a, const Partition& mu, int n, long samples,
                                  std::uint64_t seed);

/// <s_mu(AX) s_kappa(X^dag A^dag)> over complex Ginibre X.
ComparisonReport mc_schur_pair_average(const Matrix& a, const Partition& mu, const Partition& kappa,
                                       long samples, std::uint64_t seed);

/// <s_lambda(AO)>, <s_lambda(AU) s_kappa(U^dag A^dag)> (kappa required for U),
/// <s_lambda(AS)> over Haar measure; n is the quaternion dimension for Sp.
ComparisonReport mc_group_integral(Group g, const Matrix& a, const Partition& lambda,
                                   const std::optional<Partition>& kappa, int n, long samples,
                                   std::uint64_t seed);

/// <C_kappa(A X B X^dag)> over the Ginibre ensemble of the field; n defaults
/// to the row count of A.
ComparisonReport mc_splitting(Field f, const Matrix& a, const Matrix& b, const Partition& kappa, long samples,
                              std::uint64_t seed, int n = -1);

/// <det(I - xX)^r> (real, quaternion over the 2N embedding) or
/// <|det(I - xX)|^{2r}> (complex), with the duality integral as a binding
/// alternate for r <= 3.
ComparisonReport mc_charpoly_moment(Field f, int r, cplx x, const Matrix& sigma, int n, long samples,
                                    std::uint64_t seed, int quad_order = 80);

/// <p_k(X)> (real, quaternion) or <p_k(X) p_k(X^dag)> (complex) with the
/// printed corollary form as a non-binding alternate.
ComparisonReport mc_power_sum(Field f, int k, const Matrix& sigma, int n, long samples, std::uint64_t seed);

/// <C_kappa(t)> over Laguerre spectra against the Kaneko closed form (times
/// 2^|kappa| for alpha = 2, whose weight is e^{-t/2}).
ComparisonReport mc_kaneko(const JackParam& alpha, const Rational& a, const Partition& kappa, int n, long samples,
                           std::uint64_t seed);

struct DensityRow {
  double r_lo = 0, r_hi = 0;
  double empirical = 0;  // mean eigenvalue count per matrix in the annulus
  double expected = 0;   // integral of density_rank1 over the annulus
  double std_error = 0;
  double z = 0;
};

struct DensityReport {
  int n = 0;
  double sigma = 1;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<DensityRow> rows;
  double total_empirical = 0;
  double total_expected = 0;
  /// Largest z over annuli whose expected count (samples x expected) is >= 100.
  double max_z = 0;
  double threshold = 3;
  bool passed() const;
};

/// Eigenvalue histogram of (n+1) x (n+1) complex Ginibre with
/// Sigma = diag(sigma, 1^n) on `grid` annuli of width (sqrt(n+1) + 3)/grid.
DensityReport mc_density(int n, double sigma, long samples, std::uint64_t seed, int grid);

nlohmann::ordered_json to_json(const DensityReport& r);

// ---------------------------------------------------------------------------
// Printed-form discrepancies

struct ErratumCheck {
  std::string id;
  std::string description;
  double derived = 0;
  double printed = 0;
  ComparisonReport mc;
  double z_printed = 0;
  /// MC agrees with the derived form and rejects the printed one.
  bool flagged = false;
};

struct ErrataReport {
  std::vector<ErratumCheck> checks;
  int flagged_count() const;
};

ErrataReport errata_report(long samples, std::uint64_t seed);
nlohmann::ordered_json to_json(const ErrataReport& r);

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
  long samples = 1000000;
  long density_samples = 100000;
  std::uint64_t seed = 42;
  int quad_order = 80;
  /// Restricts the group suite to one group.
  std::optional<Group> group;
};

struct SuiteResult {
  std::string name;
  std::vector<ComparisonReport> reports;
  std::vector<DensityReport> densities;
  std::optional<ErrataReport> errata;
  bool passed() const;
};

/// schur-real, schur-complex, schur-quaternion, group, splitting, charpoly,
/// kaneko, powersum, density, errata.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

nlohmann::ordered_json to_json(const SuiteResult& r);
std::string summary_table(const SuiteResult& r);

}  // namespace zonal

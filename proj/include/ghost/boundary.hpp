#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghost/newton.hpp"

namespace ghost {

/// Newton polygon of the points (i, lambda(g_i)): the w-adic polygon of the mod-p series.
struct BoundaryPolygon {
  ComponentLabel component{};
  std::vector<std::int64_t> degrees;  ///< lambda(g_0..g_D) for the evaluated range
  NewtonPolygon hull;
  SlopeList slopes;
};

BoundaryPolygon boundary_polygon(GhostSeries& series, std::size_t n, const CertifyOptions& opts = {});
BoundaryPolygon boundary_polygon(const PrimeContext& ctx, ComponentLabel eps, std::size_t n,
                                 const CertifyOptions& opts = {},
                                 const std::optional<Weight2SeedSlopes>& seed = std::nullopt);

struct APParams {
  std::int64_t count = 0;  ///< number of interleaved progressions
  Rational difference;
};

/// p(p-1)(p+1) mu_0(N) / 24 progressions with common difference (p-1)^2 / 2. Odd p only.
APParams progression_params(const PrimeContext& ctx);

/// Result of checking slope(j + n_ap) = slope(j) + delta for burn_in <= j (0-based).
struct APReport {
  std::int64_t n_ap = 0;
  Rational delta;
  std::size_t burn_in = 0;
  std::size_t verified_through = 0;  ///< number of leading slopes covered by the check
  std::optional<std::size_t> first_violation;  ///< 0-based j where the identity fails

  bool verified() const { return !first_violation.has_value(); }
};

/// Throws DomainError if fewer than burn_in + n_ap + 1 certified slopes are available.
APReport ap_check(const SlopeList& slopes, std::int64_t n_ap, const Rational& delta, std::size_t burn_in);

/// Smallest burn-in <= max_burn_in for which ap_check verifies, if any.
std::optional<std::size_t> smallest_burn_in(const SlopeList& slopes, std::int64_t n_ap, const Rational& delta,
                                            std::size_t max_burn_in);

struct HaloRow {
  Rational v;
  SlopeList slopes;
};

/// slope_j(v) = intercept + coefficient * v, fitted from the first two rows.
struct AffineFit {
  Rational intercept;
  Rational coefficient;
  bool affine = true;  ///< every row lies on the fitted line
};

struct HaloProfile {
  std::int64_t center = 0;
  std::int64_t r = 0;
  std::vector<HaloRow> rows;
  std::vector<AffineFit> fits;

  bool affine() const;

  /// Header "v,s1,...,sn", then one row per sample; rationals written as a or a/b.
  std::string to_csv() const;
};

/// Slopes of NP(G_kappa) on v_p(w_kappa - w_center) = v for `samples` values
/// v = r + j/(samples+1), j = 1..samples.
HaloProfile halo_profile(const PrimeContext& ctx, std::int64_t center, std::int64_t r, std::size_t samples,
                         std::size_t n, const CertifyOptions& opts = {},
                         const std::optional<Weight2SeedSlopes>& seed = std::nullopt);

}  // namespace ghost

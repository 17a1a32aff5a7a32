#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ghost/boundary.hpp"
#include "ghost/seed.hpp"
#include "ghost/series.hpp"

namespace ghost {

/// g_i of the modified 2-adic series: the ordinary coefficient times extra eta_8-twisted zeros.
struct ModifiedCoefficient {
  GhostCoefficient base;
  Divisor extra;

  std::int64_t lambda() const;
};

/// Requires p = 2 and seed.N == ctx.N().
ModifiedCoefficient modified_coefficient(const PrimeContext& ctx, std::int64_t i, const Weight2SeedSlopes& seed);

/// First n w-adic slopes of the modified series (hull of (i, lambda(g_i))).
SlopeList modified_boundary_slopes(const Weight2SeedSlopes& seed, std::size_t n, const CertifyOptions& opts = {});

/// p = 2 is Gamma_0(N)-regular iff T_2 slopes on S_2(Gamma_0(N)) are all 0 and on S_4(Gamma_0(N)) all 0 or 1.
/// Slope lists come from outside; a missing list throws ExternalDataRequired and a list whose
/// length disagrees with the dimension throws DomainError.
bool regularity_check_p2(std::int64_t N, const std::optional<std::vector<Rational>>& weight2_slopes,
                         const std::optional<std::vector<Rational>>& weight4_slopes);

}  // namespace ghost

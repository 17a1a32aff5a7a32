#include "ghost/modified.hpp"

#include <string>

#include "ghost/dims.hpp"
#include "ghost/error.hpp"

namespace ghost {

std::int64_t ModifiedCoefficient::lambda() const {
  std::int64_t total = base.lambda;
  for (const auto& [z, m] : extra) total += m;
  return total;
}

ModifiedCoefficient modified_coefficient(const PrimeContext& ctx, std::int64_t i, const Weight2SeedSlopes& seed) {
  if (ctx.p() != 2) throw DomainError("the modified series exists only for p = 2");
  if (i < 1) throw DomainError("coefficient index must be >= 1");
  GhostSeries series(ctx, ComponentLabel{0}, seed);
  ModifiedCoefficient out;
  out.base = coefficient_divisor(ctx, ComponentLabel{0}, i);
  out.extra = series.extra_zeros(i);
  return out;
}

SlopeList modified_boundary_slopes(const Weight2SeedSlopes& seed, std::size_t n, const CertifyOptions& opts) {
  PrimeContext ctx(2, seed.N);
  return boundary_polygon(ctx, ComponentLabel{0}, n, opts, seed).slopes;
}

bool regularity_check_p2(std::int64_t N, const std::optional<std::vector<Rational>>& weight2_slopes,
                         const std::optional<std::vector<Rational>>& weight4_slopes) {
  if (N < 1 || N % 2 == 0) throw DomainError("regularity at p = 2 needs odd N");
  if (!weight2_slopes || !weight4_slopes) {
    throw ExternalDataRequired("T_2 slopes on S_2(Gamma_0(N)) and S_4(Gamma_0(N)) must be supplied");
  }
  const auto d2 = static_cast<std::size_t>(dim_cusp_gamma0(N, 2));
  const auto d4 = static_cast<std::size_t>(dim_cusp_gamma0(N, 4));
  if (weight2_slopes->size() != d2 || weight4_slopes->size() != d4) {
    throw DomainError("supplied slope lists do not match dim S_2 = " + std::to_string(d2) +
                      " and dim S_4 = " + std::to_string(d4));
  }
  for (const auto& s : *weight2_slopes) {
    if (s != 0) return false;
  }
  for (const auto& s : *weight4_slopes) {
    if (s != 0 && s != 1) return false;
  }
  return true;
}

}  // namespace ghost

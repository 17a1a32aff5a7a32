#include "ghost/boundary.hpp"

#include <sstream>

#include "ghost/dims.hpp"
#include "ghost/error.hpp"

namespace ghost {

BoundaryPolygon boundary_polygon(GhostSeries& series, std::size_t n, const CertifyOptions& opts) {
  auto values = [&](std::int64_t D) {
    auto lambda = series.degrees(D);
    return std::vector<ExtendedRational>(lambda.begin(), lambda.end());
  };
  auto cert = certified_slopes(series, values, Rational(1), n, opts);
  BoundaryPolygon out;
  out.component = series.component();
  out.degrees = series.degrees(cert.truncation);
  out.hull = std::move(cert.hull);
  out.slopes = std::move(cert.slopes);
  return out;
}

BoundaryPolygon boundary_polygon(const PrimeContext& ctx, ComponentLabel eps, std::size_t n,
                                 const CertifyOptions& opts, const std::optional<Weight2SeedSlopes>& seed) {
  GhostSeries series(ctx, eps, seed);
  return boundary_polygon(series, n, opts);
}

APParams progression_params(const PrimeContext& ctx) {
  const std::int64_t p = ctx.p();
  if (p == 2) throw DomainError("the progression count is stated for odd p");
  const std::int64_t numerator = p * (p - 1) * (p + 1) * gamma0_invariants(ctx.N()).index;
  if (numerator % 24 != 0) throw Error("non-integral progression count");
  return {numerator / 24, make_rational((p - 1) * (p - 1), 2)};
}

APReport ap_check(const SlopeList& slopes, std::int64_t n_ap, const Rational& delta, std::size_t burn_in) {
  if (n_ap < 1) throw DomainError("progression count must be positive");
  const std::size_t count = slopes.certified_count;
  const auto step = static_cast<std::size_t>(n_ap);
  if (count < burn_in + step + 1) throw DomainError("not enough certified slopes for the progression check");
  APReport report;
  report.n_ap = n_ap;
  report.delta = delta;
  report.burn_in = burn_in;
  report.verified_through = count;
  for (std::size_t j = burn_in; j + step < count; ++j) {
    if (slopes.slopes[j + step] != slopes.slopes[j] + delta) {
      report.first_violation = j;
      break;
    }
  }
  return report;
}

std::optional<std::size_t> smallest_burn_in(const SlopeList& slopes, std::int64_t n_ap, const Rational& delta,
                                            std::size_t max_burn_in) {
  // Violations only move the answer forward: the smallest burn-in is one past the last violation.
  const std::size_t count = slopes.certified_count;
  const auto step = static_cast<std::size_t>(n_ap);
  if (count < step + 1) return std::nullopt;
  std::size_t answer = 0;
  for (std::size_t j = 0; j + step < count; ++j) {
    if (slopes.slopes[j + step] != slopes.slopes[j] + delta) answer = j + 1;
  }
  if (answer > max_burn_in || answer + step + 1 > count) return std::nullopt;
  return answer;
}

bool HaloProfile::affine() const {
  for (const auto& f : fits) {
    if (!f.affine) return false;
  }
  return true;
}

std::string HaloProfile::to_csv() const {
  std::ostringstream out;
  out << "v";
  const std::size_t n = rows.empty() ? 0 : rows.front().slopes.size();
  for (std::size_t j = 1; j <= n; ++j) out << ",s" << j;
  out << "\n";
  for (const auto& row : rows) {
    out << to_string(row.v);
    for (const auto& s : row.slopes.slopes) out << "," << to_string(s);
    out << "\n";
  }
  return out.str();
}

HaloProfile halo_profile(const PrimeContext& ctx, std::int64_t center, std::int64_t r, std::size_t samples,
                         std::size_t n, const CertifyOptions& opts, const std::optional<Weight2SeedSlopes>& seed) {
  if (r < 0) throw DomainError("halo interval index must be nonnegative");
  if (samples < 2) throw DomainError("a halo profile needs at least two samples");
  GhostSeries series(ctx, component_of(center, ctx), seed);
  HaloProfile profile;
  profile.center = center;
  profile.r = r;
  for (std::size_t j = 1; j <= samples; ++j) {
    Rational v = Rational(r) + make_rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(samples + 1));
    profile.rows.push_back({v, ghost_slopes(series, weight::Annulus{center, v}, n, opts)});
  }
  const auto& a = profile.rows[0];
  const auto& b = profile.rows[1];
  for (std::size_t j = 0; j < n; ++j) {
    AffineFit fit;
    fit.coefficient = (b.slopes.slopes[j] - a.slopes.slopes[j]) / (b.v - a.v);
    fit.intercept = a.slopes.slopes[j] - fit.coefficient * a.v;
    for (const auto& row : profile.rows) {
      if (row.slopes.slopes[j] != fit.intercept + fit.coefficient * row.v) fit.affine = false;
    }
    profile.fits.push_back(fit);
  }
  return profile;
}

}  // namespace ghost

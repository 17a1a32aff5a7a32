#include "ghost/newton.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ghost/dims.hpp"
#include "ghost/error.hpp"

namespace ghost {

std::vector<Rational> NewtonPolygon::slopes() const {
  std::vector<Rational> out;
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    const auto& a = vertices[j - 1];
    const auto& b = vertices[j];
    const std::int64_t dx = b.index - a.index;
    Rational s = (b.value.value() - a.value.value()) / Integer(static_cast<long>(dx));
    for (std::int64_t t = 0; t < dx; ++t) out.push_back(s);
  }
  return out;
}

NewtonPolygon lower_hull(std::span<const PolygonPoint> points) {
  if (points.empty()) throw DomainError("lower hull of an empty point set");
  std::vector<const PolygonPoint*> finite;
  for (const auto& pt : points) {
    if (pt.value.is_finite()) finite.push_back(&pt);
  }
  std::sort(finite.begin(), finite.end(), [](auto* a, auto* b) { return a->index < b->index; });
  for (std::size_t j = 1; j < finite.size(); ++j) {
    if (finite[j]->index == finite[j - 1]->index) throw DomainError("duplicate polygon index");
  }
  if (finite.empty() || finite.front()->index != 0 || finite.front()->value != ExtendedRational(0)) {
    throw DomainError("polygon must contain the point (0, 0)");
  }

  NewtonPolygon hull;
  auto turns_left = [](const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
    Rational lhs = (a.value.value() - o.value.value()) * Integer(static_cast<long>(b.index - o.index));
    Rational rhs = (b.value.value() - o.value.value()) * Integer(static_cast<long>(a.index - o.index));
    return lhs < rhs;
  };
  for (const auto* pt : finite) {
    while (hull.vertices.size() >= 2 &&
           !turns_left(hull.vertices[hull.vertices.size() - 2], hull.vertices.back(), *pt)) {
      hull.vertices.pop_back();
    }
    hull.vertices.push_back(*pt);
  }
  return hull;
}

std::size_t SlopeList::multiplicity(const Rational& s) const {
  return static_cast<std::size_t>(std::count(slopes.begin(), slopes.end(), s));
}

std::vector<std::pair<Rational, std::size_t>> SlopeList::grouped() const {
  std::vector<std::pair<Rational, std::size_t>> out;
  for (const auto& s : slopes) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  return out;
}

std::int64_t default_cap() {
  if (const char* env = std::getenv("GHOST_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw DomainError("GHOST_CAP must be a positive integer");
  }
  return 10000;
}

ExtendedRational coefficient_valuation(const GhostCoefficient& coef, const WeightPoint& kappa,
                                       const PrimeContext& ctx) {
  validate(kappa, ctx);
  if (component_of(kappa, ctx) != coef.component) throw DomainError("weight is not on the coefficient's component");
  ExtendedRational total(0);
  for (const auto& [z, m] : coef.zeros) {
    ExtendedRational v = pair_valuation(kappa, z, ctx);
    if (v.is_infinite()) return ExtendedRational::infinity();
    total += ExtendedRational(v.value() * Integer(static_cast<long>(m)));
  }
  return total;
}

CertifiedPolygon certified_slopes(GhostSeries& series,
                                  const std::function<std::vector<ExtendedRational>(std::int64_t)>& values,
                                  const Rational& floor, std::size_t n, const CertifyOptions& opts) {
  if (floor <= 0) throw DomainError("valuation floor must be positive");
  CertifiedPolygon result;
  if (n == 0) return result;
  const auto need = static_cast<std::int64_t>(n);
  std::int64_t D = std::min<std::int64_t>(opts.cap, std::max<std::int64_t>(2 * need, 16));
  while (true) {
    auto vals = values(D);
    std::vector<PolygonPoint> points;
    points.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) points.push_back({static_cast<std::int64_t>(i), vals[i]});
    NewtonPolygon hull = lower_hull(points);

    bool certified = false;
    // Segment carrying slope n: first vertex with index >= n.
    auto end = std::find_if(hull.vertices.begin(), hull.vertices.end(),
                            [&](const PolygonPoint& v) { return v.index >= need; });
    if (end != hull.vertices.end()) {
      const auto& start = *(end - 1);
      const Rational s = (end->value.value() - start.value.value()) / Integer(static_cast<long>(end->index - start.index));
      const std::int64_t i0 = end->index;
      const Rational& y0 = end->value.value();
      auto lambda = series.degrees(2 * D);
      certified = true;
      for (std::int64_t i = D + 1; i <= 2 * D && certified; ++i) {
        Rational bound = floor * Integer(static_cast<long>(lambda[i]));
        Rational line = y0 + s * Integer(static_cast<long>(i - i0));
        Rational step = floor * Integer(static_cast<long>(lambda[i] - lambda[i - 1]));
        if (bound < line || step <= s) certified = false;
      }
    }
    if (certified) {
      auto all = hull.slopes();
      result.slopes.slopes.assign(all.begin(), all.begin() + need);
      result.slopes.certified_count = n;
      result.hull = std::move(hull);
      result.truncation = D;
      return result;
    }
    if (D >= opts.cap) {
      throw CertificationError("could not certify " + std::to_string(n) + " slopes below the truncation cap " +
                               std::to_string(opts.cap));
    }
    D = std::min(opts.cap, 2 * D);
  }
}

SlopeList ghost_slopes(GhostSeries& series, const WeightPoint& kappa, std::size_t n, const CertifyOptions& opts) {
  validate(kappa, series.context());
  ExtendedRational floor = min(w_valuation_bound(kappa, series.context()), ExtendedRational(series.zero_valuation_floor()));
  auto values = [&](std::int64_t D) { return series.valuations(kappa, D); };
  return certified_slopes(series, values, floor.value(), n, opts).slopes;
}

SlopeList ghost_slopes(const PrimeContext& ctx, const WeightPoint& kappa, std::size_t n, const CertifyOptions& opts,
                       const std::optional<Weight2SeedSlopes>& seed) {
  validate(kappa, ctx);
  GhostSeries series(ctx, component_of(kappa, ctx), seed);
  return ghost_slopes(series, kappa, n, opts);
}

SlopeList classical_ghost_slopes(const PrimeContext& ctx, std::int64_t k, CountMode mode, const CertifyOptions& opts,
                                 const std::optional<Weight2SeedSlopes>& seed) {
  if (k < 2 || k % 2 != 0) throw DomainError("classical slopes need an even weight k >= 2");
  const std::int64_t count =
      mode == CountMode::Tame ? dim_cusp_gamma0(ctx.N(), k) : dim_cusp_gamma0(ctx.N() * ctx.p(), k);
  return ghost_slopes(ctx, weight::Classical{k}, static_cast<std::size_t>(count), opts, seed);
}

}  // namespace ghost

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ghost/rational.hpp"
#include "ghost/series.hpp"
#include "ghost/weightspace.hpp"

namespace ghost {

struct PolygonPoint {
  std::int64_t index = 0;
  ExtendedRational value;
};

/// Vertices of a lower convex hull; collinear interior points are dropped.
struct NewtonPolygon {
  std::vector<PolygonPoint> vertices;

  /// Segment slopes repeated by their horizontal lengths.
  std::vector<Rational> slopes() const;
};

/// Lower convex hull of the finite points. Index 0 must be present with value 0.
NewtonPolygon lower_hull(std::span<const PolygonPoint> points);

/// Nondecreasing slopes; the first `certified_count` are final.
struct SlopeList {
  std::vector<Rational> slopes;
  std::size_t certified_count = 0;

  std::size_t size() const { return slopes.size(); }
  std::size_t multiplicity(const Rational& s) const;
  std::vector<std::pair<Rational, std::size_t>> grouped() const;

  friend bool operator==(const SlopeList&, const SlopeList&) = default;
};

struct CertifyOptions {
  std::int64_t cap = 10000;  ///< largest truncation degree evaluated
};

/// 10000, or the value of the GHOST_CAP environment variable when set.
std::int64_t default_cap();

/// Sum over zeros z of m(z) * v_p(w_kappa - w_z).
ExtendedRational coefficient_valuation(const GhostCoefficient& coef, const WeightPoint& kappa,
                                       const PrimeContext& ctx);

struct CertifiedPolygon {
  SlopeList slopes;
  NewtonPolygon hull;          ///< hull of the points actually evaluated
  std::int64_t truncation = 0; ///< largest index whose exact value entered the hull
};

/// First n slopes of the Newton polygon of 1 + sum a_i t^i, certified against the tail.
///
/// `values(D)` returns v(a_0..a_D). For i beyond the evaluated range we only use
/// v(a_i) >= floor * lambda(g_i). The prefix is accepted once every tail point on (D, 2D] is on
/// or above the line through the segment carrying slope n, and every increment
/// floor * lambda(Delta_i) on (D, 2D] exceeds that slope (so the tail keeps diverging from it).
CertifiedPolygon certified_slopes(GhostSeries& series,
                                  const std::function<std::vector<ExtendedRational>(std::int64_t)>& values,
                                  const Rational& floor, std::size_t n, const CertifyOptions& opts);

/// The first n slopes of NP(G_kappa).
SlopeList ghost_slopes(GhostSeries& series, const WeightPoint& kappa, std::size_t n, const CertifyOptions& opts = {});
SlopeList ghost_slopes(const PrimeContext& ctx, const WeightPoint& kappa, std::size_t n,
                       const CertifyOptions& opts = {}, const std::optional<Weight2SeedSlopes>& seed = std::nullopt);

enum class CountMode {
  Tame,  ///< dim S_k(Gamma_0(N)) slopes
  Full,  ///< dim S_k(Gamma_0(Np)) slopes
};

SlopeList classical_ghost_slopes(const PrimeContext& ctx, std::int64_t k, CountMode mode,
                                 const CertifyOptions& opts = {},
                                 const std::optional<Weight2SeedSlopes>& seed = std::nullopt);

}  // namespace ghost

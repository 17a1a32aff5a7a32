#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ghost/seed.hpp"
#include "ghost/rational.hpp"
#include "ghost/weightspace.hpp"

namespace ghost {

/// The up-down sequence s(l) = (1, 2, ..., 2, 1) of length l; empty for l <= 0.
struct UpDownPattern {
  std::int64_t length = 0;
  std::vector<std::int64_t> terms;

  /// The padded sequence s(l, d) truncated to `size` entries, 1-based positions stored at [pos - 1].
  std::vector<std::int64_t> padded(std::int64_t d, std::size_t size) const;
};

UpDownPattern updown(std::int64_t l);

/// s_j(l); zero outside 1 <= j <= l.
std::int64_t updown_term(std::int64_t l, std::int64_t j);

/// m_i(k) = s_{i - d_k}(d_k^new - 1).
std::int64_t multiplicity(const PrimeContext& ctx, std::int64_t i, std::int64_t k);

using Divisor = std::map<Zero, std::int64_t>;

/// Divisor of the i-th ghost coefficient g_i on one component.
struct GhostCoefficient {
  std::int64_t index = 0;
  ComponentLabel component{};
  Divisor zeros;
  std::int64_t lambda = 0;  ///< degree, the sum of multiplicities
};

/// Zeros and poles of g_i / g_{i-1}.
struct DeltaDivisor {
  std::int64_t index = 0;
  Divisor zeros;
  Divisor poles;

  std::int64_t lambda() const;
};

/// g_i^{(eps)} for the unmodified series.
GhostCoefficient coefficient_divisor(const PrimeContext& ctx, ComponentLabel eps, std::int64_t i);

DeltaDivisor delta_divisor(const PrimeContext& ctx, ComponentLabel eps, std::int64_t i);

/// The ghost series on one component, held as zero spans so coefficients are never expanded.
///
/// A classical weight k contributes one span: it divides g_i for d_k < i < d_k + d_k^new with
/// multiplicity following the up-down pattern. With a weight-2 seed (p = 2), eta_8-twisted weights
/// add isolated extra zeros. Spans are built lazily up to the largest index requested so far.
class GhostSeries {
 public:
  struct Span {
    Zero zero;
    std::int64_t first;   ///< first index i with a zero
    std::int64_t length;  ///< multiplicity at first + j - 1 is s_j(length)
  };
  struct ExtraZero {
    Zero zero;
    std::int64_t index;
    std::int64_t multiplicity;
  };

  GhostSeries(PrimeContext ctx, ComponentLabel eps, std::optional<Weight2SeedSlopes> seed = std::nullopt);

  const PrimeContext& context() const { return ctx_; }
  ComponentLabel component() const { return eps_; }
  bool modified() const { return seed_.has_value(); }
  const std::optional<Weight2SeedSlopes>& seed() const { return seed_; }

  /// Every zero of every g_i lies at v_p-distance at least this from the origin w = 0.
  std::int64_t zero_valuation_floor() const;

  GhostCoefficient coefficient(std::int64_t i);
  Divisor extra_zeros(std::int64_t i);

  /// lambda(g_0), ..., lambda(g_D).
  std::vector<std::int64_t> degrees(std::int64_t D);

  /// v_p(g_0(w_kappa)), ..., v_p(g_D(w_kappa)).
  std::vector<ExtendedRational> valuations(const WeightPoint& point, std::int64_t D);

  const std::vector<Span>& spans(std::int64_t D);
  const std::vector<ExtraZero>& extras(std::int64_t D);

 private:
  void ensure(std::int64_t D);

  PrimeContext ctx_;
  ComponentLabel eps_;
  std::optional<Weight2SeedSlopes> seed_;
  std::int64_t built_ = 0;
  std::vector<Span> spans_;
  std::vector<ExtraZero> extras_;
};

}  // namespace ghost

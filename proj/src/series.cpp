#include "ghost/series.hpp"

#include <algorithm>
#include <string>

#include "ghost/dims.hpp"
#include "ghost/error.hpp"

namespace ghost {

std::vector<std::int64_t> UpDownPattern::padded(std::int64_t d, std::size_t size) const {
  std::vector<std::int64_t> out(size, 0);
  for (std::int64_t j = 0; j < length; ++j) {
    auto pos = static_cast<std::size_t>(d + j);
    if (pos < size) out[pos] = terms[static_cast<std::size_t>(j)];
  }
  return out;
}

std::int64_t updown_term(std::int64_t l, std::int64_t j) {
  if (l <= 0 || j < 1 || j > l) return 0;
  return j <= l / 2 ? j : l + 1 - j;
}

UpDownPattern updown(std::int64_t l) {
  UpDownPattern pat;
  pat.length = std::max<std::int64_t>(l, 0);
  for (std::int64_t j = 1; j <= l; ++j) pat.terms.push_back(updown_term(l, j));
  return pat;
}

std::int64_t multiplicity(const PrimeContext& ctx, std::int64_t i, std::int64_t k) {
  if (k % 2 != 0 || k < 2) throw DomainError("multiplicity requires an even weight k >= 2");
  const std::int64_t dk = dim_cusp_gamma0(ctx.N(), k);
  const std::int64_t dnew = dim_pnew(ctx, k);
  if (i <= dk || i >= dk + dnew) return 0;
  return updown_term(dnew - 1, i - dk);
}

std::int64_t DeltaDivisor::lambda() const {
  std::int64_t total = 0;
  for (const auto& [z, m] : zeros) total += m;
  for (const auto& [z, m] : poles) total -= m;
  return total;
}

GhostSeries::GhostSeries(PrimeContext ctx, ComponentLabel eps, std::optional<Weight2SeedSlopes> seed)
    : ctx_(ctx), eps_(eps), seed_(std::move(seed)) {
  validate(eps_, ctx_);
  if (seed_) {
    if (ctx_.p() != 2) throw DomainError("the modified series exists only for p = 2");
    if (seed_->N != ctx_.N()) throw DomainError("seed level does not match N");
    validate(*seed_);
  }
}

std::int64_t GhostSeries::zero_valuation_floor() const {
  if (ctx_.p() != 2) return 1;
  if (seed_ && !seed_->slopes.empty()) {
    auto m = seed_multiplicities(seed_->slopes);
    if (std::any_of(m.begin(), m.end(), [](std::int64_t x) { return x > 0; })) return 1;
  }
  return 3;
}

void GhostSeries::ensure(std::int64_t D) {
  if (D <= built_) return;
  const std::int64_t target = std::max(D, 2 * built_);
  spans_.clear();
  extras_.clear();

  const std::int64_t p = ctx_.p();
  const auto level_n = gamma0_invariants(ctx_.N());
  const auto level_np = gamma0_invariants(ctx_.N() * p);
  const std::int64_t step = p == 2 ? 2 : p - 1;
  std::int64_t k = p == 2 ? 2 : (eps_.residue == 0 ? p - 1 : eps_.residue);
  for (;; k += step) {
    // Past this point d_k >= target, so k divides no g_i with i <= target.
    if (k >= 4 && dim_cusp_gamma0_lower_bound_x12(level_n, k) >= 12 * target) break;
    const std::int64_t dk = dim_cusp_gamma0(level_n, k);
    const std::int64_t dnew = dim_cusp_gamma0(level_np, k) - 2 * dk;
    if (dnew < 0) throw Error("negative p-new dimension at k = " + std::to_string(k));
    if (dnew >= 2 && dk + 1 <= target) spans_.push_back({Zero{ZeroKind::Classical, k}, dk + 1, dnew - 1});
  }

  if (seed_) {
    auto m2 = seed_multiplicities(seed_->slopes);
    std::int64_t max_j = 0;
    for (std::size_t j = 0; j < m2.size(); ++j) {
      if (m2[j] > 0) max_j = static_cast<std::int64_t>(j) + 1;
    }
    if (max_j > 0) {
      for (std::size_t j = 0; j < m2.size(); ++j) {
        auto i = static_cast<std::int64_t>(j) + 1;
        if (m2[j] > 0 && i <= target) extras_.push_back({Zero{ZeroKind::EtaEight, 2}, i, m2[j]});
      }
      std::int64_t previous = dim_cusp_eta8(seed_->N, 2);
      for (std::int64_t kk = 3;; ++kk) {
        const std::int64_t dk = dim_cusp_eta8(seed_->N, kk);
        if (dk <= previous) throw Error("eta_8 dimensions are not increasing in k");
        previous = dk;
        if (dk - max_j > target) break;
        for (std::int64_t j = 1; j <= max_j; ++j) {
          const std::int64_t i = dk - j;
          if (m2[static_cast<std::size_t>(j - 1)] > 0 && i >= 1 && i <= target) {
            extras_.push_back({Zero{ZeroKind::EtaEight, kk}, i, m2[static_cast<std::size_t>(j - 1)]});
          }
        }
      }
    }
  }
  built_ = target;
}

const std::vector<GhostSeries::Span>& GhostSeries::spans(std::int64_t D) {
  ensure(D);
  return spans_;
}

const std::vector<GhostSeries::ExtraZero>& GhostSeries::extras(std::int64_t D) {
  ensure(D);
  return extras_;
}

Divisor GhostSeries::extra_zeros(std::int64_t i) {
  ensure(i);
  Divisor out;
  for (const auto& e : extras_) {
    if (e.index == i) out[e.zero] += e.multiplicity;
  }
  return out;
}

GhostCoefficient GhostSeries::coefficient(std::int64_t i) {
  if (i < 0) throw DomainError("coefficient index must be nonnegative");
  ensure(i);
  GhostCoefficient c;
  c.index = i;
  c.component = eps_;
  for (const auto& s : spans_) {
    std::int64_t m = updown_term(s.length, i - s.first + 1);
    if (m > 0) c.zeros[s.zero] += m;
  }
  for (auto& [z, m] : extra_zeros(i)) c.zeros[z] += m;
  for (const auto& [z, m] : c.zeros) c.lambda += m;
  return c;
}

std::vector<std::int64_t> GhostSeries::degrees(std::int64_t D) {
  ensure(D);
  std::vector<std::int64_t> lambda(static_cast<std::size_t>(D + 1), 0);
  for (const auto& s : spans_) {
    const std::int64_t last = std::min(D, s.first + s.length - 1);
    for (std::int64_t i = s.first; i <= last; ++i) lambda[i] += updown_term(s.length, i - s.first + 1);
  }
  for (const auto& e : extras_) {
    if (e.index <= D) lambda[e.index] += e.multiplicity;
  }
  return lambda;
}

std::vector<ExtendedRational> GhostSeries::valuations(const WeightPoint& point, std::int64_t D) {
  validate(point, ctx_);
  if (component_of(point, ctx_) != eps_) throw DomainError("weight does not lie on the series' component");
  ensure(D);
  const auto size = static_cast<std::size_t>(D + 1);
  std::vector<std::int64_t> finite(size, 0);
  std::vector<std::int64_t> constant(size, 0);
  std::vector<char> infinite(size, 0);

  auto add = [&](const ZeroDistance& d, std::int64_t i, std::int64_t m) {
    switch (d.kind) {
      case ZeroDistance::Kind::Finite:
        finite[i] += m * d.finite;
        break;
      case ZeroDistance::Kind::Constant:
        constant[i] += m;
        break;
      case ZeroDistance::Kind::Infinite:
        infinite[i] = 1;
        break;
    }
  };

  for (const auto& s : spans_) {
    if (s.first > D) continue;
    const ZeroDistance d = distance_to_zero(point, s.zero, ctx_);
    const std::int64_t last = std::min(D, s.first + s.length - 1);
    for (std::int64_t i = s.first; i <= last; ++i) add(d, i, updown_term(s.length, i - s.first + 1));
  }
  std::map<Zero, ZeroDistance> extra_cache;
  for (const auto& e : extras_) {
    if (e.index > D) continue;
    auto it = extra_cache.find(e.zero);
    if (it == extra_cache.end()) it = extra_cache.emplace(e.zero, distance_to_zero(point, e.zero, ctx_)).first;
    add(it->second, e.index, e.multiplicity);
  }

  const Rational c = distance_constant(point, ctx_);
  std::vector<ExtendedRational> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (infinite[i]) {
      out.push_back(ExtendedRational::infinity());
    } else {
      Rational v = c * Integer(static_cast<long>(constant[i]));
      v += Integer(static_cast<long>(finite[i]));
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

GhostCoefficient coefficient_divisor(const PrimeContext& ctx, ComponentLabel eps, std::int64_t i) {
  if (i < 1) throw DomainError("coefficient index must be >= 1");
  GhostSeries series(ctx, eps);
  return series.coefficient(i);
}

DeltaDivisor delta_divisor(const PrimeContext& ctx, ComponentLabel eps, std::int64_t i) {
  if (i < 1) throw DomainError("delta index must be >= 1");
  GhostSeries series(ctx, eps);
  const auto current = series.coefficient(i);
  const auto previous = series.coefficient(i - 1);
  DeltaDivisor delta;
  delta.index = i;
  Divisor diff = current.zeros;
  for (const auto& [z, m] : previous.zeros) diff[z] -= m;
  for (const auto& [z, m] : diff) {
    if (m > 0) delta.zeros[z] = m;
    if (m < 0) delta.poles[z] = -m;
  }
  return delta;
}

}  // namespace ghost

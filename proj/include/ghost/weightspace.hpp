#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ghost/rational.hpp"

namespace ghost {

/// The prime p and tame level N, with gcd(N, p) = 1.
class PrimeContext {
 public:
  /// Throws DomainError unless p is prime and N >= 1 is coprime to p.
  PrimeContext(std::int64_t p, std::int64_t N);

  std::int64_t p() const { return p_; }
  std::int64_t N() const { return N_; }

  /// Fixed topological generator used to interpret raw w-values: 1+p for odd p, 5 for p = 2.
  std::int64_t generator() const { return p_ == 2 ? 5 : 1 + p_; }

  /// Number of even components of weight space: (p-1)/2 for odd p, one for p = 2.
  std::int64_t component_count() const { return p_ == 2 ? 1 : (p_ - 1) / 2; }

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  std::int64_t p_;
  std::int64_t N_;
};

bool is_prime(std::int64_t n);

/// Even residue class mod (p-1) labelling a component W_eps. Always 0 for p = 2.
struct ComponentLabel {
  std::int64_t residue = 0;
  friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

/// Throws DomainError if the residue is not an even class in [0, p-1).
void validate(ComponentLabel eps, const PrimeContext& ctx);

enum class ZeroKind { Classical, EtaEight };

/// A possible zero of a ghost coefficient: the weight z^k, or z^k * eta_8^{(-1)^k} for p = 2.
struct Zero {
  ZeroKind kind = ZeroKind::Classical;
  std::int64_t k = 0;
  friend auto operator<=>(const Zero&, const Zero&) = default;
};

namespace weight {

/// z -> z^k with k even.
struct Classical {
  std::int64_t k;
};

/// z -> z^k eta_8^{(-1)^k}, p = 2 only.
struct EtaEight {
  std::int64_t k;
};

/// z -> z^k chi with chi of conductor p^t (t >= 2) trivial on torsion; odd p only.
struct CharClassical {
  std::int64_t k;
  std::int64_t conductor;
};

/// Any weight with v_p(w - w_center) = v, v a non-integral positive rational.
struct Annulus {
  std::int64_t center;
  Rational v;
};

/// A raw coordinate w known modulo p^precision, on the given component.
struct ExplicitW {
  Integer w;
  std::int64_t precision;
  ComponentLabel component{};
};

}  // namespace weight

using WeightPoint =
    std::variant<weight::Classical, weight::EtaEight, weight::CharClassical, weight::Annulus, weight::ExplicitW>;

/// Throws DomainError when the point violates its invariants for this prime.
void validate(const WeightPoint& point, const PrimeContext& ctx);

ComponentLabel component_of(std::int64_t k, const PrimeContext& ctx);
ComponentLabel component_of(const WeightPoint& point, const PrimeContext& ctx);

/// v_p(w_k - w_k') for classical weights on one component: 1 + v_p(k-k') (odd p), 2 + v_2(k-k') (p = 2).
ExtendedRational classical_pair_valuation(std::int64_t k, std::int64_t k2, const PrimeContext& ctx);

/// v_p(w_a - w_z) for a weight point and a possible zero of a ghost coefficient.
ExtendedRational pair_valuation(const WeightPoint& a, const Zero& z, const PrimeContext& ctx);

/// v_p(w_a - w_b) for any comparable pair of points. Annulus/Annulus and
/// CharClassical/non-classical pairs are not comparable and are rejected.
ExtendedRational pair_valuation(const WeightPoint& a, const WeightPoint& b, const PrimeContext& ctx);

/// Lower bound for v_p(w_kappa); exact except for an ExplicitW that is zero to its stated precision.
ExtendedRational w_valuation_bound(const WeightPoint& point, const PrimeContext& ctx);

/// w-coordinate of z^k (or z^k eta_8) modulo p^precision under the fixed generator.
Integer w_coordinate(const Zero& z, const PrimeContext& ctx, std::int64_t precision);

/// How far a weight sits from one zero: an integer, the point's own fractional
/// constant (v for annuli, the cyclotomic valuation for characters), or +infinity.
struct ZeroDistance {
  enum class Kind { Finite, Constant, Infinite } kind = Kind::Finite;
  std::int64_t finite = 0;
};

ZeroDistance distance_to_zero(const WeightPoint& a, const Zero& z, const PrimeContext& ctx);

/// The constant used by ZeroDistance::Kind::Constant; zero for points that never produce it.
Rational distance_constant(const WeightPoint& a, const PrimeContext& ctx);

/// Parses "k=<int>", "annulus:<k0>:<num>/<den>", "char:<k>:<p^t>", "eta8:<k>",
/// "w:<int>:prec=<m>[:eps=<r>]" and validates against ctx.
WeightPoint parse_weight(std::string_view text, const PrimeContext& ctx);

std::string to_string(const WeightPoint& point);

}  // namespace ghost

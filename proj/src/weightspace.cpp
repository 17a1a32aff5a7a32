#include "ghost/weightspace.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "ghost/error.hpp"

namespace ghost {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Exponent t with conductor = p^t, or -1.
std::int64_t conductor_exponent(std::int64_t conductor, std::int64_t p) {
  if (conductor < 1) return -1;
  std::int64_t t = 0;
  while (conductor % p == 0) {
    conductor /= p;
    ++t;
  }
  return conductor == 1 ? t : -1;
}

Rational cyclotomic_constant(const weight::CharClassical& c, const PrimeContext& ctx) {
  // chi(gamma) is a primitive p^(t-1)-th root of unity; v_p(zeta - 1) = 1 / phi(p^(t-1)).
  std::int64_t t = conductor_exponent(c.conductor, ctx.p());
  std::int64_t denom = ctx.p() - 1;
  for (std::int64_t j = 0; j < t - 2; ++j) denom *= ctx.p();
  return make_rational(1, denom);
}

std::int64_t base_offset(const PrimeContext& ctx) { return ctx.p() == 2 ? 2 : 1; }

Integer prime_power(const PrimeContext& ctx, std::int64_t m) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ctx.p()), static_cast<unsigned long>(m));
  return q;
}

Integer reduce(const Integer& x, const Integer& modulus) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<Zero> as_zero(const WeightPoint& point) {
  if (auto* c = std::get_if<weight::Classical>(&point)) return Zero{ZeroKind::Classical, c->k};
  if (auto* e = std::get_if<weight::EtaEight>(&point)) return Zero{ZeroKind::EtaEight, e->k};
  return std::nullopt;
}

ExtendedRational to_extended(const ZeroDistance& d, const WeightPoint& a, const PrimeContext& ctx) {
  switch (d.kind) {
    case ZeroDistance::Kind::Finite:
      return ExtendedRational(d.finite);
    case ZeroDistance::Kind::Constant:
      return ExtendedRational(distance_constant(a, ctx));
    case ZeroDistance::Kind::Infinite:
      break;
  }
  return ExtendedRational::infinity();
}

Integer coordinate_of(const WeightPoint& point, const PrimeContext& ctx, std::int64_t m) {
  if (auto* x = std::get_if<weight::ExplicitW>(&point)) return reduce(x->w, prime_power(ctx, m));
  return w_coordinate(*as_zero(point), ctx, m);
}

std::int64_t precision_of(const WeightPoint& point) {
  if (auto* x = std::get_if<weight::ExplicitW>(&point)) return x->precision;
  return std::numeric_limits<std::int64_t>::max();
}

void check_zero(const Zero& z, const PrimeContext& ctx) {
  if (z.kind == ZeroKind::EtaEight && ctx.p() != 2) throw DomainError("eta_8 zeros exist only for p = 2");
  if (z.kind == ZeroKind::Classical && z.k % 2 != 0) throw DomainError("classical zero with odd weight");
}

}  // namespace

PrimeContext::PrimeContext(std::int64_t p, std::int64_t N) : p_(p), N_(N) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (N < 1) throw DomainError("N must be a positive integer");
  if (gcd64(N, p) != 1) throw DomainError("N must be coprime to p");
}

void validate(ComponentLabel eps, const PrimeContext& ctx) {
  if (ctx.p() == 2) {
    if (eps.residue != 0) throw DomainError("p = 2 has a single even component (residue 0)");
    return;
  }
  if (eps.residue < 0 || eps.residue >= ctx.p() - 1 || eps.residue % 2 != 0) {
    throw DomainError("component residue must be even and in [0, p-1)");
  }
}

ComponentLabel component_of(std::int64_t k, const PrimeContext& ctx) {
  if (k % 2 != 0) throw DomainError("weight " + std::to_string(k) + " is odd");
  if (ctx.p() == 2) return {0};
  std::int64_t m = ctx.p() - 1;
  return {((k % m) + m) % m};
}

ComponentLabel component_of(const WeightPoint& point, const PrimeContext& ctx) {
  return std::visit(overloaded{
                        [&](const weight::Classical& c) { return component_of(c.k, ctx); },
                        [&](const weight::EtaEight&) { return ComponentLabel{0}; },
                        [&](const weight::CharClassical& c) { return component_of(c.k, ctx); },
                        [&](const weight::Annulus& a) { return component_of(a.center, ctx); },
                        [&](const weight::ExplicitW& x) { return x.component; },
                    },
                    point);
}

void validate(const WeightPoint& point, const PrimeContext& ctx) {
  std::visit(overloaded{
                 [&](const weight::Classical& c) {
                   if (c.k % 2 != 0) throw DomainError("classical weight must be even");
                 },
                 [&](const weight::EtaEight& e) {
                   if (ctx.p() != 2) throw DomainError("eta8 weights exist only for p = 2");
                   if (e.k < 2) throw DomainError("eta8 weight must be >= 2");
                 },
                 [&](const weight::CharClassical& c) {
                   if (ctx.p() == 2) throw DomainError("character weights are supported for odd p only");
                   if (c.k % 2 != 0) throw DomainError("character weight must have even k");
                   if (conductor_exponent(c.conductor, ctx.p()) < 2) {
                     throw DomainError("character conductor must be p^t with t >= 2");
                   }
                 },
                 [&](const weight::Annulus& a) {
                   if (a.center % 2 != 0) throw DomainError("annulus center must be even");
                   if (a.v <= 0) throw DomainError("annulus valuation must be positive");
                   if (is_integer(a.v)) throw DomainError("annulus valuation must not be an integer");
                 },
                 [&](const weight::ExplicitW& x) {
                   if (x.precision < 1) throw DomainError("explicit w precision must be >= 1");
                   validate(x.component, ctx);
                   if (reduce(x.w, Integer(static_cast<long>(ctx.p()))) != 0) {
                     throw DomainError("explicit w must lie in the open unit disc (divisible by p)");
                   }
                 },
             },
             point);
}

ExtendedRational classical_pair_valuation(std::int64_t k, std::int64_t k2, const PrimeContext& ctx) {
  if (component_of(k, ctx) != component_of(k2, ctx)) {
    throw DomainError("weights " + std::to_string(k) + " and " + std::to_string(k2) + " lie on different components");
  }
  if (k == k2) return ExtendedRational::infinity();
  return ExtendedRational(base_offset(ctx) + *valuation(k - k2, ctx.p()));
}

Integer w_coordinate(const Zero& z, const PrimeContext& ctx, std::int64_t precision) {
  Integer modulus = prime_power(ctx, precision);
  Integer gamma(static_cast<long>(ctx.generator()));
  Integer exponent(static_cast<long>(z.k));
  Integer power;
  mpz_powm(power.get_mpz_t(), gamma.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  // eta_8(5) = -1, so w = -5^k - 1 on the twisted weights.
  Integer w = z.kind == ZeroKind::EtaEight ? Integer(-power - 1) : Integer(power - 1);
  return reduce(w, modulus);
}

Rational distance_constant(const WeightPoint& a, const PrimeContext& ctx) {
  if (auto* an = std::get_if<weight::Annulus>(&a)) return an->v;
  if (auto* c = std::get_if<weight::CharClassical>(&a)) return cyclotomic_constant(*c, ctx);
  return Rational(0);
}

ZeroDistance distance_to_zero(const WeightPoint& a, const Zero& z, const PrimeContext& ctx) {
  using Kind = ZeroDistance::Kind;
  check_zero(z, ctx);
  if (z.kind == ZeroKind::Classical && component_of(z.k, ctx) != component_of(a, ctx)) {
    throw DomainError("zero at weight " + std::to_string(z.k) + " lies on a different component");
  }
  auto finite = [](const ExtendedRational& e) -> ZeroDistance {
    if (e.is_infinite()) return {Kind::Infinite, 0};
    return {Kind::Finite, e.value().get_num().get_si()};
  };
  return std::visit(
      overloaded{
          [&](const weight::Classical& c) -> ZeroDistance {
            if (z.kind == ZeroKind::EtaEight) return {Kind::Finite, 1};
            return finite(classical_pair_valuation(c.k, z.k, ctx));
          },
          [&](const weight::EtaEight& e) -> ZeroDistance {
            if (z.kind == ZeroKind::Classical) return {Kind::Finite, 1};
            if (e.k == z.k) return {Kind::Infinite, 0};
            return {Kind::Finite, 2 + *valuation(e.k - z.k, 2)};
          },
          [&](const weight::CharClassical&) -> ZeroDistance { return {Kind::Constant, 0}; },
          [&](const weight::Annulus& an) -> ZeroDistance {
            ExtendedRational d = z.kind == ZeroKind::EtaEight ? ExtendedRational(1)
                                                              : classical_pair_valuation(an.center, z.k, ctx);
            if (d.is_infinite() || d.value() > an.v) return {Kind::Constant, 0};
            return finite(d);
          },
          [&](const weight::ExplicitW& x) -> ZeroDistance {
            Integer modulus = prime_power(ctx, x.precision);
            Integer diff = reduce(x.w - w_coordinate(z, ctx, x.precision), modulus);
            if (diff == 0) {
              throw PrecisionError("explicit w agrees with the zero at weight " + std::to_string(z.k) + " to all " +
                                   std::to_string(x.precision) + " digits");
            }
            return {Kind::Finite, *valuation(diff, ctx.p())};
          },
      },
      a);
}

ExtendedRational pair_valuation(const WeightPoint& a, const Zero& z, const PrimeContext& ctx) {
  validate(a, ctx);
  return to_extended(distance_to_zero(a, z, ctx), a, ctx);
}

ExtendedRational pair_valuation(const WeightPoint& a, const WeightPoint& b, const PrimeContext& ctx) {
  validate(a, ctx);
  validate(b, ctx);
  if (component_of(a, ctx) != component_of(b, ctx)) throw DomainError("weights lie on different components");
  auto za = as_zero(a);
  auto zb = as_zero(b);
  bool a_concrete = za || std::holds_alternative<weight::ExplicitW>(a);
  bool b_concrete = zb || std::holds_alternative<weight::ExplicitW>(b);

  if (!a_concrete || !b_concrete) {
    // At most one side may be a region; the other must be a classical or eta_8 point.
    if (!a_concrete && zb) {
      if (std::holds_alternative<weight::CharClassical>(a) && zb->kind != ZeroKind::Classical) {
        throw DomainError("character weights compare only against classical weights");
      }
      return pair_valuation(a, *zb, ctx);
    }
    if (!b_concrete && za) {
      if (std::holds_alternative<weight::CharClassical>(b) && za->kind != ZeroKind::Classical) {
        throw DomainError("character weights compare only against classical weights");
      }
      return pair_valuation(b, *za, ctx);
    }
    throw DomainError("pair valuation is not determined for these two weights");
  }

  if (za && zb) {
    if (za->kind == ZeroKind::Classical && zb->kind == ZeroKind::Classical) {
      return classical_pair_valuation(za->k, zb->k, ctx);
    }
    return pair_valuation(a, *zb, ctx);
  }

  std::int64_t m = std::min(precision_of(a), precision_of(b));
  Integer modulus = prime_power(ctx, m);
  Integer diff = reduce(coordinate_of(a, ctx, m) - coordinate_of(b, ctx, m), modulus);
  if (diff == 0) throw PrecisionError("weights agree to all " + std::to_string(m) + " known digits");
  return ExtendedRational(*valuation(diff, ctx.p()));
}

ExtendedRational w_valuation_bound(const WeightPoint& point, const PrimeContext& ctx) {
  validate(point, ctx);
  auto of_k = [&](std::int64_t k) -> ExtendedRational {
    if (k == 0) return ExtendedRational::infinity();
    return ExtendedRational(base_offset(ctx) + *valuation(k, ctx.p()));
  };
  return std::visit(overloaded{
                        [&](const weight::Classical& c) { return of_k(c.k); },
                        [&](const weight::EtaEight&) { return ExtendedRational(1); },
                        [&](const weight::CharClassical& c) { return ExtendedRational(cyclotomic_constant(c, ctx)); },
                        [&](const weight::Annulus& a) { return min(ExtendedRational(a.v), of_k(a.center)); },
                        [&](const weight::ExplicitW& x) {
                          Integer r = reduce(x.w, prime_power(ctx, x.precision));
                          if (r == 0) return ExtendedRational(x.precision);
                          return ExtendedRational(*valuation(r, ctx.p()));
                        },
                    },
                    point);
}

WeightPoint parse_weight(std::string_view text, const PrimeContext& ctx) {
  WeightPoint point;
  if (text.starts_with("k=")) {
    point = weight::Classical{parse_int(text.substr(2), "weight")};
  } else {
    auto parts = split(text, ':');
    std::string_view head = parts[0];
    if (head == "annulus" && parts.size() == 3) {
      point = weight::Annulus{parse_int(parts[1], "annulus center"), parse_rational(parts[2])};
    } else if (head == "char" && parts.size() == 3) {
      point = weight::CharClassical{parse_int(parts[1], "weight"), parse_int(parts[2], "conductor")};
    } else if (head == "eta8" && parts.size() == 2) {
      point = weight::EtaEight{parse_int(parts[1], "weight")};
    } else if (head == "w" && (parts.size() == 3 || parts.size() == 4)) {
      if (!parts[2].starts_with("prec=")) throw DomainError("expected prec=<m> in '" + std::string(text) + "'");
      weight::ExplicitW x{Integer(0), parse_int(parts[2].substr(5), "precision"), {}};
      std::string digits(parts[1]);
      if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
      if (x.w.set_str(digits, 10) != 0) throw DomainError("malformed w-value '" + std::string(parts[1]) + "'");
      if (parts.size() == 4) {
        if (!parts[3].starts_with("eps=")) throw DomainError("expected eps=<r> in '" + std::string(text) + "'");
        x.component.residue = parse_int(parts[3].substr(4), "component residue");
      }
      point = std::move(x);
    } else {
      throw DomainError("unrecognised weight specification '" + std::string(text) + "'");
    }
  }
  validate(point, ctx);
  return point;
}

std::string to_string(const WeightPoint& point) {
  return std::visit(overloaded{
                        [](const weight::Classical& c) { return "k=" + std::to_string(c.k); },
                        [](const weight::EtaEight& e) { return "eta8:" + std::to_string(e.k); },
                        [](const weight::CharClassical& c) {
                          return "char:" + std::to_string(c.k) + ":" + std::to_string(c.conductor);
                        },
                        [](const weight::Annulus& a) {
                          Rational v = a.v;
                          return "annulus:" + std::to_string(a.center) + ":" + v.get_num().get_str() + "/" +
                                 v.get_den().get_str();
                        },
                        [](const weight::ExplicitW& x) {
                          std::string s = "w:" + x.w.get_str() + ":prec=" + std::to_string(x.precision);
                          if (x.component.residue != 0) s += ":eps=" + std::to_string(x.component.residue);
                          return s;
                        },
                    },
                    point);
}

}  // namespace ghost

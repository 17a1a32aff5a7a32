#include <doctest.h>

#include <random>

#include "ghost/error.hpp"
#include "ghost/weightspace.hpp"
#include "oracles.hpp"

using namespace ghost;

TEST_CASE("prime context validation") {
  CHECK_THROWS_AS(PrimeContext(4, 1), DomainError);
  CHECK_THROWS_AS(PrimeContext(3, 6), DomainError);
  CHECK_THROWS_AS(PrimeContext(5, 0), DomainError);
  CHECK(PrimeContext(7, 1).component_count() == 3);
  CHECK(PrimeContext(2, 3).component_count() == 1);
}

TEST_CASE("component_of") {
  PrimeContext p5(5, 1);
  CHECK(component_of(2, p5).residue == 2);
  CHECK(component_of(6, p5).residue == 2);
  CHECK(component_of(-2, p5).residue == 2);
  CHECK(component_of(14, PrimeContext(2, 1)).residue == 0);
  CHECK(component_of(4, PrimeContext(7, 1)).residue == 4);
  CHECK_THROWS_AS(component_of(3, p5), DomainError);
}

TEST_CASE("classical pair valuation examples") {
  PrimeContext p2(2, 1), p3(3, 1);
  CHECK(classical_pair_valuation(14, 26, p2) == ExtendedRational(4));
  CHECK(classical_pair_valuation(14, 14, p2).is_infinite());
  // v_3((1+3)^18 - 1) by direct binomial expansion
  CHECK(oracle::vp_gamma_power_minus_one(3, 3, 18) == 3);
  CHECK(classical_pair_valuation(2, 20, p3) == ExtendedRational(3));
  CHECK_THROWS_AS(classical_pair_valuation(2, 4, PrimeContext(5, 1)), DomainError);
}

TEST_CASE("classical pair valuation against binomial expansion") {
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    PrimeContext ctx(p, 1);
    const std::int64_t step = p == 2 ? 2 : p - 1;
    const std::int64_t t = p == 2 ? 4 : p;
    for (std::int64_t d = step; d <= 240; d += step) {
      const std::int64_t expect = oracle::vp_gamma_power_minus_one(p, t, d);
      CAPTURE(p);
      CAPTURE(d);
      CHECK(classical_pair_valuation(10, 10 + d, ctx) == ExtendedRational(expect));
      CHECK(classical_pair_valuation(-d, 0, ctx) == ExtendedRational(expect));
    }
  }
}

TEST_CASE("pair valuation examples") {
  PrimeContext p2(2, 1), p5(5, 1);
  CHECK(pair_valuation(weight::Annulus{0, Rational(5, 2)}, Zero{ZeroKind::Classical, 14}, p2) ==
        ExtendedRational(Rational(5, 2)));
  CHECK(pair_valuation(weight::Classical{0}, Zero{ZeroKind::EtaEight, 2}, p2) == ExtendedRational(1));
  CHECK(pair_valuation(weight::EtaEight{2}, Zero{ZeroKind::EtaEight, 10}, p2) == ExtendedRational(5));
  CHECK(pair_valuation(weight::Annulus{2, Rational(7, 2)}, Zero{ZeroKind::Classical, 4}, p2) ==
        ExtendedRational(3));

  // zeta * 6^2 - 6^6 has the valuation of zeta - 6^4. Its norm from Q(zeta_5) is
  // (b^5 - a^5)/(b - a) with a = 6^2, b = 6^6; the valuation is v_5(norm) / 4.
  const mpz_class a = 36, b = 46656;
  mpz_class a5, b5;
  mpz_pow_ui(a5.get_mpz_t(), a.get_mpz_t(), 5);
  mpz_pow_ui(b5.get_mpz_t(), b.get_mpz_t(), 5);
  const mpz_class norm = (b5 - a5) / (b - a);
  const Rational expect = make_rational(oracle::vp(norm, 5), 4);
  CHECK(expect == Rational(1, 4));
  CHECK(pair_valuation(weight::CharClassical{2, 25}, Zero{ZeroKind::Classical, 6}, p5) == ExtendedRational(expect));
  CHECK(pair_valuation(weight::CharClassical{2, 125}, Zero{ZeroKind::Classical, 6}, p5) ==
        ExtendedRational(Rational(1, 20)));
}

TEST_CASE("explicit w precision") {
  PrimeContext p2(2, 1);
  const WeightPoint low = weight::ExplicitW{0, 3, {}};
  const WeightPoint high = weight::ExplicitW{0, 10, {}};
  CHECK_THROWS_AS(pair_valuation(low, Zero{ZeroKind::Classical, 14}, p2), PrecisionError);
  CHECK(pair_valuation(high, Zero{ZeroKind::Classical, 14}, p2) == ExtendedRational(3));
  // w_14 itself, known to 20 digits, sits at distance 2 + v_2(14 - 6) = 5 from w_6
  const Integer w14 = w_coordinate(Zero{ZeroKind::Classical, 14}, p2, 20);
  CHECK(pair_valuation(weight::ExplicitW{w14, 20, {}}, Zero{ZeroKind::Classical, 6}, p2) == ExtendedRational(5));
  CHECK_THROWS_AS(pair_valuation(weight::ExplicitW{w14, 20, {}}, Zero{ZeroKind::Classical, 14}, p2), PrecisionError);
}

TEST_CASE("generated zeros sit in the zero region") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    PrimeContext ctx(p, 1);
    for (std::int64_t k = 2; k <= 200; k += 2) {
      const auto v = oracle::vp(mpz_class(w_coordinate(Zero{ZeroKind::Classical, k}, ctx, 40)), p);
      CHECK(v >= (p == 2 ? 3 : 1));
    }
  }
  PrimeContext p2(2, 1);
  for (std::int64_t k = 2; k <= 60; ++k)
    CHECK(oracle::vp(mpz_class(w_coordinate(Zero{ZeroKind::EtaEight, k}, p2, 40)), 2) == 1);
}

namespace {

// A random concrete point on component `eps`: a classical weight, an eta8 weight (p = 2) or a w-value.
WeightPoint random_concrete(std::mt19937_64& rng, const PrimeContext& ctx, std::int64_t eps) {
  const std::int64_t p = ctx.p();
  const std::int64_t step = p == 2 ? 2 : p - 1;
  std::uniform_int_distribution<int> kind(0, p == 2 ? 2 : 1);
  std::uniform_int_distribution<std::int64_t> kk(-30, 60);
  const std::int64_t k = eps + step * kk(rng);
  switch (kind(rng)) {
    case 0: return weight::Classical{k};
    case 1: {
      // a w-value close to a classical zero, perturbed by a random multiple of a power of p
      std::uniform_int_distribution<std::int64_t> e(1, 12), u(0, 1000);
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e(rng)));
      Integer w = w_coordinate(Zero{ZeroKind::Classical, eps + step * kk(rng)}, ctx, 80) + pe * u(rng);
      return weight::ExplicitW{w, 80, ComponentLabel{eps}};
    }
    default: {
      std::uniform_int_distribution<std::int64_t> ek(2, 80);
      return weight::EtaEight{ek(rng)};
    }
  }
}

}  // namespace

TEST_CASE("pair valuation symmetry, 1000 cases") {
  std::mt19937_64 rng(1234);
  const std::int64_t primes[] = {2, 3, 5, 7};
  int checked = 0;
  while (checked < 1000) {
    PrimeContext ctx(primes[rng() % 4], 1);
    const std::int64_t eps = ctx.p() == 2 ? 0 : 2 * static_cast<std::int64_t>(rng() % ctx.component_count());
    const WeightPoint a = random_concrete(rng, ctx, eps);
    const WeightPoint b = random_concrete(rng, ctx, eps);
    ExtendedRational ab, ba;
    try {
      ab = pair_valuation(a, b, ctx);
    } catch (const PrecisionError&) {
      CHECK_THROWS_AS(pair_valuation(b, a, ctx), PrecisionError);
      ++checked;
      continue;
    }
    ba = pair_valuation(b, a, ctx);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(ab == ba);
    ++checked;
  }
}

TEST_CASE("pair valuation ultrametric, 1000 cases") {
  std::mt19937_64 rng(99);
  const std::int64_t primes[] = {2, 3, 5, 7};
  int checked = 0;
  while (checked < 1000) {
    PrimeContext ctx(primes[rng() % 4], 1);
    const std::int64_t eps = ctx.p() == 2 ? 0 : 2 * static_cast<std::int64_t>(rng() % ctx.component_count());
    ExtendedRational v[3];
    try {
      if (rng() % 4 == 0) {
        // an annulus against two classical zeros
        const std::int64_t step = ctx.p() == 2 ? 2 : ctx.p() - 1;
        const std::int64_t k0 = eps + step * static_cast<std::int64_t>(rng() % 40);
        const Zero z1{ZeroKind::Classical, eps + step * static_cast<std::int64_t>(rng() % 40)};
        const Zero z2{ZeroKind::Classical, eps + step * static_cast<std::int64_t>(rng() % 40)};
        const Rational r(static_cast<long>(2 * (rng() % 8) + 1), 2);
        const WeightPoint a = weight::Annulus{k0, r};
        v[0] = pair_valuation(a, z1, ctx);
        v[1] = pair_valuation(a, z2, ctx);
        v[2] = pair_valuation(weight::Classical{z1.k}, z2, ctx);
      } else {
        const WeightPoint a = random_concrete(rng, ctx, eps);
        const WeightPoint b = random_concrete(rng, ctx, eps);
        const WeightPoint c = random_concrete(rng, ctx, eps);
        v[0] = pair_valuation(a, b, ctx);
        v[1] = pair_valuation(b, c, ctx);
        v[2] = pair_valuation(a, c, ctx);
      }
    } catch (const PrecisionError&) {
      continue;
    }
    std::sort(std::begin(v), std::end(v));
    CHECK(v[0] == v[1]);
    ++checked;
  }
}

TEST_CASE("weight grammar") {
  PrimeContext p2(2, 1), p5(5, 1);
  CHECK(std::get<weight::Classical>(parse_weight("k=-14", p2)).k == -14);
  const auto a = std::get<weight::Annulus>(parse_weight("annulus:62:29/2", p2));
  CHECK(a.center == 62);
  CHECK(a.v == Rational(29, 2));
  CHECK(std::get<weight::CharClassical>(parse_weight("char:2:25", p5)).conductor == 25);
  CHECK(std::get<weight::EtaEight>(parse_weight("eta8:3", p2)).k == 3);
  const auto w = std::get<weight::ExplicitW>(parse_weight("w:10:prec=9:eps=2", p5));
  CHECK(w.precision == 9);
  CHECK(w.component.residue == 2);
  for (const char* bad : {"k=3", "annulus:0:2", "annulus:0:2/1", "char:2:5", "eta8:2x", "w:1:prec=0", "x", "k="})
    CHECK_THROWS_AS(parse_weight(bad, p2), DomainError);
  CHECK_THROWS_AS(parse_weight("eta8:4", p5), DomainError);
  CHECK_THROWS_AS(parse_weight("char:2:25", p2), DomainError);
  for (const char* text : {"k=0", "annulus:0:1/2", "eta8:5", "w:6:prec=4"})
    CHECK(to_string(parse_weight(text, p2)) == text);
}

#include <doctest.h>

#include <sstream>

#include "ghost/boundary.hpp"
#include "ghost/dims.hpp"
#include "ghost/error.hpp"

using namespace ghost;

namespace {

std::vector<Rational> first(const SlopeList& s, std::size_t n) {
  return {s.slopes.begin(), s.slopes.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("boundary polygon examples") {
  const auto b1 = boundary_polygon(PrimeContext(2, 1), {}, 40);
  for (std::size_t i = 0; i < 40; ++i) CHECK(b1.slopes.slopes[i] == Rational(static_cast<long>(i + 1)));
  const auto b3 = boundary_polygon(PrimeContext(2, 3), {}, 10);
  CHECK(first(b3.slopes, 10) == rats({0, 1, 1, 1, 1, 2, 2, 2, 2, 3}));
}

TEST_CASE("boundary increments at p = 3 follow the zero and pole counts") {
  PrimeContext p3(3, 1);
  const auto b = boundary_polygon(p3, {}, 200);
  std::int64_t settled = -1;
  for (std::int64_t i = 1; i <= 200; ++i) {
    const auto d = delta_divisor(p3, {}, i);
    std::int64_t zeros = 0, poles = 0;
    for (const auto& [z, m] : d.zeros) zeros += m;
    for (const auto& [z, m] : d.poles) poles += m;
    // the degree sequence is convex here, so its increments are the slopes
    CHECK(b.slopes.slopes[static_cast<std::size_t>(i - 1)] == Rational(zeros - poles));
    if (zeros - poles != 2 * i) settled = i;
  }
  CHECK(settled < 20);
}

TEST_CASE("progression parameters") {
  CHECK(progression_params(PrimeContext(3, 1)).count == 1);
  CHECK(progression_params(PrimeContext(3, 1)).difference == 2);
  CHECK(progression_params(PrimeContext(5, 1)).count == 5);
  CHECK(progression_params(PrimeContext(5, 1)).difference == 8);
  CHECK(progression_params(PrimeContext(7, 1)).count == 14);
  CHECK(progression_params(PrimeContext(7, 1)).difference == 18);
  CHECK_THROWS_AS(progression_params(PrimeContext(2, 1)), DomainError);
  for (std::int64_t p = 3; p <= 199; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t N = 1; N <= 42; ++N) {
      if (N % p == 0) continue;
      const std::int64_t num = p * (p - 1) * (p + 1) * gamma0_invariants(N).index;
      REQUIRE(num % 24 == 0);
      REQUIRE(progression_params(PrimeContext(p, N)).count == num / 24);
    }
  }
}

TEST_CASE("progression check") {
  SlopeList toy;
  for (int i = 0; i < 20; ++i) toy.slopes.push_back(2 * i);
  toy.certified_count = 20;
  CHECK(ap_check(toy, 1, 2, 0).verified());
  CHECK_FALSE(ap_check(toy, 1, 3, 0).verified());
  CHECK(ap_check(toy, 1, 3, 0).first_violation == std::optional<std::size_t>(0));
  CHECK_THROWS_AS(ap_check(toy, 5, 2, 15), DomainError);

  const auto b3 = boundary_polygon(PrimeContext(3, 1), {}, 200);
  CHECK(ap_check(b3.slopes, 1, 2, 20).verified());
  const auto b5 = boundary_polygon(PrimeContext(5, 1), {}, 500);
  const auto r5 = ap_check(b5.slopes, 5, 8, 50);
  CHECK(r5.verified());
  CHECK(r5.verified_through >= 500);
}

TEST_CASE("progressions on every component") {
  for (auto [p, N] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    PrimeContext ctx(p, N);
    const auto par = progression_params(ctx);
    for (std::int64_t e = 0; e < p - 1; e += 2) {
      const auto b = boundary_polygon(ctx, ComponentLabel{e}, 300 + static_cast<std::size_t>(par.count));
      const auto burn = smallest_burn_in(b.slopes, par.count, par.difference, 100);
      CAPTURE(p);
      CAPTURE(N);
      CAPTURE(e);
      REQUIRE(burn.has_value());
      CHECK(ap_check(b.slopes, par.count, par.difference, *burn).verified_through >= 300);
    }
  }
}

TEST_CASE("boundary slopes are the small-v limit of annulus slopes") {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t N = 1; N <= 6; ++N) {
      if (N % p == 0) continue;
      PrimeContext ctx(p, N);
      for (std::int64_t e = 0; e < p - 1; e += 2) {
        const auto b = boundary_polygon(ctx, ComponentLabel{e}, 50);
        const auto a = ghost_slopes(ctx, weight::Annulus{e, Rational(1, 2)}, 50);
        for (std::size_t i = 0; i < 50; ++i) REQUIRE(a.slopes[i] * 2 == b.slopes.slopes[i]);
      }
    }
  }
}

TEST_CASE("halo profiles") {
  PrimeContext p2(2, 1);
  for (std::int64_t r = 0; r <= 2; ++r) {
    const auto h = halo_profile(p2, 0, r, 3, 20);
    CHECK(h.affine());
    for (const auto& row : h.rows)
      for (std::size_t i = 0; i < 20; ++i) CHECK(row.slopes.slopes[i] == row.v * static_cast<long>(i + 1));
  }
  for (std::int64_t r = 0; r <= 4; ++r) {
    CHECK(halo_profile(p2, 62, r, 3, 20).affine());
    CHECK(halo_profile(PrimeContext(3, 1), 0, r, 3, 20).affine());
  }
  const auto h62 = halo_profile(p2, 62, 15, 3, 20);
  for (const auto& row : h62.rows) CHECK(row.slopes.multiplicity(30) == 6);

  CHECK(ghost_slopes(p2, weight::Annulus{0, Rational(1, 2)}, 20) ==
        ghost_slopes(p2, weight::Annulus{62, Rational(1, 2)}, 20));

  const auto csv = halo_profile(p2, 0, 0, 3, 3).to_csv();
  CHECK(csv == "v,s1,s2,s3\n1/4,1/4,1/2,3/4\n1/2,1/2,1,3/2\n3/4,3/4,3/2,9/4\n");
}

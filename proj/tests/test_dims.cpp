#include <doctest.h>

#include <map>
#include <numeric>

#include "ghost/dims.hpp"
#include "ghost/error.hpp"
#include "oracles.hpp"

using namespace ghost;

TEST_CASE("gamma0 invariants examples") {
  const auto one = gamma0_invariants(1);
  CHECK(one.index == 1);
  CHECK(one.nu2 == 1);
  CHECK(one.nu3 == 1);
  CHECK(one.cusps == 1);
  CHECK(one.genus == 0);
  const auto two = gamma0_invariants(2);
  CHECK(two.index == 3);
  CHECK(two.nu2 == 1);
  CHECK(two.nu3 == 0);
  CHECK(two.cusps == 2);
  CHECK(two.genus == 0);
  CHECK(gamma0_invariants(11).genus == 1);
}

TEST_CASE("gamma0 invariants against direct counts") {
  for (std::int64_t M = 1; M <= 120; ++M) {
    CAPTURE(M);
    const auto inv = gamma0_invariants(M);
    CHECK(inv.index == oracle::p1_count(M));
    CHECK(inv.nu2 == oracle::elliptic_roots(M, 2));
    CHECK(inv.nu3 == oracle::elliptic_roots(M, 3));
  }
}

TEST_CASE("genus and cusps against published tables") {
  const std::map<std::int64_t, std::int64_t> genus = {
      {11, 1}, {14, 1}, {15, 1}, {17, 1}, {19, 1}, {20, 1}, {21, 1}, {22, 2}, {23, 2}, {24, 1}, {25, 0},
      {26, 2}, {27, 1}, {28, 2}, {29, 2}, {30, 3}, {31, 2}, {32, 1}, {36, 1}, {37, 2}, {49, 1}, {64, 3}};
  for (const auto& [M, g] : genus) {
    CAPTURE(M);
    CHECK(gamma0_invariants(M).genus == g);
  }
  const std::map<std::int64_t, std::int64_t> cusps = {{1, 1},  {2, 2},  {4, 3},  {8, 4},  {9, 4},
                                                      {12, 6}, {16, 6}, {25, 6}, {36, 12}};
  for (const auto& [M, c] : cusps) {
    CAPTURE(M);
    CHECK(gamma0_invariants(M).cusps == c);
  }
}

TEST_CASE("genus integrality up to 10^4") {
  for (std::int64_t M = 1; M <= 10000; ++M) {
    const auto inv = gamma0_invariants(M);
    const std::int64_t x = 12 * (inv.genus - 1) + 3 * inv.nu2 + 4 * inv.nu3 + 6 * inv.cusps;
    REQUIRE(x == inv.index);
    REQUIRE(inv.genus >= 0);
  }
}

TEST_CASE("cusp form dimensions") {
  CHECK(dim_cusp_gamma0(1, 12) == 1);
  CHECK(dim_cusp_gamma0(2, 14) == 2);
  CHECK(dim_cusp_gamma0(1, 14) == 0);
  CHECK(dim_cusp_gamma0(1, 0) == 0);
  CHECK(dim_cusp_gamma0(1, -14) == 0);
  CHECK(dim_cusp_gamma0(11, 2) == 1);
  CHECK_THROWS_AS(dim_cusp_gamma0(1, 3), DomainError);
  for (std::int64_t M = 1; M <= 4; ++M)
    for (std::int64_t k = 4; k <= 300; k += 2) {
      CAPTURE(M);
      CAPTURE(k);
      CHECK(dim_cusp_gamma0(M, k) == *oracle::known_cusp_dim(M, k));
    }
}

TEST_CASE("dimensions grow with the weight") {
  for (std::int64_t M = 1; M <= 50; ++M) {
    const auto inv = gamma0_invariants(M);
    for (std::int64_t k = 2; k + 2 <= 200; k += 2) {
      CAPTURE(M);
      CAPTURE(k);
      const auto a = dim_cusp_gamma0(inv, k), b = dim_cusp_gamma0(inv, k + 2);
      // level one drops by one from k = 12 to k = 14 and similar; everything else is monotone
      if (M == 1)
        CHECK(b >= a - 1);
      else
        CHECK(b >= a);
      if (k >= 4) CHECK(12 * a >= dim_cusp_gamma0_lower_bound_x12(inv, k));
    }
  }
  CHECK(dim_cusp_gamma0(1, 14) < dim_cusp_gamma0(1, 12));
}

TEST_CASE("p-new dimensions") {
  PrimeContext p2(2, 1);
  CHECK(dim_pnew(p2, 14) == 2);
  CHECK(dim_pnew(p2, 38) == 4);
  CHECK(dim_pnew(p2, 62) == 6);
  CHECK(dim_cusp_gamma0(2, 38) == 8);
  CHECK(dim_cusp_gamma0(1, 38) == 2);
}

TEST_CASE("p-new dimensions are nonnegative on the test grid") {
  for (std::int64_t p = 2; p <= 199; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t N = 1; N <= 42; ++N) {
      if (N % p == 0) continue;
      const auto lo = gamma0_invariants(N);
      const auto hi = gamma0_invariants(N * p);
      for (std::int64_t k = 2; k <= 400; k += 2) {
        const auto d = dim_cusp_gamma0(hi, k) - 2 * dim_cusp_gamma0(lo, k);
        if (d < 0) {
          CAPTURE(p);
          CAPTURE(N);
          CAPTURE(k);
          FAIL("negative new dimension");
        }
      }
    }
  }
}

TEST_CASE("character dimensions with trivial character match gamma0") {
  for (std::int64_t M = 1; M <= 100; ++M) {
    DirichletCharacter chi{M, 1, [M](std::int64_t x) { return std::gcd(x, M) == 1 ? 1 : 0; }};
    for (std::int64_t k = 2; k <= 30; k += 2) {
      CAPTURE(M);
      CAPTURE(k);
      CHECK(dim_cusp_character(chi, k) == dim_cusp_gamma0(M, k));
    }
  }
}

TEST_CASE("eta8 dimensions") {
  CHECK(dim_cusp_eta8(3, 2, Sign::Plus) == 2);
  CHECK(dim_cusp_eta8(3, 3, Sign::Minus) == 6);
  CHECK(dim_cusp_eta8(3, 4, Sign::Plus) == 10);
  CHECK(dim_cusp_eta8(3, 3) == 6);
  CHECK_THROWS_AS(dim_cusp_eta8(3, 3, Sign::Plus), DomainError);
  CHECK_THROWS_AS(dim_cusp_eta8(4, 2, Sign::Plus), DomainError);
  // level 8 forms with (2/.) in weight 2 do not exist: X_1(8) has genus 0
  CHECK(dim_cusp_eta8(1, 2, Sign::Plus) == 0);
}

TEST_CASE("eta8 lower bound is positive for odd levels") {
  for (std::int64_t N = 3; N <= 99; N += 2) {
    CAPTURE(N);
    CHECK(fractional_slope_bound(N) > 0);
  }
  CHECK_THROWS_AS(fractional_slope_bound(1), DomainError);
  CHECK_THROWS_AS(fractional_slope_bound(4), DomainError);
}

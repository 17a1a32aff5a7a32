#include "ghost/dims.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ghost/error.hpp"

namespace ghost {

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [q, e] : factor(n)) r = r / q * (q - 1);
  return r;
}

// Legendre symbol (a/q) for an odd prime q.
int legendre(std::int64_t a, std::int64_t q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) return 0;
  std::int64_t r = 1;
  std::int64_t base = a;
  std::int64_t e = (q - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

Gamma0Invariants gamma0_invariants(std::int64_t M) {
  if (M < 1) throw DomainError("level must be positive");
  Gamma0Invariants inv;
  inv.level = M;
  auto fac = factor(M);

  inv.index = M;
  for (auto [q, e] : fac) inv.index = inv.index / q * (q + 1);

  if (M % 4 == 0) {
    inv.nu2 = 0;
  } else {
    inv.nu2 = 1;
    for (auto [q, e] : fac) inv.nu2 *= (q == 2) ? 1 : 1 + legendre(-1, q);
  }
  if (M % 9 == 0) {
    inv.nu3 = 0;
  } else {
    inv.nu3 = 1;
    for (auto [q, e] : fac) inv.nu3 *= (q == 3) ? 1 : (q == 2 ? 0 : 1 + legendre(-3, q));
  }
  inv.cusps = 0;
  for (std::int64_t d = 1; d <= M; ++d) {
    if (M % d == 0) inv.cusps += euler_phi(std::gcd(d, M / d));
  }
  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 nu_inf
  std::int64_t twelve_g = 12 + inv.index - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.cusps;
  if (twelve_g % 12 != 0 || twelve_g < 0) throw Error("non-integral genus for level " + std::to_string(M));
  inv.genus = twelve_g / 12;
  return inv;
}

std::int64_t dim_cusp_gamma0(const Gamma0Invariants& inv, std::int64_t k) {
  if (k % 2 != 0) throw DomainError("dim S_k(Gamma_0(M)) requested for odd k = " + std::to_string(k));
  if (k <= 0) return 0;
  if (k == 2) return inv.genus;
  return (k - 1) * (inv.genus - 1) + (k / 2 - 1) * inv.cusps + (k / 4) * inv.nu2 + (k / 3) * inv.nu3;
}

std::int64_t dim_cusp_gamma0(std::int64_t M, std::int64_t k) { return dim_cusp_gamma0(gamma0_invariants(M), k); }

std::int64_t dim_cusp_gamma0_lower_bound_x12(const Gamma0Invariants& inv, std::int64_t k) {
  // floor(k/4) >= (k-3)/4 and floor(k/3) >= (k-2)/3 give 12 d_k >= k mu - 12(g-1) - 12 nu_inf - 9 nu2 - 8 nu3.
  return k * inv.index - 12 * (inv.genus - 1) - 12 * inv.cusps - 9 * inv.nu2 - 8 * inv.nu3;
}

std::int64_t dim_pnew(const PrimeContext& ctx, std::int64_t k) {
  std::int64_t d = dim_cusp_gamma0(ctx.N() * ctx.p(), k) - 2 * dim_cusp_gamma0(ctx.N(), k);
  if (d < 0) throw Error("negative p-new dimension at k = " + std::to_string(k));
  return d;
}

std::int64_t dim_cusp_character(const DirichletCharacter& chi, std::int64_t k) {
  if (k < 2) throw DomainError("dimension formula requires k >= 2");
  const std::int64_t M = chi.modulus;
  if (chi.value(M - 1) != ((k % 2 == 0) ? 1 : -1)) throw DomainError("character parity does not match weight");

  std::int64_t mu = M;
  std::int64_t lambda = 1;
  for (auto [q, r] : factor(M)) {
    mu = mu / q * (q + 1);
    std::int64_t s = 0;
    for (std::int64_t c = chi.conductor; c % q == 0; c /= q) ++s;
    std::int64_t term;
    if (2 * s <= r) {
      term = (r % 2 == 0) ? ipow(q, r / 2) + ipow(q, r / 2 - 1) : 2 * ipow(q, (r - 1) / 2);
    } else {
      term = 2 * ipow(q, r - s);
    }
    lambda *= term;
  }
  std::int64_t sum4 = 0;
  std::int64_t sum3 = 0;
  for (std::int64_t x = 0; x < M; ++x) {
    if ((x * x + 1) % M == 0) sum4 += chi.value(x);
    if ((x * x + x + 1) % M == 0) sum3 += chi.value(x);
  }
  // 12 gamma_4(k) and 12 gamma_3(k).
  std::int64_t g4 = (k % 2 != 0) ? 0 : (k % 4 == 2 ? -3 : 3);
  std::int64_t g3 = (k % 3 == 2) ? -4 : (k % 3 == 1 ? 0 : 4);
  std::int64_t twelve = (k - 1) * mu - 6 * lambda + g4 * sum4 + g3 * sum3;
  if (twelve % 12 != 0) throw Error("non-integral dimension from Cohen-Oesterle formula");
  std::int64_t d = twelve / 12;
  // Correction term dim M_{2-k}(chi-bar): the constants, only for k = 2 and trivial chi.
  if (k == 2 && chi.conductor == 1) d += 1;
  if (d < 0) throw Error("negative dimension from Cohen-Oesterle formula");
  return d;
}

DirichletCharacter eta8_character(std::int64_t N, Sign sign) {
  if (N < 1 || N % 2 == 0) throw DomainError("eta_8 spaces require odd N");
  DirichletCharacter chi;
  chi.modulus = 8 * N;
  chi.conductor = 8;
  chi.value = [N, sign](std::int64_t x) -> int {
    x %= 8 * N;
    if (x < 0) x += 8 * N;
    if (std::gcd(x, 8 * N) != 1) return 0;
    std::int64_t r = x % 8;
    if (sign == Sign::Plus) return (r == 1 || r == 7) ? 1 : -1;
    return (r == 1 || r == 3) ? 1 : -1;
  };
  return chi;
}

std::int64_t dim_cusp_eta8(std::int64_t N, std::int64_t k, Sign sign) {
  if (k < 2) throw DomainError("eta_8 dimension requires k >= 2");
  Sign expected = (k % 2 == 0) ? Sign::Plus : Sign::Minus;
  if (sign != expected) throw DomainError("eta_8 sign must equal (-1)^k");
  return dim_cusp_character(eta8_character(N, sign), k);
}

std::int64_t dim_cusp_eta8(std::int64_t N, std::int64_t k) {
  return dim_cusp_eta8(N, k, (k % 2 == 0) ? Sign::Plus : Sign::Minus);
}

std::int64_t fractional_slope_bound(std::int64_t N) {
  if (N <= 1 || N % 2 == 0) throw DomainError("bound is stated for odd N > 1");
  return dim_cusp_eta8(N, 2, Sign::Plus) - 2 * (dim_cusp_gamma0(2 * N, 2) - dim_cusp_gamma0(N, 2));
}

}  // namespace ghost

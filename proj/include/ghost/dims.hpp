#pragma once

#include <cstdint>
#include <functional>

#include "ghost/weightspace.hpp"

namespace ghost {

/// Index, elliptic point counts, cusp count and genus of X_0(M).
struct Gamma0Invariants {
  std::int64_t level = 1;
  std::int64_t index = 1;  ///< [SL_2(Z) : Gamma_0(M)]
  std::int64_t nu2 = 0;
  std::int64_t nu3 = 0;
  std::int64_t cusps = 1;
  std::int64_t genus = 0;
};

Gamma0Invariants gamma0_invariants(std::int64_t M);

/// dim S_k(Gamma_0(M)); zero for k <= 0. Throws DomainError for odd k.
std::int64_t dim_cusp_gamma0(std::int64_t M, std::int64_t k);
std::int64_t dim_cusp_gamma0(const Gamma0Invariants& inv, std::int64_t k);

/// Linear lower bound L(k) <= dim S_k(Gamma_0(M)) valid for every even k >= 4, scaled by 12.
std::int64_t dim_cusp_gamma0_lower_bound_x12(const Gamma0Invariants& inv, std::int64_t k);

/// dim S_k(Gamma_0(Np))^{p-new}.
std::int64_t dim_pnew(const PrimeContext& ctx, std::int64_t k);

/// A Dirichlet character modulo `modulus` with the given conductor, as a value table.
struct DirichletCharacter {
  std::int64_t modulus = 1;
  std::int64_t conductor = 1;
  std::function<int(std::int64_t)> value;  ///< chi(x) in {-1, 0, 1} for x mod modulus
};

/// dim S_k(M, chi) for k >= 2 and real chi with chi(-1) = (-1)^k (Cohen-Oesterle).
std::int64_t dim_cusp_character(const DirichletCharacter& chi, std::int64_t k);

enum class Sign { Plus, Minus };

/// eta_8^{+} = (2/.) or eta_8^{-} = (-2/.), viewed modulo 8N.
DirichletCharacter eta8_character(std::int64_t N, Sign sign);

/// dim S_k(Gamma_1(8N), eta_8^{sign}). Requires N odd, k >= 2 and sign = (-1)^k.
std::int64_t dim_cusp_eta8(std::int64_t N, std::int64_t k, Sign sign);

/// Same with the sign forced to (-1)^k.
std::int64_t dim_cusp_eta8(std::int64_t N, std::int64_t k);

/// dim S_2(Gamma_1(8N), eta_8^+) - 2 (dim S_2(Gamma_0(2N)) - dim S_2(Gamma_0(N))), for odd N > 1.
std::int64_t fractional_slope_bound(std::int64_t N);

}  // namespace ghost

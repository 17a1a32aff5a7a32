#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghost/rational.hpp"

namespace ghost {

/// Slopes of U_2 on S_2(Gamma_1(8N), eta_8^+), supplied externally. The only non-computable
/// input of the modified p = 2 series.
struct Weight2SeedSlopes {
  std::int64_t N = 1;
  std::vector<Rational> slopes;
};

/// Throws DomainError unless N is odd, the length equals dim S_2(Gamma_1(8N), eta_8^+),
/// the list is sorted and it is symmetric about 1/2.
void validate(const Weight2SeedSlopes& seed);

/// Parses {"N": odd int, "weight2_slopes": [{"num", "den"}, ...]} and validates it.
Weight2SeedSlopes parse_seed(const std::string& json_text);
Weight2SeedSlopes load_seed(const std::string& path);
std::string seed_to_json(const Weight2SeedSlopes& seed);

/// Seeds shipped with the library: N = 1 (empty) and N = 3 (1/2, 1/2).
Weight2SeedSlopes bundled_seed(std::int64_t N);

/// m_i(2) for i = 1..len, stored at [i - 1]. Nonzero exactly when slopes i and i+1 agree and
/// are not integers. Throws DomainError on unsorted input.
std::vector<std::int64_t> seed_multiplicities(std::span<const Rational> slopes);

/// m_i(k) for the eta_8-twisted weight k >= 2, reflected to weight 2 through d_k.
std::int64_t modified_multiplicity(const Weight2SeedSlopes& seed, std::int64_t i, std::int64_t k);

}  // namespace ghost

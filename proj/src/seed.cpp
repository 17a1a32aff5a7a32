#include "ghost/seed.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ghost/dims.hpp"
#include "ghost/error.hpp"
#include "ghost/json_io.hpp"
#include "ghost/series.hpp"

namespace ghost {

void validate(const Weight2SeedSlopes& seed) {
  if (seed.N < 1 || seed.N % 2 == 0) throw DomainError("seed level N must be odd and positive");
  auto expected = dim_cusp_eta8(seed.N, 2, Sign::Plus);
  if (static_cast<std::int64_t>(seed.slopes.size()) != expected) {
    throw DomainError("seed has " + std::to_string(seed.slopes.size()) + " slopes but dim S_2(Gamma_1(8N), eta_8^+) = " +
                      std::to_string(expected));
  }
  if (!std::is_sorted(seed.slopes.begin(), seed.slopes.end())) throw DomainError("seed slopes must be sorted");
  const std::size_t n = seed.slopes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seed.slopes[i] + seed.slopes[n - 1 - i] != 1) {
      throw DomainError("seed slopes must be symmetric about 1/2");
    }
  }
}

Weight2SeedSlopes parse_seed(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed seed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("N") || !j.contains("weight2_slopes") || !j["N"].is_number_integer() ||
      !j["weight2_slopes"].is_array()) {
    throw DomainError("seed JSON must have integer N and array weight2_slopes");
  }
  Weight2SeedSlopes seed;
  seed.N = j["N"].get<std::int64_t>();
  for (const auto& s : j["weight2_slopes"]) seed.slopes.push_back(rational_from_json(s));
  validate(seed);
  return seed;
}

Weight2SeedSlopes load_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open seed file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_seed(buf.str());
}

std::string seed_to_json(const Weight2SeedSlopes& seed) {
  Json slopes = Json::array();
  for (const auto& s : seed.slopes) slopes.push_back(rational_to_json(s));
  return Json{{"N", seed.N}, {"weight2_slopes", slopes}}.dump();
}

Weight2SeedSlopes bundled_seed(std::int64_t N) {
  if (N == 1) return {1, {}};
  if (N == 3) return {3, {make_rational(1, 2), make_rational(1, 2)}};
  throw DomainError("no bundled weight-2 seed for N = " + std::to_string(N) + "; supply one with --seed");
}

std::vector<std::int64_t> seed_multiplicities(std::span<const Rational> slopes) {
  if (!std::is_sorted(slopes.begin(), slopes.end())) throw DomainError("seed slopes must be sorted");
  const auto n = static_cast<std::int64_t>(slopes.size());
  std::vector<std::int64_t> m(slopes.size(), 0);
  std::int64_t block_start = 0;  // 0-based start of the current block of equal slopes
  for (std::int64_t i = 0; i < n; ++i) {
    if (i > 0 && slopes[i] != slopes[i - 1]) block_start = i;
    if (is_integer(slopes[i])) continue;
    std::int64_t block_end = block_start;
    while (block_end + 1 < n && slopes[block_end + 1] == slopes[block_start]) ++block_end;
    const std::int64_t mu = block_end - block_start + 1;
    const std::int64_t beta = block_start + 1;
    // i-th entry (1-based) of s(mu - 1, beta - 1).
    m[i] = updown_term(mu - 1, (i + 1) - (beta - 1));
  }
  return m;
}

std::int64_t modified_multiplicity(const Weight2SeedSlopes& seed, std::int64_t i, std::int64_t k) {
  if (k < 2) throw DomainError("eta_8 weights start at k = 2");
  auto m2 = seed_multiplicities(seed.slopes);
  auto at = [&](std::int64_t j) -> std::int64_t {
    if (j < 1 || j > static_cast<std::int64_t>(m2.size())) return 0;
    return m2[j - 1];
  };
  if (k == 2) return at(i);
  const std::int64_t dk = dim_cusp_eta8(seed.N, k);
  if (i < 1 || i >= dk) return 0;
  return at(dk - i);
}

}  // namespace ghost

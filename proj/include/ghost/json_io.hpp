#pragma once

#include <json.hpp>

#include "ghost/rational.hpp"

namespace ghost {

using Json = nlohmann::json;

/// {"num": n, "den": d}; components that overflow int64 are written as decimal strings.
Json rational_to_json(const Rational& r);

/// Accepts {"num", "den"} with integer or string components. Throws DomainError otherwise.
Rational rational_from_json(const Json& j);

}  // namespace ghost

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ghost {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero integer. Returns nullopt for zero.
std::optional<std::int64_t> valuation(const Integer& x, std::int64_t p);
std::optional<std::int64_t> valuation(std::int64_t x, std::int64_t p);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "a/b" or "-a/b". Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// A rational number or +infinity; the codomain of p-adic valuations.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  ExtendedRational(std::int64_t value) : value_(make_rational(value)) {}  // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.value_.reset();
    return r;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws DomainError when infinite.
  const Rational& value() const;

  ExtendedRational& operator+=(const ExtendedRational& other);
  friend ExtendedRational operator+(ExtendedRational a, const ExtendedRational& b) { return a += b; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  std::string str() const { return is_infinite() ? "inf" : to_string(*value_); }

 private:
  std::optional<Rational> value_ = Rational(0);
};

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);

}  // namespace ghost

#include "ghost/json_io.hpp"

#include "ghost/error.hpp"

namespace ghost {

namespace {

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw DomainError("malformed integer string in JSON");
    return x;
  }
  throw DomainError("expected an integer in JSON rational");
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json{{"num", integer_to_json(r.get_num())}, {"den", integer_to_json(r.get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw DomainError("rational must be an object with num and den");
  }
  Integer num = integer_from_json(j.at("num"));
  Integer den = integer_from_json(j.at("den"));
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ghost

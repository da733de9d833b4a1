#pragma once

#include "json.hpp"
#include "uavcov/errors.hpp"
#include "uavcov/rational.hpp"

namespace uavcov {

// Rationals serialize as {"num": ..., "den": ...}; components that fit in
// 64 bits are emitted as integers, anything larger as a decimal string.
inline nlohmann::json rat_to_json(const Rat& r) {
  auto emit = [](const mpz_class& z) -> nlohmann::json {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
  };
  return {{"num", emit(r.num())}, {"den", emit(r.den())}};
}

inline Rat rat_from_json(const nlohmann::json& j) {
  auto read = [](const nlohmann::json& v) -> mpz_class {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw ParseError("rational component must be integer or string");
  };
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("expected {num, den} rational object");
  mpz_class num = read(j.at("num"));
  mpz_class den = read(j.at("den"));
  if (den == 0) throw ParseError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rat(q);
}

}  // namespace uavcov

#include "klab/rational.hpp"

#include <charconv>
#include <cstdio>
#include <limits>

#include "klab/error.hpp"

namespace klab {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

nlohmann::json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string() && is_integer_text(j.get<std::string>())) return mpz_class(j.get<std::string>());
  throw schema_error("rational component must be an integer");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw invalid_input("malformed rational '" + std::string(text) + "' (expected a/b)");
  }
  mpz_class d{std::string(den)};
  if (d == 0) throw invalid_input("rational with zero denominator");
  Rational q(mpz_class{std::string(num)}, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

nlohmann::json rational_to_json(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return {{"num", integer_to_json(q.get_num())},
          {"den", integer_to_json(q.get_den())},
          {"decimal", std::string(buf)}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw schema_error("rational must be an object with num and den");
  }
  mpz_class den = integer_from_json(j.at("den"));
  if (den == 0) throw schema_error("rational with zero denominator");
  Rational q(integer_from_json(j.at("num")), den);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace klab

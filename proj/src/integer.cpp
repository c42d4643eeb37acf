#include "mcf/integer.hpp"

#include <limits>

#include "mcf/error.hpp"

namespace mcf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::zero_denominator: return "ZeroDenominator";
    case ErrorKind::numeric_instability: return "NumericInstability";
    case ErrorKind::mixed_mode_required: return "MixedModeRequired";
    case ErrorKind::invalid_mixed_conditions: return "InvalidMixedConditions";
    case ErrorKind::instance_too_large: return "InstanceTooLarge";
  }
  return "Unknown";
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::zero_denominator, "ratio with zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

Integer floor_of(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);  // > 0
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

Rational fractional_part(const Rational& value) {
  return value - Rational(floor_of(value));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text, const char* what) {
  throw Error(ErrorKind::invalid_argument,
              std::string("cannot parse ") + what + " '" + std::string(text) + "'");
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) bad_number(text, "integer");
  Integer value{std::string(body)};
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) bad_number(text, "rational");
    const Integer den(std::string{den_text});
    if (den == 0) {
      throw Error(ErrorKind::zero_denominator,
                  "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) bad_number(text, "rational");
    const bool negative = !whole.empty() && whole.front() == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits.front() == '-' || whole_digits.front() == '+')) {
      whole_digits.remove_prefix(1);
    }
    if (whole_digits.empty() && frac.empty()) bad_number(text, "rational");
    if (!whole_digits.empty() && !all_digits(whole_digits)) bad_number(text, "rational");
    const Integer int_part = whole_digits.empty() ? Integer(0) : Integer(std::string(whole_digits));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Integer frac_part = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Rational magnitude = Rational(int_part) + Rational(frac_part, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

long long to_int64(const Integer& value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min()) {
    throw Error(ErrorKind::instance_too_large,
                "value " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<long long>();
}

}  // namespace mcf

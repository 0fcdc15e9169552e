#include "dycktile/exact.hpp"

#include <cctype>
#include <sstream>

#include "dycktile/errors.hpp"

namespace dycktile {

namespace {
thread_local unsigned g_digits = 0;
}

void set_float_digits(unsigned digits) {
  if (digits < 10) throw ValidationError("float precision must be at least 10 digits");
  g_digits = digits;
  HighFloat::default_precision(digits);
}

unsigned float_digits() {
  if (g_digits == 0) set_float_digits(64);
  return g_digits;
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text.empty()) throw ValidationError("empty number");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      Rational q(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
      if (q.get_den() == 0) throw ValidationError("zero denominator in '" + raw + "'");
      q.canonicalize();
      return q;
    }
    // decimal with optional exponent
    std::string mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
      mant = text.substr(0, e);
      exp10 = std::stol(text.substr(e + 1));
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char c : mant) {
      if (c == '.') {
        if (seen_dot) throw ValidationError("malformed number '" + raw + "'");
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_dot) ++frac;
      } else {
        throw ValidationError("malformed number '" + raw + "'");
      }
    }
    if (digits.empty()) throw ValidationError("malformed number '" + raw + "'");
    Integer num(digits);
    if (neg) num = -num;
    exp10 -= frac;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed number '" + raw + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const HighFloat& x, unsigned digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace dycktile

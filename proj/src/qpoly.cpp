#include "dycktile/qpoly.hpp"

#include "dycktile/errors.hpp"

namespace dycktile {

QPoly::QPoly(long c) : QPoly(Integer(c)) {}

QPoly::QPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

QPoly QPoly::q(int e) { return q_half(2 * e); }

QPoly QPoly::q_half(int twice_e) {
  QPoly p;
  p.terms_.emplace(twice_e, Integer(1));
  return p;
}

bool QPoly::has_half_exponents() const {
  for (const auto& [d, c] : terms_)
    if (d % 2 != 0) return true;
  return false;
}

Integer QPoly::coeff_half(int twice_e) const {
  auto it = terms_.find(twice_e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QPoly::add_term(int doubled, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(doubled, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

namespace {
void require_integral(const QPoly& p, const char* what) {
  if (p.has_half_exponents()) throw ValidationError(std::string(what) + ": polynomial has half-integer exponents");
}
}  // namespace

Rational QPoly::evaluate(const Integer& q) const {
  require_integral(*this, "evaluate");
  if (q == 0) throw ValidationError("evaluate: q must be nonzero");
  Rational total = 0;
  for (const auto& [d, c] : terms_) {
    int e = d / 2;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    total += e >= 0 ? Rational(c * p) : Rational(c, p);
  }
  total.canonicalize();
  return total;
}

Integer QPoly::at_minus_one() const {
  require_integral(*this, "at_minus_one");
  Integer total = 0;
  for (const auto& [d, c] : terms_) total += (d / 2) % 2 == 0 ? c : Integer(-c);
  return total;
}

Integer QPoly::at_one() const {
  Integer total = 0;
  for (const auto& [d, c] : terms_) total += c;
  return total;
}

QPoly QPoly::substitute_sqrt() const {
  require_integral(*this, "substitute_sqrt");
  QPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d / 2, c);
  return out;
}

QPoly QPoly::substitute_inverse_square() const {
  QPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(-2 * d, c);
  return out;
}

QPoly QPoly::substitute_inverse() const {
  QPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(-d, c);
  return out;
}

QPoly QPoly::shifted_half(int twice_e) const {
  QPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + twice_e, c);
  return out;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
  require_integral(*this, "divide_exact");
  require_integral(divisor, "divide_exact");
  if (divisor.is_zero()) throw ValidationError("division by zero polynomial");
  QPoly rem = *this;
  QPoly quot;
  const int lead_d = divisor.max_doubled();
  const Integer& lead_c = divisor.terms_.rbegin()->second;
  const int low_d = divisor.min_doubled();
  while (!rem.is_zero()) {
    if (rem.max_doubled() - lead_d < rem.min_doubled() - low_d) return std::nullopt;
    const Integer& rc = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    QPoly term = QPoly::q_half(rem.max_doubled() - lead_d) * QPoly(Integer(rc / lead_c));
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string exp = d % 2 == 0 ? std::to_string(d / 2) : "(" + std::to_string(d) + "/2)";
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "q";
    if (d != 2) out += "^" + exp;
  }
  return out;
}

QPoly q_int(int n) {
  if (n < 0) throw ValidationError("q_int: negative argument");
  QPoly out;
  for (int k = 0; k < n; ++k) out += QPoly::q(k);
  return out;
}

QPoly q_fact(int n) {
  if (n < 0) throw ValidationError("q_fact: negative argument");
  QPoly out(1);
  for (int k = 2; k <= n; ++k) out *= q_int(k);
  return out;
}

QPoly q_binom(int a, int b) {
  if (a < 0 || b < 0 || b > a) throw ValidationError("q_binom: need 0 <= b <= a");
  auto q = q_fact(a).divide_exact(q_fact(b) * q_fact(a - b));
  return *q;  // Gaussian binomials are polynomials
}

}  // namespace dycktile

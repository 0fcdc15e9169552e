#pragma once

#include <map>
#include <optional>
#include <string>

#include "dycktile/exact.hpp"

namespace dycktile {

/// Finitely supported Laurent polynomial in q with integer coefficients and
/// half-integer exponents. Exponents are stored doubled.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  QPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  /// q^e.
  static QPoly q(int e = 1);
  /// q^(twice_e / 2).
  static QPoly q_half(int twice_e);

  bool is_zero() const { return terms_.empty(); }
  bool has_half_exponents() const;
  /// Coefficient of q^(twice_e / 2).
  Integer coeff_half(int twice_e) const;
  Integer coeff(int e) const { return coeff_half(2 * e); }
  const std::map<int, Integer>& doubled_terms() const { return terms_; }
  /// Lowest and highest doubled exponents; undefined for zero.
  int min_doubled() const { return terms_.begin()->first; }
  int max_doubled() const { return terms_.rbegin()->first; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

  /// Exact value at an integer q != 0 (integer exponents only).
  Rational evaluate(const Integer& q) const;
  /// Value at q = -1 (integer exponents only).
  Integer at_minus_one() const;
  /// Sum of coefficients (value at q = 1, valid for half exponents too).
  Integer at_one() const;

  /// q -> q^{1/2}. Requires every exponent to be an integer.
  QPoly substitute_sqrt() const;
  /// q -> q^{-2}.
  QPoly substitute_inverse_square() const;
  /// q -> q^{-1}.
  QPoly substitute_inverse() const;
  /// Multiply by q^(twice_e / 2).
  QPoly shifted_half(int twice_e) const;

  /// Exact quotient if divisor divides this (integer exponents only).
  std::optional<QPoly> divide_exact(const QPoly& divisor) const;

  /// "1 + 2q + 3q^2", "q^(1/2)", "-q^-2".
  std::string str() const;

 private:
  void add_term(int doubled, const Integer& c);
  std::map<int, Integer> terms_;
};

/// 1 + q + ... + q^(n-1); 0_q == 0.
QPoly q_int(int n);
/// n_q (n-1)_q ... 1_q; 0!_q == 1.
QPoly q_fact(int n);
/// Gaussian binomial [a choose b]_q.
QPoly q_binom(int a, int b);

}  // namespace dycktile

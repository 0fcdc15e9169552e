#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dycktile {

using Integer = mpz_class;
using Rational = mpq_class;
using HighFloat = boost::multiprecision::mpfr_float;

/// Sets the working precision (decimal digits) of HighFloat for the calling
/// thread. Default is 64.
void set_float_digits(unsigned digits);
unsigned float_digits();

/// Parses "3", "-3/4", "0.125", "1e-3" exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const HighFloat& x, unsigned digits);

template <typename T>
T from_integer(const Integer& z);
template <>
inline Rational from_integer<Rational>(const Integer& z) { return Rational(z); }
template <>
inline HighFloat from_integer<HighFloat>(const Integer& z) { return HighFloat(z.get_str()); }

template <typename T>
using DenseMatrix = std::vector<std::vector<T>>;

namespace detail {
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const HighFloat& v) { return v == 0; }
inline bool better_pivot(const Rational& cand, const Rational& best) {
  return is_zero(best) && !is_zero(cand);
}
inline bool better_pivot(const HighFloat& cand, const HighFloat& best) {
  return abs(cand) > abs(best);
}
}  // namespace detail

/// Determinant by Gaussian elimination over a field. Exact for Rational;
/// partial pivoting for HighFloat.
template <typename T>
T determinant(DenseMatrix<T> a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (detail::better_pivot(a[r][col], a[piv][col])) piv = r;
    if (detail::is_zero(a[piv][col])) return T(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::is_zero(a[r][col])) continue;
      T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace dycktile

// Copyright 2026 The freecurrents Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic. All table values, weights and kernel computations use
// GMP rationals; nothing in the library rounds through floating point.

#ifndef FREECURRENTS_RATIONAL_HPP_
#define FREECURRENTS_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "freecurrents/error.hpp"

namespace freecurrents {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Fixed-point rendering for human-facing reports only.
inline std::string to_decimal(const Rational& q, int digits = 6) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer whole = scaled.get_num() / scaled.get_den();
  std::string s = whole.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(q) < 0 && whole != 0 ? "-" : "") + s;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw FormatError("malformed integer '" + std::string(s) + "'");
  }
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace detail

// Accepts "p/q", "p", and decimal notation ("0.25", "-1.5e-3"). Decimals are
// converted exactly; callers that want bounded denominators apply
// best_approximation afterwards.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = detail::parse_integer(text.substr(0, slash));
    Integer q = detail::parse_integer(text.substr(slash + 1));
    if (q == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer ex = detail::parse_integer(text.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 4096) {
      throw FormatError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = ex.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw FormatError("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!detail::all_digits(mantissa)) {
      throw FormatError("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(mantissa);
  }
  Integer n(digits, 10);
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(n, pow10) : Rational(n * pow10);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

// Closest rational to x whose denominator does not exceed max_denominator
// (continued-fraction convergents plus the best semiconvergent).
inline Rational best_approximation(Rational x, const Integer& max_denominator) {
  if (max_denominator < 1) throw DomainError("denominator bound must be positive");
  x.canonicalize();
  if (x.get_den() <= max_denominator) return x;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = x.get_num(), d = x.get_den();
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Integer rem = n - a * d;
    n = d;
    d = rem;
  }
  Integer k = (max_denominator - q0) / q1;
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  return abs(conv - x) <= abs(semi - x) ? conv : semi;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace freecurrents

#endif  // FREECURRENTS_RATIONAL_HPP_

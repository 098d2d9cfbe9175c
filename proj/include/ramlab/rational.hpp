/**
 * @file ramlab/rational.hpp
 * @brief Exact rationals and their "num/den" text form.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramlab {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
/// Always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return den < 0 ? Rat(Int(-num), Int(-den)) : Rat(Int(num), Int(den));
}

inline Int numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator_of(q) == 1; }

/// "num/den", with the denominator omitted when it is 1.
inline std::string to_string(const Rat& q) {
  const Int den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

namespace detail {
inline Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
  Int v(std::string(s.substr(i)));
  return s[0] == '-' ? Int(-v) : v;
}
}  // namespace detail

/// Parses "a", "-a" or "a/b" (b != 0); the result is canonicalized.
inline Rat parse_rat(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(detail::parse_int(s));
  const Int num = detail::parse_int(s.substr(0, slash));
  const Int den = detail::parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return den < 0 ? Rat(Int(-num), Int(-den)) : Rat(num, den);
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Exponent of the prime p in n > 0.
inline int padic_order(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("padic_order of 0");
  if (n < 0) n = -n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace ramlab

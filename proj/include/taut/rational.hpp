#ifndef TAUT_RATIONAL_HPP
#define TAUT_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

/// Arbitrary precision rational, always kept in canonical reduced form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Prints `p/q`, or `p` when the denominator is one.
inline std::string to_string(const Rational &q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses `p`, `-p`, `p/q`. Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text)
{
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_int(num, true)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Rational q;
  std::string n(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) {
    q = Rational(Integer(n));
    return q;
  }
  const auto den = text.substr(slash + 1);
  if (!is_int(den, false)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q = Rational(Integer(n), d);
  q.canonicalize();
  return q;
}

/// n! from a per-thread table that grows to the largest n requested.
inline const Integer &factorial(unsigned n)
{
  thread_local std::vector<Integer> table{Integer(1)};
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[n];
}

inline Integer binomial(unsigned n, unsigned k)
{
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace taut

#endif // TAUT_RATIONAL_HPP

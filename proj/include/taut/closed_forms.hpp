#ifndef TAUT_CLOSED_FORMS_HPP
#define TAUT_CLOSED_FORMS_HPP

#include "rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace taut {

/// [b] = (sum b_i)! / prod b_i!, and 0 if any entry is negative.
inline Integer multinomial(std::span<const long> b)
{
  long total = 0;
  for (long x : b) {
    if (x < 0) return 0;
    total += x;
  }
  Integer r = factorial(static_cast<unsigned>(total));
  for (long x : b) r /= factorial(static_cast<unsigned>(x));
  return r;
}

/// Genus zero psi numbers <tau_{b_1} ... tau_{b_n}>_0 = [b]; zero off dimension.
inline Rational psi_multinomial_g0(std::span<const unsigned> b)
{
  if (b.size() < 3) throw std::invalid_argument("genus zero needs at least three points");
  long total = 0;
  std::vector<long> v;
  v.reserve(b.size());
  for (unsigned x : b) {
    total += x;
    v.push_back(x);
  }
  if (total != static_cast<long>(b.size()) - 3) return 0;
  return Rational(multinomial(v));
}

/// f_k(b) = <tau_0^{||b||-k} tau_{b_1} ... tau_{b_k}>_1 for b_i >= 1, as the
/// signed sum over 0/1 vectors eps with at least two ones of (||eps||-2)! [b - eps].
inline Rational psi_closed_g1(std::span<const unsigned> b)
{
  const std::size_t k = b.size();
  if (k == 0) throw std::invalid_argument("psi_closed_g1 needs at least one argument");
  if (k >= 30) throw std::invalid_argument("psi_closed_g1: too many arguments");
  for (unsigned x : b)
    if (x < 1) throw std::invalid_argument("psi_closed_g1 arguments must be >= 1");

  std::vector<long> shifted(k);
  for (std::size_t i = 0; i < k; ++i) shifted[i] = b[i];
  Integer correction = 0;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    const int ones = __builtin_popcountl(mask);
    if (ones < 2) continue;
    for (std::size_t i = 0; i < k; ++i) shifted[i] = static_cast<long>(b[i]) - ((mask >> i) & 1ul);
    correction += factorial(static_cast<unsigned>(ones - 2)) * multinomial(shifted);
  }
  for (std::size_t i = 0; i < k; ++i) shifted[i] = b[i];
  Rational r(multinomial(shifted) - correction, 24);
  r.canonicalize();
  return r;
}

} // namespace taut

#endif // TAUT_CLOSED_FORMS_HPP

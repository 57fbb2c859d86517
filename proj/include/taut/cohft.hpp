#ifndef TAUT_COHFT_HPP
#define TAUT_COHFT_HPP

#include "evaluator.hpp"
#include "series.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

/// Coordinates (s, u) of a rank one restricted CohFT. Zero entries of s are
/// never stored, so equal points compare equal.
struct CohftPoint {
  std::map<unsigned, Rational> s;
  Rational u = 0;

  CohftPoint() = default;
  CohftPoint(std::map<unsigned, Rational> s_, Rational u_) : s(std::move(s_)), u(std::move(u_)) { normalize(); }

  void normalize()
  {
    std::erase_if(s, [](const auto &e) { return e.second == 0; });
    if (s.count(0)) throw std::invalid_argument("s coordinates start at index 1");
  }

  Rational s_at(unsigned i) const
  {
    auto it = s.find(i);
    return it == s.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const CohftPoint &, const CohftPoint &) = default;
};

/// Tensor product of theories: the coordinates add.
inline CohftPoint tensor(const CohftPoint &a, const CohftPoint &b)
{
  CohftPoint r = a;
  for (const auto &[i, v] : b.s) r.s[i] += v;
  r.u += b.u;
  r.normalize();
  return r;
}

/// Parses "1=1/2,2=0" into an s map; an empty string is the zero map.
inline std::map<unsigned, Rational> parse_s_coordinates(std::string_view text)
{
  std::map<unsigned, Rational> s;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw std::invalid_argument("expected index=value, got '" + std::string(item) + "'");
    const auto idx = std::string(item.substr(0, eq));
    if (idx.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("bad index '" + idx + "'");
    const unsigned long i = std::stoul(idx);
    if (i == 0) throw std::invalid_argument("s coordinates start at index 1");
    s[static_cast<unsigned>(i)] += parse_rational(item.substr(eq + 1));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return s;
}

/// Phi_g = sum_n I_{g,n} x^n / n!, both exact through x^order.
struct PotentialPair {
  TruncatedSeries phi0;
  TruncatedSeries phi1;
  unsigned order;
};

namespace detail {

/// Calls visit(p, s^p / p!) for every p supported on the point's s indices with |p| = weight.
inline void for_each_kappa_weight(const CohftPoint &pt, unsigned weight,
                                  const std::function<void(const MultiIndex &, const Rational &)> &visit)
{
  std::vector<std::pair<unsigned, Rational>> support(pt.s.begin(), pt.s.end());
  std::function<void(std::size_t, unsigned, MultiIndex, Rational)> rec = [&](std::size_t pos, unsigned left, MultiIndex p,
                                                                             Rational w) {
    if (left == 0) {
      visit(p, w);
      return;
    }
    if (pos == support.size()) return;
    const auto &[index, value] = support[pos];
    Rational power = 1;
    for (unsigned c = 0; c * index <= left; ++c) {
      rec(pos + 1, left - c * index, c == 0 ? p : p.plus(index, c), w * power / Rational(factorial(c)));
      power *= value;
    }
  };
  rec(0, weight, MultiIndex(IndexKind::S1), 1);
}

inline TruncatedSeries x_series(unsigned order) { return TruncatedSeries({"x"}, order); }

} // namespace detail

/// Potentials of the theory at `point`:
///   I_{0,n} = sum_{|p|=n-3} s^p/p! <tau_0^n kappa^p>_0
///   I_{1,n} = sum_{|p|=n} s^p/p! <tau_0^n kappa^p>_1 + u sum_{|p|=n-1} s^p/p! <tau_0^n kappa^p lambda_1>_1
inline PotentialPair potential_from_point(Evaluator &ev, const CohftPoint &point, unsigned order)
{
  if (order < 3) throw std::invalid_argument("potential order must be at least 3");
  PotentialPair pair{detail::x_series(order), detail::x_series(order), order};
  const auto tau0 = [](unsigned n) { return MultiIndex::unit(IndexKind::S0, 0, n); };
  for (unsigned n = 3; n <= order; ++n) {
    Rational i0 = 0;
    detail::for_each_kappa_weight(point, n - 3, [&](const MultiIndex &p, const Rational &w) { i0 += w * ev.bracket(0, tau0(n), p); });
    pair.phi0.set({n}, i0 / Rational(factorial(n)));
  }
  for (unsigned n = 1; n <= order; ++n) {
    Rational i1 = 0;
    detail::for_each_kappa_weight(point, n, [&](const MultiIndex &p, const Rational &w) { i1 += w * ev.bracket(1, tau0(n), p); });
    if (point.u != 0)
      detail::for_each_kappa_weight(point, n - 1, [&](const MultiIndex &p, const Rational &w) {
        i1 += point.u * w * ev.lambda_bracket(p, 1, static_cast<int>(n), 1);
      });
    pair.phi1.set({n}, i1 / Rational(factorial(n)));
  }
  return pair;
}

/// I_{g,n}: n! times the coefficient of x^n.
inline Rational potential_coefficient(const TruncatedSeries &phi, unsigned n)
{
  return phi.coefficient({n}) * Rational(factorial(n));
}

inline TruncatedSeries nth_derivative(TruncatedSeries f, unsigned k)
{
  for (unsigned i = 0; i < k; ++i) f = partial(f, std::size_t{0});
  return f;
}

/// -(P3)^2 Q2 + P3 P4 Q1 - (1/12) P4^2 + (1/24) P3 P5 with P_k = Phi_0^{(k)},
/// Q_k = Phi_1^{(k)}; exact to order - 5.
inline TruncatedSeries check_getzler(const PotentialPair &pair)
{
  if (pair.order < 5) throw std::invalid_argument("the genus one equation needs order >= 5");
  const auto p3 = nth_derivative(pair.phi0, 3), p4 = nth_derivative(pair.phi0, 4), p5 = nth_derivative(pair.phi0, 5);
  const auto q1 = nth_derivative(pair.phi1, 1), q2 = nth_derivative(pair.phi1, 2);
  auto r = -(p3 * p3 * q2) + p3 * p4 * q1 - p4 * p4 * Rational(1, 12) + p3 * p5 * Rational(1, 24);
  return r.truncated(pair.order - 5);
}

/// Phi_1 = (1/24) log(Phi_0''' / I_{0,3}) + B Phi_0'' with B fixed by
///   I_{1,1} = (1/24) I_{0,4} / I_{0,3} + B I_{0,3}.
/// Dividing by I_{0,3} only shifts Phi_1 by a constant and keeps it rational.
/// With I_{0,3} = 0 the only allowed genus zero part is Phi_0 = 0, and Phi_1 is
/// unconstrained; the pair (0, I_{1,1} x) is returned.
inline PotentialPair genus_one_from_genus_zero(const TruncatedSeries &phi0, const Rational &i11)
{
  if (phi0.variables().size() != 1) throw std::invalid_argument("potentials are series in one variable");
  const unsigned order = phi0.max_degree();
  if (order < 4) throw std::invalid_argument("potential order must be at least 4");
  const Rational i03 = potential_coefficient(phi0, 3);
  PotentialPair pair{phi0, TruncatedSeries(phi0.variables(), order), order};
  if (i03 == 0) {
    if (!phi0.is_zero()) throw std::invalid_argument("I_{0,3} = 0 forces Phi_0 = 0");
    pair.phi1.set({1}, i11);
    return pair;
  }
  const Rational i04 = potential_coefficient(phi0, 4);
  const Rational b = (i11 - Rational(1, 24) * i04 / i03) / i03;
  // the log series is exact to order - 3; only derivatives of Phi_1 up to the
  // second enter the genus one equation, which is then exact to order - 5
  auto normalized = nth_derivative(phi0, 3) * (Rational(1) / i03);
  auto lg = log(normalized) * Rational(1, 24);
  auto second = nth_derivative(phi0, 2) * b;
  TruncatedSeries phi1(phi0.variables(), order);
  for (const auto &[e, c] : lg.terms()) phi1.add(e, c);
  for (const auto &[e, c] : second.terms()) phi1.add(e, c);
  pair.phi1 = phi1.truncated(order - 3);
  pair.order = order;
  return pair;
}

} // namespace taut

#endif // TAUT_COHFT_HPP

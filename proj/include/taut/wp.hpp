#ifndef TAUT_WP_HPP
#define TAUT_WP_HPP

#include "evaluator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace taut {

/// w_{g,n} = integral of kappa_1^{3g-3+n} over M_{g,n}.
inline Rational wp_volume(Evaluator &ev, int g, int n)
{
  if (g != 0 && g != 1) throw unsupported_genus(g);
  if (n < 0 || !is_stable(g, n)) throw unstable_key("w_{" + std::to_string(g) + "," + std::to_string(n) + "} is unstable");
  return ev.kappa_bracket(MultiIndex::unit(IndexKind::S1, 1, static_cast<unsigned>(3 * g - 3 + n)), g);
}

/// Natural logarithm of a positive integer of any size.
inline double log_integer(const Integer &z)
{
  if (z <= 0) throw std::domain_error("log of a non-positive integer");
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

inline double log_rational(const Rational &q) { return log_integer(q.get_num()) - log_integer(q.get_den()); }

/// J_0 and J_1 from their power series.
inline double bessel_j0(double x)
{
  const double y = -(x / 2) * (x / 2);
  double term = 1, sum = 1;
  for (int k = 1; k < 200 && std::abs(term) >= 1e-20; ++k) {
    term *= y / (static_cast<double>(k) * k);
    sum += term;
  }
  return sum;
}

inline double bessel_j1(double x)
{
  const double y = -(x / 2) * (x / 2);
  double term = x / 2, sum = term;
  for (int k = 1; k < 200 && std::abs(term) >= 1e-20; ++k) {
    term *= y / (static_cast<double>(k) * (k + 1));
    sum += term;
  }
  return sum;
}

struct BesselConstants {
  double gamma0; // smallest positive zero of J_0
  double C;      // -2 gamma0 J_0'(gamma0) = 2 gamma0 J_1(gamma0)
};

inline BesselConstants bessel_constants()
{
  double lo = 2, hi = 3;
  for (int i = 0; i < 20; ++i) {
    const double mid = (lo + hi) / 2;
    (bessel_j0(lo) * bessel_j0(mid) <= 0 ? hi : lo) = mid;
  }
  double x = (lo + hi) / 2;
  for (int i = 0; i < 50; ++i) {
    const double step = bessel_j0(x) / -bessel_j1(x);
    x -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return {x, 2 * x * bessel_j1(x)};
}

/// ln of the leading asymptotic term for w_{g,n}; NaN where it is undefined.
///   genus 0, k = n - 3: gamma0 2^{3/2} / (C sqrt(pi)) 2^{2k} k^{2k+1/2} / (C^k e^{2k})
///   genus 1:            (pi/24) (2n)^{2n} / (C^n e^{2n})
inline double log_asymptote(int g, int n, const BesselConstants &bc)
{
  using std::log;
  const double pi = std::numbers::pi;
  if (g == 1) {
    if (n < 1) return std::numeric_limits<double>::quiet_NaN();
    const double dn = n;
    return log(pi / 24) + 2 * dn * log(2 * dn) - dn * log(bc.C) - 2 * dn;
  }
  const double k = n - 3;
  if (k < 1) return std::numeric_limits<double>::quiet_NaN();
  return log(bc.gamma0 * std::pow(2.0, 1.5) / (bc.C * std::sqrt(pi))) + 2 * k * std::numbers::ln2 + (2 * k + 0.5) * log(k) -
         k * log(bc.C) - 2 * k;
}

struct VolumeRow {
  int n;
  Rational w;
  double asymptote; // exp(log_asymptote), may be inf for display
  double ratio;     // w / asymptote, computed in log space
};

/// Rows for every stable n <= n_max.
inline std::vector<VolumeRow> asymptotic_ratio_table(Evaluator &ev, int g, int n_max, const BesselConstants &bc = bessel_constants())
{
  std::vector<VolumeRow> rows;
  for (int n = g == 0 ? 3 : 1; n <= n_max; ++n) {
    VolumeRow row{n, wp_volume(ev, g, n), 0, 0};
    const double la = log_asymptote(g, n, bc);
    row.asymptote = std::exp(la);
    row.ratio = std::isnan(la) ? la : std::exp(log_rational(row.w) - la);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace taut

#endif // TAUT_WP_HPP

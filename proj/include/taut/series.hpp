#ifndef TAUT_SERIES_HPP
#define TAUT_SERIES_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace taut {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded lexicographic order: lower total degree first, then earlier
/// variables with higher powers first (t0^2 before t0 t1 before t1^2).
struct GradedLex {
  bool operator()(const Exponents &a, const Exponents &b) const
  {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Multivariate polynomial over exact rationals, known exactly up to total
/// degree max_degree (every variable has degree one). Nothing above
/// max_degree is stored and no stored coefficient is zero.
class TruncatedSeries {
public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  TruncatedSeries(std::vector<std::string> variables, unsigned max_degree)
      : variables_(std::move(variables)), max_degree_(max_degree)
  {
  }

  static TruncatedSeries constant(std::vector<std::string> variables, unsigned max_degree, const Rational &c)
  {
    TruncatedSeries s(std::move(variables), max_degree);
    s.set(Exponents(s.variables_.size(), 0), c);
    return s;
  }

  static TruncatedSeries variable(std::vector<std::string> variables, unsigned max_degree, std::string_view name)
  {
    TruncatedSeries s(std::move(variables), max_degree);
    Exponents e(s.variables_.size(), 0);
    e[s.variable_index(name)] = 1;
    s.set(std::move(e), 1);
    return s;
  }

  const std::vector<std::string> &variables() const { return variables_; }
  unsigned max_degree() const { return max_degree_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t variable_index(std::string_view name) const
  {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - variables_.begin());
  }

  Rational coefficient(const Exponents &e) const
  {
    check_arity(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponents(variables_.size(), 0)); }

  /// Terms above max_degree are dropped.
  void set(Exponents e, const Rational &c)
  {
    check_arity(e);
    if (total_degree(e) > max_degree_) return;
    if (c == 0)
      terms_.erase(e);
    else
      terms_[std::move(e)] = c;
  }

  void add(const Exponents &e, const Rational &c)
  {
    check_arity(e);
    if (c == 0 || total_degree(e) > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Keeps only the terms of degree <= d and lowers max_degree to d.
  TruncatedSeries truncated(unsigned d) const
  {
    TruncatedSeries r(variables_, std::min(d, max_degree_));
    for (const auto &[e, c] : terms_)
      if (total_degree(e) <= r.max_degree_) r.terms_.emplace(e, c);
    return r;
  }

  TruncatedSeries &operator+=(const TruncatedSeries &o)
  {
    check_compatible(o);
    *this = truncated(o.max_degree_);
    for (const auto &[e, c] : o.terms_) add(e, c);
    return *this;
  }
  TruncatedSeries &operator-=(const TruncatedSeries &o)
  {
    check_compatible(o);
    *this = truncated(o.max_degree_);
    for (const auto &[e, c] : o.terms_) add(e, -c);
    return *this;
  }
  TruncatedSeries &operator*=(const Rational &k)
  {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &[e, c] : terms_) c *= k;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational &k) { return a *= k; }
  friend TruncatedSeries operator*(const Rational &k, TruncatedSeries a) { return a *= k; }

  friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
  {
    a.check_compatible(b);
    TruncatedSeries r(a.variables_, std::min(a.max_degree_, b.max_degree_));
    Exponents e(a.variables_.size());
    for (const auto &[ea, ca] : a.terms_) {
      const unsigned da = total_degree(ea);
      if (da > r.max_degree_) break; // terms are ordered by degree
      for (const auto &[eb, cb] : b.terms_) {
        if (da + total_degree(eb) > r.max_degree_) break;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
  {
    return a.variables_ == b.variables_ && a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

  void check_compatible(const TruncatedSeries &o) const
  {
    if (variables_ != o.variables_) throw std::invalid_argument("series over different variables");
  }

private:
  void check_arity(const Exponents &e) const
  {
    if (e.size() != variables_.size()) throw std::invalid_argument("exponent vector has the wrong length");
  }

  std::vector<std::string> variables_;
  unsigned max_degree_;
  Terms terms_;
};

/// Partial derivative; the result is exact to one degree less.
inline TruncatedSeries partial(const TruncatedSeries &f, std::size_t var)
{
  if (var >= f.variables().size()) throw std::invalid_argument("variable index out of range");
  TruncatedSeries r(f.variables(), f.max_degree() == 0 ? 0 : f.max_degree() - 1);
  for (const auto &[e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add(d, c * e[var]);
  }
  return r;
}

inline TruncatedSeries partial(const TruncatedSeries &f, std::string_view name)
{
  return partial(f, f.variable_index(name));
}

/// exp(f) for f with zero constant term.
inline TruncatedSeries exp(const TruncatedSeries &f)
{
  if (f.constant_term() != 0) throw std::invalid_argument("exp needs a series with zero constant term");
  auto result = TruncatedSeries::constant(f.variables(), f.max_degree(), 1);
  auto power = result;
  for (unsigned k = 1; k <= f.max_degree(); ++k) {
    power = power * f;
    power *= Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

/// log(f) for f with constant term 1, as the series of log(1 + g).
inline TruncatedSeries log(const TruncatedSeries &f)
{
  if (f.constant_term() != 1) throw std::invalid_argument("log needs a series with constant term 1");
  const auto one = TruncatedSeries::constant(f.variables(), f.max_degree(), 1);
  const auto g = f - one;
  TruncatedSeries result(f.variables(), f.max_degree());
  auto power = one;
  for (unsigned k = 1; k <= f.max_degree(); ++k) {
    power = power * g;
    if (power.is_zero()) break;
    const Rational w(k % 2 == 1 ? 1 : -1, k);
    result += power * w;
  }
  return result;
}

} // namespace taut

#endif // TAUT_SERIES_HPP

#ifndef TAUT_IDENTITIES_HPP
#define TAUT_IDENTITIES_HPP

#include "evaluator.hpp"
#include "series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace taut {

/// Variable window of a generating function: t_0..t_{t_max}, s_1..s_{s_max},
/// total degree <= degree.
struct SeriesBounds {
  unsigned t_max = 3;
  unsigned s_max = 3;
  unsigned degree = 6;

  std::vector<std::string> variables() const
  {
    std::vector<std::string> v;
    for (unsigned i = 0; i <= t_max; ++i) v.push_back("t" + std::to_string(i));
    for (unsigned i = 1; i <= s_max; ++i) v.push_back("s" + std::to_string(i));
    return v;
  }

  MultiIndex tau_part(const Exponents &e) const
  {
    MultiIndex m(IndexKind::S0);
    for (unsigned i = 0; i <= t_max; ++i) m.add(i, e[i]);
    return m;
  }
  MultiIndex kappa_part(const Exponents &e) const
  {
    MultiIndex p(IndexKind::S1);
    for (unsigned i = 1; i <= s_max; ++i) p.add(i, e[t_max + i]);
    return p;
  }
  Exponents exponents(const MultiIndex &m, const MultiIndex &p) const
  {
    Exponents e(t_max + 1 + s_max, 0);
    for (const auto &[i, c] : m.entries()) e.at(i) = c;
    for (const auto &[i, c] : p.entries()) e.at(t_max + i) = c;
    return e;
  }
  bool contains(const MultiIndex &m, const MultiIndex &p) const
  {
    if (m.max_index().value_or(0) > t_max || p.max_index().value_or(0) > s_max) return false;
    return m.count() + p.count() <= static_cast<long>(degree);
  }

  /// Calls visit(e) for every exponent vector in the window.
  void for_each_monomial(const std::function<void(const Exponents &)> &visit) const
  {
    Exponents e(t_max + 1 + s_max, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
      if (pos == e.size()) {
        visit(e);
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[pos] = k;
        rec(pos + 1, left - k);
      }
      e[pos] = 0;
    };
    rec(0, degree);
  }
};

/// Outcome of an identity check over a finite set of coefficients.
struct CheckReport {
  explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
  Rational max_discrepancy = 0;

  bool ok() const { return failures == 0; }

  void record(const Rational &discrepancy, const std::function<std::string()> &describe)
  {
    ++checked;
    if (discrepancy == 0) return;
    ++failures;
    const Rational a = abs(discrepancy);
    if (a > max_discrepancy) max_discrepancy = a;
    if (!first_counterexample) first_counterexample = describe();
  }
};

inline std::string describe_monomial(const SeriesBounds &b, const Exponents &e)
{
  std::string s;
  const auto vars = b.variables();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

/// Coefficient of t^m s^p in H_g, i.e. <tau^m kappa^p>_g / (m! p!).
inline Rational h_coefficient(Evaluator &ev, int g, const MultiIndex &m, const MultiIndex &p)
{
  Rational v = ev.value_or_zero(g, m, p);
  if (v == 0) return v;
  return v / Rational(weight_stats(m).factorial_product * weight_stats(p).factorial_product);
}

/// H_g restricted to the window, one evaluator call per coefficient.
inline TruncatedSeries build_H(Evaluator &ev, int g, const SeriesBounds &b)
{
  if (g != 0 && g != 1) throw unsupported_genus(g);
  TruncatedSeries h(b.variables(), b.degree);
  b.for_each_monomial([&](const Exponents &e) {
    const MultiIndex m = b.tau_part(e);
    const MultiIndex p = b.kappa_part(e);
    if (!dimension_matches(g, m, p)) return;
    h.set(e, h_coefficient(ev, g, m, p));
  });
  return h;
}

/// Every stored monomial t^m s^p of H_g must satisfy
///   3(1-g) + sum (i-1) m_i + sum i p_i = 0.
inline CheckReport check_charge(Evaluator &ev, int g, const SeriesBounds &b)
{
  CheckReport r{"charge conservation, genus " + std::to_string(g)};
  const auto h = build_H(ev, g, b);
  for (const auto &[e, c] : h.terms()) {
    const MultiIndex m = b.tau_part(e), p = b.kappa_part(e);
    const long charge = 3 * (1 - g) + (m.weighted_degree() - m.count()) + p.weighted_degree();
    r.record(charge, [&] { return describe_monomial(b, e) + " has charge " + std::to_string(charge); });
  }
  return r;
}

/// H_1 = (1/24) log d_0^3 H_0, coefficientwise inside the window.
inline CheckReport check_genus_one_relation(Evaluator &ev, const SeriesBounds &b)
{
  if (b.degree < 1) throw std::invalid_argument("genus one relation needs degree >= 1");
  CheckReport r{"H1 = (1/24) log d0^3 H0"};
  const auto lhs = build_H(ev, 1, b);
  SeriesBounds wide = b;
  wide.degree = b.degree + 3;
  auto d3 = build_H(ev, 0, wide);
  for (int i = 0; i < 3; ++i) d3 = partial(d3, std::size_t{0});
  const auto rhs = log(d3) * Rational(1, 24);
  b.for_each_monomial([&](const Exponents &e) {
    const Rational l = lhs.coefficient(e), rr = rhs.coefficient(e);
    r.record(l - rr, [&] {
      return describe_monomial(b, e) + ": H1 has " + to_string(l) + ", log side has " + to_string(rr);
    });
  });
  return r;
}

/// One of the three annihilating operators of exp(H_g):
///   first  : -d_0 + sum_{|j|>=2} s^j/j! D_{|j|-1} + sum t_i d_{i-1}
///            + s_1 (sum (2i+1)/3 t_i d_i + sum 2i/3 s_i D_i) + t_0^2/2 [g=0] + s_1/24 [g=1]
///   second : -d_1 + sum_{|j|>=1} s^j/j! D_{|j|} + (sum (2i+1)/3 t_i d_i + sum 2i/3 s_i D_i) + 1/24 [g=1]
///   higher : -d_a + sum_j s^j/j! D_{|j|+a-1},  a >= 2
/// where d_i = d/dt_i, D_i = d/ds_i, and d_{-1} = 0.
struct Annihilator {
  enum class Kind { First, Second, Higher };
  Kind kind = Kind::First;
  unsigned a = 0; // only for Higher

  std::string name() const
  {
    switch (kind) {
    case Kind::First: return "first operator (puncture)";
    case Kind::Second: return "second operator (dilaton)";
    case Kind::Higher: return "operator a=" + std::to_string(a);
    }
    return {};
  }
};

/// The constant terms of the first two operators; switch them off for mutation tests.
struct AnnihilatorConstants {
  bool genus0_term = true;
  bool genus1_term = true;
};

/// Coefficient of t^m s^p in V(H_g) + c, where the operator is the vector
/// field V plus the multiplication c. Since V is a derivation,
/// L exp(H_g) = exp(H_g) (V(H_g) + c), so exp(H_g) is annihilated exactly when
/// this vanishes. Every H coefficient comes from the evaluator, including
/// D_k with k outside the window.
inline Rational annihilator_coefficient(Evaluator &ev, int g, const Annihilator &op, const MultiIndex &m,
                                        const MultiIndex &p, AnnihilatorConstants constants = {})
{
  auto h = [&](const MultiIndex &mm, const MultiIndex &pp) -> Rational { return h_coefficient(ev, g, mm, pp); };
  // [d_i H] at (mm, pp)
  auto dt = [&](unsigned i, const MultiIndex &mm, const MultiIndex &pp) -> Rational {
    return Rational(mm[i] + 1) * h(mm.plus(i), pp);
  };
  // [D_i H] at (mm, pp)
  auto ds = [&](unsigned i, const MultiIndex &mm, const MultiIndex &pp) -> Rational {
    return Rational(pp[i] + 1) * h(mm, pp.plus(i));
  };
  // eigenvalue of sum (2i+1)/3 t_i d_i + sum 2i/3 s_i D_i on t^mm s^pp
  auto kappa0_scalar = [](const MultiIndex &mm, const MultiIndex &pp) -> Rational {
    return Rational(2 * mm.weighted_degree() + mm.count() + 2 * pp.weighted_degree(), 3);
  };
  auto inverse_factorial = [](const MultiIndex &j) -> Rational { return Rational(1) / Rational(weight_stats(j).factorial_product); };

  Rational r = 0;
  switch (op.kind) {
  case Annihilator::Kind::First: {
    r -= dt(0, m, p);
    for_each_split(p, [&](const Split &js) {
      const long w = js.first.weighted_degree();
      if (w >= 2) r += inverse_factorial(js.first) * ds(static_cast<unsigned>(w - 1), m, js.second);
    });
    for (const auto &[i, c] : m.entries())
      if (i >= 1) r += dt(i - 1, m.minus(i), p);
    if (p[1] >= 1) {
      const auto q = p.minus(1);
      r += kappa0_scalar(m, q) * h(m, q);
    }
    if (g == 0 && constants.genus0_term && m == MultiIndex::unit(IndexKind::S0, 0, 2) && p.empty()) r += Rational(1, 2);
    if (g == 1 && constants.genus1_term && m.empty() && p == MultiIndex::unit(IndexKind::S1, 1)) r += Rational(1, 24);
    break;
  }
  case Annihilator::Kind::Second: {
    r -= dt(1, m, p);
    for_each_split(p, [&](const Split &js) {
      const long w = js.first.weighted_degree();
      if (w >= 1) r += inverse_factorial(js.first) * ds(static_cast<unsigned>(w), m, js.second);
    });
    r += kappa0_scalar(m, p) * h(m, p);
    if (g == 1 && constants.genus1_term && m.empty() && p.empty()) r += Rational(1, 24);
    break;
  }
  case Annihilator::Kind::Higher: {
    if (op.a < 2) throw std::invalid_argument("the higher operators need a >= 2");
    r -= dt(op.a, m, p);
    for_each_split(p, [&](const Split &js) {
      const long w = js.first.weighted_degree() + op.a - 1;
      r += inverse_factorial(js.first) * ds(static_cast<unsigned>(w), m, js.second);
    });
    break;
  }
  }
  return r;
}

/// V(H_g) + c as a series over the window.
inline TruncatedSeries annihilator_residual(Evaluator &ev, int g, const Annihilator &op, const SeriesBounds &b,
                                            AnnihilatorConstants constants = {})
{
  TruncatedSeries r(b.variables(), b.degree);
  b.for_each_monomial([&](const Exponents &e) {
    r.set(e, annihilator_coefficient(ev, g, op, b.tau_part(e), b.kappa_part(e), constants));
  });
  return r;
}

/// The default operator list: first, second, and a = 2..max(2, t_max + 1).
inline std::vector<Annihilator> default_annihilators(const SeriesBounds &b)
{
  std::vector<Annihilator> ops{{Annihilator::Kind::First, 0}, {Annihilator::Kind::Second, 0}};
  for (unsigned a = 2; a <= std::max(2u, b.t_max + 1); ++a) ops.push_back({Annihilator::Kind::Higher, a});
  return ops;
}

inline std::vector<CheckReport> check_annihilators(Evaluator &ev, int g, const SeriesBounds &b,
                                                   AnnihilatorConstants constants = {})
{
  std::vector<CheckReport> out;
  for (const auto &op : default_annihilators(b)) {
    CheckReport r{op.name() + ", genus " + std::to_string(g)};
    b.for_each_monomial([&](const Exponents &e) {
      const Rational c = annihilator_coefficient(ev, g, op, b.tau_part(e), b.kappa_part(e), constants);
      r.record(c, [&] { return "coefficient of " + describe_monomial(b, e) + " is " + to_string(c); });
    });
    out.push_back(std::move(r));
  }
  return out;
}

/// Random sparse series with small rational coefficients.
inline TruncatedSeries random_series(std::mt19937_64 &rng, const std::vector<std::string> &vars, unsigned degree,
                                     unsigned terms)
{
  TruncatedSeries s(vars, degree);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  std::uniform_int_distribution<unsigned> var(0, static_cast<unsigned>(vars.size() - 1));
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    const unsigned d = static_cast<unsigned>(rng() % (degree + 1));
    for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    s.add(e, c);
  }
  return s;
}

/// d(fg) = df g + f dg on random series drawn from `seed`.
inline CheckReport check_product_rule(std::uint64_t seed, unsigned trials = 50)
{
  CheckReport r{"product rule"};
  std::mt19937_64 rng(seed);
  const std::vector<std::string> vars{"t0", "t1", "s1"};
  for (unsigned trial = 0; trial < trials; ++trial) {
    const auto f = random_series(rng, vars, 6, 8), g = random_series(rng, vars, 6, 8);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto lhs = partial(f * g, v);
      const auto rhs = partial(f, v) * g + f * partial(g, v);
      const auto diff = lhs - rhs;
      Rational worst = 0;
      for (const auto &[e, c] : diff.terms()) worst = std::max(worst, Rational(abs(c)));
      r.record(worst, [&] { return "trial " + std::to_string(trial) + ", variable " + vars[v]; });
    }
  }
  return r;
}

} // namespace taut

#endif // TAUT_IDENTITIES_HPP

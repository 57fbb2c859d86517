#ifndef TAUT_EVALUATOR_HPP
#define TAUT_EVALUATOR_HPP

#include "closed_forms.hpp"
#include "key.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace taut {

enum class EvalRoute { SplittingRecursion, PunctureDilaton, ClosedForm };

/// Exact evaluator for mixed psi/kappa brackets <tau^m kappa^p>_g, g = 0, 1.
///
/// Values are memoized per route and per genus. An Evaluator owns its caches
/// and is not synchronized; use one instance per thread.
///
/// kappa_0 never appears in a stored kappa index. Whenever a recursion would
/// produce kappa_0 it is replaced by the number 2g - 2 + n of the bracket it
/// multiplies.
class Evaluator {
public:
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  /// Once a cache holds `cache_ceiling` entries new values are still computed
  /// but no longer stored. Stored values are never evicted.
  explicit Evaluator(std::size_t cache_ceiling = unlimited) : ceiling_(cache_ceiling) {}

  /// Splitting recursion for genus zero (psi pivot, then kappa pivot).
  Rational eval_g0(const IntersectionKey &key)
  {
    if (key.genus() != 0) throw std::invalid_argument("eval_g0 needs a genus zero key");
    return recursion_g0(key.tau(), key.kappa());
  }

  /// Splitting recursion for genus one, using eval_g0 for the genus zero factors.
  Rational eval_g1(const IntersectionKey &key)
  {
    if (key.genus() != 1) throw std::invalid_argument("eval_g1 needs a genus one key");
    return recursion_g1(key.tau(), key.kappa());
  }

  /// Reduction by the generalized dilaton and puncture equations down to
  /// <tau_0^3>_0 = 1 and <tau_1>_1 = <tau_0 kappa_1>_1 = 1/24.
  Rational eval_puncture_dilaton(const IntersectionKey &key)
  {
    return puncture_dilaton(key.genus(), key.tau(), key.kappa());
  }

  Rational evaluate(const IntersectionKey &key, EvalRoute route = EvalRoute::SplittingRecursion)
  {
    switch (route) {
    case EvalRoute::SplittingRecursion:
      return key.genus() == 0 ? eval_g0(key) : eval_g1(key);
    case EvalRoute::PunctureDilaton:
      return eval_puncture_dilaton(key);
    case EvalRoute::ClosedForm:
      return closed_form(key);
    }
    throw std::logic_error("unknown route");
  }

  /// Bracket for arbitrary (g, m, p): zero on dimension mismatch, throws
  /// unstable_key when M_{g,n} is unstable.
  Rational bracket(int g, const MultiIndex &m, const MultiIndex &p, EvalRoute route = EvalRoute::SplittingRecursion)
  {
    auto key = require_key(g, m, p);
    if (!key) return 0;
    return evaluate(*key, route);
  }

  /// Same as bracket() but unstable spaces also give zero.
  Rational value_or_zero(int g, const MultiIndex &m, const MultiIndex &p)
  {
    if (g != 0 && g != 1) throw unsupported_genus(g);
    if (!is_stable(g, m.count()) || !dimension_matches(g, m, p)) return 0;
    return g == 0 ? recursion_g0(m, p) : recursion_g1(m, p);
  }

  /// Pure kappa bracket in the convention where n is fixed by 3g - 3 + n = |p|,
  /// i.e. <tau_0^{|p|+3-3g} kappa^p>_g.
  Rational kappa_bracket(const MultiIndex &p, int g)
  {
    if (g != 0 && g != 1) throw unsupported_genus(g);
    const long n = p.weighted_degree() + 3 - 3 * g;
    if (n < 0 || !is_stable(g, n))
      throw unstable_key("kappa bracket with |p| = " + std::to_string(p.weighted_degree()) + " in genus " +
                         std::to_string(g) + " lives on an unstable moduli space");
    return bracket(g, MultiIndex::unit(IndexKind::S0, 0, static_cast<unsigned>(n)), p);
  }

  /// <kappa^p lambda_1^r tau_0^n>_g. lambda_1 vanishes in genus zero; in
  /// genus one a single lambda_1 contributes (1/24) <kappa^p tau_0^{n+2}>_0
  /// and two or more give zero.
  Rational lambda_bracket(const MultiIndex &p, int r, int n, int g)
  {
    if (g != 0 && g != 1) throw unsupported_genus(g);
    if (r < 0 || n < 0) throw std::invalid_argument("lambda_bracket needs r >= 0 and n >= 0");
    if (!is_stable(g, n))
      throw unstable_key("M_{" + std::to_string(g) + "," + std::to_string(n) + "} is unstable");
    if (p.weighted_degree() + r != 3 * g - 3 + n) return 0;
    const auto tau0n = MultiIndex::unit(IndexKind::S0, 0, static_cast<unsigned>(n));
    if (r == 0) return bracket(g, tau0n, p);
    if (g == 0 || r >= 2) return 0;
    return Rational(1, 24) * bracket(0, tau0n.plus(0, 2), p);
  }

  std::size_t cache_size() const
  {
    std::size_t s = 0;
    for (const auto &c : recursion_cache_) s += c.size();
    for (const auto &c : pd_cache_) s += c.size();
    return s;
  }

private:
  struct PairKey {
    MultiIndex m;
    MultiIndex p;
    friend bool operator==(const PairKey &, const PairKey &) = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey &k) const { return k.m.hash() * 1000003u ^ k.p.hash(); }
  };
  using Cache = std::unordered_map<PairKey, Rational, PairKeyHash>;

  void store(Cache &cache, PairKey key, const Rational &v)
  {
    if (cache.size() < ceiling_) cache.emplace(std::move(key), v);
  }

  Rational g0_or_zero(const MultiIndex &m, const MultiIndex &p)
  {
    if (!is_stable(0, m.count()) || !dimension_matches(0, m, p)) return 0;
    return recursion_g0(m, p);
  }
  Rational g1_or_zero(const MultiIndex &m, const MultiIndex &p)
  {
    if (!is_stable(1, m.count()) || !dimension_matches(1, m, p)) return 0;
    return recursion_g1(m, p);
  }

  // Removes the two smallest tau indices (the spectators k, l) from m.
  static std::pair<unsigned, unsigned> take_spectators(MultiIndex &m)
  {
    const unsigned k = *m.min_index();
    m.remove(k);
    const unsigned l = *m.min_index();
    m.remove(l);
    return {k, l};
  }

  // Caller guarantees stability and dimension.
  Rational recursion_g0(const MultiIndex &m, const MultiIndex &p)
  {
    auto &cache = recursion_cache_[0];
    PairKey ck{m, p};
    if (auto it = cache.find(ck); it != cache.end()) return it->second;

    Rational value = 0;
    if (m.count() == 3) {
      value = 1; // <tau_0^3>_0
    } else if (*m.max_index() >= 1) {
      // <tau^{m + d_k + d_l + d_a} kappa^p> =
      //   sum C(m,m')C(p,p') <tau^{m'+d_k+d_l+d_0} kappa^p'> <tau^{m''+d_{a-1}+d_0} kappa^p''>
      const unsigned a = *m.max_index();
      MultiIndex rest = m.minus(a);
      const auto [k, l] = take_spectators(rest);
      const auto psplits = split_enumerate(p);
      for_each_split(rest, [&](const Split &ms) {
        const MultiIndex left_m = ms.first.plus(k).plus(l).plus(0);
        const MultiIndex right_m = ms.second.plus(a - 1).plus(0);
        for (const auto &ps : psplits) {
          if (!dimension_matches(0, right_m, ps.second) || !dimension_matches(0, left_m, ps.first)) continue;
          Rational r = g0_or_zero(right_m, ps.second);
          if (r == 0) continue;
          Rational lft = g0_or_zero(left_m, ps.first);
          value += Rational(ms.coefficient * ps.coefficient) * lft * r;
        }
      });
    } else {
      // <tau^{m + d_k + d_l} kappa^{p + d_a}> =
      //   sum C(m,m')C(p,p') <tau^{m'+d_k+d_l+d_0} kappa^p'> <tau^{m''+d_0} kappa^{p''+d_{a-1}}>
      // with kappa_0 on the right factor equal to ||m''|| - 1.
      const unsigned a = *p.max_index();
      const MultiIndex prest = p.minus(a);
      MultiIndex rest = m;
      const auto [k, l] = take_spectators(rest);
      const auto psplits = split_enumerate(prest);
      for_each_split(rest, [&](const Split &ms) {
        const MultiIndex left_m = ms.first.plus(k).plus(l).plus(0);
        const MultiIndex right_m = ms.second.plus(0);
        for (const auto &ps : psplits) {
          Rational r;
          if (a == 1) {
            const long kappa0 = ms.second.count() - 1;
            if (kappa0 == 0) continue;
            r = kappa0 * g0_or_zero(right_m, ps.second);
          } else {
            r = g0_or_zero(right_m, ps.second.plus(a - 1));
          }
          if (r == 0) continue;
          value += Rational(ms.coefficient * ps.coefficient) * g0_or_zero(left_m, ps.first) * r;
        }
      });
    }
    store(cache, std::move(ck), value);
    return value;
  }

  Rational recursion_g1(const MultiIndex &m, const MultiIndex &p)
  {
    auto &cache = recursion_cache_[1];
    PairKey ck{m, p};
    if (auto it = cache.find(ck); it != cache.end()) return it->second;

    Rational value = 0;
    if (*m.max_index() >= 1) {
      // <tau^{m+d_a} kappa^p>_1 = 1/24 <tau^{m+2d_0+d_{a-1}} kappa^p>_0
      //   + sum C(m,m')C(p,p') <tau^{m'+d_0} kappa^p'>_1 <tau^{m''+d_0+d_{a-1}} kappa^p''>_0
      const unsigned a = *m.max_index();
      const MultiIndex rest = m.minus(a);
      const auto psplits = split_enumerate(p);
      value = Rational(1, 24) * g0_or_zero(rest.plus(0, 2).plus(a - 1), p);
      for_each_split(rest, [&](const Split &ms) {
        const MultiIndex left_m = ms.first.plus(0);
        const MultiIndex right_m = ms.second.plus(0).plus(a - 1);
        for (const auto &ps : psplits) {
          Rational r = g0_or_zero(right_m, ps.second);
          if (r == 0) continue;
          value += Rational(ms.coefficient * ps.coefficient) * g1_or_zero(left_m, ps.first) * r;
        }
      });
    } else {
      // <tau^m kappa^{p+d_a}>_1 = 1/24 <tau^{m+2d_0} kappa^{p+d_{a-1}}>_0
      //   + sum C(m,m')C(p,p') <tau^{m'+d_0} kappa^p'>_1 <tau^{m''+d_0} kappa^{p''+d_{a-1}}>_0
      const unsigned a = *p.max_index();
      const MultiIndex prest = p.minus(a);
      const auto psplits = split_enumerate(prest);
      if (a == 1)
        value = Rational(1, 24) * m.count() * g0_or_zero(m.plus(0, 2), prest);
      else
        value = Rational(1, 24) * g0_or_zero(m.plus(0, 2), prest.plus(a - 1));
      for_each_split(m, [&](const Split &ms) {
        const MultiIndex left_m = ms.first.plus(0);
        const MultiIndex right_m = ms.second.plus(0);
        for (const auto &ps : psplits) {
          Rational r;
          if (a == 1) {
            const long kappa0 = ms.second.count() - 1;
            if (kappa0 == 0) continue;
            r = kappa0 * g0_or_zero(right_m, ps.second);
          } else {
            r = g0_or_zero(right_m, ps.second.plus(a - 1));
          }
          if (r == 0) continue;
          value += Rational(ms.coefficient * ps.coefficient) * g1_or_zero(left_m, ps.first) * r;
        }
      });
    }
    store(cache, std::move(ck), value);
    return value;
  }

  Rational pd_or_zero(int g, const MultiIndex &m, const MultiIndex &p)
  {
    if (!is_stable(g, m.count()) || !dimension_matches(g, m, p)) return 0;
    return puncture_dilaton(g, m, p);
  }

  // kappa^{base - j + d_target}, with target 0 turned into the scalar 2g-2+n.
  Rational kappa_shift_term(int g, const MultiIndex &m, const MultiIndex &base, long target)
  {
    if (target == 0) {
      const long kappa0 = 2 * g - 2 + m.count();
      if (kappa0 == 0) return 0;
      return kappa0 * pd_or_zero(g, m, base);
    }
    return pd_or_zero(g, m, base.plus(static_cast<unsigned>(target)));
  }

  Rational puncture_dilaton(int g, const MultiIndex &m, const MultiIndex &p)
  {
    auto &cache = pd_cache_[g];
    PairKey ck{m, p};
    if (auto it = cache.find(ck); it != cache.end()) return it->second;

    Rational value = 0;
    const long n = m.count();
    if (g == 0 && n == 3) {
      value = 1;
    } else if (g == 1 && n == 1) {
      value = Rational(1, 24); // <tau_1>_1 or <tau_0 kappa_1>_1
    } else if (*m.max_index() >= 1) {
      // dilaton: <tau^{m+d_a} kappa^p> = sum_{j<=p} C(p,j) <tau^m kappa^{p-j+d_{|j|+a-1}}>
      const unsigned a = *m.max_index();
      const MultiIndex rest = m.minus(a);
      for_each_split(p, [&](const Split &js) {
        const long target = js.first.weighted_degree() + a - 1;
        Rational t = kappa_shift_term(g, rest, js.second, target);
        if (t != 0) value += Rational(js.coefficient) * t;
      });
    } else {
      value = puncture(g, m.minus(0), p);
    }
    store(cache, std::move(ck), value);
    return value;
  }

  // <tau^{m+d_0} kappa^p> = sum_{i>=1} m_i <tau^{m+d_{i-1}-d_i} kappa^p>
  //                        + sum_{0<j<=p} C(p,j) <tau^m kappa^{p-j+d_{|j|-1}}>
  Rational puncture(int g, const MultiIndex &m, const MultiIndex &p)
  {
    Rational value = 0;
    for (const auto &[i, c] : m.entries()) {
      if (i == 0) continue;
      value += static_cast<long>(c) * pd_or_zero(g, m.minus(i).plus(i - 1), p);
    }
    for_each_split(p, [&](const Split &js) {
      if (js.first.empty()) return;
      const long target = js.first.weighted_degree() - 1;
      Rational t = kappa_shift_term(g, m, js.second, target);
      if (t != 0) value += Rational(js.coefficient) * t;
    });
    return value;
  }

  Rational closed_form(const IntersectionKey &key)
  {
    if (!key.kappa().empty()) throw std::invalid_argument("the closed-form route only handles pure psi brackets");
    std::vector<unsigned> all, positive;
    for (const auto &[i, c] : key.tau().entries())
      for (unsigned r = 0; r < c; ++r) {
        all.push_back(i);
        if (i > 0) positive.push_back(i);
      }
    if (key.genus() == 0) return psi_multinomial_g0(all);
    return psi_closed_g1(positive);
  }

  std::size_t ceiling_;
  Cache recursion_cache_[2];
  Cache pd_cache_[2];
};

} // namespace taut

#endif // TAUT_EVALUATOR_HPP

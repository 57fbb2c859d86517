#ifndef TAUT_CHECKS_HPP
#define TAUT_CHECKS_HPP

#include "evaluator.hpp"
#include "identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace taut {

/// Partitions of `weight` into parts of size in [min_part, max_part], as multi-indices of `kind`.
inline std::vector<MultiIndex> partitions(IndexKind kind, unsigned weight, unsigned max_part, unsigned min_part = 1)
{
  std::vector<MultiIndex> out;
  std::function<void(unsigned, unsigned, MultiIndex)> rec = [&](unsigned w, unsigned cap, MultiIndex cur) {
    if (w == 0) {
      out.push_back(std::move(cur));
      return;
    }
    for (unsigned part = std::min(w, cap); part >= min_part && part >= 1; --part) rec(w - part, part, cur.plus(part));
  };
  rec(weight, max_part, MultiIndex(kind));
  return out;
}

/// Every key of genus g with nonzero dimension match, ||m|| <= n_max and |m| + |p| <= dim_max.
inline std::vector<IntersectionKey> valid_keys(int g, unsigned n_max, unsigned dim_max)
{
  std::vector<IntersectionKey> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    const long dim = 3L * g - 3 + n;
    if (dim < 0 || dim > static_cast<long>(dim_max) || !is_stable(g, n)) continue;
    const auto d = static_cast<unsigned>(dim);
    for (unsigned psi_w = 0; psi_w <= d; ++psi_w) {
      const auto kappa_parts = partitions(IndexKind::S1, d - psi_w, d - psi_w);
      for (const auto &pm : partitions(IndexKind::S0, psi_w, psi_w)) {
        if (pm.count() > static_cast<long>(n)) continue;
        const MultiIndex m = pm.plus(0, static_cast<unsigned>(n - pm.count()));
        for (const auto &p : kappa_parts) out.push_back(*require_key(g, m, p));
      }
    }
  }
  return out;
}

inline std::string describe_key(const IntersectionKey &k)
{
  return "g=" + std::to_string(k.genus()) + " tau " + to_string(k.tau()) + " kappa " + to_string(k.kappa());
}

/// Splitting recursion against puncture/dilaton on every valid key, and
/// against the closed forms on pure psi keys.
inline CheckReport check_routes(Evaluator &ev, int g, unsigned n_max, unsigned dim_max)
{
  CheckReport r("route agreement, genus " + std::to_string(g));
  for (const auto &k : valid_keys(g, n_max, dim_max)) {
    const Rational rec = ev.evaluate(k, EvalRoute::SplittingRecursion);
    const Rational pd = ev.evaluate(k, EvalRoute::PunctureDilaton);
    r.record(rec - pd, [&] { return describe_key(k) + ": recursion " + to_string(rec) + ", puncture/dilaton " + to_string(pd); });
    if (k.kappa().empty()) {
      const Rational cf = ev.evaluate(k, EvalRoute::ClosedForm);
      r.record(rec - cf, [&] { return describe_key(k) + ": recursion " + to_string(rec) + ", closed form " + to_string(cf); });
    }
  }
  return r;
}

/// Genus zero pure psi brackets against the multinomial, all n in [3, n_max].
inline CheckReport check_genus_zero_multinomial(Evaluator &ev, unsigned n_max)
{
  CheckReport r("genus zero multinomial");
  for (unsigned n = 3; n <= n_max; ++n)
    for (const auto &pm : partitions(IndexKind::S0, n - 3, n - 3)) {
      if (pm.count() > static_cast<long>(n)) continue;
      const MultiIndex m = pm.plus(0, static_cast<unsigned>(n - pm.count()));
      std::vector<unsigned> b;
      for (const auto &[i, c] : m.entries()) b.insert(b.end(), c, i);
      const Rational rec = ev.bracket(0, m, MultiIndex(IndexKind::S1));
      const Rational mult = psi_multinomial_g0(b);
      r.record(rec - mult, [&] { return "tau " + to_string(m) + ": recursion " + to_string(rec) + ", multinomial " + to_string(mult); });
    }
  return r;
}

/// f_k(b) = <tau_0^{||b|| - k} tau_{b_1} ... tau_{b_k}>_1 by the recursion.
inline Rational f_genus_one(Evaluator &ev, const std::vector<unsigned> &b)
{
  const unsigned sum = std::accumulate(b.begin(), b.end(), 0u);
  MultiIndex m = MultiIndex::from_list(IndexKind::S0, b);
  m.add(0, sum - static_cast<unsigned>(b.size()));
  return ev.bracket(1, m, MultiIndex(IndexKind::S1));
}

/// The closed genus one formula against the recursion for every b with
/// b_i >= 1 and sum b_i <= max_sum, and the four properties that determine f_k.
inline CheckReport check_genus_one_closed_form(Evaluator &ev, unsigned max_sum)
{
  CheckReport r("genus one closed formula");
  auto show = [](const std::vector<unsigned> &b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
  };
  for (unsigned sum = 1; sum <= max_sum; ++sum)
    for (const auto &part : partitions(IndexKind::S1, sum, sum)) {
      std::vector<unsigned> b;
      for (const auto &[i, c] : part.entries()) b.insert(b.end(), c, i);
      const Rational rec = f_genus_one(ev, b);
      const Rational closed = psi_closed_g1(b);
      r.record(rec - closed, [&] { return "f" + show(b) + ": recursion " + to_string(rec) + ", closed " + to_string(closed); });

      if (b.size() == 1) r.record(rec - Rational(1, 24), [&] { return "f_1" + show(b) + " is not 1/24"; });

      auto perm = b;
      std::sort(perm.begin(), perm.end());
      do {
        const Rational v = psi_closed_g1(perm);
        r.record(v - closed, [&] { return "closed formula not symmetric at " + show(perm); });
      } while (std::next_permutation(perm.begin(), perm.end()));

      if (std::all_of(b.begin(), b.end(), [](unsigned x) { return x >= 2; })) {
        Rational sum_lower = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
          auto lower = b;
          --lower[i];
          sum_lower += f_genus_one(ev, lower);
        }
        r.record(rec - sum_lower, [&] { return "f" + show(b) + " differs from the sum of its lowerings"; });
      }

      if (b.size() >= 2 && std::find(b.begin(), b.end(), 1u) != b.end()) {
        auto rest = b;
        rest.erase(std::find(rest.begin(), rest.end(), 1u));
        const unsigned rest_sum = std::accumulate(rest.begin(), rest.end(), 0u);
        const Rational expected = Rational(rest_sum) * f_genus_one(ev, rest);
        r.record(rec - expected, [&] { return "f" + show(b) + " breaks the dilaton property"; });
      }
    }
  return r;
}

/// lambda_1 brackets reduce to (1/24) times genus zero for r = 1 and vanish
/// for r >= 2 or g = 0; all n <= n_max, |p| <= p_max.
inline CheckReport check_lambda_relations(Evaluator &ev, unsigned n_max, unsigned p_max)
{
  CheckReport r("lambda_1 reduction");
  for (unsigned w = 0; w <= p_max; ++w)
    for (const auto &p : partitions(IndexKind::S1, w, w))
      for (unsigned n = 1; n <= n_max; ++n) {
        const int ni = static_cast<int>(n);
        const auto tau = MultiIndex::unit(IndexKind::S0, 0, n + 2);
        const Rational expected = Rational(1, 24) * ev.value_or_zero(0, tau, p);
        const Rational got = ev.lambda_bracket(p, 1, ni, 1);
        r.record(got - expected, [&] { return "r=1 n=" + std::to_string(n) + " kappa " + to_string(p); });
        for (int rr = 2; rr <= 3; ++rr)
          r.record(ev.lambda_bracket(p, rr, ni, 1), [&] { return "r=" + std::to_string(rr) + " n=" + std::to_string(n) + " kappa " + to_string(p); });
        if (is_stable(0, n)) {
          const Rational g0 = ev.lambda_bracket(p, 1, ni, 0);
          r.record(g0, [&] { return "g=0 n=" + std::to_string(n) + " kappa " + to_string(p); });
        }
      }
  return r;
}

} // namespace taut

#endif // TAUT_CHECKS_HPP

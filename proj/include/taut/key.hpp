#ifndef TAUT_KEY_HPP
#define TAUT_KEY_HPP

#include "multi_index.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace taut {

class unsupported_genus : public std::invalid_argument {
public:
  explicit unsupported_genus(int g)
      : std::invalid_argument("genus " + std::to_string(g) + " is not supported (only 0 and 1)")
  {
  }
};

class unstable_key : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A bracket <tau^m kappa^p>_g that passed the stability and dimension checks:
///   2g - 2 + ||m|| > 0  and  3g - 3 + ||m|| = |m| + |p|.
class IntersectionKey {
public:
  int genus() const { return genus_; }
  const MultiIndex &tau() const { return tau_; }
  const MultiIndex &kappa() const { return kappa_; }
  /// Number of marked points.
  long points() const { return tau_.count(); }

  friend bool operator==(const IntersectionKey &, const IntersectionKey &) = default;

private:
  friend struct KeyFactory;
  IntersectionKey(int g, MultiIndex m, MultiIndex p) : genus_(g), tau_(std::move(m)), kappa_(std::move(p)) {}

  int genus_;
  MultiIndex tau_;
  MultiIndex kappa_;
};

/// The bracket vanishes because the degree does not match the dimension.
struct ZeroBracket {};

/// The moduli space is unstable.
struct InvalidBracket {
  std::string reason;
};

using KeyOutcome = std::variant<IntersectionKey, ZeroBracket, InvalidBracket>;

struct KeyFactory {
  static IntersectionKey build(int g, MultiIndex m, MultiIndex p) { return {g, std::move(m), std::move(p)}; }
};

inline bool is_stable(int g, long n) { return 2 * g - 2 + n > 0; }

inline bool dimension_matches(int g, const MultiIndex &m, const MultiIndex &p)
{
  return 3 * g - 3 + m.count() == m.weighted_degree() + p.weighted_degree();
}

/// Stability is checked first, then the dimension equation.
inline KeyOutcome make_key(int g, MultiIndex m, MultiIndex p)
{
  if (g != 0 && g != 1) throw unsupported_genus(g);
  if (m.kind() != IndexKind::S0 || p.kind() != IndexKind::S1)
    throw std::invalid_argument("make_key expects a tau (S0) and a kappa (S1) multi-index");
  const long n = m.count();
  if (!is_stable(g, n))
    return InvalidBracket{"moduli space M_{" + std::to_string(g) + "," + std::to_string(n) +
                          "} is unstable (need 2g-2+n > 0)"};
  if (!dimension_matches(g, m, p)) return ZeroBracket{};
  return KeyFactory::build(g, std::move(m), std::move(p));
}

/// Like make_key but throws unstable_key for the Invalid outcome; nullopt means Zero.
inline std::optional<IntersectionKey> require_key(int g, MultiIndex m, MultiIndex p)
{
  auto out = make_key(g, std::move(m), std::move(p));
  if (auto *bad = std::get_if<InvalidBracket>(&out)) throw unstable_key(bad->reason);
  if (std::holds_alternative<ZeroBracket>(out)) return std::nullopt;
  return std::get<IntersectionKey>(std::move(out));
}

} // namespace taut

#endif // TAUT_KEY_HPP

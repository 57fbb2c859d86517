#ifndef TAUT_MULTI_INDEX_HPP
#define TAUT_MULTI_INDEX_HPP

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace taut {

/// S0 sequences start at index 0 (tau insertions), S1 at index 1 (kappa insertions).
enum class IndexKind { S0, S1 };

inline unsigned first_index(IndexKind k) { return k == IndexKind::S0 ? 0u : 1u; }

/// Sparse exponent vector. Entries are (index, multiplicity) pairs sorted by
/// index with no zero multiplicities, so equality and hashing are order free.
class MultiIndex {
public:
  using Entry = std::pair<unsigned, unsigned>;

  explicit MultiIndex(IndexKind kind = IndexKind::S0) : kind_(kind) {}

  MultiIndex(IndexKind kind, std::initializer_list<Entry> entries) : kind_(kind)
  {
    for (const auto &[i, c] : entries) add(i, c);
  }

  /// Multi-index counting the entries of a list, e.g. {0,0,2} -> 2*delta_0 + delta_2.
  static MultiIndex from_list(IndexKind kind, std::span<const unsigned> indices)
  {
    MultiIndex m(kind);
    for (unsigned i : indices) m.add(i, 1);
    return m;
  }

  static MultiIndex unit(IndexKind kind, unsigned index, unsigned count = 1)
  {
    MultiIndex m(kind);
    m.add(index, count);
    return m;
  }

  IndexKind kind() const { return kind_; }
  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  unsigned operator[](unsigned index) const
  {
    auto it = find(index);
    return (it != entries_.end() && it->first == index) ? it->second : 0;
  }

  /// Largest index with nonzero multiplicity.
  std::optional<unsigned> max_index() const
  {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().first;
  }
  std::optional<unsigned> min_index() const
  {
    if (entries_.empty()) return std::nullopt;
    return entries_.front().first;
  }

  /// |m| = sum i*m_i
  long weighted_degree() const
  {
    long d = 0;
    for (const auto &[i, c] : entries_) d += static_cast<long>(i) * c;
    return d;
  }
  /// ||m|| = sum m_i
  long count() const
  {
    long n = 0;
    for (const auto &[i, c] : entries_) n += c;
    return n;
  }

  MultiIndex &add(unsigned index, unsigned count = 1)
  {
    if (count == 0) return *this;
    if (index < first_index(kind_)) throw std::invalid_argument("index 0 is not allowed in a kappa multi-index");
    auto it = find(index);
    if (it != entries_.end() && it->first == index)
      it->second += count;
    else
      entries_.insert(it, Entry{index, count});
    return *this;
  }

  MultiIndex &remove(unsigned index, unsigned count = 1)
  {
    if (count == 0) return *this;
    auto it = find(index);
    if (it == entries_.end() || it->first != index || it->second < count)
      throw std::invalid_argument("multi-index entry would become negative");
    it->second -= count;
    if (it->second == 0) entries_.erase(it);
    return *this;
  }

  MultiIndex plus(unsigned index, unsigned count = 1) const
  {
    MultiIndex r = *this;
    r.add(index, count);
    return r;
  }
  MultiIndex minus(unsigned index, unsigned count = 1) const
  {
    MultiIndex r = *this;
    r.remove(index, count);
    return r;
  }

  /// Componentwise l <= m.
  bool contains(const MultiIndex &l) const
  {
    for (const auto &[i, c] : l.entries_)
      if ((*this)[i] < c) return false;
    return true;
  }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex &b)
  {
    check_same_kind(a, b);
    for (const auto &[i, c] : b.entries_) a.add(i, c);
    return a;
  }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex &b)
  {
    check_same_kind(a, b);
    for (const auto &[i, c] : b.entries_) a.remove(i, c);
    return a;
  }

  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
  friend auto operator<=>(const MultiIndex &a, const MultiIndex &b)
  {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

  std::size_t hash() const
  {
    std::size_t h = kind_ == IndexKind::S0 ? 0x9e3779b97f4a7c15ull : 0x7f4a7c159e3779b9ull;
    for (const auto &[i, c] : entries_) {
      h ^= std::hash<unsigned long long>{}((static_cast<unsigned long long>(i) << 32) | c) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }

  static void check_same_kind(const MultiIndex &a, const MultiIndex &b)
  {
    if (a.kind_ != b.kind_) throw std::invalid_argument("multi-index kind mismatch");
  }

private:
  std::vector<Entry>::iterator find(unsigned index)
  {
    return std::lower_bound(entries_.begin(), entries_.end(), index,
                            [](const Entry &e, unsigned i) { return e.first < i; });
  }
  std::vector<Entry>::const_iterator find(unsigned index) const
  {
    return std::lower_bound(entries_.begin(), entries_.end(), index,
                            [](const Entry &e, unsigned i) { return e.first < i; });
  }

  IndexKind kind_;
  std::vector<Entry> entries_;
};

struct WeightStats {
  long weighted_degree;
  long total_count;
  Integer factorial_product;
};

/// (|m|, ||m||, m!)
inline WeightStats weight_stats(const MultiIndex &m)
{
  Integer f = 1;
  for (const auto &[i, c] : m.entries()) f *= factorial(c);
  return {m.weighted_degree(), m.count(), f};
}

/// prod_i C(m_i, l_i); zero unless l <= m.
inline Integer multi_binomial(const MultiIndex &m, const MultiIndex &l)
{
  MultiIndex::check_same_kind(m, l);
  Integer r = 1;
  for (const auto &[i, c] : l.entries()) {
    const unsigned mi = m[i];
    if (c > mi) return 0;
    r *= binomial(mi, c);
  }
  return r;
}

struct Split {
  MultiIndex first;
  MultiIndex second;
  Integer coefficient;
};

/// Visits every ordered splitting m = m' + m'' with coefficient C(m, m'),
/// in lexicographic order of m' (lowest index varies slowest). Splits are
/// produced one at a time by an odometer over the per-index counts.
template <typename Visitor>
void for_each_split(const MultiIndex &m, Visitor &&visit)
{
  const auto entries = m.entries();
  const std::size_t k = entries.size();
  std::vector<unsigned> digit(k, 0);
  while (true) {
    MultiIndex first(m.kind()), second(m.kind());
    Integer coef = 1;
    for (std::size_t i = 0; i < k; ++i) {
      first.add(entries[i].first, digit[i]);
      second.add(entries[i].first, entries[i].second - digit[i]);
      coef *= binomial(entries[i].second, digit[i]);
    }
    visit(Split{std::move(first), std::move(second), std::move(coef)});
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (digit[pos] < entries[pos].second) {
        ++digit[pos];
        break;
      }
      digit[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

inline std::vector<Split> split_enumerate(const MultiIndex &m)
{
  std::vector<Split> out;
  for_each_split(m, [&](Split s) { out.push_back(std::move(s)); });
  return out;
}

/// Text form used on the command line: `0:3,1:1`. The empty string is the zero index.
inline MultiIndex parse_multi_index(IndexKind kind, std::string_view text)
{
  MultiIndex m(kind);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size())
      throw std::invalid_argument("expected index:count, got '" + std::string(item) + "'");
    auto to_uint = [&](std::string_view s) {
      unsigned long v = 0;
      for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("not a nonnegative integer: '" + std::string(s) + "'");
        v = v * 10 + static_cast<unsigned long>(ch - '0');
        if (v > 1000000) throw std::invalid_argument("value too large: '" + std::string(s) + "'");
      }
      return static_cast<unsigned>(v);
    };
    m.add(to_uint(item.substr(0, colon)), to_uint(item.substr(colon + 1)));
    pos = comma + 1;
  }
  return m;
}

inline std::string to_string(const MultiIndex &m)
{
  std::string s;
  for (const auto &[i, c] : m.entries()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i) + ":" + std::to_string(c);
  }
  return s;
}

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex &m) const { return m.hash(); }
};

} // namespace taut

#endif // TAUT_MULTI_INDEX_HPP

#ifndef TAUT_IO_HPP
#define TAUT_IO_HPP

#include "cohft.hpp"
#include "identities.hpp"
#include "series.hpp"
#include "wp.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

namespace taut {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become null.
inline Json float_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline Json to_json(const TruncatedSeries &s)
{
  Json terms = Json::array();
  for (const auto &[e, c] : s.terms()) terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
  return {{"variables", s.variables()}, {"max_degree", s.max_degree()}, {"terms", terms}};
}

inline TruncatedSeries series_from_json(const Json &j)
{
  TruncatedSeries s(j.at("variables").get<std::vector<std::string>>(), j.at("max_degree").get<unsigned>());
  for (const auto &t : j.at("terms")) s.add(t.at("exponents").get<Exponents>(), parse_rational(t.at("coefficient").get<std::string>()));
  return s;
}

inline Json to_json(const CohftPoint &p)
{
  Json s = Json::object();
  for (const auto &[i, v] : p.s) s[std::to_string(i)] = to_string(v);
  return {{"s", s}, {"u", to_string(p.u)}};
}

inline Json to_json(const PotentialPair &pair)
{
  return {{"order", pair.order}, {"phi0", to_json(pair.phi0)}, {"phi1", to_json(pair.phi1)}};
}

inline Json to_json(const VolumeRow &row)
{
  return {{"n", row.n}, {"w", to_string(row.w)}, {"asymptote", float_json(row.asymptote)}, {"ratio", float_json(row.ratio)}};
}

inline Json volume_table_json(int g, const std::vector<VolumeRow> &rows, const BesselConstants *bc)
{
  Json j{{"genus", g}, {"rows", Json::array()}};
  for (const auto &r : rows) j["rows"].push_back(to_json(r));
  if (bc) {
    j["gamma0"] = bc->gamma0;
    j["C"] = bc->C;
  }
  return j;
}

inline Json to_json(const CheckReport &r)
{
  Json j{{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"ok", r.ok()}};
  j["first_counterexample"] = r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr);
  j["max_discrepancy"] = to_string(r.max_discrepancy);
  return j;
}

} // namespace taut

#endif // TAUT_IO_HPP

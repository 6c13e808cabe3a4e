#include "permclass/json_io.hpp"

#include <limits>

namespace permclass {

nlohmann::json rationalToJson(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return static_cast<std::int64_t>(q.get_num().get_si());
  return q.get_str();
}

Rational rationalFromJson(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
      throw nlohmann::json::type_error::create(302, "invalid rational '" +
                                                        j.get<std::string>() + "'",
                                               &j);
    q.canonicalize();
    return q;
  }
  throw nlohmann::json::type_error::create(302, "rational must be integer or string", &j);
}

void to_json(nlohmann::json& j, const Permutation& pi) { j = pi.commaStr(); }

void from_json(const nlohmann::json& j, Permutation& pi) {
  pi = parsePermutation(j.get<std::string>());
}

void to_json(nlohmann::json& j, const Poly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(rationalToJson(c));
}

void from_json(const nlohmann::json& j, Poly& p) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rationalFromJson(c));
  p = Poly(std::move(coeffs));
}

void to_json(nlohmann::json& j, const RationalFunction& f) {
  const auto [num, den] = f.gfForm();
  j = nlohmann::json{{"num", num}, {"den", den}};
}

void from_json(const nlohmann::json& j, RationalFunction& f) {
  f = RationalFunction(j.at("num").get<Poly>(), j.at("den").get<Poly>());
}

void to_json(nlohmann::json& j, const CountTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 1; n <= t.maxN(); ++n) {
    nlohmann::json row{{"n", n}, {"count", t.count(n)}};
    if (t.members) row["members"] = (*t.members)[n - 1];
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"counts", std::move(rows)}};
}

void from_json(const nlohmann::json& j, CountTable& t) {
  t = CountTable{};
  const auto& rows = j.at("counts");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.at("n").get<std::size_t>() != i + 1)
      throw nlohmann::json::other_error::create(501, "count rows must be n = 1, 2, ...", &row);
    t.counts.push_back(row.at("count").get<std::uint64_t>());
    if (row.contains("members")) {
      if (!t.members) t.members.emplace();
      t.members->push_back(row.at("members").get<std::vector<Permutation>>());
    }
  }
  if (t.members && t.members->size() != t.counts.size())
    throw nlohmann::json::other_error::create(501, "members present on some rows only", &j);
}

}  // namespace permclass

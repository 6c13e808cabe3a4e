#ifndef PERMCLASS_JSON_IO_HPP
#define PERMCLASS_JSON_IO_HPP

#include <json.hpp>

#include "permclass/enumerator.hpp"
#include "permclass/permutation.hpp"
#include "permclass/poly.hpp"
#include "permclass/rational_function.hpp"

namespace permclass {

// Rationals are JSON integers when they are integers fitting in 64 bits and
// strings ("-12345678901234567890", "3/4") otherwise.
nlohmann::json rationalToJson(const Rational& q);
Rational rationalFromJson(const nlohmann::json& j);

// Permutations serialize as comma-separated strings.
void to_json(nlohmann::json& j, const Permutation& pi);
void from_json(const nlohmann::json& j, Permutation& pi);

// Ascending coefficient list.
void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);

// {"num": [...], "den": [...]} with den(0) = 1 where possible.
void to_json(nlohmann::json& j, const RationalFunction& f);
void from_json(const nlohmann::json& j, RationalFunction& f);

// {"counts": [{"n": 1, "count": 1, "members": [...]}, ...]}
void to_json(nlohmann::json& j, const CountTable& t);
void from_json(const nlohmann::json& j, CountTable& t);

}  // namespace permclass

#endif  // PERMCLASS_JSON_IO_HPP

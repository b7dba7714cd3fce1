#pragma once

#include "ospkw/atyp.hpp"
#include "ospkw/blocks.hpp"
#include "ospkw/characters.hpp"
#include "ospkw/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace ospkw {

using Json = nlohmann::ordered_json;

/// {"n", "m", "terms": [{"exp": [doubled ints], "coef": decimal string}]},
/// terms in descending lexicographic order.
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

Json to_json(const TamenessReport& r);
Json to_json(const BottomTrace& t, const Algebra& alg);
Json to_json(const CharacterResult& cr);
Json to_json(const std::vector<std::pair<std::int64_t, HookPartition>>& family, const Algebra& alg);
Json to_json(const AdmissibilityResult& a);
Json error_json(ErrorCode code, const std::string& message);

}  // namespace ospkw

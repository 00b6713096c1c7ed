#pragma once

#include <json.hpp>

#include <map>

#include "nilorb/chevalley.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/pieces.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Bipartition& b);
Json to_json(const OrbitSymbol& s);
Json to_json(const UnipotentClass& u);
Json to_json(const UpsilonSeq& f);
Json to_json(const PieceReport& r);

OrbitSymbol symbol_from_json(const Json& j);

// Census histogram keyed by orbit size, as decimal strings.
Json census_json(const std::map<std::uint64_t, int>& histogram);

}  // namespace nilorb

#pragma once

#include <string>

#include <json.hpp>

#include "tamari/grafting_tree.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/mtamari.hpp"
#include "tamari/statistics.hpp"

namespace tamari {

using Json = nlohmann::json;

Json to_json(const IntervalPoset& p);
Json to_json(const StatBundle& s);
Json to_json(const GraftingTree& g);
Json to_json(const BallotPath& b);

IntervalPoset poset_from_json(const Json& j);
GraftingTree grafting_tree_from_json(const Json& j);
BallotPath ballot_from_json(const Json& j);

std::string to_text(const IntervalPoset& p);
std::string to_text(const StatBundle& s);
std::string to_text(const GraftingTree& g);

}

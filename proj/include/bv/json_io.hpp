#pragma once

#include <string>

#include <json.hpp>

#include "bv/packets.hpp"
#include "bv/parameters.hpp"
#include "bv/spectral.hpp"
#include "bv/symbols.hpp"

namespace bv {

using Json = nlohmann::ordered_json;

// All emitters produce a fixed key order and encode every scalar as a
// canonical string, so dump() is byte-stable and parse/emit round-trips.

Json to_json(const Partition& p);
Json to_json(const NilpotentOrbit& o);
Json to_json(const Symbol& s);
Json to_json(const PairStructure& ps);
Json to_json(const InfChar& ic);
Json to_json(const LanglandsParam& p);
Json to_json(const ArthurParameter& psi);
Json to_json(const Packet& pk);
Json to_json(const ArthurPacket& pk);
Json to_json(const SpAnalysis& sp);

ArthurParameter parameter_from_json(const Json& j);
ArthurParameter load_parameter(const std::string& path);

}  // namespace bv

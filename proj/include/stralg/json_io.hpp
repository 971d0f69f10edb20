#pragma once

#include <json.hpp>

#include "stralg/modules.hpp"
#include "stralg/toric.hpp"
#include "stralg/updown.hpp"
#include "stralg/weights.hpp"

// Deterministic JSON forms of the public value types (insertion-ordered keys,
// canonical element order).

namespace stralg {

using Json = nlohmann::ordered_json;

Json json_dimvec(const DimVec& ascending);  // emitted in display order
Json json_graph(const UpDownGraph& g);
Json json_decomposition(const Decomposition& d);
Json json_matching(const Matching& t);
Json json_ring(const RingAnalysis& r);
Json json_rigidity(const RigidityReport& r);
Json json_scan(const ConjectureScan& s);

}  // namespace stralg

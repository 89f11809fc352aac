#pragma once

#include <json.hpp>

#include "combalg/comm_series.hpp"
#include "combalg/feynman.hpp"
#include "combalg/kontsevich.hpp"
#include "combalg/nc_series.hpp"
#include "combalg/poset.hpp"
#include "combalg/super_series.hpp"
#include "combalg/weyl.hpp"

namespace combalg {

// Insertion-ordered JSON so emitted documents match the documented field
// layout byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const CommSeries& s);
CommSeries comm_series_from_json(const Json& j);

Json to_json(const NCSeries& s);
NCSeries nc_series_from_json(const Json& j);

Json to_json(const WeylElement& s);
WeylElement weyl_from_json(const Json& j);

Json to_json(const SuperSeries& s);
SuperSeries super_from_json(const Json& j);

Json to_json(const CouplingSeries& s);
CouplingSeries coupling_from_json(const Json& j);

Json flag_graph_to_json(const FlagGraph& g, const Integer& aut);

Json to_json(const AdmissibleGraph& g);

// {"elements":[..],"relations":[[i,j]..]} with relations naming elements.
struct PosetInput {
  std::vector<Json> elements;
  FinitePoset poset;
};
PosetInput poset_from_json(const Json& j);

WeightAssignment weights_from_json(const Json& j);

}  // namespace combalg

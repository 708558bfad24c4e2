#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bbc/graph.hpp"

namespace bbc {

// Node order used by every emitter: ascending (depth, rendering). Stable
// across runs, so identical inputs yield byte-identical documents.
std::vector<int> emission_order(const LabelledGraph& G, const CartanDatum& d);

// Plain digraph; node ids are the quoted renderings, edges are labelled
// "(i,l)" and sorted by (source, i, l, target).
std::string to_dot(const LabelledGraph& G, const CartanDatum& d);

nlohmann::json graph_json(const LabelledGraph& G, const CartanDatum& d);
std::string to_json(const LabelledGraph& G, const CartanDatum& d);

}  // namespace bbc

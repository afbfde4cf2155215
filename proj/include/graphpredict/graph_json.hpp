#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/graph.hpp"

namespace graphpredict {

// {"nodes": [{"id", "label", "properties"}], "edges": [{"id", "type",
// "source", "target", "properties"}]}. Integers stay JSON integers, reals
// are written with a decimal point, vectors as arrays of numbers, so the
// round trip is lossless.
nlohmann::json graph_to_json(const PropertyGraph& g);
PropertyGraph graph_from_json(const nlohmann::json& j);

void save_graph(const PropertyGraph& g, const std::string& path);
PropertyGraph load_graph(const std::string& path);

nlohmann::json property_to_json(const PropertyValue& v);
PropertyValue property_from_json(const nlohmann::json& j);

}  // namespace graphpredict

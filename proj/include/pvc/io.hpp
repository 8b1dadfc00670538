#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "pvc/compress.hpp"
#include "pvc/graph.hpp"

namespace pvc {

// Loads either the edge-list format or a compressed-instance JSON document
// (first non-whitespace byte '{'), reconstituting loops from rho.
WeightedGraph load_instance(const std::string& path);

WeightedGraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const WeightedGraph& g, const std::string& path);

nlohmann::json reduced_instance_json(const ReducedInstance& r);
nlohmann::json biclique_report_json(const BicliqueReport& r);
WeightedGraph graph_from_compressed_json(const nlohmann::json& doc);

// fnv1a64 over the raw file bytes, as a 16-digit hex string.
std::string file_digest(const std::string& path);

}  // namespace pvc

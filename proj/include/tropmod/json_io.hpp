#ifndef TROPMOD_JSON_IO_HPP
#define TROPMOD_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "tropmod/complex.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/weights.hpp"

namespace tropmod {

// Weight vectors serialize as arrays of {"num": int, "den": int}.
nlohmann::json weight_vector_to_json(const WeightVector& w);
WeightVector weight_vector_from_json(const nlohmann::json& j);

// Graph schema: {"genus": g, "vertex_genera": [...], "edges": [[u,v],...],
// "markings": [vertex per marking], "labels": [label per edge]} with
// "labels" optional. Vertices are 0-based array indices.
nlohmann::json graph_to_json(const MarkedGraph& g, int genus, bool with_labels = false);
MarkedGraph graph_from_json(const nlohmann::json& j);

// Full dump: per-dimension class graphs, face tables, generator tables,
// and the (g, w) provenance.
nlohmann::json complex_to_json(const DeltaComplex& X);

// DOT export with vertex captions "h=<genus>; {markings}"; edge labels are
// emitted when `labelled`.
std::string graph_to_dot(const MarkedGraph& g, bool labelled = false);
std::string skeleton_to_dot(const SkeletonGraph& skel);

}  // namespace tropmod

#endif

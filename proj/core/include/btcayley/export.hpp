#pragma once

// Canonical text exports. Every vertex is written as the lexicographic rank
// of its permutation label, so exports of different objects over the same
// Sym_n agree on vertex ids.

#include <string>
#include <vector>

#include "btcayley/cayley_map.hpp"
#include "btcayley/graph.hpp"

namespace btcayley {

enum class ExportFormat { edges, dot, json };

/// edges: "u v" per line with u < v, sorted. dot: an undirected graph, with
/// permutation labels when the degree is at most 5. json: vertices and edges.
/// Throws std::invalid_argument for unlabelled graphs.
std::string export_graph(const Graph& g, ExportFormat format, const std::string& name);

/// {n, valency, dart_count, face_count, face_size_histogram,
///  euler_characteristic, regular, t_balanced, t, aut_order}.
std::string map_report_json(const CayleyMap& m, const std::vector<Face>& faces, const RegularityResult& regularity,
                            bool pretty = false);

/// edges: one face per line as its vertex-rank walk. json: the map report
/// with a "faces" array. dot is not a face format (std::invalid_argument).
std::string export_faces(const CayleyMap& m, const std::vector<Face>& faces, const RegularityResult& regularity,
                         ExportFormat format);

}  // namespace btcayley

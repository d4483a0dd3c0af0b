#include "btcayley/export.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "btcayley/block_transposition.hpp"
#include "json.hpp"

namespace btcayley {

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> ranked_edges(const Graph& g) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    auto a = g.label(u).rank();
    auto b = g.label(v).rank();
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> vertices_by_rank(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.label(a).rank() < g.label(b).rank(); });
  return order;
}

}  // namespace

std::string export_graph(const Graph& g, ExportFormat format, const std::string& name) {
  if (!g.has_labels()) throw std::invalid_argument("export needs a labelled graph");
  const auto edges = ranked_edges(g);
  std::string out;
  switch (format) {
    case ExportFormat::edges:
      for (auto [a, b] : edges) out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
      return out;
    case ExportFormat::dot: {
      const bool labelled = g.vertex_count() > 0 && g.label(0).degree() <= 5;
      out = "graph \"" + name + "\" {\n";
      for (int v : vertices_by_rank(g)) {
        out += "  " + std::to_string(g.label(v).rank());
        if (labelled) out += " [label=\"" + to_string(g.label(v)) + "\"]";
        out += ";\n";
      }
      for (auto [a, b] : edges) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
      out += "}\n";
      return out;
    }
    case ExportFormat::json: {
      nlohmann::ordered_json doc;
      doc["name"] = name;
      doc["vertex_count"] = g.vertex_count();
      doc["edge_count"] = g.edge_count();
      auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
      for (int v : vertices_by_rank(g)) {
        nlohmann::ordered_json entry;
        entry["id"] = g.label(v).rank();
        entry["label"] = to_string(g.label(v));
        if (const auto cut = as_block_transposition(g.label(v))) entry["cut"] = nlohmann::ordered_json::parse(to_json(*cut));
        vertices.push_back(std::move(entry));
      }
      auto& list = doc["edges"] = nlohmann::ordered_json::array();
      for (auto [a, b] : edges) list.push_back({a, b});
      return doc.dump() + '\n';
    }
  }
  throw std::invalid_argument("unknown export format");
}

namespace {

nlohmann::ordered_json map_report(const CayleyMap& m, const std::vector<Face>& faces,
                                  const RegularityResult& regularity) {
  nlohmann::ordered_json doc;
  doc["n"] = m.degree();
  doc["valency"] = m.valency();
  doc["dart_count"] = m.dart_count();
  doc["face_count"] = faces.size();
  auto& histogram = doc["face_size_histogram"] = nlohmann::ordered_json::object();
  for (auto [size, count] : face_size_histogram(faces)) histogram[std::to_string(size)] = count;
  doc["euler_characteristic"] = euler_characteristic(m, faces);
  doc["regular"] = to_string(regularity.status);
  std::optional<int> t;
  if (regularity.witness) t = t_balance(*regularity.witness, m);
  doc["t_balanced"] = t.has_value();
  doc["t"] = t ? nlohmann::ordered_json(*t) : nlohmann::ordered_json(nullptr);
  doc["aut_order"] = regularity.status == RegularityResult::Status::regular
                         ? nlohmann::ordered_json(regularity.aut_order)
                         : nlohmann::ordered_json(nullptr);
  return doc;
}

}  // namespace

std::string map_report_json(const CayleyMap& m, const std::vector<Face>& faces, const RegularityResult& regularity,
                            bool pretty) {
  return map_report(m, faces, regularity).dump(pretty ? 2 : -1) + '\n';
}

std::string export_faces(const CayleyMap& m, const std::vector<Face>& faces, const RegularityResult& regularity,
                         ExportFormat format) {
  switch (format) {
    case ExportFormat::edges: {
      std::string out;
      for (const auto& f : faces) {
        const auto walk = f.vertex_walk();
        for (std::size_t s = 0; s < walk.size(); ++s) out += (s ? " " : "") + std::to_string(walk[s]);
        out += '\n';
      }
      return out;
    }
    case ExportFormat::json: {
      auto doc = map_report(m, faces, regularity);
      auto& list = doc["faces"] = nlohmann::ordered_json::array();
      for (const auto& f : faces) list.push_back(f.vertex_walk());
      return doc.dump() + '\n';
    }
    case ExportFormat::dot: break;
  }
  throw std::invalid_argument("faces export supports the edges and json formats");
}

}  // namespace btcayley

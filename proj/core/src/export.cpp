#include <nlohmann/json.hpp>

#include "hardsq/apex_graph.hpp"
#include "hardsq/grid.hpp"

namespace hardsq {

namespace {

using Json = nlohmann::ordered_json;

Json pieces_json(const Arrangement& arr) {
  Json out = Json::array();
  for (const auto& pc : arr.pieces())
    out.push_back({int(pc.col), int(pc.row), int(pc.extend_left), int(pc.extend_down)});
  return out;
}

}  // namespace

std::string complex_json(int n, int p, int q) {
  validate_instance(n, p, q);
  Json out = Json::array();
  std::uint64_t id = 0;
  for_each_cell(n, p, q, [&](const Arrangement& c) {
    Json cell;
    cell["id"] = id++;
    cell["pieces"] = pieces_json(c);
    cell["dim"] = c.dimension();
    out.push_back(std::move(cell));
    return true;
  });
  return out.dump();
}

std::string apex_graph_json(const ApexGraph& g) {
  Json j;
  j["apex"] = pieces_json(g.apex());
  Json vertices = Json::array();
  for (int i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    Json vj;
    vj["index"] = i;
    vj["x2"] = v.col2;
    vj["y2"] = v.row2;
    vj["piece"] = v.piece;
    vj["extension"] = v.kind == Extension::Left ? "left" : "down";
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  Json paths = Json::array();
  for (const auto& path : g.paths()) {
    Json members = Json::array();
    for (int t = 0; t < path.length; ++t) members.push_back(path.first + t);
    paths.push_back(std::move(members));
  }
  j["paths"] = std::move(paths);
  Json allocation = Json::array();
  for (const auto& halves : half_square_allocation(g)) {
    Json list = Json::array();
    for (const auto& h : halves)
      list.push_back({h.col, h.row, h.half == Half::UpperLeft ? "upper-left" : "lower-right"});
    allocation.push_back(std::move(list));
  }
  j["allocation"] = std::move(allocation);
  return j.dump();
}

}  // namespace hardsq

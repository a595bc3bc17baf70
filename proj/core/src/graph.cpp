#include "gbh/graph.hpp"

#include <algorithm>
#include <set>

namespace gbh {

int Graph::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Graph::edge_index(const std::string& id) const {
  auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
  if (it == edge_ids_.end() || *it != id) return -1;
  return static_cast<int>(it - edge_ids_.begin());
}

int Graph::require_vertex(const std::string& id) const {
  int i = vertex_index(id);
  if (i < 0) fail(Errc::UnknownVertex, "no vertex '" + id + "'");
  return i;
}

int Graph::require_edge(const std::string& id) const {
  int i = edge_index(id);
  if (i < 0) fail(Errc::UnknownEdge, "no edge '" + id + "'");
  return i;
}

int Graph::edge_between(int u, int v) const {
  for (int e : incident_[u]) {
    if (edges_[e].u == v || edges_[e].v == v) return e;
  }
  return -1;
}

bool Graph::has_isolated_vertex() const {
  for (const auto& inc : incident_)
    if (inc.empty()) return true;
  return false;
}

bool Graph::adjacency_same(const Graph& o) const {
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v) return false;
  return true;
}

Graph build_graph(const std::vector<std::string>& vertex_ids, const std::vector<EdgeSpec>& edge_list) {
  Graph g;
  g.vertices_ = vertex_ids;
  std::sort(g.vertices_.begin(), g.vertices_.end());
  for (size_t i = 1; i < g.vertices_.size(); ++i)
    if (g.vertices_[i] == g.vertices_[i - 1])
      fail(Errc::DuplicateId, "vertex id '" + g.vertices_[i] + "' declared twice");

  std::vector<Graph::Edge> edges;
  std::vector<std::string> ids;
  edges.reserve(edge_list.size());
  for (const auto& [id, ends] : edge_list) {
    int u = g.vertex_index(ends.first);
    int v = g.vertex_index(ends.second);
    if (u < 0) fail(Errc::UnknownEndpoint, "edge '" + id + "' endpoint '" + ends.first + "' not a vertex");
    if (v < 0) fail(Errc::UnknownEndpoint, "edge '" + id + "' endpoint '" + ends.second + "' not a vertex");
    if (u == v) fail(Errc::LoopEdge, "edge '" + id + "' has equal endpoints");
    if (u > v) std::swap(u, v);
    edges.push_back({id, u, v});
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id)
      fail(Errc::DuplicateId, "edge id '" + edges[i].id + "' declared twice");

  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges)
    if (!seen.insert({e.u, e.v}).second)
      fail(Errc::ParallelEdge, "edge '" + e.id + "' duplicates an endpoint pair");

  g.edges_ = std::move(edges);
  g.edge_ids_.reserve(g.edges_.size());
  for (const auto& e : g.edges_) g.edge_ids_.push_back(e.id);

  g.incident_.assign(g.vertices_.size(), {});
  for (int i = 0; i < g.edge_count(); ++i) {
    g.incident_[g.edges_[i].u].push_back(i);
    g.incident_[g.edges_[i].v].push_back(i);
  }
  return g;
}

std::vector<HalfEdge> half_edges_at(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) fail(Errc::UnknownVertex, "vertex index out of range");
  std::vector<HalfEdge> out;
  out.reserve(g.incident_edges(v).size());
  for (int e : g.incident_edges(v)) out.push_back({v, e});
  return out;
}

std::vector<HalfEdge> half_edges_at(const Graph& g, const std::string& vertex_id) {
  return half_edges_at(g, g.require_vertex(vertex_id));
}

std::vector<int> essential_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) out.push_back(v);
  return out;
}

Subdivision subdivide(const Graph& g, int k) {
  if (k < 1) fail(Errc::InvalidK, "subdivision parameter must be >= 1");
  Subdivision s;
  if (k == 1) {
    s.graph = g;
    for (const auto& e : g.edges()) s.edge_paths[e.id] = {e.id};
    return s;
  }
  std::vector<std::string> verts = g.vertex_ids();
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    std::vector<std::string> chain;
    chain.push_back(g.vertex_id(e.u));
    for (int i = 1; i < k; ++i) {
      std::string mid = e.id + ":s" + std::to_string(i);
      verts.push_back(mid);
      chain.push_back(mid);
    }
    chain.push_back(g.vertex_id(e.v));
    auto& path = s.edge_paths[e.id];
    for (int i = 0; i < k; ++i) {
      std::string eid = e.id + ":p" + std::to_string(i);
      edges.push_back({eid, {chain[i], chain[i + 1]}});
      path.push_back(eid);
    }
  }
  s.graph = build_graph(verts, edges);
  return s;
}

GraphHom check_hom(std::vector<int> vertex_map, const Graph& g, const Graph& h) {
  if (static_cast<int>(vertex_map.size()) != g.vertex_count())
    fail(Errc::UnknownVertex, "vertex map is not total on the source");
  for (int img : vertex_map)
    if (img < 0 || img >= h.vertex_count()) fail(Errc::UnknownVertex, "vertex map image out of range");

  GraphHom hom;
  hom.source = &g;
  hom.target = &h;
  hom.vertex_map = std::move(vertex_map);
  hom.edge_map.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = hom.vertex_map[g.edge(e).u];
    int v = hom.vertex_map[g.edge(e).v];
    if (u == v)
      fail(Errc::NotAdjacencyPreserving, "edge '" + g.edge(e).id + "' collapses to a vertex");
    int img = h.edge_between(u, v);
    if (img < 0)
      fail(Errc::NotAdjacencyPreserving,
           "edge '" + g.edge(e).id + "' maps to a non-adjacent pair");
    hom.edge_map[e] = img;
  }
  std::vector<int> sorted = hom.vertex_map;
  std::sort(sorted.begin(), sorted.end());
  hom.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return hom;
}

GraphHom compose_or_check_hom(const std::map<std::string, std::string>& vertex_map, const Graph& g,
                              const Graph& h) {
  std::vector<int> vm(g.vertex_count(), -1);
  for (const auto& [from, to] : vertex_map) {
    int s = g.vertex_index(from);
    if (s < 0) fail(Errc::UnknownVertex, "map names unknown source vertex '" + from + "'");
    vm[s] = h.require_vertex(to);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (vm[v] < 0) fail(Errc::UnknownVertex, "map is missing vertex '" + g.vertex_id(v) + "'");
  return check_hom(std::move(vm), g, h);
}

GraphHom compose(const GraphHom& second, const GraphHom& first) {
  if (first.target != second.source && !(*first.target == *second.source))
    fail(Errc::DimensionMismatch, "homomorphisms are not composable");
  std::vector<int> vm(first.vertex_map.size());
  for (size_t v = 0; v < vm.size(); ++v) vm[v] = second.vertex_map[first.vertex_map[v]];
  return check_hom(std::move(vm), *first.source, *second.target);
}

GraphHom identity_hom(const Graph& g) {
  std::vector<int> vm(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vm[v] = v;
  return check_hom(std::move(vm), g, g);
}

Graph segment_graph() { return build_graph({"a", "b"}, {{"e1", {"a", "b"}}}); }

Graph path_graph(int edges) {
  std::vector<std::string> verts;
  std::vector<EdgeSpec> es;
  for (int i = 0; i <= edges; ++i) verts.push_back("v" + std::to_string(i));
  for (int i = 0; i < edges; ++i)
    es.push_back({"e" + std::to_string(i + 1), {verts[i], verts[i + 1]}});
  return build_graph(verts, es);
}

Graph cycle_graph(int n) {
  std::vector<std::string> verts;
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    es.push_back({"e" + std::to_string(i + 1), {verts[i], verts[(i + 1) % n]}});
  return build_graph(verts, es);
}

Graph star_graph(int leaves) {
  std::vector<std::string> verts = {"u"};
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= leaves; ++i) {
    verts.push_back("l" + std::to_string(i));
    es.push_back({"e" + std::to_string(i), {"u", "l" + std::to_string(i)}});
  }
  return build_graph(verts, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::string> verts;
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= a; ++i) verts.push_back("a" + std::to_string(i));
  for (int j = 1; j <= b; ++j) verts.push_back("b" + std::to_string(j));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      es.push_back({"a" + std::to_string(i) + "b" + std::to_string(j),
                    {"a" + std::to_string(i), "b" + std::to_string(j)}});
  return build_graph(verts, es);
}

}  // namespace gbh

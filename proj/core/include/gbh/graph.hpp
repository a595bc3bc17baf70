#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gbh/error.hpp"

namespace gbh {

// Finite graphs as 1-dimensional compact simplicial complexes: no loops,
// no parallel edges. Vertices and edges carry string ids; everything is
// stored sorted by id so downstream matrices are reproducible.
class Graph {
 public:
  struct Edge {
    std::string id;
    int u = -1;  // endpoint indices into vertex list, u < v
    int v = -1;
  };

  Graph() = default;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& vertex_id(int i) const { return vertices_[i]; }
  const Edge& edge(int i) const { return edges_[i]; }

  // -1 if absent
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  int require_vertex(const std::string& id) const;
  int require_edge(const std::string& id) const;

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  // incident edge indices, ascending (== ascending edge id)
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  // -1 if u,v not adjacent
  int edge_between(int u, int v) const;

  bool has_isolated_vertex() const;

  bool operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edge_ids_ == o.edge_ids_ && adjacency_same(o);
  }

 private:
  friend Graph build_graph(const std::vector<std::string>&,
                           const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>&);

  bool adjacency_same(const Graph& o) const;

  std::vector<std::string> vertices_;        // sorted
  std::vector<Edge> edges_;                  // sorted by id
  std::vector<std::string> edge_ids_;        // parallel to edges_
  std::vector<std::vector<int>> incident_;   // per vertex, ascending
};

// A half-edge is a pair (vertex, incident edge), both as indices.
struct HalfEdge {
  int vertex = -1;
  int edge = -1;
  auto operator<=>(const HalfEdge&) const = default;
};

// Vertex-map between graphs that preserves adjacency. Edge images are
// derived from the vertex map and cached.
struct GraphHom {
  const Graph* source = nullptr;
  const Graph* target = nullptr;
  std::vector<int> vertex_map;  // source vertex index -> target vertex index
  std::vector<int> edge_map;    // source edge index -> target edge index
  bool injective = false;
};

using EdgeSpec = std::pair<std::string, std::pair<std::string, std::string>>;

Graph build_graph(const std::vector<std::string>& vertex_ids, const std::vector<EdgeSpec>& edge_list);

// length mu(v), sorted by edge id
std::vector<HalfEdge> half_edges_at(const Graph& g, int v);
std::vector<HalfEdge> half_edges_at(const Graph& g, const std::string& vertex_id);

// vertices with mu(v) != 2, as indices
std::vector<int> essential_vertices(const Graph& g);

struct Subdivision {
  Graph graph;
  std::map<std::string, std::vector<std::string>> edge_paths;  // old edge id -> new edge ids
};

// replace each edge by a path of k edges (k = 1 is the identity)
Subdivision subdivide(const Graph& g, int k);

// validate a vertex map as a graph homomorphism; computes the edge map
// and the injectivity flag
GraphHom compose_or_check_hom(const std::map<std::string, std::string>& vertex_map, const Graph& g,
                              const Graph& h);
GraphHom check_hom(std::vector<int> vertex_map, const Graph& g, const Graph& h);

GraphHom compose(const GraphHom& second, const GraphHom& first);
GraphHom identity_hom(const Graph& g);

// Small built-in graphs used across tests and docs.
Graph segment_graph();
Graph path_graph(int edges);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

}  // namespace gbh

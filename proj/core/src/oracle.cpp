#include "gbh/oracle.hpp"

#include "gbh/homology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace gbh {

namespace {

std::vector<int> bfs_distances(const Graph& g, int start) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int e : g.incident_edges(u)) {
      int w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// shortest cycle length, or 0 when the graph is a forest
int girth(const Graph& g) {
  int best = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    // distance between the endpoints avoiding edge e
    int u = g.edge(e).u, v = g.edge(e).v;
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int f : g.incident_edges(x)) {
        if (f == e) continue;
        int w = g.edge(f).u == x ? g.edge(f).v : g.edge(f).u;
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[v] >= 0) {
      int cycle = dist[v] + 1;
      if (best == 0 || cycle < best) best = cycle;
    }
  }
  return best;
}

// Paths between distinct essential vertices need length >= n-1 and cycles
// need length >= n+1 for the discretized model to carry the homotopy type.
void check_sufficiently_subdivided(const Graph& g, int n) {
  if (n < 2) return;  // one particle is the graph itself
  std::vector<int> essential = essential_vertices(g);
  for (std::size_t i = 0; i < essential.size(); ++i) {
    std::vector<int> dist = bfs_distances(g, essential[i]);
    for (std::size_t j = i + 1; j < essential.size(); ++j) {
      int d = dist[essential[j]];
      if (d >= 0 && d < n - 1)
        fail(Errc::InsufficientSubdivision,
             "essential vertices '" + g.vertex_id(essential[i]) + "' and '" +
                 g.vertex_id(essential[j]) + "' are " + std::to_string(d) + " < n-1 apart");
    }
  }
  int c = girth(g);
  if (c != 0 && c < n + 1)
    fail(Errc::InsufficientSubdivision,
         "a cycle of length " + std::to_string(c) + " is shorter than n+1");
}

// A cell: sorted occupied edges and vertices, disjoint closures.
struct Cell {
  std::vector<int> edges;
  std::vector<int> verts;
  auto operator<=>(const Cell&) const = default;
};

struct CellTable {
  std::vector<std::vector<Cell>> by_dim;

  int index_of(int d, const Cell& c) const {
    const auto& v = by_dim[d];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || !(*it == c)) return -1;
    return static_cast<int>(it - v.begin());
  }
};

}  // namespace

DiscreteComplex discretized_complex(const Graph& g, int n, std::size_t budget) {
  check_sufficiently_subdivided(g, n);

  CellTable table;
  table.by_dim.resize(n + 1);
  std::size_t total = 0;

  std::vector<bool> vertex_blocked(g.vertex_count(), false);
  std::vector<int> chosen_edges, chosen_verts;

  // choose vertices from those not blocked by chosen edges, indices ascending
  std::function<void(int, int, int)> pick_verts = [&](int d, int from, int left) {
    if (left == 0) {
      table.by_dim[d].push_back({chosen_edges, chosen_verts});
      if (++total > budget) fail(Errc::BudgetExceeded, "discretized cell count exceeds the budget");
      return;
    }
    for (int v = from; v <= g.vertex_count() - left; ++v) {
      if (vertex_blocked[v]) continue;
      chosen_verts.push_back(v);
      pick_verts(d, v + 1, left - 1);
      chosen_verts.pop_back();
    }
  };

  std::function<void(int, int)> pick_edges = [&](int from, int left) {
    int d = static_cast<int>(chosen_edges.size());
    pick_verts(d, 0, n - d);
    if (left == 0) return;
    for (int e = from; e < g.edge_count(); ++e) {
      int u = g.edge(e).u, v = g.edge(e).v;
      if (vertex_blocked[u] || vertex_blocked[v]) continue;
      chosen_edges.push_back(e);
      vertex_blocked[u] = vertex_blocked[v] = true;
      pick_edges(e + 1, left - 1);
      vertex_blocked[u] = vertex_blocked[v] = false;
      chosen_edges.pop_back();
    }
  };
  pick_edges(0, n);

  DiscreteComplex out;
  out.particles = n;
  out.cells_per_dim.reserve(n + 1);
  for (const auto& cells : table.by_dim) out.cells_per_dim.push_back(cells.size());

  out.boundaries.reserve(n + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<Triplet> trips;
    int rows = d > 0 ? static_cast<int>(table.by_dim[d - 1].size()) : 0;
    if (d > 0) {
      for (int col = 0; col < static_cast<int>(table.by_dim[d].size()); ++col) {
        const Cell& c = table.by_dim[d][col];
        for (int i = 0; i < d; ++i) {
          int e = c.edges[i];
          int sign = i % 2 == 0 ? 1 : -1;
          for (int endpoint : {g.edge(e).v, g.edge(e).u}) {  // head then tail
            Cell face;
            face.edges = c.edges;
            face.edges.erase(face.edges.begin() + i);
            face.verts = c.verts;
            face.verts.insert(std::lower_bound(face.verts.begin(), face.verts.end(), endpoint),
                              endpoint);
            int r = table.index_of(d - 1, face);
            if (r < 0) fail(Errc::ExactnessFailure, "discretized face is not a cell");
            trips.push_back({r, col, endpoint == g.edge(e).v ? sign : -sign});
          }
        }
      }
    }
    out.boundaries.push_back(IntegerMatrix::from_triplets(
        rows, static_cast<int>(table.by_dim[d].size()), std::move(trips)));
  }
  return out;
}

AbelianGroup oracle_homology(const Graph& g, int n, int q, std::size_t budget) {
  if (q < 0) return {};
  Subdivision sub = subdivide(g, n + 1);
  DiscreteComplex complex = discretized_complex(sub.graph, n, budget);
  if (q > n) return {};
  const IntegerMatrix& d_out = complex.boundaries[q];
  IntegerMatrix d_in = q + 1 <= n ? complex.boundaries[q + 1]
                                  : IntegerMatrix(static_cast<int>(complex.cells_per_dim[q]), 0);
  return homology_at(d_in, d_out);
}

}  // namespace gbh

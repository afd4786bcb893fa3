#include "kplex/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

namespace kplex {

Graph::Graph(std::vector<EdgeIndex> offsets, std::vector<VertexId> adjacency,
             std::vector<ExternalId> original_ids)
    : offsets_(std::move(offsets)),
      adjacency_(std::move(adjacency)),
      original_ids_(std::move(original_ids)) {}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<ExternalId, ExternalId>> Graph::edge_list() const {
  std::vector<std::pair<ExternalId, ExternalId>> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(original_ids_[u], original_ids_[v]);
    }
  }
  return out;
}

Graph build_graph(std::span<const std::pair<ExternalId, ExternalId>> edge_pairs) {
  std::unordered_map<ExternalId, VertexId> to_internal;
  std::vector<ExternalId> original_ids;
  auto intern = [&](ExternalId x) {
    auto [it, inserted] = to_internal.try_emplace(x, static_cast<VertexId>(original_ids.size()));
    if (inserted) original_ids.push_back(x);
    return it->second;
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(edge_pairs.size());
  for (auto [a, b] : edge_pairs) {
    VertexId u = intern(a);
    VertexId v = intern(b);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::size_t n = original_ids.size();
  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (auto [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

  std::vector<VertexId> adjacency(offsets[n]);
  std::vector<EdgeIndex> cursor(offsets.begin(), offsets.end() - 1);
  // Edges are sorted by (u, v) with u < v: smaller neighbors first, then
  // larger ones, leaves every list ascending.
  for (auto [u, v] : edges) adjacency[cursor[v]++] = u;
  for (auto [u, v] : edges) adjacency[cursor[u]++] = v;
  return Graph(std::move(offsets), std::move(adjacency), std::move(original_ids));
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyOrder ord;
  ord.eta.reserve(n);
  ord.position.assign(n, 0);
  ord.core.assign(n, 0);

  std::vector<VertexId> deg(n);
  std::vector<std::uint8_t> removed(n, 0);
  using Entry = std::pair<VertexId, VertexId>;  // (current degree, vertex)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<VertexId>(g.degree(v));
    heap.emplace(deg[v], v);
  }

  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (removed[v] || d != deg[v]) continue;  // stale entry
    removed[v] = 1;
    ord.position[v] = static_cast<VertexId>(ord.eta.size());
    ord.eta.push_back(v);
    ord.core[v] = d;
    ord.degeneracy = std::max<std::size_t>(ord.degeneracy, d);
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w]) heap.emplace(--deg[w], w);
    }
  }
  return ord;
}

std::vector<VertexId> later_neighbors(const Graph& g, const DegeneracyOrder& ord, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId w : g.neighbors(v)) {
    if (ord.precedes(v, w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [&](VertexId a, VertexId b) { return ord.position[a] < ord.position[b]; });
  return out;
}

std::vector<VertexId> two_hop_later(const Graph& g, const DegeneracyOrder& ord, VertexId v) {
  NeighborhoodScanner scanner(g);
  return scanner.scan(ord, v).later_two_hop;
}

NeighborhoodScanner::NeighborhoodScanner(const Graph& g)
    : graph_(&g), mark_(g.num_vertices(), 0) {}

Neighborhood NeighborhoodScanner::scan(const DegeneracyOrder& ord, VertexId v) {
  const Graph& g = *graph_;
  Neighborhood out;
  mark_[v] = 1;
  for (VertexId w : g.neighbors(v)) {
    mark_[w] = 1;
    (ord.precedes(w, v) ? out.earlier_one_hop : out.later_one_hop).push_back(w);
  }
  for (VertexId w : g.neighbors(v)) {
    for (VertexId x : g.neighbors(w)) {
      if (mark_[x]) continue;
      mark_[x] = 1;
      (ord.precedes(x, v) ? out.earlier_two_hop : out.later_two_hop).push_back(x);
    }
  }
  mark_[v] = 0;
  for (VertexId w : g.neighbors(v)) mark_[w] = 0;
  for (VertexId x : out.earlier_two_hop) mark_[x] = 0;
  for (VertexId x : out.later_two_hop) mark_[x] = 0;

  auto by_position = [&](VertexId a, VertexId b) { return ord.position[a] < ord.position[b]; };
  std::sort(out.earlier_one_hop.begin(), out.earlier_one_hop.end(), by_position);
  std::sort(out.earlier_two_hop.begin(), out.earlier_two_hop.end(), by_position);
  std::sort(out.later_one_hop.begin(), out.later_one_hop.end(), by_position);
  std::sort(out.later_two_hop.begin(), out.later_two_hop.end(), by_position);
  return out;
}

}  // namespace kplex

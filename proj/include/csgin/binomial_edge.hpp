#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csgin/groebner.hpp"

namespace csgin {

/// Simple undirected graph on vertices 0..n-1 (printed 1-based).
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  /// {"n": int, "edges": [[i, j], ...]} with 1-based labels.
  static Graph from_json(const std::string& text);
  /// Lines "i j" (1-based); n is the largest label. Blank lines and '#' comments are skipped.
  static Graph from_edge_list(const std::string& text);

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph star(int leaves);

  int num_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  /// Number of connected components of the subgraph induced on the vertex mask.
  int components(std::uint32_t vertices) const;
  bool connected() const { return components((n_ == 32 ? 0u : (1u << n_)) - 1u) <= 1; }

  Graph relabel(const std::vector<int>& perm) const;
  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint32_t> adj_;
};

/// Connected graphs on 1..max_vertices vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to(int max_vertices);

/// n blocks (x_i, y_i), deg x_i = deg y_i = e_i.
RingPtr edge_ring(int n, std::uint32_t characteristic);

std::size_t x_var(int vertex);
std::size_t y_var(int vertex);

template <FieldElement K>
Ideal<K> binomial_edge_ideal(const Graph& g, const RingPtr& ring) {
  if (ring->num_vars() != static_cast<std::size_t>(2 * g.num_vertices()))
    throw std::invalid_argument("ring does not match the graph");
  std::vector<Polynomial<K>> gens;
  for (auto [i, j] : g.edges()) {
    auto xi = Polynomial<K>::variable(ring, x_var(i));
    auto yj = Polynomial<K>::variable(ring, y_var(j));
    auto xj = Polynomial<K>::variable(ring, x_var(j));
    auto yi = Polynomial<K>::variable(ring, y_var(i));
    gens.push_back(xi * yj - xj * yi);
  }
  return Ideal<K>(ring, std::move(gens));
}

/// Generated by y_{a_1}...y_{a_v} x_i x_j over simple paths i, a_1, ..., a_v, j with i < j.
MonomialIdeal path_gin(const Graph& g, const RingPtr& ring);

/// U_{T,E} over admissible T and choices E of one vertex per component of G_T.
std::vector<MonomialIdeal> gin_minimal_primes(const Graph& g, const RingPtr& ring);

}  // namespace csgin

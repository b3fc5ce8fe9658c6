#pragma once

#include <logan/graph.hh>

#include <vector>

namespace logan {

/// Left-right planarity test (Brandes' formulation of the de Fraysseix-Rosenstiehl
/// criterion). Undirected graphs only; directed input is tested on its underlying
/// simple graph.
auto is_planar(const Graph & g) -> bool;

/// A subdivision of K5 or K3,3 inside a nonplanar g, found by deleting every edge
/// whose removal keeps the graph nonplanar. Empty when g is planar.
auto kuratowski_subgraph(const Graph & g) -> std::vector<Edge>;

/// True iff `edges` (ignoring isolated vertices) form a subdivision of K5 or K3,3.
auto is_kuratowski_subdivision(std::size_t n, const std::vector<Edge> & edges) -> bool;

} // namespace logan

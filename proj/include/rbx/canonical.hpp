#pragma once

#include <cstdint>
#include <vector>

#include "rbx/hypergraph.hpp"

namespace rbx {

/// Largest vertex count accepted by the canonical labeling (C(11, 2) bits fit in 64).
inline constexpr int kCanonicalMaxVertices = 11;
/// Largest vertex count for which all isomorphism classes are generated.
inline constexpr int kGenerationMaxVertices = 9;

/// Upper-triangle adjacency bits of a 2-graph under `position` (vertex ->
/// new label); pair (i, j) with i < j in lexicographic order, first pair in
/// the most significant used bit.
std::uint64_t adjacency_code(const Hypergraph& g, const std::vector<int>& position);

/// Canonical labeling: isomorphic 2-graphs get equal codes under their
/// labelings. Colour refinement with individualization; branches are pruned
/// by automorphisms found on the way.
std::vector<int> canonical_labeling(const Hypergraph& g);

std::uint64_t canonical_code(const Hypergraph& g);

Hypergraph canonical_form(const Hypergraph& g);

/// 2-graph on n vertices with the given adjacency code.
Hypergraph graph_from_code(int n, std::uint64_t code);

/// One graph per isomorphism class on exactly n vertices, in canonical
/// labeling, sorted by (edge count, code). Results are cached per n.
std::vector<Hypergraph> nonisomorphic_graphs(int n, int threads = 1);

}  // namespace rbx

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbx/chromatic.hpp"
#include "rbx/hypergraph.hpp"
#include "rbx/oracles.hpp"
#include "rbx/partition.hpp"
#include "rbx/rainbow.hpp"

namespace rbx {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Size of the greedy rainbow collection of (F - e)^(r) for one edge e.
struct CollectionCheck {
  Edge removed;
  std::size_t size = 0;
  std::uint64_t bound = 0;
  std::uint64_t nodes = 0;
};

/// Record of colorings with one color more than the construction. Never
/// part of the verdict.
struct Observation {
  std::uint64_t colors = 0;
  int samples = 0;
  int forced_rainbow = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string scenario;
  int n = 0;
  int r = 0;
  int p = 0;
  std::optional<int> ell;
  Hypergraph skeleton;
  std::optional<std::uint64_t> expected_colors;
  std::optional<std::uint64_t> observed_colors;
  std::optional<bool> rainbow_found;
  std::uint64_t rainbow_nodes = 0;
  std::optional<std::uint64_t> ar;
  std::optional<std::uint64_t> ex;
  std::vector<CollectionCheck> collections;
  std::vector<Check> checks;
  bool pass = false;
  std::vector<std::string> reasons;
  std::optional<Observation> observational;
};

struct VerifyOptions {
  SearchOptions search;
  OracleOptions oracle;
  /// run the greedy collection sweep on rainbow-free constructions
  bool collection_sweep = true;
  int observational_samples = 0;
  std::uint64_t seed = 0;
};

/// Builds the construction for (n, p, r, l), checks its exact color count
/// and searches exhaustively for a rainbow F^(r). Throws PreconditionFailed
/// unless F is doubly edge-p-critical of class l (r = 3) or p > r (r >= 4).
VerificationReport verify_lower_bound(int n, int p, int r, int ell, const Hypergraph& f, const VerifyOptions& opts = {});

/// Oracle cross-check on a small host: ar against ex of {(F - e)^(r)} plus
/// rainbow-freeness of the trivial coloring and of the optimal ar coloring.
VerificationReport verify_small_case(int n, int r, const Hypergraph& f, const VerifyOptions& opts = {});

struct CorpusEntry {
  Hypergraph graph;
  CriticalityReport report;
  ClassResult cls;
  /// tested for class >= 3 members only
  std::optional<VertexPartition> config_witness;
};

struct ScanResult {
  int max_vertices = 0;
  int p = 0;
  std::uint64_t graphs_examined = 0;
  std::vector<CorpusEntry> corpus;
  std::size_t class_ge3_tested = 0;
  std::size_t class_ge3_failed = 0;
};

/// Doubly edge-p-critical graphs without isolated vertices on at most
/// max_vertices vertices, one per isomorphism class, ordered by (vertex
/// count, edge count, canonical code). Members of class >= 3 are checked
/// for a (2, 0, ..., 0) partition.
ScanResult scan_doubly_critical(int max_vertices, int p, int threads = 1);

/// Fixed-width text table, one scenario per row.
std::string report_table(const std::vector<VerificationReport>& reports);

}  // namespace rbx

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rbx/chromatic.hpp"
#include "rbx/constructions.hpp"
#include "rbx/hypergraph.hpp"
#include "rbx/oracles.hpp"
#include "rbx/partition.hpp"
#include "rbx/rainbow.hpp"
#include "rbx/verify.hpp"

namespace rbx {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(std::string_view text);

// Readers throw ParseError naming the offending JSON path.
Hypergraph hypergraph_from_json(const Json& j, const std::string& path = "");
EdgeColoring coloring_from_json(const Json& j, const std::string& path = "");
VertexPartition partition_from_json(const Json& j, const std::string& path = "");
RainbowCopy rainbow_copy_from_json(const Json& j, const std::string& path = "");

Hypergraph parse_hypergraph(std::string_view text);
EdgeColoring parse_coloring(std::string_view text);
VertexPartition parse_partition(std::string_view text);

Json to_json(const Hypergraph& g);
Json to_json(const EdgeColoring& c);
Json to_json(const VertexPartition& p);
Json to_json(const RainbowCopy& c);
Json to_json(const IndexVector& v);
Json to_json(const CriticalityReport& r);
Json to_json(const ClassResult& c);
Json to_json(const Check& c);
Json to_json(const VerificationReport& r);
Json to_json(const ScanResult& s);
Json to_json(const CrossingSplit& s);

/// Oracle report: {"value", "witness", "certified", "nodes_explored"}.
Json oracle_json(const Json& value, const Json& witness, bool certified, std::uint64_t nodes);

std::string serialize(const Hypergraph& g);
std::string serialize(const EdgeColoring& c);
std::string serialize(const VertexPartition& p);

/// Compact single-line dump followed by a newline.
std::string dump_line(const Json& j);

}  // namespace rbx

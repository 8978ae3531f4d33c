#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "transit/graph.hpp"
#include "transit/ingest.hpp"
#include "transit/metrics.hpp"

namespace transit {

enum class NetworkSelection { Full, Accessible, Both };
enum class Command { Build, Centrality, Figures, Socio, All };

std::string_view to_string(Command c);

struct RunOptions {
  DatasetPaths inputs;
  NetworkSelection networks = NetworkSelection::Both;
  ClosenessConvention convention = ClosenessConvention::NMinusOne;
  std::filesystem::path out_dir;
  std::size_t top_k = 10;
  // reference.json with published figures; compared in the manifest
  std::optional<std::filesystem::path> reference;
  unsigned threads = 0;
};

struct NetworkStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  DiameterReport diameter;
};

NetworkStats network_stats(const TransitGraph& g);

struct NetworkResults {
  NetworkKind kind = NetworkKind::Full;
  TransitGraph graph;
  NetworkStats stats;
  CentralityTable betweenness;
  CentralityTable closeness;
  CentralityTable degree;
  DegreeDistribution distribution;
  std::optional<PowerLawFit> fit;  // empty without enough distinct degrees
};

struct Analysis {
  Dataset data;
  std::vector<NetworkResults> networks;  // full before accessible
  std::set<StationId> accessible_ids;    // accessible-network node set
  std::vector<std::string> warnings;
};

// Builds the selected networks and, when with_metrics, every centrality
// table. Checks the documented invariants and throws InvariantViolation on
// any breach.
Analysis analyze(const Dataset& data, NetworkSelection selection, ClosenessConvention convention,
                 MetricsOptions options, bool with_metrics = true);

struct WrittenFile {
  std::string name;  // relative to out_dir
  std::string sha256;
};

struct RunResult {
  std::vector<WrittenFile> files;  // includes manifest.json, last
  std::vector<std::string> warnings;
};

// Runs one subcommand and writes its outputs plus manifest.json into
// out_dir (created if needed).
RunResult run(Command command, const RunOptions& options);

std::string sha256_hex(std::string_view bytes);

}  // namespace transit

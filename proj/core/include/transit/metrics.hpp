#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

enum class Measure { Betweenness, Closeness, Degree };
enum class ClosenessConvention { NMinusOne, N };

std::string_view to_string(Measure m);
std::string_view to_string(ClosenessConvention c);

struct CentralityTable {
  Measure measure = Measure::Degree;
  NetworkKind graph_kind = NetworkKind::Full;
  std::map<StationId, double> scores;  // one entry per node
};

struct MetricsOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

// TRANSIT_ACCESS_THREADS, or 0 when unset. Throws BadValue on junk.
unsigned threads_from_env();

// Brandes accumulation over all sources. Each unordered pair (s, t) adds
// sigma_st(i) / sigma_st to every interior i; totals are scaled by
// 2 / ((N-1)(N-2)). N counts every node, whatever the component layout.
// Throws EmptyGraph, or TooSmall for N < 3.
//
// Sources are split into fixed-size chunks summed in chunk order, so the
// result is bit-identical for every thread count.
CentralityTable betweenness_all(const TransitGraph& g, NetworkKind kind = NetworkKind::Full,
                                MetricsOptions options = {});

// NMinusOne: (n_i - 1) / sum_j d_ij * (n_i - 1) / (N - 1), with n_i the size
// of i's component. N: N / sum_j d_ij over reachable j; this can exceed 1
// (a star's hub scores N / (N - 1)). Isolated nodes score 0 under both.
CentralityTable closeness_all(const TransitGraph& g,
                              ClosenessConvention convention = ClosenessConvention::NMinusOne,
                              NetworkKind kind = NetworkKind::Full, MetricsOptions options = {});

// degree / (N - 1); 0 on a single-node graph.
CentralityTable degree_centrality(const TransitGraph& g, NetworkKind kind = NetworkKind::Full);

struct DegreeDistribution {
  std::map<std::size_t, std::size_t> counts;  // degree -> nodes
  std::size_t total = 0;

  double p(std::size_t k) const;
  // counts normalised by total
  std::map<std::size_t, double> frequencies() const;
};

DegreeDistribution degree_distribution(const TransitGraph& g);

struct PowerLawFit {
  double gamma = 0;      // negated slope
  double intercept = 0;  // of log p = intercept - gamma log k
  double r_squared = 0;
  std::vector<std::size_t> k_support;
};

// Least squares on (log k, log p(k)) over k >= 1 with p(k) > 0. Throws
// InsufficientSupport with fewer than 3 such degrees.
PowerLawFit fit_power_law(const std::map<std::size_t, double>& pk);
PowerLawFit fit_power_law(const DegreeDistribution& d);

// Descending score, ties by ascending id. k > N returns every node.
std::vector<std::pair<StationId, double>> top_k(const CentralityTable& t, std::size_t k);

}  // namespace transit

#pragma once

// Seeded random graphs and synthetic transit systems.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "transit/graph.hpp"
#include "transit/ingest.hpp"

namespace gen {

using Rng = std::mt19937_64;

// Zero-padded so lexicographic id order matches numeric order.
inline std::string node_id(std::size_t i) {
  auto digits = std::to_string(i);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return "v" + digits;
}

inline transit::TransitGraph empty_graph(std::size_t n) {
  transit::TransitGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(node_id(i));
  return g;
}

inline void edge(transit::TransitGraph& g, std::size_t a, std::size_t b) {
  g.add_edge(node_id(a), node_id(b), "x");
}

inline transit::TransitGraph path(std::size_t n) {
  auto g = empty_graph(n);
  for (std::size_t i = 1; i < n; ++i) edge(g, i - 1, i);
  return g;
}

inline transit::TransitGraph cycle(std::size_t n) {
  auto g = path(n);
  if (n > 2) edge(g, n - 1, 0);
  return g;
}

// Node 0 is the hub.
inline transit::TransitGraph star(std::size_t leaves) {
  auto g = empty_graph(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) edge(g, 0, i);
  return g;
}

inline transit::TransitGraph random_tree(std::size_t n, Rng& rng) {
  auto g = empty_graph(n);
  for (std::size_t i = 1; i < n; ++i) edge(g, std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  return g;
}

inline transit::TransitGraph erdos_renyi(std::size_t n, double p, Rng& rng) {
  auto g = empty_graph(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edge(g, i, j);
  return g;
}

// Two random pieces plus a couple of isolated nodes.
inline transit::TransitGraph disconnected(std::size_t n, Rng& rng) {
  auto g = empty_graph(n);
  const std::size_t cut = n / 2;
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 2 < n; ++j)
      if ((i < cut) == (j < cut) && coin(rng)) edge(g, i, j);
  return g;
}

struct System {
  std::vector<transit::Station> stations;
  std::vector<transit::LineBranch> branches;
  std::vector<transit::AccessibilityRecord> access;

  transit::Dataset dataset() const { return {stations, branches, access, {}}; }
};

// A few lines, each with one to three branches over random distinct
// stations; every (station, line) pair gets a random access mode.
inline System random_system(Rng& rng, double p_full = 0.5) {
  std::uniform_int_distribution<std::size_t> n_stations(6, 30), n_lines(1, 4), n_branches(1, 3);
  const std::size_t n = n_stations(rng);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("s" + node_id(i).substr(1));

  System sys;
  std::vector<std::set<transit::LineId>> lines_of(n);
  const std::size_t lines = n_lines(rng);
  for (std::size_t l = 0; l < lines; ++l) {
    const std::string line = "line" + std::to_string(l);
    const std::size_t branches = n_branches(rng);
    for (std::size_t b = 0; b < branches; ++b) {
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      const std::size_t len = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(n, 12))(rng);
      transit::LineBranch br{line, "b" + std::to_string(b), {}};
      for (std::size_t i = 0; i < len; ++i) {
        br.stations.push_back(ids[order[i]]);
        lines_of[order[i]].insert(line);
      }
      sys.branches.push_back(std::move(br));
    }
  }
  std::discrete_distribution<int> mode({p_full, (1 - p_full) / 2, (1 - p_full) / 2});
  for (std::size_t i = 0; i < n; ++i) {
    if (lines_of[i].empty()) lines_of[i].insert("line0");
    sys.stations.push_back(transit::Station{ids[i], "Station " + std::to_string(i), "Borough" + std::to_string(i % 3),
                                            static_cast<int>(1 + i % 6),
                                            {lines_of[i].begin(), lines_of[i].end()}});
    for (const auto& l : lines_of[i]) {
      const int m = mode(rng);
      if (m == 2 && (i % 2)) continue;  // some pairs carry no record at all
      sys.access.push_back({ids[i], l, m == 0 ? transit::AccessMode::Full
                                       : m == 1 ? transit::AccessMode::OneWay
                                                : transit::AccessMode::None});
    }
  }
  std::sort(sys.branches.begin(), sys.branches.end(), [](const auto& a, const auto& b) {
    return std::tie(a.line_id, a.branch_id) < std::tie(b.line_id, b.branch_id);
  });
  return sys;
}

}  // namespace gen

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "transit/types.hpp"

namespace transit {

// Hop count; std::nullopt means unreachable.
using HopCount = std::optional<std::uint32_t>;

// Dense index view of a TransitGraph. Node i is the i-th id in ascending
// order and every neighbour list is ascending, so algorithms running over it
// see the same structure whatever order the graph was built in.
class IndexedGraph {
 public:
  std::size_t size() const noexcept { return ids_.size(); }
  const StationId& id(std::size_t i) const { return ids_[i]; }
  const std::vector<StationId>& ids() const noexcept { return ids_; }
  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::optional<std::size_t> index_of(const StationId& id) const;

 private:
  friend class TransitGraph;
  std::vector<StationId> ids_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

// Undirected simple graph with per-edge line labels. Parallel edges collapse
// into one edge whose label set accumulates every line that produced it.
class TransitGraph {
 public:
  struct Edge {
    StationId u;  // u < v
    StationId v;
    std::set<LineId> lines;

    bool operator==(const Edge&) const = default;
  };

  void add_node(const StationId& id);
  // Registers the node and attaches (or replaces) its station record.
  void add_node(const Station& station);
  void add_edge(const StationId& u, const StationId& v, const LineId& line);

  bool has_node(const StationId& id) const { return nodes_.contains(id); }
  bool has_edge(const StationId& u, const StationId& v) const;
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  // Ascending ids.
  std::vector<StationId> node_ids() const;
  // Ascending by (u, v).
  std::vector<Edge> edges() const;
  const std::set<LineId>& edge_lines(const StationId& u, const StationId& v) const;
  const std::set<StationId>& neighbors(const StationId& id) const;
  std::size_t degree(const StationId& id) const { return neighbors(id).size(); }
  // nullptr for nodes added by bare id.
  const Station* station(const StationId& id) const;

  IndexedGraph indexed() const;

  bool operator==(const TransitGraph&) const = default;

 private:
  struct Node {
    std::optional<Station> station;
    std::set<StationId> adjacent;

    bool operator==(const Node&) const = default;
  };
  const Node& node(const StationId& id) const;

  std::map<StationId, Node> nodes_;
  std::map<std::pair<StationId, StationId>, std::set<LineId>> edges_;
};

std::map<StationId, HopCount> bfs_distances(const TransitGraph& g, const StationId& source);

// Components as ascending id lists, largest first; equal sizes ordered by
// their smallest id.
std::vector<std::vector<StationId>> connected_components(const TransitGraph& g);

struct DiameterReport {
  std::uint32_t diameter = 0;  // within the largest component
  bool connected = true;
  std::size_t component_count = 0;
  std::size_t largest_component_size = 0;
  // Every component other than the largest.
  std::vector<std::vector<StationId>> stranded;
};

DiameterReport diameter(const TransitGraph& g);

// Index-space BFS used by the metric kernels. Writes hop counts into dist
// (-1 for unreachable) and returns the visit order.
void bfs_hops(const IndexedGraph& g, std::size_t source, std::vector<std::int32_t>& dist,
              std::vector<std::uint32_t>& order);

}  // namespace transit

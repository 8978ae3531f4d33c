#include "transit/graph.hpp"

#include <algorithm>

#include "transit/errors.hpp"

namespace transit {

std::string_view to_string(NetworkKind kind) {
  return kind == NetworkKind::Full ? "full" : "accessible";
}

std::optional<std::size_t> IndexedGraph::index_of(const StationId& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

namespace {

std::pair<StationId, StationId> key(const StationId& u, const StationId& v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

void TransitGraph::add_node(const StationId& id) {
  if (id.empty()) throw Error(ErrorKind::UnknownNode, "empty station id");
  nodes_.try_emplace(id);
}

void TransitGraph::add_node(const Station& station) {
  if (station.id.empty()) throw Error(ErrorKind::UnknownNode, "empty station id");
  nodes_[station.id].station = station;
}

void TransitGraph::add_edge(const StationId& u, const StationId& v, const LineId& line) {
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at '" + u + "' on line '" + line + "'");
  auto iu = nodes_.find(u);
  if (iu == nodes_.end()) throw Error(ErrorKind::UnknownNode, "'" + u + "' is not a node");
  auto iv = nodes_.find(v);
  if (iv == nodes_.end()) throw Error(ErrorKind::UnknownNode, "'" + v + "' is not a node");
  iu->second.adjacent.insert(v);
  iv->second.adjacent.insert(u);
  edges_[key(u, v)].insert(line);
}

bool TransitGraph::has_edge(const StationId& u, const StationId& v) const {
  return edges_.contains(key(u, v));
}

std::vector<StationId> TransitGraph::node_ids() const {
  std::vector<StationId> out;
  out.reserve(nodes_.size());
  for (const auto& [id, _] : nodes_) out.push_back(id);
  return out;
}

std::vector<TransitGraph::Edge> TransitGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [k, lines] : edges_) out.push_back({k.first, k.second, lines});
  return out;
}

const std::set<LineId>& TransitGraph::edge_lines(const StationId& u, const StationId& v) const {
  auto it = edges_.find(key(u, v));
  if (it == edges_.end()) throw Error(ErrorKind::UnknownEdge, "no edge '" + u + "' - '" + v + "'");
  return it->second;
}

const TransitGraph::Node& TransitGraph::node(const StationId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw Error(ErrorKind::UnknownNode, "'" + id + "' is not a node");
  return it->second;
}

const std::set<StationId>& TransitGraph::neighbors(const StationId& id) const {
  return node(id).adjacent;
}

const Station* TransitGraph::station(const StationId& id) const {
  const auto& n = node(id);
  return n.station ? &*n.station : nullptr;
}

IndexedGraph TransitGraph::indexed() const {
  IndexedGraph out;
  out.ids_ = node_ids();
  out.offsets_.reserve(out.ids_.size() + 1);
  out.targets_.reserve(2 * edges_.size());
  // Both the node map and each adjacency set iterate in id order, so target
  // indices come out ascending without a sort.
  for (const auto& [id, n] : nodes_) {
    for (const auto& nb : n.adjacent) {
      out.targets_.push_back(static_cast<std::uint32_t>(*out.index_of(nb)));
    }
    out.offsets_.push_back(static_cast<std::uint32_t>(out.targets_.size()));
  }
  return out;
}

void bfs_hops(const IndexedGraph& g, std::size_t source, std::vector<std::int32_t>& dist,
              std::vector<std::uint32_t>& order) {
  dist.assign(g.size(), -1);
  order.clear();
  order.reserve(g.size());
  dist[source] = 0;
  order.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto u = order[head];
    for (auto w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
    }
  }
}

std::map<StationId, HopCount> bfs_distances(const TransitGraph& g, const StationId& source) {
  const auto ig = g.indexed();
  const auto s = ig.index_of(source);
  if (!s) throw Error(ErrorKind::UnknownNode, "'" + source + "' is not a node");
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> order;
  bfs_hops(ig, *s, dist, order);
  std::map<StationId, HopCount> out;
  for (std::size_t i = 0; i < ig.size(); ++i) {
    out.emplace(ig.id(i), dist[i] < 0 ? HopCount{} : HopCount{static_cast<std::uint32_t>(dist[i])});
  }
  return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> components(const IndexedGraph& ig) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> order;
  std::vector<bool> seen(ig.size(), false);
  for (std::size_t s = 0; s < ig.size(); ++s) {
    if (seen[s]) continue;
    bfs_hops(ig, s, dist, order);
    for (auto v : order) seen[v] = true;
    std::sort(order.begin(), order.end());
    out.push_back(order);
  }
  // Discovery runs in ascending start index, so each component's smallest
  // index is its start and a stable sort by size keeps ties in that order.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

}  // namespace

std::vector<std::vector<StationId>> connected_components(const TransitGraph& g) {
  const auto ig = g.indexed();
  std::vector<std::vector<StationId>> out;
  for (const auto& comp : components(ig)) {
    auto& ids = out.emplace_back();
    for (auto v : comp) ids.push_back(ig.id(v));
  }
  return out;
}

DiameterReport diameter(const TransitGraph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "diameter of an empty graph");
  const auto ig = g.indexed();
  const auto comps = components(ig);
  DiameterReport r;
  r.component_count = comps.size();
  r.connected = comps.size() == 1;
  r.largest_component_size = comps.front().size();
  for (std::size_t c = 1; c < comps.size(); ++c) {
    auto& ids = r.stranded.emplace_back();
    for (auto v : comps[c]) ids.push_back(ig.id(v));
  }
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> order;
  for (auto s : comps.front()) {
    bfs_hops(ig, s, dist, order);
    // BFS visits in nondecreasing distance, so the last node is the farthest.
    r.diameter = std::max(r.diameter, static_cast<std::uint32_t>(dist[order.back()]));
  }
  return r;
}

}  // namespace transit

#include "transit/construct.hpp"

#include <unordered_map>

#include "transit/errors.hpp"

namespace transit {

namespace {

std::unordered_map<StationId, const Station*> by_id(const std::vector<Station>& stations) {
  std::unordered_map<StationId, const Station*> out;
  for (const auto& s : stations) out.emplace(s.id, &s);
  return out;
}

const Station& lookup(const std::unordered_map<StationId, const Station*>& table, const StationId& id,
                      const LineBranch& b) {
  auto it = table.find(id);
  if (it == table.end()) {
    throw Error(ErrorKind::UnknownStationRef,
                "branch " + b.line_id + "/" + b.branch_id + " references unknown station '" + id + "'");
  }
  return *it->second;
}

void add_branch_edges(TransitGraph& g, const LineBranch& b) {
  for (std::size_t i = 1; i < b.stations.size(); ++i) {
    g.add_edge(b.stations[i - 1], b.stations[i], b.line_id);
  }
}

}  // namespace

TransitGraph build_full_network(const std::vector<Station>& stations,
                                const std::vector<LineBranch>& branches) {
  const auto table = by_id(stations);
  TransitGraph g;
  for (const auto& b : branches) {
    for (const auto& id : b.stations) g.add_node(lookup(table, id, b));
  }
  for (const auto& b : branches) add_branch_edges(g, b);
  return g;
}

std::vector<LineBranch> collapse_branches(const std::vector<LineBranch>& branches,
                                          const AccessIndex& access) {
  std::vector<LineBranch> out;
  for (const auto& b : branches) {
    LineBranch kept{b.line_id, b.branch_id, {}};
    for (const auto& id : b.stations) {
      if (access.full(id, b.line_id)) kept.stations.push_back(id);
    }
    if (!kept.stations.empty()) out.push_back(std::move(kept));
  }
  return out;
}

std::set<StationId> accessible_station_ids(const std::vector<LineBranch>& branches,
                                           const AccessIndex& access) {
  std::set<StationId> out;
  for (const auto& b : collapse_branches(branches, access)) out.insert(b.stations.begin(), b.stations.end());
  return out;
}

TransitGraph build_accessible_network(const std::vector<Station>& stations,
                                      const std::vector<LineBranch>& branches,
                                      const std::vector<AccessibilityRecord>& access) {
  const auto table = by_id(stations);
  const auto kept = collapse_branches(branches, AccessIndex(access));
  TransitGraph g;
  for (const auto& b : kept) {
    for (const auto& id : b.stations) g.add_node(lookup(table, id, b));
  }
  if (g.empty()) throw Error(ErrorKind::EmptyAccessibleSet, "no station is fully accessible on any line");
  for (const auto& b : kept) add_branch_edges(g, b);
  return g;
}

TransitGraph build_network(NetworkKind kind, const Dataset& data) {
  return kind == NetworkKind::Full ? build_full_network(data.stations, data.branches)
                                   : build_accessible_network(data.stations, data.branches, data.access);
}

}  // namespace transit

#pragma once

// Construction properties shared by the unit tests and the acceptance run.
// Each returns an empty string on success, else a description of the first
// violation.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "support/generators.hpp"
#include "transit/construct.hpp"
#include "transit/errors.hpp"

namespace props {

inline std::string collapse_idempotent(const transit::Dataset& d) {
  const transit::AccessIndex idx(d.access);
  const auto once = transit::collapse_branches(d.branches, idx);
  const auto twice = transit::collapse_branches(once, idx);
  return once == twice ? "" : "collapse is not idempotent";
}

// Every accessible edge must join two stations full on one of its lines,
// consecutive among that line's full stops on some branch.
inline std::string accessible_edges_replay(const transit::Dataset& d) {
  const transit::AccessIndex idx(d.access);
  const auto g = transit::build_network(transit::NetworkKind::Accessible, d);
  for (const auto& e : g.edges()) {
    for (const auto& line : e.lines) {
      bool found = false;
      for (const auto& b : d.branches) {
        if (b.line_id != line) continue;
        auto iu = std::find(b.stations.begin(), b.stations.end(), e.u);
        auto iv = std::find(b.stations.begin(), b.stations.end(), e.v);
        if (iu == b.stations.end() || iv == b.stations.end()) continue;
        if (iv < iu) std::swap(iu, iv);
        if (!idx.full(*iu, line) || !idx.full(*iv, line)) continue;
        found = std::none_of(iu + 1, iv, [&](const auto& s) { return idx.full(s, line); });
        if (found) break;
      }
      if (!found) return "edge " + e.u + "-" + e.v + " on " + line + " does not replay";
    }
  }
  for (const auto& id : g.node_ids()) {
    const auto* s = g.station(id);
    if (!s) return "accessible node " + id + " has no station record";
  }
  return "";
}

// With every (station, line) pair marked full, the accessible network is
// the full network.
inline std::string fully_accessible_identity(transit::Dataset d) {
  d.access.clear();
  std::set<std::pair<transit::StationId, transit::LineId>> pairs;
  for (const auto& b : d.branches)
    for (const auto& s : b.stations) pairs.emplace(s, b.line_id);
  for (const auto& [s, l] : pairs) d.access.push_back({s, l, transit::AccessMode::Full});
  const auto full = transit::build_network(transit::NetworkKind::Full, d);
  const auto acc = transit::build_network(transit::NetworkKind::Accessible, d);
  return full == acc ? "" : "fully accessible lines do not reproduce the full network";
}

// Shuffles every input table (row order, and the order branches appear in)
// and checks both graphs are unchanged. Goes through the CSV writers and
// parsers so file row order is what gets permuted.
inline std::string permutation_invariant(const transit::Dataset& d, gen::Rng& rng) {
  auto shuffled = d;
  std::shuffle(shuffled.stations.begin(), shuffled.stations.end(), rng);
  std::shuffle(shuffled.branches.begin(), shuffled.branches.end(), rng);
  std::shuffle(shuffled.access.begin(), shuffled.access.end(), rng);

  std::ostringstream so, bo, ao;
  transit::write_stations(so, shuffled.stations);
  transit::write_line_branches(bo, shuffled.branches);
  transit::write_accessibility(ao, shuffled.access);
  // Mix rows of different branches while keeping each branch's rows in seq
  // order: draw a random slot per row, then hand each branch's slots to its
  // rows in ascending order.
  std::istringstream bi(bo.str());
  std::string header, row;
  std::getline(bi, header);
  std::vector<std::string> rows;
  while (std::getline(bi, row)) rows.push_back(row);
  std::vector<std::size_t> pos(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::map<std::string, std::vector<std::size_t>> slots;
  std::map<std::string, std::vector<std::string>> by_branch;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto key = rows[i].substr(0, rows[i].find(',', rows[i].find(',') + 1));
    slots[key].push_back(pos[i]);
    by_branch[key].push_back(rows[i]);
  }
  std::vector<std::string> mixed(rows.size());
  for (auto& [key, s] : slots) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) mixed[s[i]] = by_branch[key][i];
  }
  std::string branch_text = header + "\n";
  for (const auto& r : mixed) branch_text += r + "\n";

  std::istringstream si(so.str()), bi2(branch_text), ai(ao.str());
  transit::Dataset parsed;
  parsed.stations = transit::parse_stations(si, "stations.csv");
  parsed.branches = transit::parse_line_branches(bi2, "branches.csv", parsed.stations);
  parsed.access = transit::parse_accessibility(ai, "access.csv", parsed.stations);

  for (auto kind : {transit::NetworkKind::Full, transit::NetworkKind::Accessible}) {
    std::optional<transit::TransitGraph> a, b;
    try {
      a = transit::build_network(kind, d);
    } catch (const transit::Error&) {
    }
    try {
      b = transit::build_network(kind, parsed);
    } catch (const transit::Error&) {
    }
    if (a != b) return std::string(transit::to_string(kind)) + " network changed under input permutation";
  }
  return "";
}

}  // namespace props

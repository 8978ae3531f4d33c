#pragma once

#include <set>
#include <vector>

#include "transit/graph.hpp"
#include "transit/ingest.hpp"

namespace transit {

// One node per station on any branch; one edge per consecutive pair on each
// branch, labelled with the branch's line. Throws UnknownStationRef for
// branch stations missing from the table.
TransitGraph build_full_network(const std::vector<Station>& stations,
                                const std::vector<LineBranch>& branches);

// Node set: stations with a full record for a line they are sequenced on.
// Each branch is filtered to the stations full on its line and consecutive
// survivors are joined; none and one_way stops are skipped on that line.
// Throws EmptyAccessibleSet when no station qualifies.
TransitGraph build_accessible_network(const std::vector<Station>& stations,
                                      const std::vector<LineBranch>& branches,
                                      const std::vector<AccessibilityRecord>& access);

// The per-branch survivor sequences used by build_accessible_network.
// Branches with no survivor are dropped; a single survivor is kept.
std::vector<LineBranch> collapse_branches(const std::vector<LineBranch>& branches,
                                          const AccessIndex& access);

std::set<StationId> accessible_station_ids(const std::vector<LineBranch>& branches,
                                           const AccessIndex& access);

TransitGraph build_network(NetworkKind kind, const Dataset& data);

}  // namespace transit

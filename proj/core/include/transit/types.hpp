#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace transit {

// Opaque, dataset-unique token. Physically distinct stations that share a
// display name carry distinct ids.
using StationId = std::string;
using LineId = std::string;

struct Station {
  StationId id;
  std::string name;
  std::string borough;
  std::optional<int> region;  // London fare region 1..9
  std::vector<LineId> lines;

  bool operator==(const Station&) const = default;
};

enum class NetworkKind { Full, Accessible };

std::string_view to_string(NetworkKind kind);

}  // namespace transit

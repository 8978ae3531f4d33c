#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transit/types.hpp"

namespace transit {

struct LineBranch {
  LineId line_id;
  std::string branch_id;
  std::vector<StationId> stations;  // in travel order

  bool operator==(const LineBranch&) const = default;
};

enum class AccessMode { Full, OneWay, None };

std::string_view to_string(AccessMode mode);

struct AccessibilityRecord {
  StationId station;
  LineId line_id;
  AccessMode mode = AccessMode::None;

  bool operator==(const AccessibilityRecord&) const = default;
};

struct BoroughRecord {
  std::string borough;
  double median_income_k = 0;
  double daytime_total = 0;
  double daytime_workers = 0;
  std::optional<double> weekday_ridership;
  std::optional<double> weekend_ridership;

  bool operator==(const BoroughRecord&) const = default;
};

// (station, line) -> mode; a missing pair means None.
class AccessIndex {
 public:
  AccessIndex() = default;
  explicit AccessIndex(const std::vector<AccessibilityRecord>& records);

  AccessMode mode(const StationId& station, const LineId& line) const;
  bool full(const StationId& station, const LineId& line) const {
    return mode(station, line) == AccessMode::Full;
  }

 private:
  std::map<std::pair<StationId, LineId>, AccessMode> modes_;
};

// Each parser reads the canonical schema documented in README.md. The
// istream overloads take a source name used in diagnostics.
std::vector<Station> parse_stations(std::istream& in, const std::string& source);
std::vector<Station> parse_stations(const std::filesystem::path& path);

// Rows of one (line_id, branch_id) must have strictly ascending seq in file
// order; branches may interleave.
std::vector<LineBranch> parse_line_branches(std::istream& in, const std::string& source,
                                            const std::vector<Station>& stations);
std::vector<LineBranch> parse_line_branches(const std::filesystem::path& path,
                                            const std::vector<Station>& stations);

std::vector<AccessibilityRecord> parse_accessibility(std::istream& in, const std::string& source,
                                                     const std::vector<Station>& stations);
std::vector<AccessibilityRecord> parse_accessibility(const std::filesystem::path& path,
                                                     const std::vector<Station>& stations);

std::vector<BoroughRecord> parse_borough_table(std::istream& in, const std::string& source);
std::vector<BoroughRecord> parse_borough_table(const std::filesystem::path& path);

void write_stations(std::ostream& out, const std::vector<Station>& stations);
void write_line_branches(std::ostream& out, const std::vector<LineBranch>& branches);
void write_accessibility(std::ostream& out, const std::vector<AccessibilityRecord>& records);
void write_borough_table(std::ostream& out, const std::vector<BoroughRecord>& boroughs);

struct DatasetPaths {
  std::filesystem::path stations;
  std::filesystem::path branches;
  std::filesystem::path access;
  std::optional<std::filesystem::path> boroughs;
};

struct Dataset {
  std::vector<Station> stations;
  std::vector<LineBranch> branches;
  std::vector<AccessibilityRecord> access;
  std::vector<BoroughRecord> boroughs;  // empty when no borough table given
};

Dataset load_dataset(const DatasetPaths& paths);

// stations.csv, branches.csv, accessibility.csv and boroughs.csv (when
// present) under dir.
DatasetPaths dataset_in(const std::filesystem::path& dir);

}  // namespace transit

#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transit/ingest.hpp"
#include "transit/metrics.hpp"

namespace transit {

struct TopFlag {
  Measure measure = Measure::Degree;
  NetworkKind network = NetworkKind::Full;
  StationId station;

  auto operator<=>(const TopFlag&) const = default;
};

struct BoroughSummary {
  std::string borough;
  std::size_t accessible_count = 0;
  std::size_t total_count = 0;
  double median_income_k = 0;
  double daytime_total = 0;
  double daytime_workers = 0;
  std::optional<double> weekday_ridership;
  std::optional<double> weekend_ridership;
  std::set<TopFlag> top10_flags;
};

struct BoroughReport {
  std::vector<BoroughSummary> summaries;  // one per borough table row, by name
  // Station boroughs with no table row; their stations are left out.
  std::vector<std::string> unmatched;
};

// A station counts as accessible when it has a full record for one of its
// own lines. top10_flags collect top_k(tables[i], top) members located in
// each borough.
BoroughReport borough_summaries(const std::vector<Station>& stations,
                                const std::vector<AccessibilityRecord>& access,
                                const std::vector<BoroughRecord>& boroughs,
                                const std::vector<CentralityTable>& tables, std::size_t top = 10);

struct CorrelationReport {
  std::pair<std::string, std::string> variable_pair;
  double pearson_r = 0;
  double spearman_rho = 0;
  std::size_t n = 0;
};

// accessible_count, total_count, median_income_k, daytime_total,
// daytime_workers, weekday_ridership, weekend_ridership.
const std::vector<std::string_view>& summary_fields();

// Throws UnknownField. Empty when an optional field is absent.
std::optional<double> summary_field(const BoroughSummary& s, std::string_view field);

// Uses summaries with both fields present. Throws InsufficientData below 3
// samples, ZeroVariance when either side is constant.
CorrelationReport correlate(const std::vector<BoroughSummary>& summaries, std::string_view x,
                            std::string_view y);

double pearson(const std::vector<double>& x, const std::vector<double>& y);
// Pearson on average ranks.
double spearman(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> average_ranks(const std::vector<double>& v);

}  // namespace transit

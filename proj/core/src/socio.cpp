#include "transit/socio.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "transit/errors.hpp"

namespace transit {

BoroughReport borough_summaries(const std::vector<Station>& stations,
                                const std::vector<AccessibilityRecord>& access,
                                const std::vector<BoroughRecord>& boroughs,
                                const std::vector<CentralityTable>& tables, std::size_t top) {
  BoroughReport report;
  std::map<std::string, BoroughSummary> by_name;
  for (const auto& b : boroughs) {
    by_name.emplace(b.borough, BoroughSummary{b.borough, 0, 0, b.median_income_k, b.daytime_total,
                                              b.daytime_workers, b.weekday_ridership,
                                              b.weekend_ridership, {}});
  }

  const AccessIndex index(access);
  std::map<StationId, std::string> location;
  std::set<std::string> unmatched;
  for (const auto& s : stations) {
    auto it = by_name.find(s.borough);
    if (it == by_name.end()) {
      unmatched.insert(s.borough);
      continue;
    }
    location.emplace(s.id, s.borough);
    ++it->second.total_count;
    const bool ok = std::any_of(s.lines.begin(), s.lines.end(),
                                [&](const LineId& l) { return index.full(s.id, l); });
    if (ok) ++it->second.accessible_count;
  }

  for (const auto& t : tables) {
    for (const auto& [id, score] : top_k(t, top)) {
      auto loc = location.find(id);
      if (loc == location.end()) continue;
      by_name.at(loc->second).top10_flags.insert(TopFlag{t.measure, t.graph_kind, id});
    }
  }

  for (auto& [name, s] : by_name) report.summaries.push_back(std::move(s));
  report.unmatched.assign(unmatched.begin(), unmatched.end());
  return report;
}

const std::vector<std::string_view>& summary_fields() {
  static const std::vector<std::string_view> fields{
      "accessible_count", "total_count",       "median_income_k",  "daytime_total",
      "daytime_workers",  "weekday_ridership", "weekend_ridership"};
  return fields;
}

std::optional<double> summary_field(const BoroughSummary& s, std::string_view field) {
  if (field == "accessible_count") return static_cast<double>(s.accessible_count);
  if (field == "total_count") return static_cast<double>(s.total_count);
  if (field == "median_income_k") return s.median_income_k;
  if (field == "daytime_total") return s.daytime_total;
  if (field == "daytime_workers") return s.daytime_workers;
  if (field == "weekday_ridership") return s.weekday_ridership;
  if (field == "weekend_ridership") return s.weekend_ridership;
  throw Error(ErrorKind::UnknownField, "no borough field named '" + std::string(field) + "'");
}

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void check_samples(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::BadValue, "correlation inputs differ in length");
  if (x.size() < 3) {
    throw Error(ErrorKind::InsufficientData,
                "correlation needs at least 3 samples, have " + std::to_string(x.size()));
  }
}

}  // namespace

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  check_samples(x, y);
  const double mx = mean(x), my = mean(y);
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) throw Error(ErrorKind::ZeroVariance, "correlation of a constant variable");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  check_samples(x, y);
  return pearson(average_ranks(x), average_ranks(y));
}

CorrelationReport correlate(const std::vector<BoroughSummary>& summaries, std::string_view x,
                            std::string_view y) {
  std::vector<double> xs, ys;
  for (const auto& s : summaries) {
    auto a = summary_field(s, x);
    auto b = summary_field(s, y);
    if (a && b) {
      xs.push_back(*a);
      ys.push_back(*b);
    }
  }
  // resolve both names even with no rows
  if (summaries.empty()) {
    BoroughSummary probe;
    summary_field(probe, x);
    summary_field(probe, y);
  }
  CorrelationReport r;
  r.variable_pair = {std::string(x), std::string(y)};
  r.n = xs.size();
  r.pearson_r = pearson(xs, ys);
  r.spearman_rho = spearman(xs, ys);
  return r;
}

}  // namespace transit

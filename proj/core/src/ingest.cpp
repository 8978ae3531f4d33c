#include "transit/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "transit/csv.hpp"
#include "transit/errors.hpp"
#include "transit/format.hpp"

namespace transit {

std::string_view to_string(AccessMode mode) {
  switch (mode) {
    case AccessMode::Full: return "full";
    case AccessMode::OneWay: return "one_way";
    case AccessMode::None: return "none";
  }
  return "none";
}

AccessIndex::AccessIndex(const std::vector<AccessibilityRecord>& records) {
  for (const auto& r : records) modes_[{r.station, r.line_id}] = r.mode;
}

AccessMode AccessIndex::mode(const StationId& station, const LineId& line) const {
  auto it = modes_.find({station, line});
  return it == modes_.end() ? AccessMode::None : it->second;
}

namespace {

std::string trim(std::string_view s) {
  const auto ws = " \t";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorKind::Io, path.string(), 0, "cannot open file");
  return in;
}

[[noreturn]] void fail(const CsvTable& t, std::size_t row, ErrorKind kind, const std::string& msg) {
  throw InputError(kind, t.source, t.lines[row], msg);
}

std::string required(const CsvTable& t, std::size_t row, std::size_t col) {
  auto v = trim(t.rows[row][col]);
  if (v.empty()) fail(t, row, ErrorKind::BadValue, "empty '" + t.header[col] + "'");
  return v;
}

long parse_int(const CsvTable& t, std::size_t row, std::size_t col) {
  const auto v = trim(t.rows[row][col]);
  long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size() || v.empty()) {
    fail(t, row, ErrorKind::BadValue, "'" + t.header[col] + "' is not an integer: '" + v + "'");
  }
  return out;
}

std::optional<double> parse_number(const CsvTable& t, std::size_t row, std::size_t col) {
  const auto v = trim(t.rows[row][col]);
  if (v.empty()) return std::nullopt;
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size() || !std::isfinite(out)) {
    fail(t, row, ErrorKind::BadValue, "'" + t.header[col] + "' is not a number: '" + v + "'");
  }
  return out;
}

std::unordered_map<StationId, const Station*> by_id(const std::vector<Station>& stations) {
  std::unordered_map<StationId, const Station*> out;
  for (const auto& s : stations) out.emplace(s.id, &s);
  return out;
}

}  // namespace

std::vector<Station> parse_stations(std::istream& in, const std::string& source) {
  const auto t = read_csv(in, source);
  const auto c_id = t.column("id");
  const auto c_name = t.column("name");
  const auto c_borough = t.column("borough");
  const auto c_region = t.column("region");
  const auto c_lines = t.column("lines");

  std::vector<Station> out;
  std::unordered_map<StationId, std::size_t> first_line;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Station s;
    s.id = required(t, r, c_id);
    if (auto [it, fresh] = first_line.emplace(s.id, t.lines[r]); !fresh) {
      fail(t, r, ErrorKind::DuplicateId,
           "station id '" + s.id + "' already defined at line " + std::to_string(it->second));
    }
    s.name = trim(t.rows[r][c_name]);
    if (s.name.empty()) s.name = s.id;
    s.borough = trim(t.rows[r][c_borough]);
    if (!trim(t.rows[r][c_region]).empty()) {
      const long region = parse_int(t, r, c_region);
      if (region < 1 || region > 9) {
        fail(t, r, ErrorKind::BadValue, "region " + std::to_string(region) + " outside 1..9");
      }
      s.region = static_cast<int>(region);
    }
    std::string_view lines = t.rows[r][c_lines];
    while (!lines.empty()) {
      const auto bar = lines.find('|');
      auto line = trim(lines.substr(0, bar));
      if (!line.empty() && std::find(s.lines.begin(), s.lines.end(), line) == s.lines.end()) {
        s.lines.push_back(std::move(line));
      }
      if (bar == std::string_view::npos) break;
      lines.remove_prefix(bar + 1);
    }
    if (s.lines.empty()) fail(t, r, ErrorKind::EmptyLineSet, "station '" + s.id + "' lists no lines");
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::vector<Station> parse_stations(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_stations(in, path.string());
}

std::vector<LineBranch> parse_line_branches(std::istream& in, const std::string& source,
                                            const std::vector<Station>& stations) {
  const auto t = read_csv(in, source);
  const auto c_line = t.column("line_id");
  const auto c_branch = t.column("branch_id");
  const auto c_seq = t.column("seq");
  const auto c_station = t.column("station_id");
  const auto known = by_id(stations);

  struct Building {
    LineBranch branch;
    long last_seq = 0;
    std::size_t first_line = 0;
    std::set<StationId> seen;
  };
  std::map<std::pair<LineId, std::string>, Building> branches;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto line = required(t, r, c_line);
    auto branch = required(t, r, c_branch);
    const long seq = parse_int(t, r, c_seq);
    if (seq < 1) fail(t, r, ErrorKind::BadValue, "seq must be >= 1, got " + std::to_string(seq));
    auto station = required(t, r, c_station);
    if (!known.contains(station)) {
      fail(t, r, ErrorKind::UnknownStationRef, "unknown station '" + station + "'");
    }
    auto [it, fresh] = branches.try_emplace({line, branch});
    auto& b = it->second;
    if (fresh) {
      b.branch.line_id = line;
      b.branch.branch_id = branch;
      b.first_line = t.lines[r];
    } else if (seq <= b.last_seq) {
      fail(t, r, ErrorKind::NonMonotoneSequence,
           "seq " + std::to_string(seq) + " after " + std::to_string(b.last_seq) + " on " + line + "/" +
               branch);
    }
    if (!b.seen.insert(station).second) {
      fail(t, r, ErrorKind::RepeatedStation,
           "station '" + station + "' appears twice on " + line + "/" + branch);
    }
    b.last_seq = seq;
    b.branch.stations.push_back(std::move(station));
  }

  std::vector<LineBranch> out;
  out.reserve(branches.size());
  for (auto& [key, b] : branches) {
    if (b.branch.stations.size() < 2) {
      throw InputError(ErrorKind::BranchTooShort, t.source, b.first_line,
                       "branch " + key.first + "/" + key.second + " has a single station");
    }
    out.push_back(std::move(b.branch));
  }
  return out;
}

std::vector<LineBranch> parse_line_branches(const std::filesystem::path& path,
                                            const std::vector<Station>& stations) {
  auto in = open(path);
  return parse_line_branches(in, path.string(), stations);
}

std::vector<AccessibilityRecord> parse_accessibility(std::istream& in, const std::string& source,
                                                     const std::vector<Station>& stations) {
  const auto t = read_csv(in, source);
  const auto c_station = t.column("station_id");
  const auto c_line = t.column("line_id");
  const auto c_mode = t.column("mode");
  const auto known = by_id(stations);

  std::map<std::pair<StationId, LineId>, std::pair<AccessMode, std::size_t>> records;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto station = required(t, r, c_station);
    if (!known.contains(station)) {
      fail(t, r, ErrorKind::UnknownStationRef, "unknown station '" + station + "'");
    }
    auto line = required(t, r, c_line);
    const auto mode_text = trim(t.rows[r][c_mode]);
    AccessMode mode;
    if (mode_text == "full") {
      mode = AccessMode::Full;
    } else if (mode_text == "one_way") {
      mode = AccessMode::OneWay;
    } else if (mode_text == "none") {
      mode = AccessMode::None;
    } else {
      fail(t, r, ErrorKind::BadMode, "mode '" + mode_text + "' is not one of full, one_way, none");
    }
    auto [it, fresh] = records.try_emplace({station, line}, mode, t.lines[r]);
    if (!fresh) {
      fail(t, r, ErrorKind::DuplicateRecord,
           "second record for (" + station + ", " + line + "); first at line " +
               std::to_string(it->second.second));
    }
  }
  std::vector<AccessibilityRecord> out;
  out.reserve(records.size());
  for (const auto& [key, v] : records) out.push_back({key.first, key.second, v.first});
  return out;
}

std::vector<AccessibilityRecord> parse_accessibility(const std::filesystem::path& path,
                                                     const std::vector<Station>& stations) {
  auto in = open(path);
  return parse_accessibility(in, path.string(), stations);
}

std::vector<BoroughRecord> parse_borough_table(std::istream& in, const std::string& source) {
  const auto t = read_csv(in, source);
  const auto c_borough = t.column("borough");
  const auto c_income = t.column("median_income_k");
  const auto c_total = t.column("daytime_total");
  const auto c_workers = t.column("daytime_workers");
  const auto c_weekday = t.find_column("weekday_ridership");
  const auto c_weekend = t.find_column("weekend_ridership");

  std::map<std::string, std::pair<BoroughRecord, std::size_t>> rows;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    BoroughRecord b;
    b.borough = required(t, r, c_borough);
    auto need = [&](std::size_t col) {
      auto v = parse_number(t, r, col);
      if (!v) fail(t, r, ErrorKind::BadValue, "empty '" + t.header[col] + "'");
      return *v;
    };
    auto count = [&](std::size_t col) -> std::optional<double> {
      auto v = parse_number(t, r, col);
      if (v && *v < 0) fail(t, r, ErrorKind::NegativeCount, "'" + t.header[col] + "' is negative");
      return v;
    };
    b.median_income_k = need(c_income);
    if (b.median_income_k < 0) fail(t, r, ErrorKind::BadValue, "median_income_k is negative");
    b.daytime_total = need(c_total);
    b.daytime_workers = need(c_workers);
    for (auto [col, v] : {std::pair{c_total, b.daytime_total}, std::pair{c_workers, b.daytime_workers}}) {
      if (v < 0) fail(t, r, ErrorKind::NegativeCount, "'" + t.header[col] + "' is negative");
    }
    if (b.daytime_workers > b.daytime_total) {
      fail(t, r, ErrorKind::NegativeCount,
           "daytime_workers exceeds daytime_total (non-worker population would be negative)");
    }
    if (c_weekday) b.weekday_ridership = count(*c_weekday);
    if (c_weekend) b.weekend_ridership = count(*c_weekend);
    auto [it, fresh] = rows.try_emplace(b.borough, b, t.lines[r]);
    if (!fresh) {
      fail(t, r, ErrorKind::DuplicateRecord,
           "borough '" + b.borough + "' already defined at line " + std::to_string(it->second.second));
    }
  }
  std::vector<BoroughRecord> out;
  out.reserve(rows.size());
  for (auto& [_, v] : rows) out.push_back(std::move(v.first));
  return out;
}

std::vector<BoroughRecord> parse_borough_table(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_borough_table(in, path.string());
}

void write_stations(std::ostream& out, const std::vector<Station>& stations) {
  write_csv_row(out, {"id", "name", "borough", "region", "lines"});
  for (const auto& s : stations) {
    std::string lines;
    for (const auto& l : s.lines) {
      if (!lines.empty()) lines += '|';
      lines += l;
    }
    write_csv_row(out, {s.id, s.name, s.borough, s.region ? std::to_string(*s.region) : "", lines});
  }
}

void write_line_branches(std::ostream& out, const std::vector<LineBranch>& branches) {
  write_csv_row(out, {"line_id", "branch_id", "seq", "station_id"});
  for (const auto& b : branches) {
    for (std::size_t i = 0; i < b.stations.size(); ++i) {
      write_csv_row(out, {b.line_id, b.branch_id, std::to_string(i + 1), b.stations[i]});
    }
  }
}

void write_accessibility(std::ostream& out, const std::vector<AccessibilityRecord>& records) {
  write_csv_row(out, {"station_id", "line_id", "mode"});
  for (const auto& r : records) write_csv_row(out, {r.station, r.line_id, std::string(to_string(r.mode))});
}

void write_borough_table(std::ostream& out, const std::vector<BoroughRecord>& boroughs) {
  write_csv_row(out, {"borough", "median_income_k", "daytime_total", "daytime_workers",
                      "weekday_ridership", "weekend_ridership"});
  auto opt = [](const std::optional<double>& v) { return v ? format_shortest(*v) : std::string(); };
  for (const auto& b : boroughs) {
    write_csv_row(out, {b.borough, format_shortest(b.median_income_k), format_shortest(b.daytime_total),
                        format_shortest(b.daytime_workers), opt(b.weekday_ridership),
                        opt(b.weekend_ridership)});
  }
}

Dataset load_dataset(const DatasetPaths& paths) {
  Dataset d;
  d.stations = parse_stations(paths.stations);
  d.branches = parse_line_branches(paths.branches, d.stations);
  d.access = parse_accessibility(paths.access, d.stations);
  if (paths.boroughs) d.boroughs = parse_borough_table(*paths.boroughs);
  return d;
}

DatasetPaths dataset_in(const std::filesystem::path& dir) {
  DatasetPaths p{dir / "stations.csv", dir / "branches.csv", dir / "accessibility.csv", std::nullopt};
  if (std::filesystem::exists(dir / "boroughs.csv")) p.boroughs = dir / "boroughs.csv";
  return p;
}

}  // namespace transit

#include "transit/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "transit/construct.hpp"
#include "transit/csv.hpp"
#include "transit/errors.hpp"
#include "transit/format.hpp"
#include "transit/socio.hpp"
#include "transit/version.hpp"

namespace transit {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Build: return "build";
    case Command::Centrality: return "centrality";
    case Command::Figures: return "figures";
    case Command::Socio: return "socio";
    case Command::All: return "all";
  }
  return "all";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InvariantViolation, "SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

NetworkStats network_stats(const TransitGraph& g) {
  return NetworkStats{g.node_count(), g.edge_count(), diameter(g)};
}

namespace {

void invariant(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

void check_table(const CentralityTable& t, const TransitGraph& g, bool unit_range) {
  const std::string name = std::string(to_string(t.graph_kind)) + " " + std::string(to_string(t.measure));
  invariant(t.scores.size() == g.node_count(), name + ": score count differs from node count");
  for (const auto& [id, v] : t.scores) {
    invariant(g.has_node(id), name + ": score for unknown node " + id);
    invariant(std::isfinite(v) && v >= 0, name + ": bad score for " + id);
    if (unit_range) invariant(v <= 1.0 + 1e-12, name + ": score above 1 for " + id);
  }
}

void check_distribution(const DegreeDistribution& d, const TransitGraph& g) {
  std::size_t nodes = 0, stubs = 0;
  for (const auto& [k, c] : d.counts) {
    nodes += c;
    stubs += k * c;
  }
  invariant(nodes == d.total && d.total == g.node_count(), "degree histogram does not cover every node");
  invariant(stubs == 2 * g.edge_count(), "degree sum differs from twice the edge count");
}

std::vector<NetworkKind> kinds(NetworkSelection s) {
  switch (s) {
    case NetworkSelection::Full: return {NetworkKind::Full};
    case NetworkSelection::Accessible: return {NetworkKind::Accessible};
    case NetworkSelection::Both: return {NetworkKind::Full, NetworkKind::Accessible};
  }
  return {};
}

}  // namespace

Analysis analyze(const Dataset& data, NetworkSelection selection, ClosenessConvention convention,
                 MetricsOptions options, bool with_metrics) {
  Analysis a;
  a.data = data;
  a.accessible_ids = accessible_station_ids(data.branches, AccessIndex(data.access));

  for (auto kind : kinds(selection)) {
    NetworkResults r;
    r.kind = kind;
    r.graph = build_network(kind, data);
    r.stats = network_stats(r.graph);
    const std::string net(to_string(kind));
    if (!r.stats.diameter.connected) {
      a.warnings.push_back(net + " network has " + std::to_string(r.stats.diameter.component_count) +
                           " components; diameter taken on the largest (" +
                           std::to_string(r.stats.diameter.largest_component_size) + " nodes)");
    }
    if (with_metrics) {
      if (r.graph.node_count() < 3) {
        r.betweenness = CentralityTable{Measure::Betweenness, kind, {}};
        for (const auto& id : r.graph.node_ids()) r.betweenness.scores.emplace(id, 0.0);
        a.warnings.push_back(net + " network has fewer than 3 nodes; betweenness written as 0");
      } else {
        r.betweenness = betweenness_all(r.graph, kind, options);
      }
      r.closeness = closeness_all(r.graph, convention, kind, options);
      r.degree = degree_centrality(r.graph, kind);
      r.distribution = degree_distribution(r.graph);
      try {
        r.fit = fit_power_law(r.distribution);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientSupport) throw;
        a.warnings.push_back(net + " network: " + e.what());
      }
      check_table(r.betweenness, r.graph, true);
      check_table(r.closeness, r.graph, convention == ClosenessConvention::NMinusOne);
      check_table(r.degree, r.graph, true);
      check_distribution(r.distribution, r.graph);
    }
    a.networks.push_back(std::move(r));
  }

  for (const auto& r : a.networks) {
    if (r.kind != NetworkKind::Accessible) continue;
    invariant(r.graph.node_count() == a.accessible_ids.size(), "accessible node set mismatch");
    for (const auto& id : r.graph.node_ids()) {
      invariant(a.accessible_ids.contains(id), "accessible node set mismatch at " + id);
    }
  }
  return a;
}

namespace {

class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

  void put(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
    files_.push_back(WrittenFile{name, sha256_hex(content)});
  }

  const std::vector<WrittenFile>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<WrittenFile> files_;
};

std::string join(const std::set<std::string>& items, char sep = '|') {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out.push_back(sep);
    out += s;
  }
  return out;
}

std::string join(const std::vector<std::string>& items, char sep = '|') {
  return join(std::set<std::string>(items.begin(), items.end()), sep);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::string station_name(const TransitGraph& g, const StationId& id) {
  const Station* s = g.station(id);
  return s ? s->name : id;
}

std::string station_lines(const TransitGraph& g, const StationId& id) {
  const Station* s = g.station(id);
  return s ? join(s->lines) : std::string();
}

const NetworkResults* find_network(const Analysis& a, NetworkKind kind) {
  for (const auto& r : a.networks) {
    if (r.kind == kind) return &r;
  }
  return nullptr;
}

// Separator in TopFlag listings: "accessible/betweenness".
std::string flag_label(const TopFlag& f) {
  return std::string(to_string(f.network)) + "/" + std::string(to_string(f.measure));
}

void write_build(Outputs& out, const NetworkResults& r) {
  const std::string net(to_string(r.kind));
  std::ostringstream edges;
  write_csv_row(edges, {"u", "v", "lines"});
  for (const auto& e : r.graph.edges()) write_csv_row(edges, {e.u, e.v, join(e.lines)});
  out.put(net + "_edges.csv", edges.str());

  json stats;
  stats["network"] = net;
  stats["nodes"] = r.stats.nodes;
  stats["edges"] = r.stats.edges;
  stats["diameter"] = r.stats.diameter.diameter;
  stats["connected"] = r.stats.diameter.connected;
  stats["component_count"] = r.stats.diameter.component_count;
  stats["largest_component_size"] = r.stats.diameter.largest_component_size;
  stats["stranded"] = r.stats.diameter.stranded;
  out.put(net + "_stats.json", json_text(stats));
}

void write_centrality(Outputs& out, const NetworkResults& r, const Analysis& a, std::size_t k) {
  const std::string net(to_string(r.kind));
  for (const auto* t : {&r.betweenness, &r.closeness, &r.degree}) {
    const std::string measure(to_string(t->measure));
    std::ostringstream scores;
    write_csv_row(scores, {"station_id", "name", "degree", "score"});
    for (const auto& [id, v] : t->scores) {
      write_csv_row(scores, {id, station_name(r.graph, id), std::to_string(r.graph.degree(id)),
                             format_shortest(v)});
    }
    out.put(net + "_" + measure + ".csv", scores.str());
    if (t->measure == Measure::Degree) continue;

    std::ostringstream top;
    std::vector<std::string> header{"rank", "station_id", "name", "score"};
    if (r.kind == NetworkKind::Full) header.push_back("accessible");
    write_csv_row(top, header);
    std::size_t rank = 0;
    for (const auto& [id, v] : top_k(*t, k)) {
      std::vector<std::string> row{std::to_string(++rank), id, station_name(r.graph, id),
                                   format_fixed_half_even(v, 3)};
      if (r.kind == NetworkKind::Full) row.push_back(a.accessible_ids.contains(id) ? "Y" : "N");
      write_csv_row(top, row);
    }
    out.put(net + "_" + measure + "_top.csv", top.str());
  }
}

void write_borough_figure(Outputs& out, const std::vector<BoroughSummary>& summaries,
                          const std::string& name) {
  std::ostringstream csv;
  write_csv_row(csv, {"borough", "accessible_count", "total_count", "median_income_k", "daytime_total",
                      "daytime_workers", "weekday_ridership", "weekend_ridership", "top10_flags"});
  for (const auto& s : summaries) {
    std::set<std::string> flags;
    for (const auto& f : s.top10_flags) flags.insert(flag_label(f) + ":" + f.station);
    auto opt = [](const std::optional<double>& v) { return v ? format_shortest(*v) : std::string(); };
    write_csv_row(csv, {s.borough, std::to_string(s.accessible_count), std::to_string(s.total_count),
                        format_shortest(s.median_income_k), format_shortest(s.daytime_total),
                        format_shortest(s.daytime_workers), opt(s.weekday_ridership),
                        opt(s.weekend_ridership), join(flags)});
  }
  out.put(name, csv.str());
}

std::vector<CentralityTable> flag_tables(const Analysis& a) {
  std::vector<CentralityTable> tables;
  for (const auto& r : a.networks) {
    tables.push_back(r.betweenness);
    tables.push_back(r.closeness);
  }
  return tables;
}

void write_figures(Outputs& out, const Analysis& a, std::size_t k, std::vector<std::string>& warnings) {
  // Subgraph node rows carry the degree in the accessible network, which is
  // built here when only the full network was selected.
  TransitGraph local;
  const TransitGraph* accessible = nullptr;
  if (const auto* r = find_network(a, NetworkKind::Accessible)) {
    accessible = &r->graph;
  } else if (!a.accessible_ids.empty()) {
    local = build_network(NetworkKind::Accessible, a.data);
    accessible = &local;
  }
  for (const auto& r : a.networks) {
    const std::string net(to_string(r.kind));

    std::ostringstream sorted;
    write_csv_row(sorted, {"measure", "rank", "value"});
    for (const auto* t : {&r.betweenness, &r.closeness}) {
      std::size_t rank = 0;
      for (const auto& [id, v] : top_k(*t, t->scores.size())) {
        write_csv_row(sorted, {std::string(to_string(t->measure)), std::to_string(++rank), format_shortest(v)});
      }
    }
    out.put("fig_sorted_" + net + ".csv", sorted.str());

    std::ostringstream scatter;
    write_csv_row(scatter, {"network", "station_id", "degree", "betweenness", "closeness"});
    for (const auto& id : r.graph.node_ids()) {
      write_csv_row(scatter, {net, id, std::to_string(r.graph.degree(id)),
                              format_shortest(r.betweenness.scores.at(id)),
                              format_shortest(r.closeness.scores.at(id))});
    }
    out.put("fig_scatter_" + net + ".csv", scatter.str());

    std::ostringstream degree;
    write_csv_row(degree, {"k", "count", "p", "log10_k", "log10_p"});
    for (const auto& [deg, count] : r.distribution.counts) {
      const double p = r.distribution.p(deg);
      write_csv_row(degree, {std::to_string(deg), std::to_string(count), format_shortest(p),
                             deg > 0 ? format_shortest(std::log10(static_cast<double>(deg))) : "",
                             format_shortest(std::log10(p))});
    }
    out.put("fig_degree_" + net + ".csv", degree.str());

    json fit;
    fit["network"] = net;
    fit["method"] = "least squares on (ln k, ln p(k)), k >= 1, p(k) > 0";
    if (r.fit) {
      fit["gamma"] = r.fit->gamma;
      fit["intercept"] = r.fit->intercept;
      fit["r_squared"] = r.fit->r_squared;
      fit["k_support"] = r.fit->k_support;
    } else {
      fit["gamma"] = nullptr;
      fit["error"] = "InsufficientSupport";
    }
    out.put("fig_degree_" + net + "_fit.json", json_text(fit));

    for (const auto* t : {&r.betweenness, &r.closeness}) {
      const std::string stem = "fig_subgraph_" + net + "_" + std::string(to_string(t->measure));
      const auto top = top_k(*t, k);
      std::set<StationId> members;
      std::ostringstream nodes;
      write_csv_row(nodes, {"rank", "station_id", "name", "score", "degree", "accessible_degree", "lines"});
      std::size_t rank = 0;
      for (const auto& [id, v] : top) {
        members.insert(id);
        const std::size_t acc_degree =
            accessible && accessible->has_node(id) ? accessible->degree(id) : 0;
        write_csv_row(nodes, {std::to_string(++rank), id, station_name(r.graph, id),
                              format_fixed_half_even(v, 3), std::to_string(r.graph.degree(id)),
                              std::to_string(acc_degree), station_lines(r.graph, id)});
      }
      out.put(stem + "_nodes.csv", nodes.str());

      std::ostringstream edges;
      write_csv_row(edges, {"u", "v", "lines"});
      for (const auto& e : r.graph.edges()) {
        if (members.contains(e.u) && members.contains(e.v)) write_csv_row(edges, {e.u, e.v, join(e.lines)});
      }
      out.put(stem + "_edges.csv", edges.str());
    }
  }

  if (a.data.boroughs.empty()) {
    warnings.push_back("no borough table; fig_boroughs.csv not written");
    return;
  }
  const auto report = borough_summaries(a.data.stations, a.data.access, a.data.boroughs, flag_tables(a), k);
  write_borough_figure(out, report.summaries, "fig_boroughs.csv");
}

std::string strength(double r) {
  const double m = std::fabs(r);
  if (m < 0.3) return "weak";
  if (m < 0.7) return "moderate";
  return "strong";
}

void write_socio(Outputs& out, const Analysis& a, std::size_t k, std::vector<std::string>& warnings) {
  const auto report = borough_summaries(a.data.stations, a.data.access, a.data.boroughs, flag_tables(a), k);
  for (const auto& b : report.unmatched) {
    warnings.push_back("UnmatchedBorough: '" + b + "' has stations but no borough table row");
  }
  write_borough_figure(out, report.summaries, "boroughs_summary.csv");

  json pairs = json::array();
  for (std::string_view y : summary_fields()) {
    if (y == "accessible_count" || y == "total_count") continue;
    json entry;
    entry["x"] = "accessible_count";
    entry["y"] = y;
    try {
      const auto c = correlate(report.summaries, "accessible_count", y);
      entry["n"] = c.n;
      entry["pearson_r"] = c.pearson_r;
      entry["spearman_rho"] = c.spearman_rho;
      entry["strength"] = strength(c.pearson_r);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientData && e.kind() != ErrorKind::ZeroVariance) throw;
      entry["error"] = std::string(to_string(e.kind()));
    }
    pairs.push_back(std::move(entry));
  }
  json doc;
  doc["boroughs"] = report.summaries.size();
  doc["unmatched"] = report.unmatched;
  doc["correlations"] = std::move(pairs);
  out.put("correlation.json", json_text(doc));
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json input_entry(const fs::path& p) {
  json j;
  j["path"] = p.generic_string();
  j["sha256"] = sha256_hex(read_file(p));
  return j;
}

json compare_value(double computed, const json& ref) {
  json j;
  j["computed"] = computed;
  j["reference"] = ref;
  if (ref.is_number() && ref.get<double>() != 0) {
    j["relative_difference"] = (computed - ref.get<double>()) / ref.get<double>();
  }
  return j;
}

json reference_block(const Analysis& a, const fs::path& path, std::size_t k) {
  json ref;
  try {
    ref = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadValue, path.string() + ": " + e.what());
  }
  json block;
  block["path"] = path.generic_string();
  block["reconstructed"] = ref.value("reconstructed", false);
  for (const auto& r : a.networks) {
    const std::string net(to_string(r.kind));
    if (!ref.contains(net)) continue;
    const json& want = ref[net];
    json cmp;
    if (want.contains("nodes")) cmp["nodes"] = compare_value(static_cast<double>(r.stats.nodes), want["nodes"]);
    if (want.contains("edges")) cmp["edges"] = compare_value(static_cast<double>(r.stats.edges), want["edges"]);
    if (want.contains("diameter")) {
      cmp["diameter"] = compare_value(static_cast<double>(r.stats.diameter.diameter), want["diameter"]);
    }
    if (want.contains("gamma") && r.fit) cmp["gamma"] = compare_value(r.fit->gamma, want["gamma"]);
    if (!r.betweenness.scores.empty() && ref.contains("top10") && ref["top10"].contains(net)) {
      for (const auto* t : {&r.betweenness, &r.closeness}) {
        const std::string measure(to_string(t->measure));
        if (!ref["top10"][net].contains(measure)) continue;
        std::set<StationId> ours;
        for (const auto& [id, v] : top_k(*t, k)) ours.insert(id);
        std::size_t overlap = 0, rows = 0;
        for (const auto& row : ref["top10"][net][measure]) {
          ++rows;
          if (ours.contains(row.value("id", std::string()))) ++overlap;
        }
        cmp["top10_" + measure] = {{"overlap", overlap}, {"reference_rows", rows}};
      }
    }
    block[net] = std::move(cmp);
  }
  return block;
}

}  // namespace

RunResult run(Command command, const RunOptions& options) {
  const Dataset data = load_dataset(options.inputs);
  const bool metrics = command != Command::Build;
  const bool socio = command == Command::Socio || command == Command::All;
  if (command == Command::Socio && data.boroughs.empty()) {
    throw Error(ErrorKind::Io, "socio needs a borough table (--boroughs)");
  }

  Analysis a = analyze(data, options.networks, options.convention, MetricsOptions{options.threads}, metrics);
  RunResult result;
  result.warnings = a.warnings;

  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + options.out_dir.string() + ": " + ec.message());
  Outputs out(options.out_dir);

  if (command == Command::Build || command == Command::All) {
    for (const auto& r : a.networks) write_build(out, r);
  }
  if (command == Command::Centrality || command == Command::All) {
    for (const auto& r : a.networks) write_centrality(out, r, a, options.top_k);
  }
  if (command == Command::Figures || command == Command::All) {
    write_figures(out, a, options.top_k, result.warnings);
  }
  if (socio) {
    if (data.boroughs.empty()) {
      result.warnings.push_back("no borough table; socio outputs not written");
    } else {
      write_socio(out, a, options.top_k, result.warnings);
    }
  }

  json manifest;
  manifest["tool"] = "transit_access";
  manifest["version"] = kVersion;
  manifest["command"] = std::string(to_string(command));
  json inputs;
  inputs["stations"] = input_entry(options.inputs.stations);
  inputs["branches"] = input_entry(options.inputs.branches);
  inputs["access"] = input_entry(options.inputs.access);
  if (options.inputs.boroughs) inputs["boroughs"] = input_entry(*options.inputs.boroughs);
  manifest["inputs"] = std::move(inputs);
  json nets = json::array();
  for (const auto& r : a.networks) nets.push_back(std::string(to_string(r.kind)));
  manifest["networks"] = std::move(nets);
  manifest["closeness_convention"] = std::string(to_string(options.convention));
  manifest["top_k"] = options.top_k;
  manifest["out_dir"] = options.out_dir.generic_string();
  json files = json::array();
  auto written = out.files();
  std::sort(written.begin(), written.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  for (const auto& f : written) files.push_back({{"file", f.name}, {"sha256", f.sha256}});
  manifest["outputs"] = std::move(files);
  manifest["warnings"] = result.warnings;
  if (options.reference) manifest["reference"] = reference_block(a, *options.reference, options.top_k);
  out.put("manifest.json", json_text(manifest));

  result.files = out.files();
  return result;
}

}  // namespace transit

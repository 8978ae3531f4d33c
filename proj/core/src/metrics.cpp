#include "transit/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "transit/errors.hpp"

namespace transit {

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::Betweenness: return "betweenness";
    case Measure::Closeness: return "closeness";
    case Measure::Degree: return "degree";
  }
  return "degree";
}

std::string_view to_string(ClosenessConvention c) {
  return c == ClosenessConvention::NMinusOne ? "n-1" : "n";
}

unsigned threads_from_env() {
  const char* raw = std::getenv("TRANSIT_ACCESS_THREADS");
  if (!raw || !*raw) return 0;
  const std::string_view v(raw);
  unsigned out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw Error(ErrorKind::BadValue, "TRANSIT_ACCESS_THREADS must be a non-negative integer, got '" +
                                         std::string(v) + "'");
  }
  return out;
}

namespace {

// Work unit size. Fixed, so the chunk layout (and therefore the reduction
// order) does not depend on how many threads run.
constexpr std::size_t kChunk = 32;

unsigned resolve_threads(unsigned requested, std::size_t chunks) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(chunks, 1)));
}

// Runs fn(chunk_index, begin, end) for every chunk of [0, n).
template <class Fn>
void for_each_chunk(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  const unsigned workers = resolve_threads(threads, chunks);
  auto run = [&](std::size_t c) { fn(c, c * kChunk, std::min(n, (c + 1) * kChunk)); };
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) run(c);
    });
  }
}

void require_nonempty(const TransitGraph& g, std::string_view what) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, std::string(what) + " of an empty graph");
}

}  // namespace

CentralityTable betweenness_all(const TransitGraph& g, NetworkKind kind, MetricsOptions options) {
  require_nonempty(g, "betweenness");
  const std::size_t n = g.node_count();
  if (n < 3) {
    throw Error(ErrorKind::TooSmall,
                "betweenness normalisation needs at least 3 nodes, graph has " + std::to_string(n));
  }
  const auto ig = g.indexed();
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(n, 0.0));

  for_each_chunk(n, options.threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto& acc = partial[c];
    std::vector<std::int32_t> dist;
    std::vector<std::uint32_t> order;
    std::vector<double> sigma(n), delta(n);
    for (std::size_t s = begin; s < end; ++s) {
      bfs_hops(ig, s, dist, order);
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      sigma[s] = 1.0;
      for (auto v : order) {
        for (auto w : ig.neighbors(v)) {
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = *it;
        for (auto w : ig.neighbors(v)) {
          if (dist[w] == dist[v] + 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (v != s) acc[v] += delta[v];
      }
    }
  });

  // Every unordered pair is reached from both endpoints, so the raw sum is
  // twice the pair sum; 2/((N-1)(N-2)) applied to half of it leaves this.
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  CentralityTable t{Measure::Betweenness, kind, {}};
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0;
    for (std::size_t c = 0; c < chunks; ++c) total += partial[c][i];
    t.scores.emplace_hint(t.scores.end(), ig.id(i), total * scale);
  }
  return t;
}

CentralityTable closeness_all(const TransitGraph& g, ClosenessConvention convention, NetworkKind kind,
                              MetricsOptions options) {
  require_nonempty(g, "closeness");
  const std::size_t n = g.node_count();
  const auto ig = g.indexed();
  std::vector<double> score(n, 0.0);

  for_each_chunk(n, options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<std::int32_t> dist;
    std::vector<std::uint32_t> order;
    for (std::size_t s = begin; s < end; ++s) {
      bfs_hops(ig, s, dist, order);
      std::uint64_t sum = 0;
      for (auto v : order) sum += static_cast<std::uint64_t>(dist[v]);
      if (sum == 0) continue;  // isolated
      const double reach = static_cast<double>(order.size() - 1);
      const double total = static_cast<double>(sum);
      score[s] = convention == ClosenessConvention::NMinusOne
                     ? (reach / total) * (reach / static_cast<double>(n - 1))
                     : static_cast<double>(n) / total;
    }
  });

  CentralityTable t{Measure::Closeness, kind, {}};
  for (std::size_t i = 0; i < n; ++i) t.scores.emplace_hint(t.scores.end(), ig.id(i), score[i]);
  return t;
}

CentralityTable degree_centrality(const TransitGraph& g, NetworkKind kind) {
  require_nonempty(g, "degree centrality");
  const std::size_t n = g.node_count();
  CentralityTable t{Measure::Degree, kind, {}};
  for (const auto& id : g.node_ids()) {
    t.scores.emplace_hint(t.scores.end(), id,
                          n > 1 ? static_cast<double>(g.degree(id)) / static_cast<double>(n - 1) : 0.0);
  }
  return t;
}

double DegreeDistribution::p(std::size_t k) const {
  auto it = counts.find(k);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

std::map<std::size_t, double> DegreeDistribution::frequencies() const {
  std::map<std::size_t, double> out;
  for (const auto& [k, c] : counts) out.emplace(k, static_cast<double>(c) / static_cast<double>(total));
  return out;
}

DegreeDistribution degree_distribution(const TransitGraph& g) {
  require_nonempty(g, "degree distribution");
  DegreeDistribution d;
  for (const auto& id : g.node_ids()) ++d.counts[g.degree(id)];
  d.total = g.node_count();
  return d;
}

PowerLawFit fit_power_law(const std::map<std::size_t, double>& pk) {
  PowerLawFit fit;
  std::vector<double> x, y;
  for (const auto& [k, p] : pk) {
    if (k < 1 || !(p > 0)) continue;
    fit.k_support.push_back(k);
    x.push_back(std::log(static_cast<double>(k)));
    y.push_back(std::log(p));
  }
  if (x.size() < 3) {
    throw Error(ErrorKind::InsufficientSupport,
                "power-law fit needs 3 distinct degrees with nonzero frequency, have " +
                    std::to_string(x.size()));
  }
  const double m = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  fit.gamma = -slope;
  fit.intercept = my - slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

PowerLawFit fit_power_law(const DegreeDistribution& d) { return fit_power_law(d.frequencies()); }

std::vector<std::pair<StationId, double>> top_k(const CentralityTable& t, std::size_t k) {
  std::vector<std::pair<StationId, double>> all(t.scores.begin(), t.scores.end());
  auto cmp = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  k = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), cmp);
  all.resize(k);
  return all;
}

}  // namespace transit

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "transit/errors.hpp"
#include "transit/report.hpp"
#include "transit/version.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct SharedFlags {
  std::string stations, branches, access, boroughs, reference;
  std::string data_dir;
  std::string network = "both";
  std::string convention = "n-1";
  std::string out = "out";
  std::size_t top_k = 10;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--data", f.data_dir,
                  "Directory holding stations.csv, branches.csv, accessibility.csv and boroughs.csv");
  cmd->add_option("--stations", f.stations, "Station table CSV");
  cmd->add_option("--branches", f.branches, "Line branch sequence CSV");
  cmd->add_option("--access", f.access, "Per-line accessibility CSV");
  cmd->add_option("--boroughs", f.boroughs, "Borough socioeconomic CSV");
  cmd->add_option("--network", f.network, "Networks to build")
      ->check(CLI::IsMember({"full", "accessible", "both"}))
      ->capture_default_str();
  cmd->add_option("--closeness-convention", f.convention, "n-1 (component corrected) or n")
      ->check(CLI::IsMember({"n-1", "n"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
  cmd->add_option("--top-k", f.top_k, "Rows in top tables and subgraphs")->capture_default_str();
  cmd->add_option("--reference", f.reference, "reference.json to compare against in the manifest");
}

transit::RunOptions to_options(const SharedFlags& f) {
  transit::RunOptions o;
  if (!f.data_dir.empty()) o.inputs = transit::dataset_in(f.data_dir);
  if (!f.stations.empty()) o.inputs.stations = f.stations;
  if (!f.branches.empty()) o.inputs.branches = f.branches;
  if (!f.access.empty()) o.inputs.access = f.access;
  if (!f.boroughs.empty()) o.inputs.boroughs = f.boroughs;
  for (const auto* p : {&o.inputs.stations, &o.inputs.branches, &o.inputs.access}) {
    if (p->empty()) {
      throw transit::Error(transit::ErrorKind::Io,
                           "--stations, --branches and --access are required (or --data DIR)");
    }
  }
  o.networks = f.network == "full"         ? transit::NetworkSelection::Full
               : f.network == "accessible" ? transit::NetworkSelection::Accessible
                                           : transit::NetworkSelection::Both;
  o.convention = f.convention == "n" ? transit::ClosenessConvention::N
                                     : transit::ClosenessConvention::NMinusOne;
  o.out_dir = f.out;
  o.top_k = f.top_k;
  if (!f.reference.empty()) o.reference = f.reference;
  o.threads = transit::threads_from_env();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transit network accessibility analysis"};
  app.set_version_flag("--version", std::string(transit::kVersion));
  app.require_subcommand(1);

  SharedFlags flags;
  const std::pair<const char*, transit::Command> commands[] = {
      {"build", transit::Command::Build},
      {"centrality", transit::Command::Centrality},
      {"figures", transit::Command::Figures},
      {"socio", transit::Command::Socio},
      {"all", transit::Command::All},
  };
  const std::map<std::string, const char*> help{
      {"build", "Write edge lists and network stats"},
      {"centrality", "Write per-node scores and top tables"},
      {"figures", "Write plot-ready figure data"},
      {"socio", "Write borough summaries and correlations"},
      {"all", "Run every stage"},
  };
  std::map<CLI::App*, transit::Command> by_app;
  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_shared(sub, flags);
    by_app.emplace(sub, cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    const auto* chosen = app.get_subcommands().front();
    const auto result = transit::run(by_app.at(const_cast<CLI::App*>(chosen)), to_options(flags));
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << "wrote " << result.files.size() << " files to " << flags.out << '\n';
    return 0;
  } catch (const transit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == transit::ErrorKind::InvariantViolation ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

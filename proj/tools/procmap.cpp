#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "procmap/commands.hpp"

int main(int argc, char** argv) {
  using namespace procmap;

  CLI::App app{"Build event logs from community messages and discover process maps."};
  app.require_subcommand(1);

  cmd::BuildLogOptions build;
  auto* build_cmd = app.add_subcommand("build-log", "Classify messages into an event log CSV.");
  build_cmd->add_option("--messages", build.messages_path, "Messages CSV")->required();
  build_cmd->add_option("--catalog", build.catalog_path, "Catalog CSV")->required();
  build_cmd->add_option("--synonyms", build.synonyms_path, "Synonym pairs CSV");
  build_cmd->add_option("--phase", build.phase, "Initiation, Progression or Maturation")
      ->required();
  build_cmd->add_option("--out", build.out_path, "Event log CSV to write")->required();

  cmd::DiscoverOptions disc;
  std::string role;
  std::size_t min_edge_cases = 0;
  std::size_t min_node_events = 0;
  auto* disc_cmd = app.add_subcommand("discover", "Discover a process map and write it as DOT.");
  disc_cmd->add_option("--log", disc.log_path, "Event log CSV")->required();
  auto* role_opt = disc_cmd->add_option("--role", role, "Keep only events of this role");
  auto* edge_opt = disc_cmd->add_option("--min-edge-cases", min_edge_cases,
                                        "Drop edges seen in fewer cases");
  auto* node_opt = disc_cmd->add_option("--min-node-events", min_node_events,
                                        "Drop activities with fewer events");
  disc_cmd->add_option("--view", disc.view, "frequency or performance")
      ->capture_default_str();
  disc_cmd->add_option("--out", disc.out_path, "DOT file to write")->required();

  cmd::StatsOptions st;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize an event log as JSON.");
  stats_cmd->add_option("--log", st.log_path, "Event log CSV")->required();
  stats_cmd->add_option("--bin-width", st.bin_width, "Timeline bin width, e.g. 3600, 1d, 1w")
      ->capture_default_str();
  stats_cmd->add_option("--out", st.out_path, "JSON file to write")->required();

  cmd::SeedCatalogOptions seed;
  auto* seed_cmd = app.add_subcommand("seed-catalog", "Write the shipped default catalog.");
  seed_cmd->add_option("--out", seed.out_path, "Catalog CSV to write")->required();
  seed_cmd->add_option("--synonyms-out", seed.synonyms_out_path, "Synonym pairs CSV to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cmd::kUsage;
  }

  if (*build_cmd) return cmd::build_log(build, std::cout, std::cerr);
  if (*disc_cmd) {
    if (*role_opt) disc.role = role;
    if (*edge_opt) disc.min_edge_cases = min_edge_cases;
    if (*node_opt) disc.min_node_events = min_node_events;
    return cmd::discover(disc, std::cout, std::cerr);
  }
  if (*stats_cmd) return cmd::stats(st, std::cout, std::cerr);
  if (*seed_cmd) return cmd::seed_catalog(seed, std::cout, std::cerr);
  return cmd::kUsage;
}

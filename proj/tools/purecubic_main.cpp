#include <iostream>

#include <CLI11.hpp>

#include "purecubic/cli.hpp"

int main(int argc, char** argv) {
  using namespace purecubic::cli;
  RunConfig config;
  apply_environment(config);

  CLI::App app{"Reduced ideals, minimal sequences and fundamental units of pure cubic fields"};
  app.require_subcommand(1, 1);

  long m_max = 0;
  long length = 0;
  long all_lengths = 0;
  long max_z = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", config.m, "cube-free m = h k^2 with h > k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--m-max", m_max, "sweep every m up to this value");
    sub->add_option("--precision-cap", config.precision_cap, "interval precision before the exact fallback (bits)")
        ->check(CLI::Range(64u, 1u << 20));
    sub->add_option("--iteration-cap", config.iteration_cap, "limit on minimal sequence steps")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", config.json, "JSON lines instead of text");
    sub->add_flag("--verify", config.verify, "cross-check against the oracles");
  };
  auto add_lengths = [&](CLI::App* sub) {
    auto* len = sub->add_option("--length", length, "a single ideal length")->check(CLI::PositiveNumber);
    sub->add_option("--all-lengths-up-to", all_lengths, "every length up to this bound")
        ->check(CLI::PositiveNumber)
        ->excludes(len);
  };
  auto add_sequence = [&](CLI::App* sub) {
    auto* z = sub->add_option("--max-z", max_z, "list terms with z below this value");
    sub->add_flag("--until-period", config.until_period, "run up to the fundamental unit")->excludes(z);
    sub->add_flag("--four-corner", config.four_corner, "use the four-corner search at each height");
  };

  CLI::App* ideals = app.add_subcommand("ideals", "list primitive ideals");
  CLI::App* reduced = app.add_subcommand("reduced", "list reduced ideals");
  CLI::App* sequence = app.add_subcommand("sequence", "minimal and norm sequence");
  CLI::App* unit = app.add_subcommand("unit", "fundamental unit and period");
  CLI::App* verify = app.add_subcommand("verify", "run every cross-check");
  for (CLI::App* sub : {ideals, reduced, sequence, unit, verify}) add_common(sub);
  for (CLI::App* sub : {ideals, reduced, verify}) add_lengths(sub);
  add_sequence(sequence);
  for (CLI::App* sub : {sequence, unit}) sub->add_option("--digits", config.digits, "decimal digits")->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  config.command = *parse_command(app.get_subcommands().front()->get_name());
  if (m_max > 0) config.m_max = m_max;
  if (length > 0) config.length = length;
  if (all_lengths > 0) config.all_lengths_up_to = all_lengths;
  if (max_z > 0) config.max_z = max_z;
  return run(config, std::cout, std::cerr);
}

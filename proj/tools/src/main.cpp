#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gaugeball_cli/commands.hpp"

namespace {

// GAUGEBALL_THREADS caps the harness worker count; unset means all cores.
unsigned thread_cap() {
  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("GAUGEBALL_THREADS");
  if (env == nullptr || *env == '\0') return cores;
  try {
    const long v = std::stol(env);
    if (v >= 1) return std::min(cores, static_cast<unsigned>(v));
  } catch (const std::exception&) {
  }
  std::cerr << "gaugeball: ignoring invalid GAUGEBALL_THREADS='" << env << "'\n";
  return cores;
}

}  // namespace

int main(int argc, char** argv) {
  using gaugeball::cli::CommandOptions;
  CLI::App app{"Exact circumradii and Chebyshev sets under polytopal gauges"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string chosen;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", opts.input, "Input JSON file")->required();
    sub->add_option("-o,--out", opts.out, "Write the result here instead of stdout");
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };

  add("radius", "Circumradius, center, Chebyshev set and its dimension");
  add("certify", "Optimality certificate read from the LP duals");
  add("witness", "Search for n-k boundary points forcing dim cc > k")
      ->add_option("--k", opts.k, "Dimension threshold k (0 <= k <= n-2)");
  CLI::App* check = add("check", "Run a consistency harness on a gauge");
  check->add_option("--theorem", opts.theorem, "Which characterization: 1, 2, 3 or corollary")
      ->check(CLI::IsMember({"1", "2", "3", "corollary"}));
  check->add_option("--k", opts.k, "Dimension threshold k (0 <= k <= n-2)");
  check->add_option("--trials", opts.trials, "Random point sets per run");
  check->add_option("--seed", opts.seed, "RNG seed");
  add("render", "SVG drawing of a planar instance");
  add("faces", "Proper faces of the gauge with their dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gaugeball::cli::kInputError;
  }

  opts.threads = thread_cap();
  return gaugeball::cli::run_command(chosen, opts, std::cout, std::cerr);
}

// bench: time the guessed-digit square root against the baselines.
//
//   bench --sizes 0,1,2,4 --trials 1000 --seed 7 --format csv --verify

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bombelli/bench.hpp"

int main(int argc, char** argv) {
  using namespace bombelli::bench;

  CLI::App app{"Bombelli vs Newton integer square root benchmark"};
  BenchConfig config;
  config.sizes = default_sizes();
  std::string sizes_text;
  bool no_newton = false;

  app.add_option("--sizes", sizes_text, "Comma-separated limb counts (default 0,1,2,4,...,32768)");
  app.add_option("--trials", config.trials, "Timed trials per size")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for the input stream");
  const std::map<std::string, Format> formats{{"csv", Format::csv},
                                              {"markdown", Format::markdown}};
  app.add_option("--format", config.format, "Output table format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--verify", config.verify, "Cross-check results of all implementations");
  app.add_flag("--include-binary-search", config.include_binary_search,
               "Also time the bisected-digit variant");
  app.add_flag("--no-newton", no_newton, "Skip the Newton baseline");
  app.add_option("--warmup-frac", config.warmup_frac,
                 "Untimed warmup trials as a fraction of --trials")
      ->check(CLI::Range(0.0, 10.0));

  CLI11_PARSE(app, argc, argv);
  config.include_newton = !no_newton;

  try {
    if (!sizes_text.empty()) config.sizes = parse_sizes(sizes_text);
    const auto records = run_bench(config);
    std::cout << emit(records, config.format);
    std::uint64_t corrections = 0;
    std::uint64_t digits = 0;
    for (const auto& r : records) {
      corrections += r.corrections_total;
      digits += r.digits_total;
    }
    std::cerr << "guessed digits: " << digits << ", corrections: " << corrections << '\n';
  } catch (const MismatchError& e) {
    std::cerr << e.what() << "\ninput = " << e.input() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return 2;
  }
  return EXIT_SUCCESS;
}

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "exactmatch/exactmatch.hpp"

namespace {

using namespace exactmatch;

std::ifstream open_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return file;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw Error(Errc::ParseError, "cannot open '" + output_path + "' for writing");
  file << text;
}

struct GenOptions {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  long steps = -1;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  const long steps = opt.steps >= 0 ? opt.steps : 16L * (2 * opt.n) * (2 * opt.n);
  std::ostringstream out;
  if (opt.kind == "lemma1") {
    write_instance(out, make_lemma1_instance(opt.n));
  } else if (opt.kind == "circulant") {
    write_instance(out, make_circulant_instance(opt.n));
  } else if (opt.kind == "random") {
    write_instance(out, randomize(make_circulant_instance(opt.n), {opt.seed, steps}));
  } else if (opt.kind == "random-disconnected") {
    write_instance(out, make_disconnected_instance(opt.n, opt.seed));
  } else {
    std::cerr << "error: unknown kind '" << opt.kind
              << "', expected lemma1 | circulant | random | random-disconnected\n";
    return 1;
  }
  emit(out.str(), opt.output);
  return 0;
}

int run_solve(const std::string& input, int k, const std::string& output) {
  std::ifstream file = open_input(input);
  const BalancedColoring coloring = read_instance(file);
  const SolveResult result = solve(coloring, k);
  std::ostringstream out;
  if (result.found()) {
    write_matching(out, coloring, result.matching());
    emit(out.str(), output);
    return 0;
  }
  out << "impossible\n";
  write_certificate(out, result.certificate());
  emit(out.str(), output);
  return 2;
}

int run_verify(const std::string& input, const std::string& matching_path) {
  std::ifstream instance_file = open_input(input);
  const BalancedColoring coloring = read_instance(instance_file);
  std::ifstream matching_file = open_input(matching_path);
  const Matching matching = read_matching(matching_file, coloring.side());
  const ColorCount count = count_colors(coloring, matching);
  std::cout << "valid, red=" << count.red << " blue=" << count.blue << "\n";
  return 0;
}

int run_oracle(const std::string& input) {
  std::ifstream file = open_input(input);
  const BalancedColoring coloring = read_instance(file);
  const Spectrum spectrum = enumerate_spectrum(coloring);
  for (int k = 0; k <= coloring.side(); ++k)
    std::cout << k << " " << spectrum.counts[k] << "\n";
  return 0;
}

int run_components(const std::string& input) {
  std::ifstream file = open_input(input);
  const BalancedColoring coloring = read_instance(file);
  const ComponentReport report = blue_components(coloring);
  std::cout << "components " << report.components.size() << "\n";
  for (std::size_t idx = 0; idx < report.components.size(); ++idx) {
    const auto& comp = report.components[idx];
    std::cout << "component " << idx + 1 << " left";
    for (int v : comp.left) std::cout << " " << v + 1;
    std::cout << " right";
    for (int v : comp.right) std::cout << " " << v + 1;
    std::cout << "\n";
  }
  return 0;
}

int run_permanent(const std::string& input, int k) {
  std::ifstream file = open_input(input);
  const BinaryMatrix matrix = read_binary_matrix(file);
  const ZeroSelection selection = select_zero_entries(matrix, k);
  for (const auto& [r, c] : selection.zeros)
    std::cout << "selected " << r + 1 << " " << c + 1 << "\n";
  std::vector<int> rows, cols;
  for (const auto& [r, c] : selection.zeros) {
    rows.push_back(r);
    cols.push_back(c);
  }
  const BinaryMatrix minor = matrix.without(rows, cols);
  if (minor.size <= 24) {
    std::cout << "permanent " << ryser_permanent(minor) << "\n";
  } else {
    // Too large for exact evaluation; the blue matching edges certify that
    // the permanent is positive.
    for (const auto& [r, c] : selection.ones_witness)
      std::cout << "witness " << r + 1 << " " << c + 1 << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Perfect matchings with a prescribed number of red edges in balanced "
      "red/blue colorings of K_{2n,2n}"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind,--kind", gen_opt.kind,
                  "lemma1 | circulant | random | random-disconnected")
      ->required();
  gen->add_option("--n", gen_opt.n, "half-degree n (the graph is K_{2n,2n})")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opt.seed, "seed for the random kinds");
  gen->add_option("--steps", gen_opt.steps,
                  "attempted rectangle flips for kind=random (default 16*(2n)^2)");
  gen->add_option("--output,-o", gen_opt.output, "write to a file instead of stdout");

  std::string solve_input, solve_output;
  int solve_k = 0;
  auto* solve_cmd = app.add_subcommand(
      "solve", "find a matching with exactly k red edges, or print the certificate");
  solve_cmd->add_option("--input,-i", solve_input, "instance file")->required();
  solve_cmd->add_option("--k", solve_k, "requested number of red edges")->required();
  solve_cmd->add_option("--output,-o", solve_output, "write to a file instead of stdout");

  std::string verify_input, verify_matching;
  auto* verify_cmd = app.add_subcommand("verify", "check a matching against an instance");
  verify_cmd->add_option("--input,-i", verify_input, "instance file")->required();
  verify_cmd->add_option("--matching,-m", verify_matching, "matching file")->required();

  std::string oracle_input;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "enumerate the full red-count spectrum (n <= 5)");
  oracle_cmd->add_option("--input,-i", oracle_input, "instance file")->required();

  std::string components_input;
  auto* components_cmd =
      app.add_subcommand("components", "connected components of the blue graph");
  components_cmd->add_option("--input,-i", components_input, "instance file")->required();

  std::string permanent_input;
  int permanent_k = 0;
  auto* permanent_cmd = app.add_subcommand(
      "permanent", "select k zero entries of a balanced 0/1 matrix keeping the minor's "
                   "permanent positive");
  permanent_cmd->add_option("--input,-i", permanent_input, "matrix file (rows of 0/1)")
      ->required();
  permanent_cmd->add_option("--k", permanent_k, "number of zero entries to select (even)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (solve_cmd->parsed()) return run_solve(solve_input, solve_k, solve_output);
    if (verify_cmd->parsed()) return run_verify(verify_input, verify_matching);
    if (oracle_cmd->parsed()) return run_oracle(oracle_input);
    if (components_cmd->parsed()) return run_components(components_input);
    if (permanent_cmd->parsed()) return run_permanent(permanent_input, permanent_k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

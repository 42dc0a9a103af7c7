// speccert: spectral clustering, ratio-cut certificates and eigenmap
// perturbation bounds on weighted graphs.
//
// Exit status: 0 success, 2 input error, 3 hypothesis of the bound violated,
// 1 anything else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "speccert/certify.hpp"
#include "speccert/generators.hpp"
#include "speccert/io.hpp"
#include "speccert/oracle.hpp"
#include "speccert/perturb.hpp"
#include "speccert/report.hpp"
#include "speccert/rounding.hpp"
#include "speccert/spectrum.hpp"

namespace {

using namespace speccert;

constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

struct RunConfig {
  std::string family;
  int n = 1;
  double c = 0.0;
  std::vector<int> sizes;
  double intra = 1.0;
  double cross = 0.0;
  int k = 2;
  std::uint64_t seed = 1;
  std::string method = "kmeans";
  int restarts = kDefaultRestarts;
  std::string input;
  std::string partition;
  std::string output;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
}

int run_gen(const RunConfig& cfg) {
  std::optional<PlantedGraph> planted;
  if (cfg.family == "example-blocks") {
    planted = gen_example_blocks(cfg.n, cfg.c);
  } else if (cfg.family == "unbalanced") {
    planted = gen_unbalanced_example();
  } else if (cfg.family == "planted") {
    if (cfg.sizes.empty()) throw InputError("gen planted needs --sizes");
    planted = gen_planted_blocks(cfg.sizes, cfg.intra, cfg.cross, cfg.seed);
  } else {
    throw InputError("unknown generator '" + cfg.family + "'");
  }
  const std::string part = cfg.partition.empty() ? cfg.output + ".partition" : cfg.partition;
  write_edge_list(cfg.output, planted->graph);
  write_partition(part, planted->partition);
  return 0;
}

int run_cluster(const RunConfig& cfg) {
  const auto g = read_edge_list(cfg.input);
  const auto method = cfg.method == "fiedler" ? RoundingMethod::fiedler : RoundingMethod::kmeans;
  const auto res = spectral_cluster(g, cfg.k, method, cfg.seed, cfg.restarts);
  write_partition(cfg.output, res.partition);
  emit(dump_canonical(cluster_summary(res, method, cfg.k, cfg.seed, cfg.restarts,
                                      ratio_cut(g, res.partition))),
       cfg.output + ".json");
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
  return 0;
}

int run_certify(const RunConfig& cfg) {
  const auto g = read_edge_list(cfg.input);
  const auto p = read_partition(cfg.partition);
  require_compatible(g, p);
  const auto cert = certificate(g, p);
  for (int b : cert.singleton_blocks)
    std::cerr << "warning: block " << b << " is a singleton; its connectivity is reported as inf\n";
  emit(dump_canonical(to_json(cert)), cfg.output);
  return 0;
}

int run_bound(const RunConfig& cfg) {
  const auto g = read_edge_list(cfg.input);
  const auto p = read_partition(cfg.partition);
  emit(dump_canonical(to_json(theoretical_bound(g, p))), cfg.output);
  return 0;
}

int run_gap(const RunConfig& cfg) {
  const auto g = read_edge_list(cfg.input);
  emit(dump_canonical(to_json(gap_report(g))), cfg.output);
  return 0;
}

int run_oracle(const RunConfig& cfg) {
  const auto g = read_edge_list(cfg.input);
  emit(dump_canonical(to_json(min_ratio_cut_bruteforce(g, cfg.k))), cfg.output);
  return 0;
}

int run_eigenmap(const RunConfig& cfg) {
  const auto g = read_edge_list(cfg.input);
  const auto map = eigenmap(g, cfg.k);
  if (cfg.output.empty()) {
    write_matrix_tsv(std::cout, map.U);
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw InputError("cannot open '" + cfg.output + "' for writing");
    write_matrix_tsv(out, map.U);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral clustering, ratio-cut optimality certificates and eigenmap perturbation bounds"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "Write a generated graph (edge list) and its planted partition");
  gen->add_option("family", cfg.family, "example-blocks | unbalanced | planted")
      ->required()
      ->check(CLI::IsMember({"example-blocks", "unbalanced", "planted"}));
  gen->add_option("--n", cfg.n, "example-blocks group size");
  gen->add_option("--c", cfg.c, "example-blocks cross weight");
  gen->add_option("--sizes", cfg.sizes, "planted block sizes, comma separated")->delimiter(',');
  gen->add_option("--intra", cfg.intra, "planted intra-block weight");
  gen->add_option("--cross", cfg.cross, "planted cross edge weight");
  gen->add_option("--seed", cfg.seed, "reserved for randomized generators");
  gen->add_option("--output", cfg.output, "edge-list output path")->required();
  gen->add_option("--partition", cfg.partition, "partition output path (default: <output>.partition)");

  auto* cluster = app.add_subcommand("cluster", "Spectral clustering; writes a partition file and <output>.json");
  cluster->add_option("--input", cfg.input, "edge-list file")->required();
  cluster->add_option("--k", cfg.k, "number of clusters")->required()->check(CLI::PositiveNumber);
  cluster->add_option("--method", cfg.method, "fiedler | kmeans")
      ->check(CLI::IsMember({"fiedler", "kmeans"}));
  cluster->add_option("--seed", cfg.seed, "k-means seed");
  cluster->add_option("--restarts", cfg.restarts, "k-means restarts")->check(CLI::PositiveNumber);
  cluster->add_option("--output", cfg.output, "partition output path")->required();

  auto* certify = app.add_subcommand("certify", "Optimality certificate for a partition (JSON)");
  certify->add_option("--input", cfg.input, "edge-list file")->required();
  certify->add_option("--partition", cfg.partition, "partition file")->required();
  certify->add_option("--output", cfg.output, "JSON output path (default: stdout)");

  auto* bound = app.add_subcommand("bound", "Two-to-infinity perturbation report (JSON)");
  bound->add_option("--input", cfg.input, "edge-list file")->required();
  bound->add_option("--partition", cfg.partition, "partition file")->required();
  bound->add_option("--output", cfg.output, "JSON output path (default: stdout)");

  auto* gap = app.add_subcommand("gap", "l-inf gap: lower bound, exact value, 4M/D upper bound (JSON)");
  gap->add_option("--input", cfg.input, "edge-list file")->required();
  gap->add_option("--output", cfg.output, "JSON output path (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Exact minimum ratio cut by enumeration, n <= 14 (JSON)");
  oracle->add_option("--input", cfg.input, "edge-list file")->required();
  oracle->add_option("--k", cfg.k, "number of blocks")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--output", cfg.output, "JSON output path (default: stdout)");

  auto* emap = app.add_subcommand("eigenmap", "Laplacian eigenmap coordinates, one vertex per row (TSV)");
  emap->add_option("--input", cfg.input, "edge-list file")->required();
  emap->add_option("--k", cfg.k, "embedding dimension")->required()->check(CLI::PositiveNumber);
  emap->add_option("--output", cfg.output, "TSV output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen) return run_gen(cfg);
    if (*cluster) return run_cluster(cfg);
    if (*certify) return run_certify(cfg);
    if (*bound) return run_bound(cfg);
    if (*gap) return run_gap(cfg);
    if (*oracle) return run_oracle(cfg);
    if (*emap) return run_eigenmap(cfg);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

// hvlc: least hypervolume contributor by Monte Carlo racing.
//
//   hvlc gen   --dataset linear --n 100 --d 10 --seed 1 --out front.txt
//   hvlc solve --input front.txt [--epsilon 1e-2] [--delta 1e-6] [--json]
//   hvlc exact --input front.txt [--algo hso|inclexcl]
//   hvlc bench --dataset linear --d 100 --n-list 100,1000 --reps 5 --out bench.csv

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hvlc/bench.hpp"
#include "hvlc/datasets.hpp"
#include "hvlc/error.hpp"
#include "hvlc/exact.hpp"
#include "hvlc/front_io.hpp"
#include "hvlc/race.hpp"

namespace {

const std::vector<std::string> kDatasets = {"linear", "spherical", "concave", "random1", "random2"};

hvlc::DatasetKind dataset(const std::string& name) { return *hvlc::parse_dataset_kind(name); }

void add_race_options(CLI::App& cmd, hvlc::RaceConfig& cfg) {
  cmd.add_option("--epsilon", cfg.epsilon, "relative error allowed on the returned contribution")
      ->capture_default_str();
  cmd.add_option("--delta", cfg.delta, "failure probability")->capture_default_str();
  cmd.add_option("--gamma", cfg.gamma, "union-bound exponent slack, in (0, 1]")->capture_default_str();
  cmd.add_option("--alpha", cfg.alpha, "push factor for the current minimum")->capture_default_str();
  cmd.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least hypervolume contributor by Monte Carlo racing"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a benchmark front");
  std::string gen_kind;
  std::size_t gen_n = 0, gen_d = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--dataset", gen_kind, "dataset kind")
      ->required()
      ->check(CLI::IsMember(kDatasets));
  gen->add_option("--n", gen_n, "number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--d", gen_d, "dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output front file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "find an epsilon-delta least contributor");
  hvlc::RaceConfig solve_cfg;
  std::string solve_in;
  bool no_push = false, no_exact = false, as_json = false, no_time = false;
  solve->add_option("--input", solve_in, "front file")->required();
  add_race_options(*solve, solve_cfg);
  solve->add_flag("--no-push", no_push, "disable the push on the current minimum");
  solve->add_flag("--no-exact-switch", no_exact, "never switch a box to exact computation");
  solve->add_flag("--json", as_json, "print the result as JSON");
  solve->add_flag("--no-time", no_time, "omit wall-clock time so output is reproducible byte for byte");

  // exact
  auto* exact = app.add_subcommand("exact", "exact hypervolume and all contributions");
  std::string exact_in;
  std::string exact_algo = "hso";
  exact->add_option("--input", exact_in, "front file")->required();
  exact->add_option("--algo", exact_algo, "exact algorithm")
      ->check(CLI::IsMember({"hso", "inclexcl"}))
      ->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "median solve times over generated fronts, as CSV");
  hvlc::RaceConfig bench_cfg;
  std::string bench_kind;
  std::size_t bench_d = 0, bench_reps = 0, grid_min = 2, grid_max = 1000;
  std::vector<std::size_t> n_list;
  bool grid = false;
  std::string bench_out;
  bench->add_option("--dataset", bench_kind, "dataset kind")
      ->required()
      ->check(CLI::IsMember(kDatasets));
  bench->add_option("--d", bench_d, "dimension")->required()->check(CLI::PositiveNumber);
  auto* list_opt = bench->add_option("--n-list", n_list, "comma-separated front sizes")->delimiter(',');
  auto* grid_opt = bench->add_flag("--n-grid-expk", grid, "sizes floor(exp(k/100)) within [--n-min, --n-max]");
  list_opt->excludes(grid_opt);
  bench->add_option("--n-min", grid_min, "smallest grid size")->capture_default_str();
  bench->add_option("--n-max", grid_max, "largest grid size")->capture_default_str();
  bench->add_option("--reps", bench_reps, "repetitions per size")->required()->check(CLI::PositiveNumber);
  add_race_options(*bench, bench_cfg);
  bench->add_option("--out", bench_out, "output CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      hvlc::write_front(hvlc::generate(dataset(gen_kind), gen_n, gen_d, gen_seed), gen_out);
    } else if (*solve) {
      solve_cfg.enable_push = !no_push;
      solve_cfg.enable_exact_switch = !no_exact;
      const auto front = hvlc::read_front(solve_in);
      const auto r = hvlc::solve(front, solve_cfg);
      if (as_json) {
        nlohmann::ordered_json j;
        j["index"] = r.index;
        j["estimate"] = r.estimate;
        j["exact"] = r.was_exact;
        j["rounds"] = r.rounds;
        j["samples"] = r.total_samples;
        j["exact_switches"] = r.exact_switches;
        j["termination"] = std::string(hvlc::to_string(r.termination));
        if (!no_time) j["seconds"] = r.elapsed.count();
        std::cout << j.dump() << '\n';
      } else {
        std::string line = fmt::format("index={} estimate={:.17g} rounds={} samples={} exact_switches={}", r.index,
                                       r.estimate, r.rounds, r.total_samples, r.exact_switches);
        if (!no_time) line += fmt::format(" seconds={:.6g}", r.elapsed.count());
        std::cout << line << '\n';
      }
    } else if (*exact) {
      const auto front = hvlc::read_front(exact_in);
      const auto algo = exact_algo == "inclexcl" ? hvlc::ExactAlgo::InclusionExclusion : hvlc::ExactAlgo::Hso;
      std::cout << fmt::format("HYP {:.17g}\n", hvlc::hyp(front, algo));
      const auto cons = hvlc::all_contributions(front, algo);
      for (std::size_t i = 0; i < cons.size(); ++i) std::cout << fmt::format("CON {} {:.17g}\n", i, cons[i]);
    } else if (*bench) {
      if (!grid && n_list.empty()) throw hvlc::InputError("bench needs --n-list or --n-grid-expk");
      const auto sizes = grid ? hvlc::expk_grid(grid_min, grid_max) : n_list;
      bench_cfg.validate();
      std::ofstream out(bench_out);
      if (!out) throw hvlc::InputError("cannot write " + bench_out);
      hvlc::write_bench_header(out);
      for (std::size_t n : sizes) {
        const auto rec = hvlc::run_bench_cell(dataset(bench_kind), n, bench_d, bench_reps, bench_cfg);
        hvlc::write_bench_row(out, rec);
        out.flush();
        std::cerr << fmt::format("n={} median={:.6g}s\n", n, rec.median_seconds);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

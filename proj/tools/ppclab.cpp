#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppclab/error.hpp"
#include "ppclab/experiment.hpp"
#include "ppclab/parallel.hpp"
#include "ppclab/sequences.hpp"

namespace {

using nlohmann::json;

int exit_code_for(const ppclab::Error& e) {
  switch (e.code()) {
    case ppclab::errc::io_error:
      return 3;
    case ppclab::errc::task_error:
    case ppclab::errc::quadrature_error:
      return 2;
    default:
      return 1;
  }
}

int finish_run(const ppclab::ExperimentConfig& config) {
  const ppclab::RunManifest manifest = ppclab::run_experiment(config);
  for (const auto& t : manifest.tasks) {
    std::printf("%-14s %s%s%s\n", t.name.c_str(), t.status.c_str(),
                t.message.empty() ? "" : ": ", t.message.c_str());
  }
  std::printf("outputs in %s (manifest.json)\n", config.output.directory.c_str());
  return manifest.ok ? 0 : 2;
}

json base_config(const std::string& seq_path, const std::string& out_dir, unsigned threads) {
  json j;
  j["sequence"] = {{"family", "file"}, {"path", seq_path}};
  j["output"] = {{"directory", out_dir}, {"formats", {"csv", "json", "svg"}}};
  if (threads > 0) j["threads"] = threads;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ppclab: pair correlation statistics for dilated sequences on the torus"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "worker count (default: all cores)");

  // run
  auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
  std::string config_path;
  run->add_option("config", config_path, "config file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a sequence CSV");
  std::string family = "power", gen_out = "seq.csv";
  std::vector<double> thetas;
  double log_a = 1.0;
  std::size_t gen_n = 0, gen_n0 = 0;
  gen->add_option("--family", family, "power|nlog")->required();
  gen->add_option("--theta", thetas, "power exponents")->delimiter(',');
  gen->add_option("--a", log_a, "nlog exponent A");
  gen->add_option("--n", gen_n, "row count")->required();
  gen->add_option("--n0", gen_n0, "start index");
  gen->add_option("--out", gen_out, "output CSV path");

  // energy
  auto* energy = app.add_subcommand("energy", "joint additive energy across an N grid");
  std::string seq_path, out_dir = "out";
  std::vector<double> gammas;
  std::vector<std::size_t> n_grid, subset;
  energy->add_option("--seq", seq_path, "sequence CSV")->required();
  energy->add_option("--gamma", gammas, "thresholds, one per column")->delimiter(',')->required();
  energy->add_option("--n-grid", n_grid, "N values")->delimiter(',')->required();
  energy->add_option("--subset", subset, "1-based column subset D'")->delimiter(',');
  energy->add_option("--out-dir", out_dir, "output directory");

  // paircorr
  auto* paircorr = app.add_subcommand("paircorr", "empirical R2 curves over mu-drawn dilations");
  std::string pc_seq, pc_out = "out", pc_norm = "sup";
  std::vector<double> s_grid;
  std::size_t alpha_samples = 20;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<std::size_t> pc_n_grid;
  paircorr->add_option("--seq", pc_seq, "sequence CSV")->required();
  paircorr->add_option("--s-grid", s_grid, "s values")->delimiter(',')->required();
  paircorr->add_option("--alpha-samples", alpha_samples, "number of mu draws");
  paircorr->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
    seed_given = true;
  });
  paircorr->add_option("--n-grid", pc_n_grid, "N values (default: full file)")->delimiter(',');
  paircorr->add_option("--norm", pc_norm, "sup|euclid");
  paircorr->add_option("--out-dir", pc_out, "output directory");

  // selberg-check
  auto* selberg = app.add_subcommand("selberg-check", "verify majorant/minorant properties");
  std::size_t sel_k = 64;
  double sel_s = 1.0, sel_scale = 10.0;
  std::string sel_out = "out";
  selberg->add_option("--k", sel_k, "degree K");
  selberg->add_option("--s", sel_s, "radius s");
  selberg->add_option("--scale", sel_scale, "scale (interval is 2s/scale)");
  selberg->add_option("--out-dir", sel_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (threads > 0) ppclab::set_thread_count(threads);

    if (*run) {
      return finish_run(ppclab::load_config(config_path));
    }
    if (*gen) {
      ppclab::SequenceMatrix x;
      if (family == "power") {
        if (thetas.empty())
          ppclab::fail(ppclab::errc::validation_error, "gen --family power requires --theta");
        x = ppclab::gen_power(thetas, gen_n, gen_n0 == 0 ? 1 : gen_n0);
      } else if (family == "nlog") {
        x = ppclab::gen_nlog(log_a, gen_n, gen_n0 == 0 ? 2 : gen_n0);
      } else {
        ppclab::fail(ppclab::errc::validation_error, "gen --family must be power|nlog");
      }
      ppclab::save_sequence(x, gen_out);
      std::printf("wrote %zu x %zu sequence to %s\n", x.n, x.dim, gen_out.c_str());
      return 0;
    }
    if (*energy) {
      json j = base_config(seq_path, out_dir, threads);
      j["tasks"] = {"energy"};
      j["gamma"] = gammas;
      if (!subset.empty()) j["subset"] = subset;
      if (!n_grid.empty()) j["n_grid"] = n_grid;
      return finish_run(ppclab::parse_config(j));
    }
    if (*paircorr) {
      json j = base_config(pc_seq, pc_out, threads);
      j["tasks"] = {"paircorr"};
      j["s_grid"] = s_grid;
      j["alpha"] = {{"measure", "mu"}, {"samples", alpha_samples}};
      if (!pc_n_grid.empty()) j["n_grid"] = pc_n_grid;
      j["norm"] = pc_norm;
      if (seed_given) j["seed"] = seed;
      return finish_run(ppclab::parse_config(j));
    }
    if (*selberg) {
      json j;
      j["sequence"] = {{"family", "power"}, {"theta", {2.5}}};
      j["n_grid"] = {8};
      j["tasks"] = {"selberg-check"};
      j["selberg"] = {{"k", sel_k}, {"s", sel_s}, {"scale", sel_scale}};
      j["output"] = {{"directory", sel_out}, {"formats", {"csv", "json"}}};
      return finish_run(ppclab::parse_config(j));
    }
  } catch (const ppclab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

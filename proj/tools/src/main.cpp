#include <cstdio>
#include <exception>
#include <functional>

#include "CLI11.hpp"
#include "config.hpp"
#include "scenarios.hpp"

using emlab::cli::Config;

namespace {

// options shared by every subcommand; explicit flags win over env and file
struct FlagStore {
  std::vector<std::pair<std::string, std::string>> pairs;

  void bind(CLI::App* cmd, const std::string& flag, const std::string& key,
            const std::string& help) {
    cmd->add_option_function<std::string>(
           flag, [this, key](const std::string& v) { pairs.emplace_back(key, v); }, help)
        ->envname(Config::env_name(key));
  }
};

void add_common(CLI::App* cmd, FlagStore& store, std::string& config_path) {
  cmd->add_option("--config", config_path, "flat key=value configuration file");
  store.bind(cmd, "--seed", "run.seed", "64-bit RNG seed");
  store.bind(cmd, "--out", "out.dir", "output directory");
  store.bind(cmd, "--threads", "run.threads", "worker thread count");
  store.bind(cmd, "--n", "grid.n", "lattice points per axis");
  store.bind(cmd, "--spacing", "grid.h", "lattice spacing");
  store.bind(cmd, "--c", "phys.c", "speed of light");
  cmd->add_option_function<std::vector<std::string>>(
      "--set",
      [&store](const std::vector<std::string>& entries) {
        for (const std::string& e : entries) {
          const auto eq = e.find('=');
          if (eq == std::string::npos)
            throw CLI::ValidationError("--set expects key=value, got: " + e);
          store.pairs.emplace_back(e.substr(0, eq), e.substr(eq + 1));
        }
      },
      "extra key=value settings (repeatable)");
}

int dispatch(const std::function<void(const Config&)>& scenario, const Config& cfg) {
  try {
    scenario(cfg);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime failure: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"emlab: free-field electrodynamics numerical laboratory"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd = nullptr;
    FlagStore flags;
    std::string config_path;
    std::function<void(const Config&)> run;
  };
  std::vector<Sub> subs(7);

  const auto make = [&](Sub& sub, const char* name, const char* help,
                        std::function<void(const Config&)> fn) {
    sub.cmd = app.add_subcommand(name, help);
    sub.run = std::move(fn);
    add_common(sub.cmd, sub.flags, sub.config_path);
  };

  make(subs[0], "propagate", "pseudo-spectral transverse-mode evolution", emlab::cli::run_propagate);
  subs[0].flags.bind(subs[0].cmd, "--steps", "run.steps", "number of steps");
  subs[0].flags.bind(subs[0].cmd, "--dt", "run.dt", "time step");
  subs[0].flags.bind(subs[0].cmd, "--cadence", "run.cadence", "rows every k steps");
  subs[0].flags.bind(subs[0].cmd, "--preset", "ic.preset",
                     "plane-wave | gaussian-packet | random-transverse | file");
  subs[0].flags.bind(subs[0].cmd, "--amplitude", "ic.amplitude", "initial amplitude");

  make(subs[1], "majorana", "bivector (E + iH) evolution", emlab::cli::run_majorana);
  subs[1].flags.bind(subs[1].cmd, "--steps", "run.steps", "number of steps");
  subs[1].flags.bind(subs[1].cmd, "--dt", "run.dt", "time step");
  subs[1].flags.bind(subs[1].cmd, "--preset", "ic.preset", "initial-condition preset");
  subs[1].cmd->add_flag_callback(
      "--compare",
      [&subs] { subs[1].flags.pairs.emplace_back("majorana.compare", "1"); },
      "co-run the spectral propagator and emit trajectory divergence");

  make(subs[2], "dual", "symmetric Maxwell solver with magnetic sources", emlab::cli::run_dual);
  subs[2].flags.bind(subs[2].cmd, "--steps", "run.steps", "number of steps");
  subs[2].flags.bind(subs[2].cmd, "--dt", "run.dt", "time step");
  subs[2].flags.bind(subs[2].cmd, "--preset", "dual.preset",
                     "static-monopole | oscillating-dipole | pulse");
  subs[2].flags.bind(subs[2].cmd, "--jm-sign", "dual.jm_sign", "plus | minus (sign of the j_m term on the curl E line)");

  make(subs[3], "brackets", "constraint-chain residual checks", emlab::cli::run_brackets);
  subs[3].flags.bind(subs[3].cmd, "--states", "brackets.states", "number of random states");
  subs[3].flags.bind(subs[3].cmd, "--points", "brackets.points", "sample points per state");

  make(subs[4], "fock", "two-mode ladder algebra checks", emlab::cli::run_fock);
  subs[4].flags.bind(subs[4].cmd, "--nmax", "fock.nmax", "occupation cutoff");
  subs[4].flags.bind(subs[4].cmd, "--omega", "fock.omega", "mode frequency");
  subs[4].flags.bind(subs[4].cmd, "--temps", "fock.temps", "comma-separated temperatures");

  make(subs[5], "clebsch", "scalar-representation identity sweep", emlab::cli::run_clebsch);
  subs[5].flags.bind(subs[5].cmd, "--h-list", "clebsch.h_list", "comma-separated spacings");
  subs[5].flags.bind(subs[5].cmd, "--preset", "clebsch.preset", "random | trig");

  make(subs[6], "diag", "field-layer diagnostics", emlab::cli::run_diag);

  CLI11_PARSE(app, argc, argv);

  for (Sub& sub : subs) {
    if (!sub.cmd->parsed()) continue;
    Config cfg;
    try {
      if (!sub.config_path.empty()) cfg.load_file(sub.config_path);
      cfg.apply_env();
      for (const auto& [key, value] : sub.flags.pairs) cfg.set(key, value);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 1;
    }
    return dispatch(sub.run, cfg);
  }
  return 1;
}

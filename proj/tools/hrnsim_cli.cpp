// SPDX-License-Identifier: Apache-2.0
//
// hrnsim - link-level Monte Carlo simulator for relay, reflective-surface,
// and hybrid relaying networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end. Talks to the simulator exclusively through the
// C API of the shared library.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "hrnsim/hrnsim.h"

namespace
{

int fail(const char *what)
{
    std::fprintf(stderr, "error: %s: %s\n", what, hrnsim_last_error());
    return 1;
}

int run_command(const std::string &config_path, const std::string &preset,
                const std::string &out_path, bool seed_set, std::uint64_t seed, int threads)
{
    // Start from defaults, optionally switch to a preset, then let an
    // explicit config file override individual keys.
    hrnsim_experiment *experiment = nullptr;
    hrnsim_status status = hrnsim_experiment_create(&experiment);
    if (status == HRNSIM_OK && !preset.empty())
        status = hrnsim_experiment_apply_preset(experiment, preset.c_str());
    if (status == HRNSIM_OK && !config_path.empty())
        status = hrnsim_experiment_load_file(experiment, config_path.c_str());
    if (status != HRNSIM_OK)
    {
        hrnsim_experiment_destroy(experiment);
        return fail("loading configuration");
    }

    if (seed_set && hrnsim_experiment_set_seed(experiment, seed) != HRNSIM_OK)
    {
        hrnsim_experiment_destroy(experiment);
        return fail("setting seed");
    }
    if (hrnsim_experiment_set_threads(experiment, threads) != HRNSIM_OK)
    {
        hrnsim_experiment_destroy(experiment);
        return fail("setting threads");
    }

    if (hrnsim_experiment_run(experiment) != HRNSIM_OK)
    {
        hrnsim_experiment_destroy(experiment);
        return fail("running sweep");
    }
    if (hrnsim_experiment_write_csv(experiment, out_path.c_str()) != HRNSIM_OK)
    {
        hrnsim_experiment_destroy(experiment);
        return fail("writing CSV");
    }

    size_t rows = 0;
    hrnsim_experiment_row_count(experiment, &rows);
    std::printf("wrote %zu rows to %s\n", rows, out_path.c_str());
    hrnsim_experiment_destroy(experiment);
    return 0;
}

int verify_command(std::int64_t m, std::int64_t draws, std::int64_t trials, std::uint64_t seed)
{
    hrnsim_verify_options options{};
    options.m = m;
    options.draws = draws;
    options.trials = trials;
    options.seed = seed;

    hrnsim_verify_check checks[HRNSIM_VERIFY_MAX_CHECKS];
    size_t count = 0;
    if (hrnsim_verify(&options, checks, HRNSIM_VERIFY_MAX_CHECKS, &count) != HRNSIM_OK)
        return fail("running verification");

    int failures = 0;
    for (size_t i = 0; i < count; i++)
    {
        std::printf("%-22s measured %12.5g  bound %10.5g  [%s]\n", checks[i].name,
                    checks[i].measured, checks[i].bound, checks[i].passed ? "PASS" : "FAIL");
        if (!checks[i].passed)
            failures++;
    }
    std::printf("%zu checks, %d failed\n", count, failures);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Monte Carlo link-budget simulator for relay, reflective-surface, "
                 "and hybrid relaying networks"};
    app.set_version_flag("--version", std::string("hrnsim ") + hrnsim_version());
    app.require_subcommand(1);

    // run
    std::string config_path, preset, out_path;
    std::uint64_t seed = 0;
    int threads = 0;
    auto *run = app.add_subcommand("run", "Run a sweep and write the result CSV");
    run->add_option("--config", config_path, "Config file (sectioned key/value text)")
        ->check(CLI::ExistingFile);
    run->add_option("--preset", preset, "Built-in experiment preset")
        ->check(CLI::IsMember({"fig2a", "fig2b", "fig2c"}));
    run->add_option("--out", out_path, "Output CSV path")->required();
    auto *seed_opt = run->add_option("--seed", seed, "Master seed override");
    run->add_option("--threads", threads, "Worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);

    // verify
    std::int64_t m = 64, draws = 100000, trials = 1000;
    std::uint64_t vseed = 1;
    auto *verify = app.add_subcommand("verify", "Cross-check closed forms against oracles");
    verify->add_option("--m", m, "UC count for the trace checks (perfect square)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n", draws, "Monte Carlo draws")->check(CLI::PositiveNumber);
    verify->add_option("--trials", trials, "Random phase trials")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vseed, "Verification seed");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return run_command(config_path, preset, out_path, seed_opt->count() > 0, seed, threads);
    return verify_command(m, draws, trials, vseed);
}

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

#include "hrnsim/hrnsim.h"

#include <cstdio>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "montecarlo.hpp"
#include "report.hpp"
#include "verify.hpp"

struct hrnsim_experiment
{
    hrnsim::ExperimentConfig config;
    int threads = 0;
    std::optional<hrnsim::SweepResult> result;
};

namespace
{

thread_local std::string g_last_error;

void set_error(const std::string &message)
{
    g_last_error = message;
}

template <typename Fn> hrnsim_status guarded(Fn &&fn) noexcept
{
    try
    {
        return fn();
    }
    catch (const hrnsim::parse_error &e)
    {
        set_error(e.what());
        return HRNSIM_ERROR_PARSE;
    }
    catch (const hrnsim::io_error &e)
    {
        set_error(e.what());
        return HRNSIM_ERROR_IO;
    }
    catch (const hrnsim::model_error &e)
    {
        set_error(e.what());
        return HRNSIM_ERROR_MODEL;
    }
    catch (const hrnsim::infeasible_frame &e)
    {
        set_error(e.what());
        return HRNSIM_ERROR_INVALID_ARGUMENT;
    }
    catch (const std::invalid_argument &e)
    {
        set_error(e.what());
        return HRNSIM_ERROR_INVALID_ARGUMENT;
    }
    catch (const std::exception &e)
    {
        set_error(e.what());
        return HRNSIM_ERROR_INTERNAL;
    }
    catch (...)
    {
        set_error("Unknown error.");
        return HRNSIM_ERROR_INTERNAL;
    }
}

hrnsim_status require(bool condition, const char *message)
{
    if (condition)
        return HRNSIM_OK;
    set_error(message);
    return HRNSIM_ERROR_INVALID_ARGUMENT;
}

char *duplicate(const std::string &text)
{
    char *out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void copy_label(char *dst, size_t capacity, const std::string &src)
{
    std::snprintf(dst, capacity, "%s", src.c_str());
}

} // namespace

extern "C" {

const char *hrnsim_version(void)
{
    return "1.0.0";
}

const char *hrnsim_last_error(void)
{
    return g_last_error.c_str();
}

hrnsim_status hrnsim_experiment_create(hrnsim_experiment **out)
{
    if (hrnsim_status s = require(out != nullptr, "Output handle is NULL."))
        return s;
    return guarded([&]() {
        *out = new hrnsim_experiment{hrnsim::default_config(), 0, std::nullopt};
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_create_from_file(const char *path, hrnsim_experiment **out)
{
    if (hrnsim_status s = require(out != nullptr && path != nullptr,
                                  "Path and output handle must not be NULL."))
        return s;
    return guarded([&]() {
        *out = new hrnsim_experiment{hrnsim::load_config(path), 0, std::nullopt};
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_create_from_string(const char *text, hrnsim_experiment **out)
{
    if (hrnsim_status s = require(out != nullptr && text != nullptr,
                                  "Text and output handle must not be NULL."))
        return s;
    return guarded([&]() {
        *out = new hrnsim_experiment{
            hrnsim::parse_config(text, hrnsim::default_config()), 0, std::nullopt};
        return HRNSIM_OK;
    });
}

void hrnsim_experiment_destroy(hrnsim_experiment *experiment)
{
    delete experiment;
}

hrnsim_status hrnsim_experiment_apply_preset(hrnsim_experiment *experiment, const char *name)
{
    if (hrnsim_status s = require(experiment != nullptr && name != nullptr,
                                  "Experiment and preset name must not be NULL."))
        return s;
    return guarded([&]() {
        experiment->config = hrnsim::preset_config(name);
        experiment->result.reset();
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_load_file(hrnsim_experiment *experiment, const char *path)
{
    if (hrnsim_status s = require(experiment != nullptr && path != nullptr,
                                  "Experiment and path must not be NULL."))
        return s;
    return guarded([&]() {
        experiment->config = hrnsim::load_config(path, experiment->config);
        experiment->result.reset();
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_load_string(hrnsim_experiment *experiment, const char *text)
{
    if (hrnsim_status s = require(experiment != nullptr && text != nullptr,
                                  "Experiment and text must not be NULL."))
        return s;
    return guarded([&]() {
        experiment->config = hrnsim::parse_config(text, experiment->config);
        experiment->result.reset();
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_set_seed(hrnsim_experiment *experiment, uint64_t seed)
{
    if (hrnsim_status s = require(experiment != nullptr, "Experiment is NULL."))
        return s;
    experiment->config.master_seed = seed;
    experiment->result.reset();
    return HRNSIM_OK;
}

hrnsim_status hrnsim_experiment_set_threads(hrnsim_experiment *experiment, int threads)
{
    if (hrnsim_status s = require(experiment != nullptr, "Experiment is NULL."))
        return s;
    if (hrnsim_status s = require(threads >= 0, "Thread count must be non-negative."))
        return s;
    experiment->threads = threads;
    return HRNSIM_OK;
}

hrnsim_status hrnsim_experiment_resolved_config(const hrnsim_experiment *experiment,
                                                char **out_text)
{
    if (hrnsim_status s = require(experiment != nullptr && out_text != nullptr,
                                  "Experiment and output pointer must not be NULL."))
        return s;
    return guarded([&]() {
        *out_text = duplicate(hrnsim::serialize_config(experiment->config));
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_run(hrnsim_experiment *experiment)
{
    if (hrnsim_status s = require(experiment != nullptr, "Experiment is NULL."))
        return s;
    return guarded([&]() {
        experiment->result = hrnsim::run_sweep(experiment->config, experiment->threads);
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_row_count(const hrnsim_experiment *experiment, size_t *out)
{
    if (hrnsim_status s = require(experiment != nullptr && out != nullptr,
                                  "Experiment and output pointer must not be NULL."))
        return s;
    if (hrnsim_status s = require(experiment->result.has_value(),
                                  "No results: run the experiment first."))
        return s;
    *out = experiment->result->rows.size();
    return HRNSIM_OK;
}

hrnsim_status hrnsim_experiment_row(const hrnsim_experiment *experiment, size_t index,
                                    hrnsim_sweep_row *out)
{
    if (hrnsim_status s = require(experiment != nullptr && out != nullptr,
                                  "Experiment and output pointer must not be NULL."))
        return s;
    if (hrnsim_status s = require(experiment->result.has_value(),
                                  "No results: run the experiment first."))
        return s;
    if (hrnsim_status s =
            require(index < experiment->result->rows.size(), "Row index out of range."))
        return s;

    const hrnsim::SweepRow &row = experiment->result->rows[index];
    copy_label(out->scheme, sizeof(out->scheme), hrnsim::scheme_label(row.scheme));
    copy_label(out->csi, sizeof(out->csi), hrnsim::csi_label(row.scheme));
    copy_label(out->sweep_variable, sizeof(out->sweep_variable), row.sweep_variable);
    out->sweep_value = row.sweep_value;
    out->mean_tx_power_w = row.mean_tx_power_w;
    out->mean_tx_power_dbm = row.mean_tx_power_dbm;
    out->mean_total_power_w = row.mean_total_power_w;
    out->ee_bits_per_joule = row.ee_bits_per_joule;
    out->std_err_w = row.std_err_w;
    out->infeasible_count = static_cast<uint64_t>(row.infeasible_count);
    out->n_realizations = static_cast<uint64_t>(row.n_realizations);
    out->seed = experiment->result->master_seed;
    return HRNSIM_OK;
}

hrnsim_status hrnsim_experiment_csv(const hrnsim_experiment *experiment, char **out_text)
{
    if (hrnsim_status s = require(experiment != nullptr && out_text != nullptr,
                                  "Experiment and output pointer must not be NULL."))
        return s;
    if (hrnsim_status s = require(experiment->result.has_value(),
                                  "No results: run the experiment first."))
        return s;
    return guarded([&]() {
        *out_text = duplicate(hrnsim::to_csv(*experiment->result));
        return HRNSIM_OK;
    });
}

hrnsim_status hrnsim_experiment_write_csv(const hrnsim_experiment *experiment, const char *path)
{
    if (hrnsim_status s = require(experiment != nullptr && path != nullptr,
                                  "Experiment and path must not be NULL."))
        return s;
    if (hrnsim_status s = require(experiment->result.has_value(),
                                  "No results: run the experiment first."))
        return s;
    return guarded([&]() {
        hrnsim::write_csv(*experiment->result, path);
        return HRNSIM_OK;
    });
}

void hrnsim_string_free(char *text)
{
    delete[] text;
}

hrnsim_status hrnsim_verify(const hrnsim_verify_options *options, hrnsim_verify_check *checks,
                            size_t capacity, size_t *out_count)
{
    if (hrnsim_status s = require(checks != nullptr && out_count != nullptr,
                                  "Check array and count pointer must not be NULL."))
        return s;
    return guarded([&]() {
        hrnsim::VerifyOptions opts;
        if (options != nullptr)
        {
            if (options->m != 0)
                opts.m = options->m;
            if (options->draws != 0)
                opts.draws = options->draws;
            if (options->trials != 0)
                opts.trials = options->trials;
            opts.seed = options->seed;
        }
        std::vector<hrnsim::VerifyCheck> results = hrnsim::run_verification(opts);
        if (results.size() > capacity)
        {
            set_error("Check array capacity is too small (need " +
                      std::to_string(results.size()) + ").");
            return HRNSIM_ERROR_INVALID_ARGUMENT;
        }
        for (size_t i = 0; i < results.size(); i++)
        {
            copy_label(checks[i].name, sizeof(checks[i].name), results[i].name);
            checks[i].measured = results[i].measured;
            checks[i].bound = results[i].bound;
            checks[i].passed = results[i].passed ? 1 : 0;
        }
        *out_count = results.size();
        return HRNSIM_OK;
    });
}

} // extern "C"

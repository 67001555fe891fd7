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

#include "config.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace hrnsim
{

ExperimentConfig default_config()
{
    ExperimentConfig config; // field initializers carry the defaults
    config.schemes = {
        {Scheme::Relay, CsiMode::Instantaneous, IrsPlacement::NearRelay},
        {Scheme::Irs, CsiMode::Instantaneous, IrsPlacement::NearRelay},
        {Scheme::Irs, CsiMode::Statistical, IrsPlacement::NearRelay},
        {Scheme::Irs, CsiMode::Instantaneous, IrsPlacement::NearSource},
        {Scheme::Irs, CsiMode::Statistical, IrsPlacement::NearSource},
        {Scheme::Hybrid, CsiMode::Instantaneous, IrsPlacement::NearRelay},
        {Scheme::Hybrid, CsiMode::Statistical, IrsPlacement::NearRelay},
    };
    config.rth_values = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5,
                         6.0, 6.5, 7.0, 7.5, 8.0, 8.5, 9.0, 9.5, 10.0};
    return config;
}

ExperimentConfig preset_config(const std::string &name)
{
    ExperimentConfig config = default_config();
    if (name == "fig2a")
    {
        // the defaults: low-mobility M sweep
    }
    else if (name == "fig2b")
    {
        config.tau_c = 1000;
    }
    else if (name == "fig2c")
    {
        config.sweep = SweepAxis::RateThreshold;
        config.m_d = 12;
    }
    else
    {
        throw std::invalid_argument("Unknown preset '" + name +
                                    "' (expected fig2a, fig2b or fig2c).");
    }
    return config;
}

std::vector<std::string> preset_names()
{
    return {"fig2a", "fig2b", "fig2c"};
}

namespace
{

std::string trim(const std::string &s)
{
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string &s)
{
    std::vector<std::string> tokens;
    std::istringstream stream(s);
    std::string token;
    while (stream >> token)
        tokens.push_back(token);
    return tokens;
}

double parse_double(const std::string &value, int line)
{
    const std::string v = trim(value);
    if (v.empty())
        throw parse_error("expected a number", line);
    errno = 0;
    char *end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw parse_error("'" + v + "' is not a valid number", line);
    return x;
}

std::int64_t parse_int(const std::string &value, int line)
{
    const std::string v = trim(value);
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw parse_error("'" + v + "' is not a valid integer", line);
    return x;
}

std::uint64_t parse_uint(const std::string &value, int line)
{
    const std::string v = trim(value);
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw parse_error("'" + v + "' is not a valid unsigned integer", line);
    return x;
}

Vec3 parse_vec3(const std::string &value, int line)
{
    auto tokens = split_tokens(value);
    if (tokens.size() != 3)
        throw parse_error("expected three coordinates", line);
    return {parse_double(tokens[0], line), parse_double(tokens[1], line),
            parse_double(tokens[2], line)};
}

SchemeConfig parse_scheme(const std::string &token, int line)
{
    if (token == "relay")
        return {Scheme::Relay, CsiMode::Instantaneous, IrsPlacement::NearRelay};
    if (token == "irs1_icsi")
        return {Scheme::Irs, CsiMode::Instantaneous, IrsPlacement::NearRelay};
    if (token == "irs1_scsi")
        return {Scheme::Irs, CsiMode::Statistical, IrsPlacement::NearRelay};
    if (token == "irs2_icsi")
        return {Scheme::Irs, CsiMode::Instantaneous, IrsPlacement::NearSource};
    if (token == "irs2_scsi")
        return {Scheme::Irs, CsiMode::Statistical, IrsPlacement::NearSource};
    if (token == "hrn_icsi")
        return {Scheme::Hybrid, CsiMode::Instantaneous, IrsPlacement::NearRelay};
    if (token == "hrn_scsi")
        return {Scheme::Hybrid, CsiMode::Statistical, IrsPlacement::NearRelay};
    throw parse_error("unknown scheme '" + token + "'", line);
}

std::string scheme_token(const SchemeConfig &scheme)
{
    switch (scheme.scheme)
    {
    case Scheme::Relay:
        return "relay";
    case Scheme::Irs:
        return std::string(scheme.placement == IrsPlacement::NearRelay ? "irs1" : "irs2") +
               (scheme.csi == CsiMode::Instantaneous ? "_icsi" : "_scsi");
    case Scheme::Hybrid:
        return scheme.csi == CsiMode::Instantaneous ? "hrn_icsi" : "hrn_scsi";
    }
    return "unknown";
}

void apply_key(ExperimentConfig &config, const std::string &section, const std::string &key,
               const std::string &value, int line)
{
    if (section == "geometry")
    {
        if (key == "source")
            config.source = parse_vec3(value, line);
        else if (key == "relay")
            config.relay = parse_vec3(value, line);
        else if (key == "destination")
            config.destination = parse_vec3(value, line);
        else if (key == "irs_near_relay")
            config.irs_near_relay = parse_vec3(value, line);
        else if (key == "irs_near_source")
            config.irs_near_source = parse_vec3(value, line);
        else if (key == "m_d")
            config.m_d = parse_int(value, line);
        else if (key == "spacing_wavelengths")
            config.spacing_wavelengths = parse_double(value, line);
        else
            throw parse_error("unknown key '" + key + "' in [geometry]", line);
    }
    else if (section == "pathloss")
    {
        if (key == "reference_distance_m")
            config.pathloss.reference_distance = parse_double(value, line);
        else if (key == "offset_db")
            config.pathloss.offset_db = parse_double(value, line);
        else if (key == "alpha_irs")
            config.pathloss.alpha_irs = parse_double(value, line);
        else if (key == "alpha_relay")
            config.pathloss.alpha_relay = parse_double(value, line);
        else
            throw parse_error("unknown key '" + key + "' in [pathloss]", line);
    }
    else if (section == "system")
    {
        if (key == "carrier_freq_ghz")
            config.carrier_freq_ghz = parse_double(value, line);
        else if (key == "noise_dbm")
            config.noise_dbm = parse_double(value, line);
        else if (key == "bandwidth_hz")
            config.bandwidth_hz = parse_double(value, line);
        else if (key == "amplifier_efficiency")
            config.amplifier_efficiency = parse_double(value, line);
        else if (key == "p_source_mw")
            config.p_source_mw = parse_double(value, line);
        else if (key == "p_relay_mw")
            config.p_relay_mw = parse_double(value, line);
        else if (key == "p_dest_mw")
            config.p_dest_mw = parse_double(value, line);
        else if (key == "p_static_uc_mw")
            config.p_static_uc_mw = parse_double(value, line);
        else if (key == "p_dynamic_uc_mw")
            config.p_dynamic_uc_mw = parse_double(value, line);
        else if (key == "mu")
            config.mu = parse_double(value, line);
        else
            throw parse_error("unknown key '" + key + "' in [system]", line);
    }
    else if (section == "frame")
    {
        if (key == "tau_c")
            config.tau_c = parse_int(value, line);
        else if (key == "pilots_per_link")
            config.pilots_per_link = parse_int(value, line);
        else if (key == "guard")
        {
            if (trim(value) == "auto")
                config.guard = -1;
            else
            {
                config.guard = parse_int(value, line);
                if (config.guard < 0)
                    throw parse_error("guard must be 'auto' or a non-negative integer", line);
            }
        }
        else
            throw parse_error("unknown key '" + key + "' in [frame]", line);
    }
    else if (section == "experiment")
    {
        if (key == "schemes")
        {
            auto tokens = split_tokens(value);
            if (tokens.empty())
                throw parse_error("scheme list must not be empty", line);
            config.schemes.clear();
            for (const auto &token : tokens)
                config.schemes.push_back(parse_scheme(token, line));
        }
        else if (key == "sweep")
        {
            const std::string v = trim(value);
            if (v == "m")
                config.sweep = SweepAxis::UcCount;
            else if (v == "rth")
                config.sweep = SweepAxis::RateThreshold;
            else
                throw parse_error("sweep must be 'm' or 'rth'", line);
        }
        else if (key == "m_values")
        {
            config.m_values.clear();
            for (const auto &token : split_tokens(value))
                config.m_values.push_back(parse_int(token, line));
        }
        else if (key == "rth_values")
        {
            config.rth_values.clear();
            for (const auto &token : split_tokens(value))
                config.rth_values.push_back(parse_double(token, line));
        }
        else if (key == "rate_threshold")
            config.rate_threshold = parse_double(value, line);
        else if (key == "realizations")
            config.realizations = parse_int(value, line);
        else if (key == "seed")
            config.master_seed = parse_uint(value, line);
        else
            throw parse_error("unknown key '" + key + "' in [experiment]", line);
    }
    else
    {
        throw parse_error("unknown section [" + section + "]", line);
    }
}

} // namespace

ExperimentConfig parse_config(const std::string &text, const ExperimentConfig &base)
{
    ExperimentConfig config = base;
    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, raw))
    {
        line_no++;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';')
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']' || line.size() < 3)
                throw parse_error("malformed section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("missing key before '='", line_no);
        if (section.empty())
            throw parse_error("key '" + key + "' appears before any section", line_no);
        apply_key(config, section, key, value, line_no);
    }

    try
    {
        validate(config);
    }
    catch (const std::invalid_argument &e)
    {
        throw parse_error(e.what());
    }
    return config;
}

ExperimentConfig load_config(const std::string &path)
{
    return load_config(path, default_config());
}

ExperimentConfig load_config(const std::string &path, const ExperimentConfig &base)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw io_error("Cannot open config file '" + path + "'.");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_config(buffer.str(), base);
}

namespace
{

std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_vec3(const Vec3 &v)
{
    return fmt_double(v.x) + " " + fmt_double(v.y) + " " + fmt_double(v.z);
}

} // namespace

std::string serialize_config(const ExperimentConfig &config)
{
    std::ostringstream out;
    out << "[geometry]\n";
    out << "source = " << fmt_vec3(config.source) << "\n";
    out << "relay = " << fmt_vec3(config.relay) << "\n";
    out << "destination = " << fmt_vec3(config.destination) << "\n";
    out << "irs_near_relay = " << fmt_vec3(config.irs_near_relay) << "\n";
    out << "irs_near_source = " << fmt_vec3(config.irs_near_source) << "\n";
    out << "m_d = " << config.m_d << "\n";
    out << "spacing_wavelengths = " << fmt_double(config.spacing_wavelengths) << "\n";
    out << "\n[pathloss]\n";
    out << "reference_distance_m = " << fmt_double(config.pathloss.reference_distance) << "\n";
    out << "offset_db = " << fmt_double(config.pathloss.offset_db) << "\n";
    out << "alpha_irs = " << fmt_double(config.pathloss.alpha_irs) << "\n";
    out << "alpha_relay = " << fmt_double(config.pathloss.alpha_relay) << "\n";
    out << "\n[system]\n";
    out << "carrier_freq_ghz = " << fmt_double(config.carrier_freq_ghz) << "\n";
    out << "noise_dbm = " << fmt_double(config.noise_dbm) << "\n";
    out << "bandwidth_hz = " << fmt_double(config.bandwidth_hz) << "\n";
    out << "amplifier_efficiency = " << fmt_double(config.amplifier_efficiency) << "\n";
    out << "p_source_mw = " << fmt_double(config.p_source_mw) << "\n";
    out << "p_relay_mw = " << fmt_double(config.p_relay_mw) << "\n";
    out << "p_dest_mw = " << fmt_double(config.p_dest_mw) << "\n";
    out << "p_static_uc_mw = " << fmt_double(config.p_static_uc_mw) << "\n";
    out << "p_dynamic_uc_mw = " << fmt_double(config.p_dynamic_uc_mw) << "\n";
    out << "mu = " << fmt_double(config.mu) << "\n";
    out << "\n[frame]\n";
    out << "tau_c = " << config.tau_c << "\n";
    out << "pilots_per_link = " << config.pilots_per_link << "\n";
    if (config.guard < 0)
        out << "guard = auto\n";
    else
        out << "guard = " << config.guard << "\n";
    out << "\n[experiment]\n";
    out << "schemes =";
    for (const auto &scheme : config.schemes)
        out << " " << scheme_token(scheme);
    out << "\n";
    out << "sweep = " << (config.sweep == SweepAxis::UcCount ? "m" : "rth") << "\n";
    out << "m_values =";
    for (auto m : config.m_values)
        out << " " << m;
    out << "\n";
    out << "rth_values =";
    for (auto r : config.rth_values)
        out << " " << fmt_double(r);
    out << "\n";
    out << "rate_threshold = " << fmt_double(config.rate_threshold) << "\n";
    out << "realizations = " << config.realizations << "\n";
    out << "seed = " << config.master_seed << "\n";
    return out.str();
}

} // namespace hrnsim

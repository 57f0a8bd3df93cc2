// SPDX-License-Identifier: Apache-2.0
//
// atma — aliased time-modulated array OFDM simulation library
// Copyright (C) 2026 the atma authors
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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace atma_cli
{

namespace
{

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();

    Config cfg;
    cfg.raw_ = buf.str();
    cfg.path_ = path;

    std::istringstream lines(cfg.raw_);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line))
    {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        cfg.entries_.push_back({key, value, lineno});
    }
    return cfg;
}

void Config::fail(const Entry &e, const std::string &what) const
{
    throw ConfigError(path_ + ":" + std::to_string(e.line) + ": key '" + e.key + "': " + what);
}

bool Config::has(const std::string &key) const
{
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry &e) { return e.key == key; });
}

std::vector<std::string> Config::list(const std::string &key) const
{
    std::vector<std::string> out;
    for (const Entry &e : entries_)
        if (e.key == key && !e.value.empty())
            out.push_back(e.value);
    return out;
}

std::string Config::scalar(const std::string &key) const
{
    const Entry *found = nullptr;
    for (const Entry &e : entries_)
        if (e.key == key)
        {
            if (found)
                fail(e, "given more than once, but it is not a sweep axis");
            found = &e;
        }
    if (!found)
        throw ConfigError(path_ + ": missing required key '" + key + "'");
    return found->value;
}

std::string Config::scalar_or(const std::string &key, const std::string &fallback) const
{
    return has(key) ? scalar(key) : fallback;
}

namespace
{

// Parse helpers that reject trailing junk ("4x" is not an int).
template <typename T>
bool parse_num(const std::string &s, T &out)
{
    if constexpr (std::is_floating_point_v<T>)
    {
        std::size_t pos = 0;
        try
        {
            out = static_cast<T>(std::stod(s, &pos));
        }
        catch (const std::exception &)
        {
            return false;
        }
        return pos == s.size();
    }
    else
    {
        const char *first = s.data();
        const char *last = s.data() + s.size();
        const auto r = std::from_chars(first, last, out);
        return r.ec == std::errc() && r.ptr == last;
    }
}

} // namespace

long long Config::get_int(const std::string &key, long long fallback) const
{
    if (!has(key))
        return fallback;
    long long v = 0;
    if (!parse_num(scalar(key), v))
        throw ConfigError(path_ + ": key '" + key + "': not an integer: '" + scalar(key) + "'");
    return v;
}

double Config::get_double(const std::string &key, double fallback) const
{
    if (!has(key))
        return fallback;
    double v = 0.0;
    if (!parse_num(scalar(key), v))
        throw ConfigError(path_ + ": key '" + key + "': not a number: '" + scalar(key) + "'");
    return v;
}

std::uint64_t Config::get_u64(const std::string &key, std::uint64_t fallback) const
{
    if (!has(key))
        return fallback;
    std::uint64_t v = 0;
    if (!parse_num(scalar(key), v))
        throw ConfigError(path_ + ": key '" + key + "': not an unsigned integer: '" + scalar(key) +
                          "'");
    return v;
}

bool Config::get_bool(const std::string &key, bool fallback) const
{
    if (!has(key))
        return fallback;
    const std::string v = scalar(key);
    if (v == "1" || v == "true" || v == "yes" || v == "on")
        return true;
    if (v == "0" || v == "false" || v == "no" || v == "off")
        return false;
    throw ConfigError(path_ + ": key '" + key + "': not a boolean: '" + v + "'");
}

std::vector<int> Config::int_list(const std::string &key, const std::vector<int> &fallback) const
{
    if (!has(key))
        return fallback;
    std::vector<int> out;
    for (const std::string &s : list(key))
    {
        int v = 0;
        if (!parse_num(s, v))
            throw ConfigError(path_ + ": key '" + key + "': not an integer: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<double> Config::double_list(const std::string &key,
                                        const std::vector<double> &fallback) const
{
    if (!has(key))
        return fallback;
    std::vector<double> out;
    for (const std::string &s : list(key))
    {
        double v = 0.0;
        if (!parse_num(s, v))
            throw ConfigError(path_ + ": key '" + key + "': not a number: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

void Config::allow_only(const std::vector<std::string> &allowed) const
{
    for (const Entry &e : entries_)
        if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
        {
            std::string known = "known keys:";
            for (const std::string &k : allowed)
                known += " " + k;
            fail(e, "unknown key for this experiment (" + known + ")");
        }
}

} // namespace atma_cli

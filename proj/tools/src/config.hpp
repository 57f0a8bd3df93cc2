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

#ifndef ATMA_TOOLS_CONFIG_HPP
#define ATMA_TOOLS_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace atma_cli
{

/// Anything wrong with the experiment description: unreadable file, syntax,
/// unknown or repeated keys, values that fail to parse. Maps to exit code 2.
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Flat key-value experiment description.
///
/// One `key = value` pair per line; `#` starts a comment; blank lines are
/// ignored. Repeating a key appends to its value list — that is how sweep
/// axes are written. A key with an empty value declares an empty list.
class Config
{
  public:
    static Config parse_file(const std::string &path);

    /// Raw file bytes, hashed into the output sidecar.
    const std::string &raw() const { return raw_; }

    bool has(const std::string &key) const;

    /// All values of a repeatable key, in file order. Empty-valued
    /// occurrences contribute nothing (empty axis).
    std::vector<std::string> list(const std::string &key) const;

    /// Value of a single-occurrence key. Throws ConfigError when the key is
    /// repeated (scalar keys are not sweep axes) or absent without fallback.
    std::string scalar(const std::string &key) const;
    std::string scalar_or(const std::string &key, const std::string &fallback) const;

    long long get_int(const std::string &key, long long fallback) const;
    double get_double(const std::string &key, double fallback) const;
    std::uint64_t get_u64(const std::string &key, std::uint64_t fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;

    std::vector<int> int_list(const std::string &key, const std::vector<int> &fallback) const;
    std::vector<double> double_list(const std::string &key, const std::vector<double> &fallback) const;

    /// Rejects every key outside `allowed` with a line diagnostic.
    void allow_only(const std::vector<std::string> &allowed) const;

  private:
    struct Entry
    {
        std::string key;
        std::string value;
        int line;
    };
    std::vector<Entry> entries_;
    std::string raw_;
    std::string path_;

    [[noreturn]] void fail(const Entry &e, const std::string &what) const;
};

} // namespace atma_cli

#endif

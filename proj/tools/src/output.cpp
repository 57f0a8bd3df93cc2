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

#include "output.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace atma_cli
{

std::string sha256_hex(const std::string &bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
    {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

Cell cell_int(long long v)
{
    return {std::to_string(v), static_cast<double>(v), true};
}

Cell cell_db(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return {buf, v, true};
}

Cell cell_num(double v)
{
    // Shortest form that parses back to the same double.
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec)
    {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return {buf, v, true};
}

Cell cell_text(std::string s)
{
    return {std::move(s), 0.0, false};
}

Cell cell_empty()
{
    return {"", 0.0, false};
}

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != header_.size())
        throw std::logic_error("CSV row width does not match header");
    rows_.push_back(std::move(row));
}

std::optional<std::size_t> Table::column(const std::string &name) const
{
    for (std::size_t k = 0; k < header_.size(); ++k)
        if (header_[k] == name)
            return k;
    return std::nullopt;
}

std::string Table::to_csv() const
{
    std::string out;
    for (std::size_t k = 0; k < header_.size(); ++k)
    {
        if (k)
            out.push_back(',');
        out += header_[k];
    }
    out.push_back('\n');
    for (const auto &row : rows_)
    {
        for (std::size_t k = 0; k < row.size(); ++k)
        {
            if (k)
                out.push_back(',');
            out += row[k].text;
        }
        out.push_back('\n');
    }
    return out;
}

void write_file(const std::string &path, const std::string &bytes)
{
    const std::filesystem::path p(path);
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("short write to '" + path + "'");
}

} // namespace atma_cli

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

#ifndef ATMA_TOOLS_OUTPUT_HPP
#define ATMA_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace atma_cli
{

std::string sha256_hex(const std::string &bytes);

/// One CSV cell: printed text plus the number it was formatted from, kept so
/// golden checks compare parsed values rather than strings.
struct Cell
{
    std::string text;
    double num = 0.0;
    bool numeric = false;
};

Cell cell_int(long long v);
Cell cell_db(double v);   // dB values: fixed 4 decimals
Cell cell_num(double v);  // other numerics: shortest faithful form
Cell cell_text(std::string s);
Cell cell_empty();

/// In-memory CSV table with a fixed header. Rows must match the header width.
class Table
{
  public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<Cell> row);

    const std::vector<std::string> &header() const { return header_; }
    const std::vector<std::vector<Cell>> &rows() const { return rows_; }

    std::optional<std::size_t> column(const std::string &name) const;

    /// Serialized CSV, one trailing newline, no padding.
    std::string to_csv() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

/// Writes bytes to disk, creating parent directories as needed.
void write_file(const std::string &path, const std::string &bytes);

} // namespace atma_cli

#endif

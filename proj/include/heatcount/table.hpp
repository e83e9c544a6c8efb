// Copyright 2026 the heatcount authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEATCOUNT_TABLE_HPP
#define HEATCOUNT_TABLE_HPP

#include <string>
#include <utility>
#include <vector>

namespace heatcount {

/// Columnar numeric table produced by every CLI subcommand.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each row matches columns.size()
};

/// Ordered run metadata (full config echo, version, seed) carried into JSON
/// output; sufficient to re-run the exact computation.
struct RunMeta {
  std::vector<std::pair<std::string, std::string>> entries;
  void add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
  }
};

enum class OutputFormat { csv, json };

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// CSV: UTF-8, LF line endings, comma separator, header row.
std::string render_csv(const Table& table);

/// JSON: one top-level object {"meta": {...}, "data": {column: [...]}}.
std::string render_json(const Table& table, const RunMeta& meta);

/// Write to `path` atomically (write-then-rename); empty path writes to
/// stdout. I/O failures surface with the path in the message.
void write_table(const Table& table, const RunMeta& meta,
                 const std::string& path, OutputFormat format);

}  // namespace heatcount

#endif  // HEATCOUNT_TABLE_HPP

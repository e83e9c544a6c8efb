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

#include "heatcount/table.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace heatcount {

std::string format_double(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, const RunMeta& meta) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json m;
  for (const auto& [key, value] : meta.entries) m[key] = value;
  root["meta"] = std::move(m);

  nlohmann::ordered_json data;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) col.push_back(row[c]);
    data[table.columns[c]] = std::move(col);
  }
  root["data"] = std::move(data);
  return root.dump(2) + "\n";
}

void write_table(const Table& table, const RunMeta& meta,
                 const std::string& path, OutputFormat format) {
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size())
      throw std::invalid_argument("write_table: row does not match schema");

  const std::string payload =
      format == OutputFormat::csv ? render_csv(table)
                                  : render_json(table, meta);

  if (path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }

  const std::filesystem::path target(path);
  const std::filesystem::path parent = target.parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent))
    throw std::invalid_argument("write_table: missing output directory: " +
                                parent.string());

  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("write_table: cannot open " + tmp.string());
    out << payload;
    if (!out)
      throw std::runtime_error("write_table: write failed for " +
                               tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec)
    throw std::runtime_error("write_table: rename to " + target.string() +
                             " failed: " + ec.message());
}

}  // namespace heatcount

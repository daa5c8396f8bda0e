// Copyright 2026 The Streamlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamlab/core/string_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace streamlab {

using nlohmann::json;

std::string StringFileToJson(const StringFile& file) {
  json j;
  j["n"] = file.data.size();
  j["q"] = file.data.alphabet();
  j["role"] = std::string(RoleName(file.role));
  j["data"] = file.data.data();
  return j.dump();
}

StringFile StringFileFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    const auto n = j.at("n").get<std::size_t>();
    const auto q = j.at("q").get<std::uint64_t>();
    const auto role = ParseRole(j.at("role").get<std::string>());
    auto data = j.at("data").get<std::vector<Symbol>>();
    if (data.size() != n) {
      throw std::invalid_argument("field n = " + std::to_string(n) +
                                  " but data holds " +
                                  std::to_string(data.size()) + " symbols");
    }
    return StringFile{SymbolString(q, std::move(data)), role};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed string file: ") +
                                e.what());
  }
}

void WriteStringFile(const std::filesystem::path& path,
                     const StringFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << StringFileToJson(file) << '\n';
}

StringFile ReadStringFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return StringFileFromJson(buffer.str());
}

}  // namespace streamlab

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

#ifndef STREAMLAB_CORE_STRING_IO_H_
#define STREAMLAB_CORE_STRING_IO_H_

#include <filesystem>
#include <string>

#include "streamlab/core/symbols.h"

namespace streamlab {

// One instance string per file:
//   {"n": <length>, "q": <alphabet>, "role": "fixed"|"stream", "data": [...]}
// Sentinels are stored by numeric code.
struct StringFile {
  SymbolString data;
  Role role = Role::kFixed;
};

std::string StringFileToJson(const StringFile& file);
// Throws std::invalid_argument on malformed text, a length field that
// disagrees with the data, or out-of-range codes.
StringFile StringFileFromJson(const std::string& text);

void WriteStringFile(const std::filesystem::path& path, const StringFile& file);
StringFile ReadStringFile(const std::filesystem::path& path);

}  // namespace streamlab

#endif  // STREAMLAB_CORE_STRING_IO_H_

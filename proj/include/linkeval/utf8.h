// Copyright 2026 The linkeval Authors.
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

#ifndef LINKEVAL_UTF8_H_
#define LINKEVAL_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace linkeval {

// All character offsets in this library count Unicode scalar values.

// Decodes UTF-8; throws Error(kInvalidUtf8) on malformed input.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);

// Number of scalar values in a UTF-8 string.
std::size_t Utf8Length(std::string_view text);

bool IsWhitespace(char32_t c);

// ASCII-only lowercase mapping; non-ASCII scalars are left alone.
std::string AsciiLower(std::string_view text);

}  // namespace linkeval

#endif  // LINKEVAL_UTF8_H_

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

#include "linkeval/utf8.h"

#include "linkeval/error.h"

namespace linkeval {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpan: return "InvalidSpan";
    case ErrorCode::kInvalidEntityId: return "InvalidEntityId";
    case ErrorCode::kInvalidUtf8: return "InvalidUtf8";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kDanglingITag: return "DanglingITag";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kDuplicateDocument: return "DuplicateDocument";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kUnknownSubtoken: return "UnknownSubtoken";
    case ErrorCode::kPriorOutOfRange: return "PriorOutOfRange";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kEmptyTrie: return "EmptyTrie";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOverlappingGold: return "OverlappingGold";
    case ErrorCode::kZeroGold: return "ZeroGold";
    case ErrorCode::kDatasetMismatch: return "DatasetMismatch";
    case ErrorCode::kMalformedRequest: return "MalformedRequest";
    case ErrorCode::kBindFailure: return "BindFailure";
    case ErrorCode::kAnnotatorUnreachable: return "AnnotatorUnreachable";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kUsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void BadUtf8(std::size_t at) {
  throw Error(ErrorCode::kInvalidUtf8,
              "malformed UTF-8 at byte " + std::to_string(at));
}

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    int extra;
    char32_t cp;
    char32_t min;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1; cp = lead & 0x1F; min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2; cp = lead & 0x0F; min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3; cp = lead & 0x07; min = 0x10000;
    } else {
      BadUtf8(i);
    }
    if (i + extra >= text.size()) BadUtf8(i);
    for (int k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) BadUtf8(i + k);
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Overlong forms, surrogates and values beyond U+10FFFF are rejected.
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      BadUtf8(i);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t Utf8Length(std::string_view text) {
  return DecodeUtf8(text).size();
}

bool IsWhitespace(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace linkeval

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

#include "linkeval/adapters.h"

#include <algorithm>
#include <stdexcept>

#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

namespace {

bool IsApostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

void Emit(std::u32string_view text, std::size_t begin, std::size_t end,
          std::vector<TokenSpan> *tokens) {
  if (begin >= end) return;
  TokenSpan token;
  token.token_index = tokens->size();
  token.span = {begin, end};
  token.surface = EncodeUtf8(text.substr(begin, end - begin));
  tokens->push_back(std::move(token));
}

// Splits a punctuation-free word core at its first inner apostrophe.
void EmitWord(std::u32string_view text, std::size_t begin, std::size_t end,
              std::vector<TokenSpan> *tokens) {
  for (std::size_t i = begin + 1; i + 1 < end; ++i) {
    if (!IsApostrophe(text[i])) continue;
    std::size_t cut = i;
    // n't stays together: "don't" -> "do" "n't".
    if (i + 2 == end && (text[i + 1] == U't' || text[i + 1] == U'T') &&
        (text[i - 1] == U'n' || text[i - 1] == U'N') && i - 1 > begin) {
      cut = i - 1;
    }
    Emit(text, begin, cut, tokens);
    Emit(text, cut, end, tokens);
    return;
  }
  Emit(text, begin, end, tokens);
}

}  // namespace

bool IsPunctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0xA1: case 0xAB: case 0xBB: case 0xBF:
    case 0x2013: case 0x2014: case 0x2018: case 0x2019: case 0x201C:
    case 0x201D: case 0x2026:
      return true;
    default:
      return false;
  }
}

bool IsSentenceFinal(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?" ||
         surface == "\xE2\x80\xA6";
}

std::vector<TokenSpan> Tokenize(std::u32string_view text) {
  std::vector<TokenSpan> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsWhitespace(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !IsWhitespace(text[end])) ++end;

    std::size_t core_begin = i;
    std::size_t core_end = end;
    while (core_begin < core_end && IsPunctuation(text[core_begin])) {
      ++core_begin;
    }
    while (core_end > core_begin && IsPunctuation(text[core_end - 1])) {
      --core_end;
    }
    for (std::size_t p = i; p < core_begin; ++p) Emit(text, p, p + 1, &tokens);
    EmitWord(text, core_begin, core_end, &tokens);
    for (std::size_t p = core_end; p < end; ++p) Emit(text, p, p + 1, &tokens);
    i = end;
  }
  return tokens;
}

std::vector<TokenSpan> Tokenize(std::string_view utf8_text) {
  return Tokenize(std::u32string_view(DecodeUtf8(utf8_text)));
}

std::vector<TokenSpan> WhitespaceTokenize(std::u32string_view text) {
  std::vector<TokenSpan> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsWhitespace(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !IsWhitespace(text[end])) ++end;
    Emit(text, i, end, &tokens);
    i = end;
  }
  return tokens;
}

std::vector<Segment> SplitDocument(std::string_view utf8_text,
                                   std::size_t max_tokens) {
  if (max_tokens == 0) {
    throw std::invalid_argument("max_tokens must be positive");
  }
  const std::u32string text = DecodeUtf8(utf8_text);
  const std::vector<TokenSpan> tokens = Tokenize(std::u32string_view(text));

  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t start = 0;
  while (tokens.size() - start > max_tokens) {
    std::size_t cut = start + max_tokens;
    for (std::size_t j = start + max_tokens; j > start; --j) {
      if (IsSentenceFinal(tokens[j - 1].surface)) {
        cut = j;
        break;
      }
    }
    ranges.emplace_back(start, cut);
    start = cut;
  }
  ranges.emplace_back(start, tokens.size());

  std::vector<Segment> segments;
  segments.reserve(ranges.size());
  for (std::size_t k = 0; k < ranges.size(); ++k) {
    const auto [first, last] = ranges[k];
    Segment segment;
    segment.token_begin = first;
    segment.token_end = last;
    const std::size_t begin = k == 0 ? 0 : tokens[first].span.begin;
    const std::size_t end =
        k + 1 == ranges.size() ? text.size() : tokens[last - 1].span.end;
    segment.char_offset = begin;
    segment.char_length = end - begin;
    segment.text = EncodeUtf8(std::u32string_view(text).substr(begin, end - begin));
    segments.push_back(std::move(segment));
  }
  return segments;
}

std::vector<Annotation> MergeSegmentAnnotations(
    const std::vector<Segment> &segments,
    const std::vector<std::vector<Annotation>> &per_segment,
    std::size_t document_length) {
  if (segments.size() != per_segment.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(segments.size()) + " segments but " +
                    std::to_string(per_segment.size()) + " annotation lists");
  }
  std::vector<Annotation> merged;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Segment &segment = segments[k];
    for (const Annotation &local : per_segment[k]) {
      Annotation shifted{{local.span.begin + segment.char_offset,
                          local.span.end + segment.char_offset},
                         local.entity};
      if (local.span.begin >= local.span.end ||
          local.span.end > segment.char_length ||
          shifted.span.end > document_length) {
        throw Error(ErrorCode::kOutOfBounds,
                    "annotation [" + std::to_string(local.span.begin) + ", " +
                        std::to_string(local.span.end) +
                        ") falls outside segment " + std::to_string(k));
      }
      merged.push_back(std::move(shifted));
    }
  }
  return NormalizeAnnotations(std::move(merged), document_length);
}

SubtokenMap::SubtokenMap(std::vector<std::pair<std::size_t, Span>> entries,
                         std::size_t document_length)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    ValidateSpan(entries_[i].second, document_length);
    if (i > 0 && entries_[i].first <= entries_[i - 1].first) {
      throw Error(ErrorCode::kUnknownSubtoken,
                  "subtoken indices must be strictly increasing");
    }
  }
}

const Span &SubtokenMap::Lookup(std::size_t subtoken) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), subtoken,
      [](const auto &entry, std::size_t index) { return entry.first < index; });
  if (it == entries_.end() || it->first != subtoken) {
    throw Error(ErrorCode::kUnknownSubtoken,
                "no subtoken " + std::to_string(subtoken));
  }
  return it->second;
}

std::vector<Annotation> SubtokenToChar(
    const std::vector<SubtokenAnnotation> &annotations, const SubtokenMap &map) {
  std::vector<Annotation> out;
  out.reserve(annotations.size());
  for (const SubtokenAnnotation &a : annotations) {
    if (a.first_subtoken > a.last_subtoken) {
      throw Error(ErrorCode::kUnknownSubtoken,
                  "subtoken range " + std::to_string(a.first_subtoken) + ".." +
                      std::to_string(a.last_subtoken) + " is reversed");
    }
    const Span &first = map.Lookup(a.first_subtoken);
    const Span &last = map.Lookup(a.last_subtoken);
    out.push_back({{first.begin, last.end}, a.entity});
  }
  return out;
}

}  // namespace linkeval

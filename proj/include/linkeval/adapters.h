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

#ifndef LINKEVAL_ADAPTERS_H_
#define LINKEVAL_ADAPTERS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkeval/core.h"

namespace linkeval {

// Word tokenization approximating CoNLL conventions:
//  - split on Unicode whitespace;
//  - detach leading and trailing punctuation, one token per character;
//  - split one contraction per word at its apostrophe ("don't" -> "do" "n't",
//    "John's" -> "John" "'s").
// Every returned span slices back to its surface.
std::vector<TokenSpan> Tokenize(std::u32string_view text);
std::vector<TokenSpan> Tokenize(std::string_view utf8_text);

// Whitespace-only splitting. This is what a linker sees when the tokenization
// adapter is left out of the evaluation chain.
std::vector<TokenSpan> WhitespaceTokenize(std::u32string_view text);

bool IsPunctuation(char32_t c);

// Token that ends a sentence: ".", "!", "?" or an ellipsis.
bool IsSentenceFinal(std::string_view surface);

struct Segment {
  std::string text;          // UTF-8 slice of the parent document
  std::size_t char_offset = 0;
  std::size_t char_length = 0;
  std::size_t token_begin = 0;  // token ordinals [token_begin, token_end)
  std::size_t token_end = 0;

  bool operator==(const Segment &) const = default;
};

// Splits a document into non-overlapping segments of at most max_tokens
// tokens. Cuts prefer the last sentence-final token inside the window and
// fall back to a hard cut at max_tokens. The first segment starts at 0, the
// last one ends at the end of the text, and the whitespace between two
// segments belongs to neither. A document within the limit comes back as a
// single segment equal to the input.
std::vector<Segment> SplitDocument(std::string_view utf8_text,
                                   std::size_t max_tokens);

// Shifts segment-local annotations into document coordinates and normalizes
// the union. Throws kLengthMismatch for non-parallel inputs and kOutOfBounds
// when a span leaves its segment or the document.
std::vector<Annotation> MergeSegmentAnnotations(
    const std::vector<Segment> &segments,
    const std::vector<std::vector<Annotation>> &per_segment,
    std::size_t document_length);

// Maps subword token ordinals to the character span of the word they came
// from. Indices must be strictly increasing.
class SubtokenMap {
 public:
  SubtokenMap() = default;
  SubtokenMap(std::vector<std::pair<std::size_t, Span>> entries,
              std::size_t document_length);

  // Throws Error(kUnknownSubtoken).
  const Span &Lookup(std::size_t subtoken) const;
  const std::vector<std::pair<std::size_t, Span>> &entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::size_t, Span>> entries_;
};

struct SubtokenAnnotation {
  std::size_t first_subtoken = 0;  // inclusive
  std::size_t last_subtoken = 0;   // inclusive
  EntityId entity;
};

std::vector<Annotation> SubtokenToChar(
    const std::vector<SubtokenAnnotation> &annotations, const SubtokenMap &map);

}  // namespace linkeval

#endif  // LINKEVAL_ADAPTERS_H_

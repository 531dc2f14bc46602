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

#include "linkeval/core.h"

#include <algorithm>

#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

EntityId::EntityId(std::string id) : id_(std::move(id)) {
  if (id_.empty()) {
    throw Error(ErrorCode::kInvalidEntityId, "empty entity id");
  }
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  };
  if (is_space(id_.front()) || is_space(id_.back())) {
    throw Error(ErrorCode::kInvalidEntityId,
                "entity id has surrounding whitespace: '" + id_ + "'");
  }
}

void ValidateSpan(const Span &span, std::size_t document_length) {
  if (span.begin >= span.end || span.end > document_length) {
    throw Error(ErrorCode::kInvalidSpan,
                "span [" + std::to_string(span.begin) + ", " +
                    std::to_string(span.end) + ") invalid for length " +
                    std::to_string(document_length));
  }
}

KbVocabulary KbVocabulary::Of(const std::vector<EntityId> &entities) {
  KbVocabulary vocabulary;
  vocabulary.open_ = false;
  for (const EntityId &entity : entities) vocabulary.ids_.insert(entity.id());
  return vocabulary;
}

bool KbVocabulary::Contains(const EntityId &entity) const {
  if (entity.is_none()) return false;
  return open_ || ids_.contains(entity.id());
}

std::vector<Annotation> NormalizeAnnotations(std::vector<Annotation> annotations,
                                             std::size_t document_length) {
  for (const Annotation &a : annotations) ValidateSpan(a.span, document_length);
  std::sort(annotations.begin(), annotations.end());
  annotations.erase(std::unique(annotations.begin(), annotations.end()),
                    annotations.end());
  return annotations;
}

std::vector<Annotation> FilterInKb(const std::vector<Annotation> &annotations,
                                   const KbVocabulary &vocabulary) {
  std::vector<Annotation> kept;
  kept.reserve(annotations.size());
  for (const Annotation &a : annotations) {
    if (vocabulary.Contains(a.entity)) kept.push_back(a);
  }
  return kept;
}

void CheckNonOverlapping(const std::vector<Annotation> &annotations) {
  std::vector<Span> spans;
  spans.reserve(annotations.size());
  for (const Annotation &a : annotations) spans.push_back(a.span);
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i - 1].Overlaps(spans[i])) {
      throw Error(ErrorCode::kOverlappingGold,
                  "gold spans [" + std::to_string(spans[i - 1].begin) + ", " +
                      std::to_string(spans[i - 1].end) + ") and [" +
                      std::to_string(spans[i].begin) + ", " +
                      std::to_string(spans[i].end) + ") overlap");
    }
  }
}

std::string SliceText(std::u32string_view text, const Span &span) {
  ValidateSpan(span, text.size());
  return EncodeUtf8(text.substr(span.begin, span.length()));
}

std::string SliceText(std::string_view utf8_text, const Span &span) {
  return SliceText(std::u32string_view(DecodeUtf8(utf8_text)), span);
}

}  // namespace linkeval

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

#ifndef LINKEVAL_CORE_H_
#define LINKEVAL_CORE_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace linkeval {

// Reserved identifier of the *None* entity ("no KB link"). It follows the
// AIDA convention for out-of-KB mentions.
inline constexpr std::string_view kNoneEntity = "--NME--";

// Canonical knowledge-base identifier. Identifiers are opaque; no alias or
// redirect resolution is ever applied.
class EntityId {
 public:
  // Throws Error(kInvalidEntityId) for empty ids or ids with surrounding
  // whitespace.
  explicit EntityId(std::string id);

  static EntityId None() { return EntityId(std::string(kNoneEntity)); }

  const std::string &id() const { return id_; }
  bool is_none() const { return id_ == kNoneEntity; }

  auto operator<=>(const EntityId &) const = default;
  bool operator==(const EntityId &) const = default;

 private:
  std::string id_;
};

// Half-open character range [begin, end) in Unicode scalar values.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool Overlaps(const Span &other) const {
    return begin < other.end && other.begin < end;
  }

  auto operator<=>(const Span &) const = default;
  bool operator==(const Span &) const = default;
};

// Throws Error(kInvalidSpan) unless 0 <= begin < end <= document_length.
void ValidateSpan(const Span &span, std::size_t document_length);

// Ordering is (begin, end, entity), which is the canonical order used by
// normalization and matching.
struct Annotation {
  Span span;
  EntityId entity;

  auto operator<=>(const Annotation &) const = default;
  bool operator==(const Annotation &) const = default;
};

struct TokenSpan {
  std::size_t token_index = 0;
  Span span;
  std::string surface;

  bool operator==(const TokenSpan &) const = default;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::string text;  // UTF-8
  std::vector<Annotation> gold;
  std::vector<Annotation> predicted;
  // Token ordinals that start a new sentence (CoNLL blank lines).
  std::vector<std::size_t> sentence_breaks;
};

// The set of entities considered in-KB. An open vocabulary accepts every
// entity except *None*.
class KbVocabulary {
 public:
  static KbVocabulary Open() { return KbVocabulary(); }
  static KbVocabulary Of(const std::vector<EntityId> &entities);

  bool Contains(const EntityId &entity) const;
  bool is_open() const { return open_; }
  std::size_t size() const { return ids_.size(); }

 private:
  KbVocabulary() = default;

  bool open_ = true;
  std::unordered_set<std::string> ids_;
};

// Sorts by (begin, end, entity) and drops exact duplicates. Overlapping
// annotations are kept. Throws Error(kInvalidSpan) on bad spans.
std::vector<Annotation> NormalizeAnnotations(std::vector<Annotation> annotations,
                                             std::size_t document_length);

// Keeps annotations whose entity is in-KB and not *None*, preserving order.
std::vector<Annotation> FilterInKb(const std::vector<Annotation> &annotations,
                                   const KbVocabulary &vocabulary);

// Throws Error(kOverlappingGold) if any two annotations overlap.
void CheckNonOverlapping(const std::vector<Annotation> &annotations);

// Substring of UTF-8 text addressed by scalar-value offsets.
std::string SliceText(std::u32string_view text, const Span &span);
std::string SliceText(std::string_view utf8_text, const Span &span);

}  // namespace linkeval

#endif  // LINKEVAL_CORE_H_

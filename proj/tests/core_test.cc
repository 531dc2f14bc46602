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

#include <doctest.h>

#include <random>

#include "linkeval/core.h"
#include "linkeval/error.h"
#include "linkeval/utf8.h"

using namespace linkeval;

namespace {

Annotation A(std::size_t b, std::size_t e, const char *entity) {
  return {{b, e}, EntityId(entity)};
}

ErrorCode CodeOf(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kUsageError;
}

}  // namespace

TEST_CASE("EntityId rejects empty and padded ids") {
  CHECK(CodeOf([] { EntityId(""); }) == ErrorCode::kInvalidEntityId);
  CHECK(CodeOf([] { EntityId(" X"); }) == ErrorCode::kInvalidEntityId);
  CHECK(CodeOf([] { EntityId("X\t"); }) == ErrorCode::kInvalidEntityId);
  CHECK(EntityId("Japan national team").id() == "Japan national team");
  CHECK(EntityId::None().is_none());
  CHECK_FALSE(EntityId("JAPAN").is_none());
}

TEST_CASE("NormalizeAnnotations sorts and dedupes") {
  CHECK(NormalizeAnnotations({}, 10).empty());
  CHECK(NormalizeAnnotations({A(10, 15, "B"), A(0, 5, "A"), A(0, 5, "A")}, 20) ==
        std::vector<Annotation>{A(0, 5, "A"), A(10, 15, "B")});
  // Overlap is allowed; only gold is checked for disjointness.
  CHECK(NormalizeAnnotations({A(0, 5, "A"), A(3, 8, "B")}, 20) ==
        std::vector<Annotation>{A(0, 5, "A"), A(3, 8, "B")});
}

TEST_CASE("NormalizeAnnotations rejects bad spans") {
  CHECK(CodeOf([] { NormalizeAnnotations({A(5, 5, "A")}, 10); }) ==
        ErrorCode::kInvalidSpan);
  CHECK(CodeOf([] { NormalizeAnnotations({A(6, 5, "A")}, 10); }) ==
        ErrorCode::kInvalidSpan);
  CHECK(CodeOf([] { NormalizeAnnotations({A(0, 11, "A")}, 10); }) ==
        ErrorCode::kInvalidSpan);
}

TEST_CASE("FilterInKb drops None and out-of-KB entities") {
  const auto vocab = KbVocabulary::Of({EntityId("A"), EntityId::None()});
  CHECK(FilterInKb({A(0, 5, "A"), A(6, 9, "--NME--")}, vocab) ==
        std::vector<Annotation>{A(0, 5, "A")});
  CHECK(FilterInKb({A(0, 5, "X")}, KbVocabulary::Of({EntityId("A"), EntityId("B")}))
            .empty());
  CHECK(FilterInKb({}, vocab).empty());
  CHECK(FilterInKb({A(0, 5, "anything")}, KbVocabulary::Open()).size() == 1);
  CHECK(FilterInKb({A(0, 5, "--NME--")}, KbVocabulary::Open()).empty());
}

TEST_CASE("normalization is idempotent and filtering yields a subsequence") {
  std::mt19937 rng(7);
  const char *entities[] = {"A", "B", "C", "--NME--"};
  const auto vocab = KbVocabulary::Of({EntityId("A"), EntityId("B")});
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Annotation> xs;
    const int count = rng() % 12;
    for (int i = 0; i < count; ++i) {
      const std::size_t b = rng() % 30;
      xs.push_back(A(b, b + 1 + rng() % 5, entities[rng() % 4]));
    }
    const auto once = NormalizeAnnotations(xs, 40);
    CHECK(NormalizeAnnotations(once, 40) == once);

    const auto kept = FilterInKb(xs, vocab);
    std::size_t j = 0;
    for (const Annotation &a : xs) {
      if (j < kept.size() && kept[j] == a) ++j;
    }
    CHECK(j == kept.size());
  }
}

TEST_CASE("CheckNonOverlapping") {
  CheckNonOverlapping({A(0, 5, "A"), A(5, 9, "B")});
  CHECK(CodeOf([] { CheckNonOverlapping({A(0, 5, "A"), A(4, 9, "B")}); }) ==
        ErrorCode::kOverlappingGold);
}

TEST_CASE("offsets count Unicode scalar values") {
  const std::string text = "S\xC3\xA3o Paulo \xF0\x9F\x98\x80!";
  CHECK(Utf8Length(text) == 12);
  CHECK(SliceText(text, {0, 3}) == "S\xC3\xA3o");
  CHECK(SliceText(text, {10, 11}) == "\xF0\x9F\x98\x80");
  CHECK(EncodeUtf8(DecodeUtf8(text)) == text);
  CHECK(CodeOf([] { DecodeUtf8("\xC3"); }) == ErrorCode::kInvalidUtf8);
  CHECK(CodeOf([] { DecodeUtf8("\xC0\xAF"); }) == ErrorCode::kInvalidUtf8);
  CHECK(CodeOf([] { DecodeUtf8("\xED\xA0\x80"); }) == ErrorCode::kInvalidUtf8);
}

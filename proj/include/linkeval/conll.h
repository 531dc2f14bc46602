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

#ifndef LINKEVAL_CONLL_H_
#define LINKEVAL_CONLL_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "linkeval/core.h"

namespace linkeval {

enum class BioTag { kBegin, kInside, kOutside };

struct ConllToken {
  std::string surface;
  BioTag tag = BioTag::kOutside;
  std::optional<EntityId> entity;  // absent iff tag is kOutside
};

// Column layout of a token line. Fields are split on tabs when the line
// contains one, otherwise on runs of spaces. A line with a single field is an
// O token (AIDA writes unannotated tokens that way).
struct ConllLayout {
  std::size_t token_column = 0;
  std::size_t tag_column = 1;
  std::size_t entity_column = 2;

  // AIDA-YAGO2 layout: token, B/I, full mention, YAGO entity, ...
  static ConllLayout Aida() { return {0, 1, 3}; }
};

struct Corpus {
  std::string name;
  std::vector<AnnotatedDocument> documents;
};

struct ReconstructedText {
  std::string text;
  std::vector<TokenSpan> spans;
};

// Joins tokens with single spaces, except that no space goes before a token
// made only of closing punctuation (. , ; : ! ? ' ) ] }) and none after a
// token made only of opening brackets (( [ {).
ReconstructedText ReconstructText(const std::vector<ConllToken> &tokens);

// Parses a CoNLL/AIDA corpus. Documents start at lines beginning with
// "-DOCSTART-"; an identifier in parentheses after the marker becomes the
// doc_id, otherwise documents are numbered "doc<k>". Blank lines mark
// sentence breaks. Entity "--NME--" maps to the *None* entity.
//
// Errors: kMalformedLine, kDanglingITag, kEmptyCorpus, kDuplicateDocument.
Corpus ParseConll(std::istream &input, const ConllLayout &layout = {},
                  std::string name = "corpus");
Corpus ParseConllString(const std::string &input,
                        const ConllLayout &layout = {},
                        std::string name = "corpus");
Corpus LoadConllFile(const std::string &path, const ConllLayout &layout = {});

}  // namespace linkeval

#endif  // LINKEVAL_CONLL_H_

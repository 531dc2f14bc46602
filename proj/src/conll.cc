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

#include "linkeval/conll.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

namespace {

constexpr std::string_view kDocStart = "-DOCSTART-";

bool AllOf(const std::string &token, std::string_view set) {
  if (token.empty()) return false;
  for (char c : token) {
    if (set.find(c) == std::string_view::npos) return false;
  }
  return true;
}

bool IsClosing(const std::string &token) { return AllOf(token, ".,;:!?')]}"); }
bool IsOpening(const std::string &token) { return AllOf(token, "([{"); }

std::vector<std::string> SplitFields(const std::string &line) {
  std::vector<std::string> fields;
  if (line.find('\t') != std::string::npos) {
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, '\t')) fields.push_back(field);
    if (!line.empty() && line.back() == '\t') fields.emplace_back();
  } else {
    std::istringstream stream(line);
    std::string field;
    while (stream >> field) fields.push_back(field);
  }
  return fields;
}

std::string Trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void Malformed(std::size_t line_no, const std::string &what) {
  throw Error(ErrorCode::kMalformedLine,
              "line " + std::to_string(line_no) + ": " + what);
}

struct PendingDocument {
  std::string doc_id;
  std::vector<ConllToken> tokens;
  std::vector<std::size_t> sentence_breaks;
};

AnnotatedDocument Finish(PendingDocument pending) {
  AnnotatedDocument doc;
  doc.doc_id = std::move(pending.doc_id);
  doc.sentence_breaks = std::move(pending.sentence_breaks);
  ReconstructedText rebuilt = ReconstructText(pending.tokens);
  doc.text = std::move(rebuilt.text);

  const auto &tokens = pending.tokens;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].tag != BioTag::kBegin) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < tokens.size() && tokens[j].tag == BioTag::kInside) ++j;
    doc.gold.push_back({{rebuilt.spans[i].span.begin,
                         rebuilt.spans[j - 1].span.end},
                        *tokens[i].entity});
    i = j;
  }
  return doc;
}

}  // namespace

ReconstructedText ReconstructText(const std::vector<ConllToken> &tokens) {
  ReconstructedText out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string &surface = tokens[i].surface;
    if (i > 0 && !IsClosing(surface) && !IsOpening(tokens[i - 1].surface)) {
      out.text.push_back(' ');
      ++offset;
    }
    const std::size_t length = Utf8Length(surface);
    out.spans.push_back({i, {offset, offset + length}, surface});
    out.text += surface;
    offset += length;
  }
  return out;
}

Corpus ParseConll(std::istream &input, const ConllLayout &layout,
                  std::string name) {
  Corpus corpus;
  corpus.name = std::move(name);
  std::unordered_set<std::string> seen_ids;
  std::optional<PendingDocument> pending;

  auto flush = [&]() {
    if (!pending) return;
    if (!seen_ids.insert(pending->doc_id).second) {
      throw Error(ErrorCode::kDuplicateDocument,
                  "duplicate doc_id '" + pending->doc_id + "'");
    }
    corpus.documents.push_back(Finish(std::move(*pending)));
    pending.reset();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kDocStart, 0) == 0) {
      flush();
      pending.emplace();
      std::string rest = Trim(line.substr(kDocStart.size()));
      if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
        rest = Trim(rest.substr(1, rest.size() - 2));
      }
      pending->doc_id = rest.empty()
                            ? "doc" + std::to_string(corpus.documents.size())
                            : rest;
      continue;
    }
    if (Trim(line).empty()) {
      if (pending && !pending->tokens.empty() &&
          (pending->sentence_breaks.empty() ||
           pending->sentence_breaks.back() != pending->tokens.size())) {
        pending->sentence_breaks.push_back(pending->tokens.size());
      }
      continue;
    }
    if (!pending) Malformed(line_no, "token line before any -DOCSTART-");

    DecodeUtf8(line);
    const std::vector<std::string> fields = SplitFields(line);
    ConllToken token;
    if (fields.size() == 1) {
      token.surface = fields[0];
    } else {
      if (fields.size() <= std::max(layout.token_column, layout.tag_column)) {
        Malformed(line_no, "expected at least " +
                               std::to_string(std::max(layout.token_column,
                                                       layout.tag_column) + 1) +
                               " fields, got " + std::to_string(fields.size()));
      }
      token.surface = fields[layout.token_column];
      const std::string &tag = fields[layout.tag_column];
      if (tag == "O") {
        token.tag = BioTag::kOutside;
      } else if (tag == "B" || tag == "I") {
        token.tag = tag == "B" ? BioTag::kBegin : BioTag::kInside;
        if (fields.size() <= layout.entity_column ||
            Trim(fields[layout.entity_column]).empty()) {
          Malformed(line_no, "tag " + tag + " without entity column");
        }
        token.entity = EntityId(Trim(fields[layout.entity_column]));
      } else {
        Malformed(line_no, "unknown BIO tag '" + tag + "'");
      }
    }
    if (token.surface.empty()) Malformed(line_no, "empty token");

    if (token.tag == BioTag::kInside) {
      const auto &tokens = pending->tokens;
      const bool continues =
          !tokens.empty() && tokens.back().tag != BioTag::kOutside &&
          tokens.back().entity == token.entity &&
          (pending->sentence_breaks.empty() ||
           pending->sentence_breaks.back() != tokens.size());
      if (!continues) {
        throw Error(ErrorCode::kDanglingITag,
                    "line " + std::to_string(line_no) +
                        ": I tag without a preceding B/I of entity " +
                        token.entity->id());
      }
    }
    pending->tokens.push_back(std::move(token));
  }
  flush();
  if (corpus.documents.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no -DOCSTART- block in input");
  }
  return corpus;
}

Corpus ParseConllString(const std::string &input, const ConllLayout &layout,
                        std::string name) {
  std::istringstream stream(input);
  return ParseConll(stream, layout, std::move(name));
}

Corpus LoadConllFile(const std::string &path, const ConllLayout &layout) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  return ParseConll(file, layout, std::filesystem::path(path).stem().string());
}

}  // namespace linkeval

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

#ifndef LINKEVAL_TESTS_FIXTURES_H_
#define LINKEVAL_TESTS_FIXTURES_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "linkeval/candidates.h"
#include "linkeval/conll.h"

namespace linkeval::testing {

// Synthetic corpus in CoNLL form plus the candidate resources that go with it.
struct Fixture {
  std::string conll;
  std::string dictionary_tsv;

  Corpus corpus(const std::string &name = "fixture") const {
    return ParseConllString(conll, {}, name);
  }
  std::shared_ptr<const AliasDictionary> dictionary() const;
};

// "Japan" -> (JAPAN_NT 0.6, JAPAN 0.4).
std::string JapanDictionaryTsv();

// Single-token ambiguous mentions whose gold entity is always the dictionary
// argmax. Uniform priors pick the wrong sense for most of them.
Fixture AmbiguousFixture(unsigned seed, std::size_t documents);

// Gold annotations are exactly the dictionary hits, every hit has a single
// candidate, and the filler words never match. Includes one document long
// enough to be split into several segments at 512 tokens.
Fixture PerfectionFixture(unsigned seed, std::size_t documents);

// Ids "E00000".."E<count-2>" plus the *None* entity, one per line.
std::string VocabularyFile(std::size_t count_including_none);

std::filesystem::path TempDir(const std::string &tag);
void WriteText(const std::filesystem::path &path, const std::string &content);

}  // namespace linkeval::testing

#endif  // LINKEVAL_TESTS_FIXTURES_H_

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

#ifndef LINKEVAL_CANDIDATES_H_
#define LINKEVAL_CANDIDATES_H_

#include <cstddef>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkeval/core.h"

namespace linkeval {

// One candidate entity with its mention-entity prior p(e|m).
struct Candidate {
  EntityId entity;
  double prior = 0.0;

  bool operator==(const Candidate &) const = default;
};

// Descending prior, ties by entity id.
bool CandidateBefore(const Candidate &a, const Candidate &b);

using CandidateList = std::vector<Candidate>;

// Mention surface -> prior-weighted candidates. Lists are sorted with
// CandidateBefore; priors of one mention sum to at most 1 and are never
// renormalized.
class AliasDictionary {
 public:
  AliasDictionary() = default;

  // Exact surface match first, then an ASCII-lowercase fallback. Returns
  // nullptr on a miss.
  const CandidateList *Find(std::string_view mention) const;

  const std::vector<EntityId> &vocabulary() const { return vocabulary_; }
  std::size_t mention_count() const { return entries_.size(); }

 private:
  friend AliasDictionary LoadAliasDictionary(std::istream &input);

  std::unordered_map<std::string, std::shared_ptr<const CandidateList>> entries_;
  // Lowercased surface -> smallest original surface with that lowercasing.
  std::unordered_map<std::string, std::string> lowercase_index_;
  std::vector<EntityId> vocabulary_;  // sorted, unique
};

// TSV lines "mention<TAB>entity<TAB>prior"; '#' lines and blank lines are
// skipped. Duplicate (mention, entity) pairs keep the larger prior.
// Errors: kMalformedLine, kPriorOutOfRange.
AliasDictionary LoadAliasDictionary(std::istream &input);
AliasDictionary LoadAliasDictionaryFile(const std::string &path);

// One entity id per line; blank and '#' lines skipped, duplicates dropped,
// file order kept.
std::vector<EntityId> LoadVocabulary(std::istream &input);
std::vector<EntityId> LoadVocabularyFile(const std::string &path);

enum class PolicyMode { kDictionary, kFullVocabulary, kEmpty };

std::string_view PolicyModeName(PolicyMode mode);

struct CandidateSet {
  std::string mention;
  std::shared_ptr<const CandidateList> pool;  // never null

  std::span<const Candidate> candidates() const { return *pool; }
  std::size_t size() const { return pool->size(); }
  bool empty() const { return pool->empty(); }
};

// Which candidate regime is in force. Immutable and cheap to copy; the
// full-vocabulary pool is built once and shared by every lookup.
class CandidatePolicy {
 public:
  static CandidatePolicy Dictionary(std::shared_ptr<const AliasDictionary> dictionary);
  // Every non-None entity gets prior 1/|V \ {None}|.
  static CandidatePolicy FullVocabulary(const std::vector<EntityId> &vocabulary);
  static CandidatePolicy Empty();

  PolicyMode mode() const { return mode_; }
  const AliasDictionary *dictionary() const { return dictionary_.get(); }

  CandidateSet CandidatesFor(std::string_view mention) const;

 private:
  CandidatePolicy() = default;

  PolicyMode mode_ = PolicyMode::kEmpty;
  std::shared_ptr<const AliasDictionary> dictionary_;
  std::shared_ptr<const CandidateList> full_pool_;
};

// Character-level prefix tree over entity identifiers.
class EntityTrie {
 public:
  // Symbol that marks the end of a complete identifier. It lies outside the
  // Unicode range, so it never collides with a character.
  static constexpr char32_t kEnd = 0x110000;

  EntityTrie() = default;
  explicit EntityTrie(const std::vector<EntityId> &entities);

  void Insert(const EntityId &entity);
  bool Contains(std::string_view id) const;
  bool empty() const { return entity_count_ == 0; }
  std::size_t size() const { return entity_count_; }

  // Valid continuations of a prefix, ascending, kEnd last when the prefix is
  // itself an identifier. Empty if the prefix leaves the trie.
  std::vector<char32_t> NextSymbols(std::u32string_view prefix) const;

  // Node-level access used by decoders that walk the trie incrementally.
  static constexpr std::size_t kRoot = 0;
  static constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);
  std::size_t Child(std::size_t node, char32_t symbol) const;
  bool IsTerminal(std::size_t node) const { return nodes_[node].terminal; }
  std::vector<char32_t> NextSymbolsAt(std::size_t node) const;

 private:
  struct Node {
    std::vector<std::pair<char32_t, std::size_t>> children;  // sorted
    bool terminal = false;
  };

  std::size_t Walk(std::u32string_view prefix) const;

  std::vector<Node> nodes_{Node{}};
  std::size_t entity_count_ = 0;
};

EntityTrie BuildTrie(const std::vector<EntityId> &entities);

}  // namespace linkeval

#endif  // LINKEVAL_CANDIDATES_H_

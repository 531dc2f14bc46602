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

#include "linkeval/candidates.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

namespace {

constexpr double kPriorMassSlack = 1e-9;

const std::shared_ptr<const CandidateList> &EmptyPool() {
  static const auto pool = std::make_shared<const CandidateList>();
  return pool;
}

bool SkipLine(const std::string &line) {
  return line.empty() || line.front() == '#';
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  return file;
}

}  // namespace

bool CandidateBefore(const Candidate &a, const Candidate &b) {
  if (a.prior != b.prior) return a.prior > b.prior;
  return a.entity < b.entity;
}

const CandidateList *AliasDictionary::Find(std::string_view mention) const {
  auto it = entries_.find(std::string(mention));
  if (it != entries_.end()) return it->second.get();
  auto lower = lowercase_index_.find(AsciiLower(mention));
  if (lower == lowercase_index_.end()) return nullptr;
  return entries_.at(lower->second).get();
}

AliasDictionary LoadAliasDictionary(std::istream &input) {
  // mention -> entity -> max prior. Ordered maps make the result independent
  // of line order.
  std::map<std::string, std::map<std::string, double>> grouped;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    line = StripCr(std::move(line));
    if (SkipLine(line)) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 =
        tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected mention<TAB>entity<TAB>prior");
    }
    std::string mention = line.substr(0, tab1);
    std::string entity = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const std::string prior_text = line.substr(tab2 + 1);
    DecodeUtf8(line);
    if (mention.empty() || entity.empty() || prior_text.empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": empty field");
    }
    char *end = nullptr;
    errno = 0;
    const double prior = std::strtod(prior_text.c_str(), &end);
    if (end != prior_text.c_str() + prior_text.size() || errno == ERANGE) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": bad prior '" +
                      prior_text + "'");
    }
    if (!(prior >= 0.0 && prior <= 1.0)) {
      throw Error(ErrorCode::kPriorOutOfRange,
                  "line " + std::to_string(line_no) + ": prior " + prior_text);
    }
    EntityId checked(entity);  // validates the id
    auto &slot = grouped[mention][checked.id()];
    slot = std::max(slot, prior);
  }

  AliasDictionary dictionary;
  std::set<std::string> vocabulary;
  for (auto &[mention, by_entity] : grouped) {
    CandidateList list;
    double mass = 0.0;
    for (const auto &[entity, prior] : by_entity) {
      list.push_back({EntityId(entity), prior});
      mass += prior;
      vocabulary.insert(entity);
    }
    if (mass > 1.0 + kPriorMassSlack) {
      throw Error(ErrorCode::kPriorOutOfRange,
                  "priors of mention '" + mention + "' sum to " +
                      std::to_string(mass));
    }
    std::sort(list.begin(), list.end(), CandidateBefore);
    // A surface that is already lowercase owns its key; otherwise grouped is
    // ordered, so the first surface seen is the smallest one.
    const std::string folded = AsciiLower(mention);
    if (folded == mention) {
      dictionary.lowercase_index_.insert_or_assign(folded, mention);
    } else {
      dictionary.lowercase_index_.try_emplace(folded, mention);
    }
    dictionary.entries_.emplace(mention,
                                std::make_shared<const CandidateList>(std::move(list)));
  }
  for (const std::string &id : vocabulary) dictionary.vocabulary_.emplace_back(id);
  return dictionary;
}

AliasDictionary LoadAliasDictionaryFile(const std::string &path) {
  std::ifstream file = OpenOrThrow(path);
  return LoadAliasDictionary(file);
}

std::vector<EntityId> LoadVocabulary(std::istream &input) {
  std::vector<EntityId> entities;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(input, line)) {
    line = StripCr(std::move(line));
    if (SkipLine(line)) continue;
    DecodeUtf8(line);
    if (seen.insert(line).second) entities.emplace_back(line);
  }
  return entities;
}

std::vector<EntityId> LoadVocabularyFile(const std::string &path) {
  std::ifstream file = OpenOrThrow(path);
  return LoadVocabulary(file);
}

std::string_view PolicyModeName(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::kDictionary: return "dict";
    case PolicyMode::kFullVocabulary: return "full";
    case PolicyMode::kEmpty: return "empty";
  }
  return "unknown";
}

CandidatePolicy CandidatePolicy::Dictionary(
    std::shared_ptr<const AliasDictionary> dictionary) {
  if (!dictionary) {
    throw Error(ErrorCode::kInvalidPolicy, "dictionary policy needs a dictionary");
  }
  CandidatePolicy policy;
  policy.mode_ = PolicyMode::kDictionary;
  policy.dictionary_ = std::move(dictionary);
  return policy;
}

CandidatePolicy CandidatePolicy::FullVocabulary(
    const std::vector<EntityId> &vocabulary) {
  std::set<EntityId> unique;
  for (const EntityId &entity : vocabulary) {
    if (!entity.is_none()) unique.insert(entity);
  }
  if (unique.empty()) {
    throw Error(ErrorCode::kInvalidPolicy,
                "full-vocabulary policy needs at least one non-None entity");
  }
  const double prior = 1.0 / static_cast<double>(unique.size());
  CandidateList pool;
  pool.reserve(unique.size());
  for (const EntityId &entity : unique) pool.push_back({entity, prior});

  CandidatePolicy policy;
  policy.mode_ = PolicyMode::kFullVocabulary;
  policy.full_pool_ = std::make_shared<const CandidateList>(std::move(pool));
  return policy;
}

CandidatePolicy CandidatePolicy::Empty() { return CandidatePolicy(); }

CandidateSet CandidatePolicy::CandidatesFor(std::string_view mention) const {
  CandidateSet set{std::string(mention), EmptyPool()};
  switch (mode_) {
    case PolicyMode::kDictionary:
      if (const CandidateList *found = dictionary_->Find(mention)) {
        // Aliasing pointer: shares ownership of the dictionary.
        set.pool = std::shared_ptr<const CandidateList>(dictionary_, found);
      }
      break;
    case PolicyMode::kFullVocabulary:
      set.pool = full_pool_;
      break;
    case PolicyMode::kEmpty:
      break;
  }
  return set;
}

EntityTrie::EntityTrie(const std::vector<EntityId> &entities) {
  for (const EntityId &entity : entities) Insert(entity);
}

void EntityTrie::Insert(const EntityId &entity) {
  std::size_t node = kRoot;
  for (char32_t symbol : DecodeUtf8(entity.id())) {
    auto &children = nodes_[node].children;
    auto it = std::lower_bound(
        children.begin(), children.end(), symbol,
        [](const auto &edge, char32_t s) { return edge.first < s; });
    if (it != children.end() && it->first == symbol) {
      node = it->second;
      continue;
    }
    const std::size_t child = nodes_.size();
    children.insert(it, {symbol, child});
    nodes_.emplace_back();
    node = child;
  }
  if (!nodes_[node].terminal) {
    nodes_[node].terminal = true;
    ++entity_count_;
  }
}

std::size_t EntityTrie::Child(std::size_t node, char32_t symbol) const {
  const auto &children = nodes_[node].children;
  auto it = std::lower_bound(
      children.begin(), children.end(), symbol,
      [](const auto &edge, char32_t s) { return edge.first < s; });
  if (it == children.end() || it->first != symbol) return kNoNode;
  return it->second;
}

std::size_t EntityTrie::Walk(std::u32string_view prefix) const {
  std::size_t node = kRoot;
  for (char32_t symbol : prefix) {
    node = Child(node, symbol);
    if (node == kNoNode) return kNoNode;
  }
  return node;
}

bool EntityTrie::Contains(std::string_view id) const {
  const std::size_t node = Walk(DecodeUtf8(id));
  return node != kNoNode && nodes_[node].terminal;
}

std::vector<char32_t> EntityTrie::NextSymbolsAt(std::size_t node) const {
  std::vector<char32_t> symbols;
  symbols.reserve(nodes_[node].children.size() + 1);
  for (const auto &edge : nodes_[node].children) symbols.push_back(edge.first);
  if (nodes_[node].terminal) symbols.push_back(kEnd);
  return symbols;
}

std::vector<char32_t> EntityTrie::NextSymbols(std::u32string_view prefix) const {
  const std::size_t node = Walk(prefix);
  if (node == kNoNode) return {};
  return NextSymbolsAt(node);
}

EntityTrie BuildTrie(const std::vector<EntityId> &entities) {
  return EntityTrie(entities);
}

}  // namespace linkeval

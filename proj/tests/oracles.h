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

// Independent reference implementations and random instance generators
// shared by the unit tests and the acceptance binary.

#ifndef LINKEVAL_TESTS_ORACLES_H_
#define LINKEVAL_TESTS_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linkeval/core.h"
#include "linkeval/evaluation.h"

namespace linkeval::testing {

// In-KB set {A..E}; random instances also draw Z (out of KB) and *None*.
const KbVocabulary &FiveEntityVocabulary();

struct OracleCounts {
  std::size_t tp = 0, ie = 0, im = 0, over = 0, under = 0, gold = 0, pred = 0;

  bool Matches(const MatchCounts &c) const;
};

// Five-pass classification by exhaustive pair scans over label arrays.
OracleCounts BruteForceMatch(std::vector<Annotation> gold, std::vector<Annotation> pred);

// Disjoint gold over a 100-character document.
std::vector<Annotation> RandomGold(std::mt19937 &rng, std::size_t max_count);
// Normalized predictions, biased towards near misses of the gold.
std::vector<Annotation> RandomPred(std::mt19937 &rng, const std::vector<Annotation> &gold,
                                   std::size_t max_count);

// Mixed-script text with punctuation, contractions and odd whitespace.
std::string RandomText(std::mt19937 &rng);

// Score of (prefix + symbol) from a table, else a salted hash in [-9.99, 0].
struct TableScorer {
  std::map<std::u32string, double> table;
  unsigned salt = 0;

  double operator()(std::u32string_view prefix, char32_t next) const;
};

// Greedy decoding over a plain string set, independent of EntityTrie. Ties go
// to the smaller symbol; the end marker sorts last.
std::string GreedyOracle(const std::set<std::u32string> &ids, const TableScorer &score);

// 1..12 distinct strings of length 1..5 over {a,b,c}.
std::set<std::u32string> RandomIdSet(std::mt19937 &rng);
std::vector<EntityId> ToEntityIds(const std::set<std::u32string> &ids);

}  // namespace linkeval::testing

#endif  // LINKEVAL_TESTS_ORACLES_H_

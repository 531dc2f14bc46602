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

#ifndef LINKEVAL_EVALUATION_H_
#define LINKEVAL_EVALUATION_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkeval/core.h"

namespace linkeval {

// Disjoint classification of the InKB predictions of one document, plus the
// gold annotations nothing touched.
struct MatchResult {
  std::vector<std::pair<Annotation, Annotation>> true_positives;  // (gold, pred)
  std::vector<Annotation> incorrect_entity;
  std::vector<Annotation> incorrect_mention;
  std::vector<Annotation> over_generated;
  std::vector<Annotation> under_generated;  // gold side
  std::size_t gold_count = 0;  // InKB gold
  std::size_t pred_count = 0;  // InKB predictions
};

// Counts only; what per-document summaries and corpus reductions carry.
struct MatchCounts {
  std::size_t true_positives = 0;
  std::size_t incorrect_entity = 0;
  std::size_t incorrect_mention = 0;
  std::size_t over_generated = 0;
  std::size_t under_generated = 0;
  std::size_t gold_count = 0;
  std::size_t pred_count = 0;

  MatchCounts &operator+=(const MatchCounts &other);
  bool operator==(const MatchCounts &) const = default;
};

MatchCounts CountsOf(const MatchResult &result);

// Strong matching (exact boundaries and entity) after InKB filtering of both
// sides. Predictions are classified in passes, each over the still
// unclassified predictions in (begin, end, entity) order:
//   1. same span and entity as an unmatched gold -> true positive; a gold is
//      matched at most once;
//   2. same span as an unmatched gold, other entity -> incorrect entity;
//   3. same entity as an unmatched gold it overlaps -> incorrect mention;
//   4. everything left -> over-generated.
// Finally, unmatched gold annotations that no InKB prediction overlaps are
// under-generated. Passes 2 and 3 do not consume gold annotations.
//
// Throws Error(kOverlappingGold) if gold spans overlap.
MatchResult MatchAnnotations(const std::vector<Annotation> &gold,
                             const std::vector<Annotation> &pred,
                             const KbVocabulary &vocabulary);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const Prf &) const = default;
};

// Corpus-wide micro averages. P is 1 when nothing was predicted, R is 1 when
// there is no gold, F1 is 0 when P + R is 0.
Prf MicroPrf(std::span<const MatchCounts> results);
Prf MicroPrf(std::span<const MatchResult> results);

struct ErrorBreakdown {
  double over_ratio = 0.0;
  double under_ratio = 0.0;
  double incorrect_entity_ratio = 0.0;
  double incorrect_mention_ratio = 0.0;

  bool operator==(const ErrorBreakdown &) const = default;
};

// Each error category divided by the InKB gold count.
// Throws Error(kZeroGold) when there is no gold.
ErrorBreakdown ErrorRatios(const MatchCounts &counts);
ErrorBreakdown ErrorRatios(const MatchResult &result);

struct DocumentSummary {
  std::string doc_id;
  MatchCounts counts;
  bool protocol_violation = false;
  std::string violation;  // diagnostic when protocol_violation

  bool operator==(const DocumentSummary &) const = default;
};

struct EvaluationReport {
  std::string dataset;
  std::string run_label;  // e.g. the policy name in an ablation
  std::string linker;
  std::string policy;
  unsigned long long seed = 0;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  MatchCounts totals;
  ErrorBreakdown breakdown;  // all zero when the corpus has no InKB gold
  std::vector<DocumentSummary> per_document;
  double runtime_ms = 0.0;
};

// Fills the metric fields of `report` from its per-document counts.
void Summarize(EvaluationReport *report);

// Equality of everything except runtime_ms.
bool SameResults(const EvaluationReport &a, const EvaluationReport &b);

struct PrDelta {
  double precision_pp = 0.0;
  double recall_pp = 0.0;
};

// 100 * (ablated - baseline) for micro precision and recall.
// Throws Error(kDatasetMismatch) if the reports cover different datasets.
PrDelta ComputePrDelta(const EvaluationReport &baseline,
                       const EvaluationReport &ablated);

// Matches gold against predicted annotations of every document. The OpenMP
// kernel and the serial reference return identical results in document
// order; the first failing document's error is rethrown.
std::vector<MatchResult> MatchCorpus(std::span<const AnnotatedDocument> documents,
                                     const KbVocabulary &vocabulary);
std::vector<MatchResult> MatchCorpusSerial(
    std::span<const AnnotatedDocument> documents, const KbVocabulary &vocabulary);

}  // namespace linkeval

#endif  // LINKEVAL_EVALUATION_H_

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

#include "linkeval/evaluation.h"

#include <algorithm>
#include <exception>
#include <map>

#include "linkeval/error.h"
#include "linkeval/parallel.h"

namespace linkeval {

MatchCounts &MatchCounts::operator+=(const MatchCounts &other) {
  true_positives += other.true_positives;
  incorrect_entity += other.incorrect_entity;
  incorrect_mention += other.incorrect_mention;
  over_generated += other.over_generated;
  under_generated += other.under_generated;
  gold_count += other.gold_count;
  pred_count += other.pred_count;
  return *this;
}

MatchCounts CountsOf(const MatchResult &result) {
  MatchCounts counts;
  counts.true_positives = result.true_positives.size();
  counts.incorrect_entity = result.incorrect_entity.size();
  counts.incorrect_mention = result.incorrect_mention.size();
  counts.over_generated = result.over_generated.size();
  counts.under_generated = result.under_generated.size();
  counts.gold_count = result.gold_count;
  counts.pred_count = result.pred_count;
  return counts;
}

MatchResult MatchAnnotations(const std::vector<Annotation> &gold,
                             const std::vector<Annotation> &pred,
                             const KbVocabulary &vocabulary) {
  CheckNonOverlapping(gold);
  std::vector<Annotation> golds = FilterInKb(gold, vocabulary);
  std::vector<Annotation> preds = FilterInKb(pred, vocabulary);
  std::sort(golds.begin(), golds.end());
  std::sort(preds.begin(), preds.end());

  MatchResult result;
  result.gold_count = golds.size();
  result.pred_count = preds.size();

  // Gold spans are disjoint, so a span identifies at most one gold.
  std::map<Span, std::size_t> gold_at;
  for (std::size_t g = 0; g < golds.size(); ++g) gold_at.emplace(golds[g].span, g);
  std::vector<bool> matched(golds.size(), false);
  std::vector<bool> classified(preds.size(), false);

  for (std::size_t p = 0; p < preds.size(); ++p) {
    auto it = gold_at.find(preds[p].span);
    if (it == gold_at.end() || matched[it->second]) continue;
    if (golds[it->second].entity != preds[p].entity) continue;
    matched[it->second] = true;
    classified[p] = true;
    result.true_positives.emplace_back(golds[it->second], preds[p]);
  }
  for (std::size_t p = 0; p < preds.size(); ++p) {
    if (classified[p]) continue;
    auto it = gold_at.find(preds[p].span);
    if (it == gold_at.end() || matched[it->second]) continue;
    if (golds[it->second].entity == preds[p].entity) continue;
    classified[p] = true;
    result.incorrect_entity.push_back(preds[p]);
  }
  for (std::size_t p = 0; p < preds.size(); ++p) {
    if (classified[p]) continue;
    for (std::size_t g = 0; g < golds.size(); ++g) {
      if (!matched[g] && golds[g].entity == preds[p].entity &&
          golds[g].span.Overlaps(preds[p].span)) {
        classified[p] = true;
        result.incorrect_mention.push_back(preds[p]);
        break;
      }
    }
  }
  for (std::size_t p = 0; p < preds.size(); ++p) {
    if (!classified[p]) result.over_generated.push_back(preds[p]);
  }
  for (std::size_t g = 0; g < golds.size(); ++g) {
    if (matched[g]) continue;
    const bool touched = std::any_of(preds.begin(), preds.end(), [&](const Annotation &a) {
      return a.span.Overlaps(golds[g].span);
    });
    if (!touched) result.under_generated.push_back(golds[g]);
  }
  return result;
}

Prf MicroPrf(std::span<const MatchCounts> results) {
  MatchCounts total;
  for (const MatchCounts &r : results) total += r;
  Prf prf;
  prf.precision = total.pred_count == 0
                      ? 1.0
                      : static_cast<double>(total.true_positives) /
                            static_cast<double>(total.pred_count);
  prf.recall = total.gold_count == 0
                   ? 1.0
                   : static_cast<double>(total.true_positives) /
                         static_cast<double>(total.gold_count);
  const double sum = prf.precision + prf.recall;
  prf.f1 = sum == 0.0 ? 0.0 : 2.0 * prf.precision * prf.recall / sum;
  return prf;
}

Prf MicroPrf(std::span<const MatchResult> results) {
  std::vector<MatchCounts> counts;
  counts.reserve(results.size());
  for (const MatchResult &r : results) counts.push_back(CountsOf(r));
  return MicroPrf(std::span<const MatchCounts>(counts));
}

ErrorBreakdown ErrorRatios(const MatchCounts &counts) {
  if (counts.gold_count == 0) {
    throw Error(ErrorCode::kZeroGold, "error ratios need at least one gold annotation");
  }
  const double gold = static_cast<double>(counts.gold_count);
  return {static_cast<double>(counts.over_generated) / gold,
          static_cast<double>(counts.under_generated) / gold,
          static_cast<double>(counts.incorrect_entity) / gold,
          static_cast<double>(counts.incorrect_mention) / gold};
}

ErrorBreakdown ErrorRatios(const MatchResult &result) {
  return ErrorRatios(CountsOf(result));
}

void Summarize(EvaluationReport *report) {
  std::vector<MatchCounts> counts;
  counts.reserve(report->per_document.size());
  report->totals = {};
  for (const DocumentSummary &doc : report->per_document) {
    counts.push_back(doc.counts);
    report->totals += doc.counts;
  }
  const Prf prf = MicroPrf(std::span<const MatchCounts>(counts));
  report->micro_precision = prf.precision;
  report->micro_recall = prf.recall;
  report->micro_f1 = prf.f1;
  report->breakdown =
      report->totals.gold_count == 0 ? ErrorBreakdown{} : ErrorRatios(report->totals);
}

bool SameResults(const EvaluationReport &a, const EvaluationReport &b) {
  return a.dataset == b.dataset && a.run_label == b.run_label &&
         a.linker == b.linker && a.policy == b.policy && a.seed == b.seed &&
         a.micro_precision == b.micro_precision &&
         a.micro_recall == b.micro_recall && a.micro_f1 == b.micro_f1 &&
         a.totals == b.totals && a.breakdown == b.breakdown &&
         a.per_document == b.per_document;
}

PrDelta ComputePrDelta(const EvaluationReport &baseline,
                       const EvaluationReport &ablated) {
  if (baseline.dataset != ablated.dataset) {
    throw Error(ErrorCode::kDatasetMismatch,
                "'" + baseline.dataset + "' vs '" + ablated.dataset + "'");
  }
  return {100.0 * (ablated.micro_precision - baseline.micro_precision),
          100.0 * (ablated.micro_recall - baseline.micro_recall)};
}

std::vector<MatchResult> MatchCorpusSerial(
    std::span<const AnnotatedDocument> documents, const KbVocabulary &vocabulary) {
  std::vector<MatchResult> results;
  results.reserve(documents.size());
  for (const AnnotatedDocument &doc : documents) {
    results.push_back(MatchAnnotations(doc.gold, doc.predicted, vocabulary));
  }
  return results;
}

std::vector<MatchResult> MatchCorpus(std::span<const AnnotatedDocument> documents,
                                     const KbVocabulary &vocabulary) {
  std::vector<MatchResult> results(documents.size());
  ParallelFor(documents.size(), [&](std::size_t i) {
    results[i] = MatchAnnotations(documents[i].gold, documents[i].predicted, vocabulary);
  });
  return results;
}

}  // namespace linkeval

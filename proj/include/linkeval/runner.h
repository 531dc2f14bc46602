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

#ifndef LINKEVAL_RUNNER_H_
#define LINKEVAL_RUNNER_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkeval/candidates.h"
#include "linkeval/conll.h"
#include "linkeval/evaluation.h"
#include "linkeval/pipeline.h"

namespace linkeval {

struct RunConfig {
  std::string corpus_path;
  PolicyMode policy = PolicyMode::kDictionary;
  std::string dict_path;
  std::string vocab_path;
  std::string embeddings_path;
  LinkerConfig linker;
  std::size_t beam_width = 5;
  std::string endpoint = "127.0.0.1:8080";
  std::string out_dir = "linkeval-out";
  unsigned long long seed = 0;
  int parallel = 1;  // documents in flight; 1 is sequential
  std::string run_label;
};

// Sends every document's raw text to the annotator and scores the answers.
// A document whose response violates the protocol is recorded and scored
// with zero predictions; an unreachable annotator aborts the run. Reports
// are ordered by document regardless of `parallel`.
EvaluationReport RunBenchmark(const Corpus &corpus, const Annotator &annotator,
                              const RunConfig &config,
                              const KbVocabulary &vocabulary);

// Scores predictions already attached to documents (AnnotatedDocument::
// predicted), matched to the gold corpus by doc_id. Gold documents without
// a prediction entry count as empty predictions.
EvaluationReport ScorePredictions(const Corpus &gold,
                                  const std::vector<AnnotatedDocument> &predictions,
                                  const KbVocabulary &vocabulary);

// Predictions for offline scoring: either a CoNLL file (its annotations are
// taken as predictions) or JSON lines {"doc_id": ..., "annotations": [...]}
// with the response triple layout.
std::vector<AnnotatedDocument> LoadPredictions(std::istream &input);
std::vector<AnnotatedDocument> LoadPredictionsFile(const std::string &path);

// Resources loaded from the paths in a RunConfig.
struct Resources {
  std::shared_ptr<const AliasDictionary> dictionary;
  std::vector<EntityId> vocabulary;  // full-vocabulary regime and InKB set
  std::shared_ptr<const EmbeddingTable> embeddings;
};

Resources LoadResources(const RunConfig &config);

// The candidate policy of `mode` over the loaded resources. The full
// vocabulary falls back to the dictionary's entities when no vocabulary file
// was given. Throws Error(kInvalidPolicy) if a resource is missing.
CandidatePolicy MakePolicy(PolicyMode mode, const Resources &resources);

KbVocabulary MakeKbVocabulary(const Resources &resources);

std::shared_ptr<const LinkerPipeline> MakePipeline(const RunConfig &config,
                                                   PolicyMode mode,
                                                   const Resources &resources);

// Runs the corpus in-process under the dictionary, full-vocabulary and empty
// candidate regimes, in that order. Reports are labelled "dict", "full",
// "empty".
std::vector<EvaluationReport> RunAblation(const Corpus &corpus,
                                          const RunConfig &config,
                                          const Resources &resources);

// Output files. Values are fixed-point with 4 decimals except the
// percentage-point deltas, which carry a sign and 2 decimals.
inline constexpr const char *kCsvFile = "report.csv";
inline constexpr const char *kSummaryFile = "summary.txt";
inline constexpr const char *kRatioFile = "error_ratios.csv";
inline constexpr const char *kDeltaFile = "pr_delta.csv";

std::string CsvHeader();
std::string CsvRow(const EvaluationReport &report);
std::string FormatSummary(const EvaluationReport &report);

// Writes report.csv, summary.txt and error_ratios.csv; pr_delta.csv as well
// when an ablation pair (baseline, ablated) is given. Returns the paths.
// Throws Error(kIoFailure).
std::vector<std::filesystem::path> EmitReport(
    const EvaluationReport &report,
    const std::optional<std::pair<EvaluationReport, EvaluationReport>> &ablation_pair,
    const std::filesystem::path &out_dir);

// Same files for several runs; runs[1..] are compared against runs[0].
std::vector<std::filesystem::path> EmitAblation(
    const std::vector<EvaluationReport> &runs, const std::filesystem::path &out_dir);

}  // namespace linkeval

#endif  // LINKEVAL_RUNNER_H_

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

#include "linkeval/runner.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "linkeval/error.h"
#include "linkeval/parallel.h"
#include "linkeval/utf8.h"

namespace linkeval {

namespace {

struct DocumentOutcome {
  std::vector<Annotation> predicted;
  bool violation = false;
  std::string diagnostic;
};

DocumentOutcome AnnotateOne(const Annotator &annotator,
                            const AnnotatedDocument &doc) {
  DocumentOutcome outcome;
  try {
    const AnnotateResponse response = annotator.Annotate({doc.text, doc.doc_id});
    outcome.predicted = NormalizeAnnotations(
        FromResponse(response, Utf8Length(doc.text)), Utf8Length(doc.text));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kProtocolViolation) throw;
    outcome.predicted.clear();
    outcome.violation = true;
    outcome.diagnostic = e.what();
  }
  return outcome;
}

std::string Fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::string Signed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%+.2f", value);
  return buffer;
}

std::string RunName(const EvaluationReport &report) {
  return report.run_label.empty() ? report.dataset
                                  : report.dataset + ":" + report.run_label;
}

void WriteFile(const std::filesystem::path &path, const std::string &content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  file << content;
  if (!file) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

std::vector<std::filesystem::path> WriteRuns(
    const std::vector<EvaluationReport> &runs,
    const std::vector<std::pair<std::string, PrDelta>> &deltas,
    const std::filesystem::path &out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoFailure,
                "cannot create " + out_dir.string() + ": " + ec.message());
  }
  std::string csv = CsvHeader();
  std::string summary;
  std::string ratios = "run,over,under,inc_entity,inc_mention\n";
  for (const EvaluationReport &run : runs) {
    csv += CsvRow(run);
    if (!summary.empty()) summary += "\n";
    summary += FormatSummary(run);
    ratios += RunName(run) + "," + Fixed(run.breakdown.over_ratio, 4) + "," +
              Fixed(run.breakdown.under_ratio, 4) + "," +
              Fixed(run.breakdown.incorrect_entity_ratio, 4) + "," +
              Fixed(run.breakdown.incorrect_mention_ratio, 4) + "\n";
  }
  std::vector<std::filesystem::path> written = {
      out_dir / kCsvFile, out_dir / kSummaryFile, out_dir / kRatioFile};
  WriteFile(written[0], csv);
  WriteFile(written[1], summary);
  WriteFile(written[2], ratios);
  if (!deltas.empty()) {
    std::string body = "run,precision_delta_pp,recall_delta_pp\n";
    for (const auto &[name, delta] : deltas) {
      body += name + "," + Signed(delta.precision_pp) + "," + Signed(delta.recall_pp) +
              "\n";
    }
    written.push_back(out_dir / kDeltaFile);
    WriteFile(written.back(), body);
  }
  return written;
}

}  // namespace

EvaluationReport RunBenchmark(const Corpus &corpus, const Annotator &annotator,
                              const RunConfig &config,
                              const KbVocabulary &vocabulary) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = corpus.documents.size();
  std::vector<DocumentOutcome> outcomes(count);
  auto work = [&](std::size_t i) {
    outcomes[i] = AnnotateOne(annotator, corpus.documents[i]);
  };
  if (config.parallel > 1) {
    ParallelFor(count, work, config.parallel);
  } else {
    for (std::size_t i = 0; i < count; ++i) work(i);
  }

  EvaluationReport report;
  report.dataset = corpus.name;
  report.run_label = config.run_label;
  report.linker = std::string(LinkerKindName(config.linker.kind));
  report.policy = std::string(PolicyModeName(config.policy));
  report.seed = config.seed;
  report.per_document.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const AnnotatedDocument &doc = corpus.documents[i];
    DocumentSummary summary;
    summary.doc_id = doc.doc_id;
    summary.counts = CountsOf(MatchAnnotations(doc.gold, outcomes[i].predicted, vocabulary));
    summary.protocol_violation = outcomes[i].violation;
    summary.violation = outcomes[i].diagnostic;
    report.per_document.push_back(std::move(summary));
  }
  Summarize(&report);
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

EvaluationReport ScorePredictions(const Corpus &gold,
                                  const std::vector<AnnotatedDocument> &predictions,
                                  const KbVocabulary &vocabulary) {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, const AnnotatedDocument *> by_id;
  for (const AnnotatedDocument &doc : predictions) by_id[doc.doc_id] = &doc;

  std::vector<AnnotatedDocument> scored = gold.documents;
  for (AnnotatedDocument &doc : scored) {
    auto it = by_id.find(doc.doc_id);
    doc.predicted = it == by_id.end() ? std::vector<Annotation>{}
                                      : NormalizeAnnotations(it->second->predicted,
                                                             Utf8Length(doc.text));
  }
  const std::vector<MatchResult> results = MatchCorpus(scored, vocabulary);

  EvaluationReport report;
  report.dataset = gold.name;
  report.linker = "offline";
  report.policy = "none";
  for (std::size_t i = 0; i < scored.size(); ++i) {
    report.per_document.push_back({scored[i].doc_id, CountsOf(results[i]), false, ""});
  }
  Summarize(&report);
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<AnnotatedDocument> LoadPredictions(std::istream &input) {
  std::string content((std::istreambuf_iterator<char>(input)),
                      std::istreambuf_iterator<char>());
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content.compare(first, 10, "-DOCSTART-") == 0) {
    std::vector<AnnotatedDocument> docs = ParseConllString(content).documents;
    for (AnnotatedDocument &doc : docs) doc.predicted = std::move(doc.gold);
    return docs;
  }
  std::vector<AnnotatedDocument> docs;
  std::istringstream lines(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object() || !row.contains("doc_id") ||
        !row["doc_id"].is_string()) {
      throw Error(ErrorCode::kMalformedLine,
                  "predictions line " + std::to_string(line_no) +
                      ": expected {\"doc_id\": ..., \"annotations\": [...]}");
    }
    AnnotateResponse response;
    try {
      response = ParseResponse(line);
    } catch (const Error &e) {
      throw Error(ErrorCode::kMalformedLine,
                  "predictions line " + std::to_string(line_no) + ": " + e.what());
    }
    AnnotatedDocument doc;
    doc.doc_id = row["doc_id"].get<std::string>();
    for (const WireAnnotation &a : response.annotations) {
      if (a.begin < 0 || a.end < 0) {
        throw Error(ErrorCode::kInvalidSpan,
                    "negative offset in predictions line " + std::to_string(line_no));
      }
      doc.predicted.push_back({{static_cast<std::size_t>(a.begin),
                                static_cast<std::size_t>(a.end)},
                               EntityId(a.entity)});
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<AnnotatedDocument> LoadPredictionsFile(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  return LoadPredictions(file);
}

Resources LoadResources(const RunConfig &config) {
  Resources resources;
  if (!config.dict_path.empty()) {
    resources.dictionary =
        std::make_shared<const AliasDictionary>(LoadAliasDictionaryFile(config.dict_path));
  }
  if (!config.vocab_path.empty()) {
    resources.vocabulary = LoadVocabularyFile(config.vocab_path);
  }
  if (!config.embeddings_path.empty()) {
    resources.embeddings =
        std::make_shared<const EmbeddingTable>(LoadEmbeddingsFile(config.embeddings_path));
  }
  return resources;
}

CandidatePolicy MakePolicy(PolicyMode mode, const Resources &resources) {
  switch (mode) {
    case PolicyMode::kDictionary:
      if (!resources.dictionary) {
        throw Error(ErrorCode::kInvalidPolicy, "dict policy needs --dict-path");
      }
      return CandidatePolicy::Dictionary(resources.dictionary);
    case PolicyMode::kFullVocabulary:
      if (!resources.vocabulary.empty()) {
        return CandidatePolicy::FullVocabulary(resources.vocabulary);
      }
      if (resources.dictionary) {
        return CandidatePolicy::FullVocabulary(resources.dictionary->vocabulary());
      }
      throw Error(ErrorCode::kInvalidPolicy,
                  "full policy needs --vocab-path or --dict-path");
    case PolicyMode::kEmpty:
      return CandidatePolicy::Empty();
  }
  throw Error(ErrorCode::kInvalidPolicy, "unknown policy");
}

KbVocabulary MakeKbVocabulary(const Resources &resources) {
  return resources.vocabulary.empty() ? KbVocabulary::Open()
                                      : KbVocabulary::Of(resources.vocabulary);
}

std::shared_ptr<const LinkerPipeline> MakePipeline(const RunConfig &config,
                                                   PolicyMode mode,
                                                   const Resources &resources) {
  return std::make_shared<const LinkerPipeline>(
      config.linker, MakePolicy(mode, resources), resources.embeddings);
}

std::vector<EvaluationReport> RunAblation(const Corpus &corpus,
                                          const RunConfig &config,
                                          const Resources &resources) {
  const KbVocabulary vocabulary = MakeKbVocabulary(resources);
  std::vector<EvaluationReport> reports;
  for (PolicyMode mode :
       {PolicyMode::kDictionary, PolicyMode::kFullVocabulary, PolicyMode::kEmpty}) {
    RunConfig run = config;
    run.policy = mode;
    run.run_label = std::string(PolicyModeName(mode));
    const InProcessAnnotator annotator(MakePipeline(run, mode, resources));
    reports.push_back(RunBenchmark(corpus, annotator, run, vocabulary));
  }
  return reports;
}

std::string CsvHeader() {
  return "dataset,precision,recall,f1,over,under,inc_entity,inc_mention\n";
}

std::string CsvRow(const EvaluationReport &report) {
  return RunName(report) + "," + Fixed(report.micro_precision, 4) + "," +
         Fixed(report.micro_recall, 4) + "," + Fixed(report.micro_f1, 4) + "," +
         Fixed(report.breakdown.over_ratio, 4) + "," +
         Fixed(report.breakdown.under_ratio, 4) + "," +
         Fixed(report.breakdown.incorrect_entity_ratio, 4) + "," +
         Fixed(report.breakdown.incorrect_mention_ratio, 4) + "\n";
}

std::string FormatSummary(const EvaluationReport &report) {
  std::ostringstream out;
  const MatchCounts &t = report.totals;
  out << "[run " << RunName(report) << "]\n"
      << "dataset = " << report.dataset << "\n"
      << "run_label = " << report.run_label << "\n"
      << "linker = " << report.linker << "\n"
      << "policy = " << report.policy << "\n"
      << "seed = " << report.seed << "\n"
      << "documents = " << report.per_document.size() << "\n"
      << "micro_precision = " << Fixed(report.micro_precision, 6) << "\n"
      << "micro_recall = " << Fixed(report.micro_recall, 6) << "\n"
      << "micro_f1 = " << Fixed(report.micro_f1, 6) << "\n"
      << "gold_count = " << t.gold_count << "\n"
      << "pred_count = " << t.pred_count << "\n"
      << "true_positives = " << t.true_positives << "\n"
      << "incorrect_entity = " << t.incorrect_entity << "\n"
      << "incorrect_mention = " << t.incorrect_mention << "\n"
      << "over_generated = " << t.over_generated << "\n"
      << "under_generated = " << t.under_generated << "\n"
      << "over_ratio = " << Fixed(report.breakdown.over_ratio, 6) << "\n"
      << "under_ratio = " << Fixed(report.breakdown.under_ratio, 6) << "\n"
      << "incorrect_entity_ratio = "
      << Fixed(report.breakdown.incorrect_entity_ratio, 6) << "\n"
      << "incorrect_mention_ratio = "
      << Fixed(report.breakdown.incorrect_mention_ratio, 6) << "\n";
  std::size_t violations = 0;
  for (const DocumentSummary &doc : report.per_document) {
    violations += doc.protocol_violation ? 1 : 0;
  }
  out << "protocol_violations = " << violations << "\n"
      << "runtime_ms = " << Fixed(report.runtime_ms, 3) << "\n";
  for (const DocumentSummary &doc : report.per_document) {
    const MatchCounts &c = doc.counts;
    out << "doc " << doc.doc_id << " = tp:" << c.true_positives
        << " inc_entity:" << c.incorrect_entity
        << " inc_mention:" << c.incorrect_mention << " over:" << c.over_generated
        << " under:" << c.under_generated << " gold:" << c.gold_count
        << " pred:" << c.pred_count;
    if (doc.protocol_violation) out << " violation:" << doc.violation;
    out << "\n";
  }
  return out.str();
}

std::vector<std::filesystem::path> EmitReport(
    const EvaluationReport &report,
    const std::optional<std::pair<EvaluationReport, EvaluationReport>> &ablation_pair,
    const std::filesystem::path &out_dir) {
  std::vector<std::pair<std::string, PrDelta>> deltas;
  if (ablation_pair) {
    const auto &[baseline, ablated] = *ablation_pair;
    deltas.emplace_back(RunName(ablated), ComputePrDelta(baseline, ablated));
  }
  return WriteRuns({report}, deltas, out_dir);
}

std::vector<std::filesystem::path> EmitAblation(
    const std::vector<EvaluationReport> &runs, const std::filesystem::path &out_dir) {
  std::vector<std::pair<std::string, PrDelta>> deltas;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    deltas.emplace_back(RunName(runs[i]), ComputePrDelta(runs[0], runs[i]));
  }
  return WriteRuns(runs, deltas, out_dir);
}

}  // namespace linkeval

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

// linkeval: entity-linking evaluation harness.
//
//   linkeval serve  --dict-path D [--policy dict|full|empty] [--endpoint H:P]
//   linkeval run    --corpus C [--endpoint H:P | --dict-path D ...] --out DIR
//   linkeval ablate --corpus C --dict-path D [--vocab-path V] --out DIR
//   linkeval score  --corpus GOLD --pred PRED [--vocab-path V] --out DIR

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "linkeval/conll.h"
#include "linkeval/error.h"
#include "linkeval/runner.h"
#include "linkeval/server.h"

namespace {

using linkeval::Error;
using linkeval::ErrorCode;
using linkeval::RunConfig;

constexpr int kUsageExit = 2;

struct Options {
  RunConfig config;
  std::string policy = "dict";
  std::string linker = "prior_argmax";
  std::string layout = "conll";
  std::string pred_path;
  std::string tokenizer = "conll";
};

void AddResourceFlags(CLI::App *cmd, Options *o) {
  cmd->add_option("--policy", o->policy, "Candidate regime")
      ->check(CLI::IsMember({"dict", "full", "empty"}));
  cmd->add_option("--dict-path", o->config.dict_path,
                  "Alias dictionary TSV (mention, entity, prior)");
  cmd->add_option("--vocab-path", o->config.vocab_path,
                  "Entity vocabulary, one id per line");
  cmd->add_option("--embeddings-path", o->config.embeddings_path,
                  "Embedding table for the coherence linker");
  cmd->add_option("--linker", o->linker, "Reference linker")
      ->check(CLI::IsMember({"prior_argmax", "coherence", "token_merge"}));
  cmd->add_option("--n", o->config.linker.max_span_tokens,
                  "Maximum mention length in tokens")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-tokens", o->config.linker.max_segment_tokens,
                  "Maximum tokens per document segment")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--top-p", o->config.linker.top_p,
                  "Candidates kept per span by the coherence linker")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--top-k", o->config.linker.top_k,
                  "Per-token predictions for token_merge")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--beam-width", o->config.beam_width,
                  "Beam width for constrained decoding")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tokenizer", o->tokenizer, "Tokenization adapter")
      ->check(CLI::IsMember({"conll", "whitespace"}));
}

void AddRunFlags(CLI::App *cmd, Options *o, bool corpus_required) {
  auto *corpus = cmd->add_option("--corpus", o->config.corpus_path, "CoNLL corpus");
  if (corpus_required) corpus->required();
  cmd->add_option("--layout", o->layout, "Corpus column layout")
      ->check(CLI::IsMember({"conll", "aida"}));
  cmd->add_option("--out", o->config.out_dir, "Output directory");
  cmd->add_option("--seed", o->config.seed, "Seed recorded in the report");
  cmd->add_option("--parallel", o->config.parallel, "Documents in flight")
      ->check(CLI::PositiveNumber);
}

linkeval::PolicyMode ParsePolicy(const std::string &name) {
  if (name == "full") return linkeval::PolicyMode::kFullVocabulary;
  if (name == "empty") return linkeval::PolicyMode::kEmpty;
  return linkeval::PolicyMode::kDictionary;
}

void Finalize(Options *o) {
  o->config.policy = ParsePolicy(o->policy);
  o->config.linker.kind = linkeval::ParseLinkerKind(o->linker);
  o->config.linker.tokenizer = o->tokenizer == "whitespace"
                                   ? linkeval::TokenizerMode::kWhitespace
                                   : linkeval::TokenizerMode::kConll;
}

linkeval::ConllLayout Layout(const Options &o) {
  return o.layout == "aida" ? linkeval::ConllLayout::Aida() : linkeval::ConllLayout{};
}

void PrintRun(const linkeval::EvaluationReport &report) {
  std::printf("%s%s%s  P=%.4f R=%.4f F1=%.4f  (%zu docs, %.1f ms)\n",
              report.dataset.c_str(), report.run_label.empty() ? "" : ":",
              report.run_label.c_str(), report.micro_precision, report.micro_recall,
              report.micro_f1, report.per_document.size(), report.runtime_ms);
}

void PrintWritten(const std::vector<std::filesystem::path> &paths) {
  for (const auto &path : paths) std::printf("wrote %s\n", path.string().c_str());
}

int Serve(Options &o, bool endpoint_given) {
  Finalize(&o);
  if (!endpoint_given) o.config.endpoint = "127.0.0.1:8080";
  const linkeval::HttpAnnotator address(o.config.endpoint);  // parses host:port
  const linkeval::Resources resources = linkeval::LoadResources(o.config);
  linkeval::AnnotationServer server(
      linkeval::MakePipeline(o.config, o.config.policy, resources));
  const int port = server.Bind(address.host(), address.port());
  std::printf("serving on http://%s:%d (POST /annotate, GET /health)\n",
              address.host().c_str(), port);
  std::fflush(stdout);
  server.Listen();
  return 0;
}

int Run(Options &o, bool endpoint_given) {
  Finalize(&o);
  const linkeval::Corpus corpus = linkeval::LoadConllFile(o.config.corpus_path, Layout(o));
  const linkeval::Resources resources = linkeval::LoadResources(o.config);
  const linkeval::KbVocabulary vocabulary = linkeval::MakeKbVocabulary(resources);
  linkeval::EvaluationReport report;
  if (endpoint_given) {
    const linkeval::HttpAnnotator annotator(o.config.endpoint);
    report = linkeval::RunBenchmark(corpus, annotator, o.config, vocabulary);
  } else {
    const linkeval::InProcessAnnotator annotator(
        linkeval::MakePipeline(o.config, o.config.policy, resources));
    report = linkeval::RunBenchmark(corpus, annotator, o.config, vocabulary);
  }
  PrintRun(report);
  PrintWritten(linkeval::EmitReport(report, std::nullopt, o.config.out_dir));
  return 0;
}

int Ablate(Options &o) {
  Finalize(&o);
  const linkeval::Corpus corpus = linkeval::LoadConllFile(o.config.corpus_path, Layout(o));
  const linkeval::Resources resources = linkeval::LoadResources(o.config);
  const auto runs = linkeval::RunAblation(corpus, o.config, resources);
  for (const auto &run : runs) PrintRun(run);
  PrintWritten(linkeval::EmitAblation(runs, o.config.out_dir));
  return 0;
}

int Score(Options &o) {
  Finalize(&o);
  const linkeval::Corpus gold = linkeval::LoadConllFile(o.config.corpus_path, Layout(o));
  const auto predictions = linkeval::LoadPredictionsFile(o.pred_path);
  const linkeval::Resources resources = linkeval::LoadResources(o.config);
  const auto report =
      linkeval::ScorePredictions(gold, predictions, linkeval::MakeKbVocabulary(resources));
  PrintRun(report);
  PrintWritten(linkeval::EmitReport(report, std::nullopt, o.config.out_dir));
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Entity-linking evaluation harness"};
  app.require_subcommand(1);
  Options o;

  CLI::App *serve = app.add_subcommand("serve", "Run the annotation service");
  AddResourceFlags(serve, &o);
  auto *serve_endpoint =
      serve->add_option("--endpoint", o.config.endpoint, "Bind address host:port");

  CLI::App *run = app.add_subcommand("run", "Evaluate a linker over a corpus");
  AddResourceFlags(run, &o);
  AddRunFlags(run, &o, true);
  auto *run_endpoint = run->add_option(
      "--endpoint", o.config.endpoint, "Remote annotator host:port (default: in-process)");

  CLI::App *ablate = app.add_subcommand(
      "ablate", "Compare dictionary, full-vocabulary and empty candidate regimes");
  AddResourceFlags(ablate, &o);
  AddRunFlags(ablate, &o, true);

  CLI::App *score = app.add_subcommand("score", "Score a prediction file offline");
  AddRunFlags(score, &o, true);
  score->add_option("--pred", o.pred_path, "Predictions (CoNLL or JSON lines)")
      ->required();
  score->add_option("--vocab-path", o.config.vocab_path, "In-KB entity vocabulary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsageExit;
  }

  try {
    if (*serve) return Serve(o, serve_endpoint->count() > 0);
    if (*run) return Run(o, run_endpoint->count() > 0);
    if (*ablate) return Ablate(o);
    if (*score) return Score(o);
  } catch (const Error &e) {
    std::cerr << "linkeval: " << e.what() << "\n";
    return e.code() == ErrorCode::kUsageError ? kUsageExit : 1;
  } catch (const std::exception &e) {
    std::cerr << "linkeval: " << e.what() << "\n";
    return 1;
  }
  return kUsageExit;
}

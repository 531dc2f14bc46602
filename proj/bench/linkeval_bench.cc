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

// Times the OpenMP kernels against their serial references on a synthetic
// corpus: corpus matching and per-document linking.
//
//   linkeval_bench [--docs N] [--threads T] [--reps R]

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linkeval/evaluation.h"
#include "linkeval/linkers.h"
#include "linkeval/parallel.h"
#include "linkeval/pipeline.h"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double BestMs(int reps, Fn &&fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }
  return best;
}

const char *const kWords[] = {"the", "match", "ended", "after", "a", "late", "goal",
                              "in", "front", "of", "fans", "on", "Sunday", ",", "."};

struct Synthetic {
  std::vector<linkeval::AnnotatedDocument> documents;
  std::shared_ptr<const linkeval::AliasDictionary> dictionary;
};

Synthetic MakeCorpus(std::size_t docs, unsigned seed) {
  std::mt19937 rng(seed);
  std::ostringstream tsv;
  std::vector<std::string> names;
  for (int m = 0; m < 400; ++m) {
    names.push_back("Name" + std::to_string(m));
    for (int e = 0; e < 4; ++e) {
      tsv << names.back() << "\tENT_" << m << "_" << e << "\t" << (e == 0 ? 0.4 : 0.2) << "\n";
    }
  }
  std::istringstream in(tsv.str());
  Synthetic out;
  out.dictionary =
      std::make_shared<const linkeval::AliasDictionary>(linkeval::LoadAliasDictionary(in));

  for (std::size_t d = 0; d < docs; ++d) {
    linkeval::AnnotatedDocument doc;
    doc.doc_id = "bench" + std::to_string(d);
    std::size_t offset = 0;
    for (int t = 0; t < 600; ++t) {
      std::string word;
      const bool mention = rng() % 8 == 0;
      const std::size_t m = rng() % names.size();
      word = mention ? names[m] : kWords[rng() % std::size(kWords)];
      if (!doc.text.empty()) {
        doc.text += ' ';
        ++offset;
      }
      const linkeval::Span span{offset, offset + word.size()};
      if (mention) {
        const std::string entity = "ENT_" + std::to_string(m) + "_" + std::to_string(rng() % 2);
        doc.gold.push_back({span, linkeval::EntityId(entity)});
      }
      doc.text += word;
      offset += word.size();
    }
    out.documents.push_back(std::move(doc));
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Serial versus OpenMP kernel timings"};
  std::size_t docs = 400;
  int threads = linkeval::MaxThreads();
  int reps = 3;
  app.add_option("--docs", docs, "Synthetic documents")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads")->check(CLI::PositiveNumber);
  app.add_option("--reps", reps, "Repetitions; the best time is reported")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  Synthetic corpus = MakeCorpus(docs, 99);
  const auto policy = linkeval::CandidatePolicy::Dictionary(corpus.dictionary);
  const linkeval::LinkerPipeline pipeline(linkeval::LinkerConfig{}, policy);
  std::printf("documents=%zu threads=%d openmp=%s\n", docs, threads,
              linkeval::kUseOpenMp ? "yes" : "no");

  std::vector<std::vector<linkeval::Annotation>> serial_links(docs), parallel_links(docs);
  const double link_serial = BestMs(reps, [&] {
    for (std::size_t i = 0; i < docs; ++i) {
      serial_links[i] = pipeline.Annotate(corpus.documents[i].text);
    }
  });
  const double link_parallel = BestMs(reps, [&] {
    linkeval::ParallelFor(
        docs, [&](std::size_t i) { parallel_links[i] = pipeline.Annotate(corpus.documents[i].text); },
        threads);
  });
  for (std::size_t i = 0; i < docs; ++i) corpus.documents[i].predicted = serial_links[i];

  const linkeval::KbVocabulary vocab = linkeval::KbVocabulary::Open();
  std::vector<linkeval::MatchResult> serial_match, parallel_match;
  const double match_serial =
      BestMs(reps, [&] { serial_match = linkeval::MatchCorpusSerial(corpus.documents, vocab); });
  const double match_parallel =
      BestMs(reps, [&] { parallel_match = linkeval::MatchCorpus(corpus.documents, vocab); });

  bool agree = serial_links == parallel_links && serial_match.size() == parallel_match.size();
  for (std::size_t i = 0; agree && i < serial_match.size(); ++i) {
    agree = linkeval::CountsOf(serial_match[i]) == linkeval::CountsOf(parallel_match[i]);
  }
  std::printf("%-14s %12s %12s %8s\n", "kernel", "serial_ms", "parallel_ms", "speedup");
  std::printf("%-14s %12.2f %12.2f %8.2f\n", "link", link_serial, link_parallel,
              link_serial / link_parallel);
  std::printf("%-14s %12.2f %12.2f %8.2f\n", "match", match_serial, match_parallel,
              match_serial / match_parallel);
  std::printf("results agree: %s\n", agree ? "yes" : "no");
  return agree ? 0 : 1;
}

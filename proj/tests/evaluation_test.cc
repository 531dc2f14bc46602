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

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "linkeval/error.h"
#include "oracles.h"
#include "linkeval/evaluation.h"

using namespace linkeval;

namespace {

Annotation A(std::size_t b, std::size_t e, const char *id) {
  return Annotation{Span{b, e}, EntityId(id)};
}

const KbVocabulary &Vocab5() { return testing::FiveEntityVocabulary(); }

MatchCounts Counts(const std::vector<Annotation> &g, const std::vector<Annotation> &p) {
  return CountsOf(MatchAnnotations(g, p, Vocab5()));
}

}  // namespace

TEST_CASE("MatchAnnotations examples") {
  auto r = Counts({A(0, 5, "A")}, {A(0, 5, "A")});
  CHECK(r.true_positives == 1);
  CHECK(r.incorrect_entity + r.incorrect_mention + r.over_generated + r.under_generated == 0);

  r = Counts({A(0, 5, "A")}, {A(0, 5, "B")});
  CHECK(r.incorrect_entity == 1);
  CHECK(r.under_generated == 0);
  CHECK(r.true_positives == 0);

  r = Counts({A(0, 5, "A"), A(10, 15, "B")}, {A(0, 5, "A"), A(10, 14, "B"), A(20, 25, "C")});
  CHECK(r.true_positives == 1);
  CHECK(r.incorrect_mention == 1);
  CHECK(r.over_generated == 1);
  CHECK(r.under_generated == 0);
  CHECK(r.incorrect_entity == 0);

  r = Counts({A(0, 5, "A")}, {});
  CHECK(r.under_generated == 1);

  // Out-of-KB annotations are dropped from both sides.
  r = Counts({A(0, 5, "Z"), A(6, 9, "--NME--")}, {A(0, 5, "Z")});
  CHECK(r == MatchCounts{});

  CHECK_THROWS_AS(MatchAnnotations({A(0, 5, "A"), A(3, 8, "B")}, {}, Vocab5()), Error);
}

TEST_CASE("MatchAnnotations agrees with a brute-force classifier") {
  std::mt19937 rng(20260101);
  const auto start = std::chrono::steady_clock::now();
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto gold = testing::RandomGold(rng, 10);
    const auto pred = testing::RandomPred(rng, gold, 10);
    const MatchCounts got = Counts(gold, pred);
    if (!testing::BruteForceMatch(gold, pred).Matches(got)) ++disagreements;
  }
  CHECK(disagreements == 0);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("prediction categories partition the InKB predictions") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto gold = testing::RandomGold(rng, 10);
    const auto pred = testing::RandomPred(rng, gold, 10);
    const MatchResult r = MatchAnnotations(gold, pred, Vocab5());
    std::vector<Annotation> all;
    for (const auto &[g, p] : r.true_positives) all.push_back(p);
    for (const auto *list : {&r.incorrect_entity, &r.incorrect_mention, &r.over_generated}) {
      all.insert(all.end(), list->begin(), list->end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == FilterInKb(NormalizeAnnotations(pred, 100), Vocab5()));
  }
}

TEST_CASE("symmetric sanity and permutation invariance") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    auto gold = testing::RandomGold(rng, 15);
    auto pred = testing::RandomPred(rng, gold, 15);
    const MatchCounts self = Counts(gold, gold);
    CHECK(self.true_positives == FilterInKb(gold, Vocab5()).size());
    CHECK(self.incorrect_entity + self.incorrect_mention + self.over_generated +
              self.under_generated == 0);

    const MatchCounts before = Counts(gold, pred);
    std::shuffle(gold.begin(), gold.end(), rng);
    std::shuffle(pred.begin(), pred.end(), rng);
    CHECK(Counts(gold, pred) == before);
  }
}

TEST_CASE("adding an exact match never lowers micro F1") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto gold = testing::RandomGold(rng, 12);
    auto pred = testing::RandomPred(rng, gold, 12);
    const MatchResult r = MatchAnnotations(gold, pred, Vocab5());
    if (r.under_generated.empty()) continue;
    const double before = MicroPrf(std::span(&r, 1)).f1;
    pred.push_back(r.under_generated[rng() % r.under_generated.size()]);
    const MatchResult after = MatchAnnotations(gold, pred, Vocab5());
    CHECK(MicroPrf(std::span(&after, 1)).f1 >= before - 1e-12);
  }
}

TEST_CASE("MicroPrf conventions") {
  MatchCounts c;
  c.true_positives = 3;
  c.pred_count = 5;
  c.gold_count = 4;
  Prf prf = MicroPrf(std::span(&c, 1));
  CHECK(prf.precision == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(prf.recall == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(prf.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  const MatchCounts empty;
  prf = MicroPrf(std::span(&empty, 1));
  CHECK(prf == Prf{1.0, 1.0, 1.0});

  MatchCounts miss;
  miss.pred_count = 4;
  miss.gold_count = 3;
  prf = MicroPrf(std::span(&miss, 1));
  CHECK(prf.precision == 0.0);
  CHECK(prf.f1 == 0.0);

  // Sums are corpus-wide, not averaged per document.
  MatchCounts docs[2];
  docs[0].true_positives = 1;
  docs[0].pred_count = 1;
  docs[0].gold_count = 1;
  docs[1].pred_count = 3;
  docs[1].gold_count = 1;
  CHECK(MicroPrf(std::span<const MatchCounts>(docs)).precision == 0.25);
}

TEST_CASE("ErrorRatios") {
  MatchCounts c;
  c.gold_count = 4791;
  c.over_generated = 311;
  CHECK(ErrorRatios(c).over_ratio == doctest::Approx(0.0649).epsilon(0.005));
  CHECK(std::abs(ErrorRatios(c).over_ratio - 0.0649) < 5e-5);

  MatchCounts zero;
  zero.gold_count = 10;
  CHECK(ErrorRatios(zero) == ErrorBreakdown{});

  MatchCounts each;
  each.gold_count = 2;
  each.over_generated = each.under_generated = each.incorrect_entity =
      each.incorrect_mention = 1;
  CHECK(ErrorRatios(each) == ErrorBreakdown{0.5, 0.5, 0.5, 0.5});

  try {
    ErrorRatios(MatchCounts{});
    FAIL("expected ZeroGold");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kZeroGold);
  }
}

TEST_CASE("ComputePrDelta") {
  EvaluationReport base;
  base.dataset = "testa";
  base.micro_precision = 0.5;
  base.micro_recall = 0.85;
  EvaluationReport ablated = base;
  CHECK(ComputePrDelta(base, ablated).precision_pp == 0.0);
  CHECK(ComputePrDelta(base, ablated).recall_pp == 0.0);

  ablated.micro_precision = 0.6;
  ablated.micro_recall = 0.1873;
  const PrDelta d = ComputePrDelta(base, ablated);
  CHECK(d.precision_pp == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(std::abs(d.recall_pp - -66.27) < 1e-9);

  ablated.dataset = "testb";
  try {
    ComputePrDelta(base, ablated);
    FAIL("expected DatasetMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kDatasetMismatch);
  }
}

TEST_CASE("Summarize and SameResults") {
  EvaluationReport r;
  r.dataset = "d";
  r.per_document = {{"a", {}, false, ""}, {"b", {}, false, ""}};
  r.per_document[0].counts.true_positives = 2;
  r.per_document[0].counts.gold_count = 3;
  r.per_document[0].counts.pred_count = 2;
  r.per_document[1].counts.over_generated = 1;
  r.per_document[1].counts.pred_count = 1;
  r.per_document[0].counts.under_generated = 1;
  Summarize(&r);
  CHECK(r.totals.true_positives == 2);
  CHECK(r.micro_precision == doctest::Approx(2.0 / 3.0));
  CHECK(r.micro_recall == doctest::Approx(2.0 / 3.0));
  CHECK(r.breakdown.over_ratio == doctest::Approx(1.0 / 3.0));

  EvaluationReport s = r;
  s.runtime_ms = 99;
  CHECK(SameResults(r, s));
  s.per_document[1].doc_id = "c";
  CHECK_FALSE(SameResults(r, s));

  EvaluationReport no_gold;
  no_gold.per_document = {{"x", {}, false, ""}};
  no_gold.per_document[0].counts.pred_count = 1;
  no_gold.per_document[0].counts.over_generated = 1;
  Summarize(&no_gold);
  CHECK(no_gold.breakdown == ErrorBreakdown{});
}

TEST_CASE("parallel corpus matching equals the serial reference") {
  std::mt19937 rng(31);
  std::vector<AnnotatedDocument> docs;
  for (int d = 0; d < 400; ++d) {
    AnnotatedDocument doc;
    doc.doc_id = "d" + std::to_string(d);
    doc.text = std::string(100, 'x');
    doc.gold = testing::RandomGold(rng, 20);
    doc.predicted = testing::RandomPred(rng, doc.gold, 20);
    docs.push_back(doc);
  }
  const auto parallel = MatchCorpus(docs, Vocab5());
  const auto serial = MatchCorpusSerial(docs, Vocab5());
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(CountsOf(parallel[i]) == CountsOf(serial[i]));
    CHECK(parallel[i].true_positives == serial[i].true_positives);
  }
}

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

#include "linkeval/linkers.h"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "linkeval/adapters.h"
#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

namespace {

struct SpanChoice {
  TokenWindow window;
  EntityId entity;
};

// Greedy overlap resolution: longer span, earlier start, smaller entity.
std::vector<Annotation> ResolveOverlaps(std::vector<SpanChoice> choices,
                                        std::size_t document_length) {
  std::sort(choices.begin(), choices.end(),
            [](const SpanChoice &a, const SpanChoice &b) {
              const std::size_t la = a.window.span.length();
              const std::size_t lb = b.window.span.length();
              if (la != lb) return la > lb;
              if (a.window.span.begin != b.window.span.begin) {
                return a.window.span.begin < b.window.span.begin;
              }
              return a.entity < b.entity;
            });
  std::vector<Annotation> kept;
  for (SpanChoice &choice : choices) {
    const bool clashes =
        std::any_of(kept.begin(), kept.end(), [&](const Annotation &a) {
          return a.span.Overlaps(choice.window.span);
        });
    if (!clashes) kept.push_back({choice.window.span, std::move(choice.entity)});
  }
  return NormalizeAnnotations(std::move(kept), document_length);
}

std::string WindowSurface(std::u32string_view text, const TokenWindow &window) {
  return EncodeUtf8(text.substr(window.span.begin, window.span.length()));
}

void CheckDimensions(const EmbeddingTable &embeddings,
                     const CoherenceParams &params) {
  if (params.dimension != embeddings.dimension() ||
      params.bilinear.size() != params.dimension * params.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coherence matrix is " + std::to_string(params.bilinear.size()) +
                    " entries for dimension " + std::to_string(params.dimension) +
                    ", embeddings have dimension " +
                    std::to_string(embeddings.dimension()));
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

std::vector<TokenWindow> EnumerateWindows(std::span<const TokenSpan> tokens,
                                          std::size_t n) {
  std::vector<TokenWindow> windows;
  for (std::size_t first = 0; first < tokens.size(); ++first) {
    for (std::size_t length = 1; length <= n && first + length <= tokens.size();
         ++length) {
      windows.push_back({first, length,
                         {tokens[first].span.begin,
                          tokens[first + length - 1].span.end}});
    }
  }
  return windows;
}

std::vector<Span> EnumerateSpans(std::span<const TokenSpan> tokens,
                                 std::size_t n) {
  std::vector<Span> spans;
  for (const TokenWindow &window : EnumerateWindows(tokens, n)) {
    spans.push_back(window.span);
  }
  return spans;
}

std::vector<Annotation> LinkPriorArgmax(std::u32string_view text,
                                        std::span<const TokenSpan> tokens,
                                        const CandidatePolicy &policy,
                                        std::size_t n) {
  if (policy.mode() == PolicyMode::kEmpty) return {};
  std::vector<SpanChoice> choices;
  for (const TokenWindow &window : EnumerateWindows(tokens, n)) {
    const CandidateSet set = policy.CandidatesFor(WindowSurface(text, window));
    if (set.empty()) continue;
    // Lists are sorted by descending prior with id tie-break.
    const EntityId &best = set.candidates().front().entity;
    if (best.is_none()) continue;
    choices.push_back({window, best});
  }
  return ResolveOverlaps(std::move(choices), text.size());
}

std::vector<Annotation> LinkPriorArgmax(std::string_view utf8_text,
                                        const CandidatePolicy &policy,
                                        std::size_t n) {
  const std::u32string text = DecodeUtf8(utf8_text);
  const std::vector<TokenSpan> tokens = Tokenize(std::u32string_view(text));
  return LinkPriorArgmax(text, tokens, policy, n);
}

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding dimension must be positive");
  }
}

void EmbeddingTable::Add(std::string key, std::vector<double> vector) {
  if (vector.size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector for '" + key + "' has " + std::to_string(vector.size()) +
                    " components, expected " + std::to_string(dimension_));
  }
  vectors_[std::move(key)] = std::move(vector);
}

const std::vector<double> *EmbeddingTable::Find(std::string_view key) const {
  auto it = vectors_.find(std::string(key));
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingTable LoadEmbeddings(std::istream &input) {
  std::vector<std::pair<std::string, std::vector<double>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected key<TAB>vector");
    }
    std::vector<double> values;
    std::istringstream stream(line.substr(tab + 1));
    std::string field;
    while (stream >> field) {
      char *end = nullptr;
      errno = 0;
      const double value = std::strtod(field.c_str(), &end);
      if (end != field.c_str() + field.size() || errno == ERANGE) {
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": bad component '" +
                        field + "'");
      }
      values.push_back(value);
    }
    rows.emplace_back(line.substr(0, tab), std::move(values));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kMalformedLine, "embedding file has no vectors");
  }
  EmbeddingTable table(rows.front().second.size());
  for (auto &[key, values] : rows) table.Add(std::move(key), std::move(values));
  return table;
}

EmbeddingTable LoadEmbeddingsFile(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  return LoadEmbeddings(file);
}

CoherenceParams CoherenceParams::Identity(std::size_t dimension) {
  CoherenceParams params;
  params.dimension = dimension;
  params.bilinear.assign(dimension * dimension, 0.0);
  for (std::size_t i = 0; i < dimension; ++i) {
    params.bilinear[i * dimension + i] = 1.0;
  }
  return params;
}

CoherenceParams CoherenceParams::Zero(std::size_t dimension) {
  CoherenceParams params;
  params.dimension = dimension;
  params.bilinear.assign(dimension * dimension, 0.0);
  return params;
}

double CoherenceScore(const EntityId & /*entity*/,
                      std::span<const std::string> context_words,
                      const EmbeddingTable &embeddings,
                      const CoherenceParams &params) {
  CheckDimensions(embeddings, params);
  const std::size_t d = params.dimension;
  double total = 0.0;
  for (const std::string &word : context_words) {
    const std::vector<double> *x = embeddings.Find(word);
    if (x == nullptr) continue;
    auto weight = params.word_weight.find(word);
    if (weight == params.word_weight.end() || weight->second == 0.0) continue;
    double quadratic = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      const std::span<const double> row(params.bilinear.data() + r * d, d);
      quadratic += (*x)[r] * Dot(row, *x);
    }
    total += weight->second * quadratic;
  }
  return total;
}

std::vector<Annotation> LinkCoherenceRerank(
    std::u32string_view text, std::span<const TokenSpan> tokens,
    const CandidatePolicy &policy, const EmbeddingTable &embeddings,
    const CoherenceParams &params, std::size_t top_p, std::size_t n,
    RerankStats *stats) {
  CheckDimensions(embeddings, params);
  if (policy.mode() == PolicyMode::kEmpty) return {};
  const std::size_t d = embeddings.dimension();
  std::vector<SpanChoice> choices;
  std::vector<double> mention(d);
  std::vector<std::string> context;

  for (const TokenWindow &window : EnumerateWindows(tokens, n)) {
    const CandidateSet set = policy.CandidatesFor(WindowSurface(text, window));
    if (set.empty()) continue;
    const std::span<const Candidate> pool =
        set.candidates().first(std::min(top_p, set.size()));
    if (stats != nullptr) stats->scored_per_span.push_back(pool.size());

    std::fill(mention.begin(), mention.end(), 0.0);
    std::size_t contributing = 0;
    for (std::size_t t = window.first; t < window.first + window.length; ++t) {
      if (const std::vector<double> *x = embeddings.Find(tokens[t].surface)) {
        for (std::size_t i = 0; i < d; ++i) mention[i] += (*x)[i];
        ++contributing;
      }
    }
    if (contributing > 0) {
      for (double &v : mention) v /= static_cast<double>(contributing);
    }

    context.clear();
    const std::size_t left =
        window.first > params.context_window ? window.first - params.context_window : 0;
    const std::size_t right = std::min(
        tokens.size(), window.first + window.length + params.context_window);
    for (std::size_t t = left; t < window.first; ++t) {
      context.push_back(tokens[t].surface);
    }
    for (std::size_t t = window.first + window.length; t < right; ++t) {
      context.push_back(tokens[t].surface);
    }

    const Candidate *best = nullptr;
    double best_score = 0.0;
    for (const Candidate &candidate : pool) {
      double score = candidate.prior +
                     CoherenceScore(candidate.entity, context, embeddings, params);
      if (const std::vector<double> *e = embeddings.Find(candidate.entity.id())) {
        score += Dot(mention, *e);
      }
      if (best == nullptr || score > best_score ||
          (score == best_score && candidate.entity < best->entity)) {
        best = &candidate;
        best_score = score;
      }
    }
    if (best->entity.is_none()) continue;
    choices.push_back({window, best->entity});
  }
  return ResolveOverlaps(std::move(choices), text.size());
}

std::vector<Annotation> LinkCoherenceRerank(
    std::string_view utf8_text, const CandidatePolicy &policy,
    const EmbeddingTable &embeddings, const CoherenceParams &params,
    std::size_t top_p, std::size_t n, RerankStats *stats) {
  const std::u32string text = DecodeUtf8(utf8_text);
  const std::vector<TokenSpan> tokens = Tokenize(std::u32string_view(text));
  return LinkCoherenceRerank(text, tokens, policy, embeddings, params, top_p, n,
                             stats);
}

EntityId ConstrainedBeamDecode(const SymbolScorer &score_next,
                               const EntityTrie &trie, std::size_t beam_width) {
  if (trie.empty()) throw Error(ErrorCode::kEmptyTrie, "no entities to decode");
  if (beam_width == 0) beam_width = 1;

  struct Hypothesis {
    std::size_t node;
    std::u32string sequence;  // ends with kEnd once complete
    double score;
  };
  auto better = [](const Hypothesis &a, const Hypothesis &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.sequence < b.sequence;
  };

  std::vector<Hypothesis> beam{{EntityTrie::kRoot, {}, 0.0}};
  std::vector<Hypothesis> finished;
  while (!beam.empty()) {
    std::vector<Hypothesis> expansions;
    for (const Hypothesis &h : beam) {
      for (char32_t symbol : trie.NextSymbolsAt(h.node)) {
        Hypothesis next{symbol == EntityTrie::kEnd ? h.node : trie.Child(h.node, symbol),
                        h.sequence + symbol,
                        h.score + score_next(h.sequence, symbol)};
        expansions.push_back(std::move(next));
      }
    }
    const std::size_t keep = std::min(beam_width, expansions.size());
    std::partial_sort(expansions.begin(), expansions.begin() + keep,
                      expansions.end(), better);
    expansions.resize(keep);
    beam.clear();
    for (Hypothesis &h : expansions) {
      if (h.sequence.back() == EntityTrie::kEnd) {
        finished.push_back(std::move(h));
      } else {
        beam.push_back(std::move(h));
      }
    }
  }
  const Hypothesis &best = *std::min_element(finished.begin(), finished.end(), better);
  std::u32string id = best.sequence;
  id.pop_back();
  return EntityId(EncodeUtf8(id));
}

namespace {

// Candidate entities of every span covering each token, with the largest
// prior seen for that entity.
std::vector<std::map<EntityId, double>> CoveringCandidates(
    std::span<const TokenSpan> tokens, std::u32string_view text,
    const CandidatePolicy &policy, std::size_t n) {
  std::vector<std::map<EntityId, double>> covering(tokens.size());
  for (const TokenWindow &window : EnumerateWindows(tokens, n)) {
    const CandidateSet set = policy.CandidatesFor(WindowSurface(text, window));
    for (const Candidate &candidate : set.candidates()) {
      for (std::size_t t = window.first; t < window.first + window.length; ++t) {
        auto [it, inserted] = covering[t].try_emplace(candidate.entity, candidate.prior);
        if (!inserted) it->second = std::max(it->second, candidate.prior);
      }
    }
  }
  return covering;
}

}  // namespace

std::vector<Annotation> MergeTokenPredictions(
    std::span<const TokenPrediction> predictions,
    std::span<const TokenSpan> tokens, std::u32string_view text,
    const CandidatePolicy &policy, std::size_t n) {
  if (predictions.size() != tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  std::vector<std::map<EntityId, double>> covering;
  if (policy.mode() == PolicyMode::kDictionary) {
    covering = CoveringCandidates(tokens, text, policy, n);
  }
  std::unordered_set<std::string> vocabulary;
  if (policy.mode() == PolicyMode::kFullVocabulary) {
    for (const Candidate &c : policy.CandidatesFor("").candidates()) {
      vocabulary.insert(c.entity.id());
    }
  }
  auto allowed = [&](std::size_t t, const EntityId &entity) {
    switch (policy.mode()) {
      case PolicyMode::kDictionary: return covering[t].contains(entity);
      case PolicyMode::kFullVocabulary: return vocabulary.contains(entity.id());
      case PolicyMode::kEmpty: return false;
    }
    return false;
  };

  // Best surviving entity per token; nullopt means *None*.
  std::vector<std::optional<EntityId>> best(tokens.size());
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const std::pair<EntityId, double> *top = nullptr;
    for (const auto &entry : predictions[t].top_k) {
      if (!entry.first.is_none() && !allowed(t, entry.first)) continue;
      if (top == nullptr || entry.second > top->second ||
          (entry.second == top->second && entry.first < top->first)) {
        top = &entry;
      }
    }
    if (top != nullptr && !top->first.is_none()) best[t] = top->first;
  }

  std::vector<Annotation> out;
  std::size_t t = 0;
  while (t < tokens.size()) {
    if (!best[t]) {
      ++t;
      continue;
    }
    std::size_t end = t + 1;
    while (end < tokens.size() && best[end] == best[t]) ++end;
    out.push_back({{tokens[t].span.begin, tokens[end - 1].span.end}, *best[t]});
    t = end;
  }
  return NormalizeAnnotations(std::move(out), text.size());
}

std::vector<TokenPrediction> PriorTokenPredictions(
    std::span<const TokenSpan> tokens, std::u32string_view text,
    const CandidatePolicy &policy, std::size_t n, std::size_t k) {
  const auto covering = CoveringCandidates(tokens, text, policy, n);
  std::vector<TokenPrediction> predictions(tokens.size());
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    TokenPrediction &p = predictions[t];
    p.token_index = tokens[t].token_index;
    for (const auto &[entity, prior] : covering[t]) p.top_k.emplace_back(entity, prior);
    if (!covering[t].contains(EntityId::None())) {
      p.top_k.emplace_back(EntityId::None(), 0.0);
    }
    std::sort(p.top_k.begin(), p.top_k.end(), [](const auto &a, const auto &b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    const std::size_t keep = std::max<std::size_t>(k, 1);
    if (p.top_k.size() > keep) p.top_k.erase(p.top_k.begin() + keep, p.top_k.end());
  }
  return predictions;
}

}  // namespace linkeval

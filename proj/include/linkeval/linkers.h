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

#ifndef LINKEVAL_LINKERS_H_
#define LINKEVAL_LINKERS_H_

#include <cstddef>
#include <functional>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkeval/candidates.h"
#include "linkeval/core.h"

namespace linkeval {

inline constexpr std::size_t kDefaultMaxSpanTokens = 5;

// Contiguous window of tokens [first, first + length).
struct TokenWindow {
  std::size_t first = 0;
  std::size_t length = 0;
  Span span;
};

// All windows of 1..n tokens in (start, length) order.
std::vector<TokenWindow> EnumerateWindows(std::span<const TokenSpan> tokens,
                                          std::size_t n);
std::vector<Span> EnumerateSpans(std::span<const TokenSpan> tokens,
                                 std::size_t n);

// Span enumeration, candidate lookup on each span surface and argmax over the
// priors (ties to the smallest entity id). Spans without candidates or whose
// best entity is *None* are dropped. Overlaps are resolved greedily: longer
// span first, then earlier start, then smaller entity id.
std::vector<Annotation> LinkPriorArgmax(std::u32string_view text,
                                        std::span<const TokenSpan> tokens,
                                        const CandidatePolicy &policy,
                                        std::size_t n);
std::vector<Annotation> LinkPriorArgmax(std::string_view utf8_text,
                                        const CandidatePolicy &policy,
                                        std::size_t n = kDefaultMaxSpanTokens);

// Dense vectors for words and entities, keyed by surface or entity id.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  // Throws Error(kDimensionMismatch) if the vector has the wrong size.
  void Add(std::string key, std::vector<double> vector);
  const std::vector<double> *Find(std::string_view key) const;
  std::size_t size() const { return vectors_.size(); }

 private:
  std::size_t dimension_;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// "key<TAB>v1 v2 ... vd" per line. The dimension is taken from the first
// line; later lines must agree.
EmbeddingTable LoadEmbeddings(std::istream &input);
EmbeddingTable LoadEmbeddingsFile(const std::string &path);

struct CoherenceParams {
  std::size_t dimension = 0;
  std::vector<double> bilinear;  // dimension x dimension, row-major
  std::unordered_map<std::string, double> word_weight;  // missing words weigh 0
  std::size_t context_window = 25;  // tokens on each side of the mention

  static CoherenceParams Identity(std::size_t dimension);
  static CoherenceParams Zero(std::size_t dimension);
};

// Local context coherence: sum over context words w with an embedding of
// weight(w) * x_w^T B x_w. The formula has no entity term, so the entity
// argument does not change the value.
double CoherenceScore(const EntityId &entity,
                      std::span<const std::string> context_words,
                      const EmbeddingTable &embeddings,
                      const CoherenceParams &params);

struct RerankStats {
  std::vector<std::size_t> scored_per_span;  // one entry per span looked up
};

// Like LinkPriorArgmax, but each span keeps only its top_p highest-prior
// candidates, which are re-scored by
//   prior + <mean in-span word vector, entity vector> + coherence.
std::vector<Annotation> LinkCoherenceRerank(
    std::u32string_view text, std::span<const TokenSpan> tokens,
    const CandidatePolicy &policy, const EmbeddingTable &embeddings,
    const CoherenceParams &params, std::size_t top_p, std::size_t n,
    RerankStats *stats = nullptr);
std::vector<Annotation> LinkCoherenceRerank(
    std::string_view utf8_text, const CandidatePolicy &policy,
    const EmbeddingTable &embeddings, const CoherenceParams &params,
    std::size_t top_p, std::size_t n = kDefaultMaxSpanTokens,
    RerankStats *stats = nullptr);

// Score of appending `next` (a character or EntityTrie::kEnd) to `prefix`.
using SymbolScorer =
    std::function<double(std::u32string_view prefix, char32_t next)>;

// Beam search over identifier characters, restricted at every step to the
// trie's valid continuations. Each step keeps the beam_width best
// expansions by cumulative score (ties to the smaller sequence, kEnd
// ordering after every character); expansions ending in kEnd are complete.
// Returns the best complete sequence. Throws Error(kEmptyTrie).
EntityId ConstrainedBeamDecode(const SymbolScorer &score_next,
                               const EntityTrie &trie, std::size_t beam_width);

struct TokenPrediction {
  std::size_t token_index = 0;
  std::vector<std::pair<EntityId, double>> top_k;  // descending score
};

// Per-token top-k predictions merged into spans. Under a dictionary policy an
// entity survives for a token only if it is a candidate of some span of up to
// n tokens covering that token; the full-vocabulary policy keeps vocabulary
// entities; the empty policy keeps nothing. Maximal runs of adjacent tokens
// sharing a non-None best entity become one annotation.
std::vector<Annotation> MergeTokenPredictions(
    std::span<const TokenPrediction> predictions,
    std::span<const TokenSpan> tokens, std::u32string_view text,
    const CandidatePolicy &policy, std::size_t n = kDefaultMaxSpanTokens);

// Stand-in for a per-token classifier: every token scores each candidate of
// its covering spans by the largest prior seen, plus *None* at 0.
std::vector<TokenPrediction> PriorTokenPredictions(
    std::span<const TokenSpan> tokens, std::u32string_view text,
    const CandidatePolicy &policy, std::size_t n, std::size_t k);

}  // namespace linkeval

#endif  // LINKEVAL_LINKERS_H_

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

#ifndef LINKEVAL_PIPELINE_H_
#define LINKEVAL_PIPELINE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "linkeval/candidates.h"
#include "linkeval/core.h"
#include "linkeval/linkers.h"
#include "linkeval/protocol.h"

namespace linkeval {

enum class LinkerKind { kPriorArgmax, kCoherence, kTokenMerge };

std::string_view LinkerKindName(LinkerKind kind);
// Accepts "prior_argmax", "coherence", "token_merge".
LinkerKind ParseLinkerKind(std::string_view name);

enum class TokenizerMode {
  kConll,       // the tokenization adapter
  kWhitespace,  // adapter removed: raw whitespace splitting
};

struct LinkerConfig {
  LinkerKind kind = LinkerKind::kPriorArgmax;
  std::size_t max_span_tokens = kDefaultMaxSpanTokens;
  std::size_t max_segment_tokens = 512;
  std::size_t top_p = 30;
  std::size_t top_k = 5;  // per-token predictions for token_merge
  TokenizerMode tokenizer = TokenizerMode::kConll;
};

// A reference linker wrapped in the input adapters: the document is split
// into segments, each segment is tokenized and linked on its own, and the
// segment annotations are mapped back to document offsets. Immutable once
// built; Annotate may be called from many threads.
class LinkerPipeline {
 public:
  LinkerPipeline(LinkerConfig config, CandidatePolicy policy,
                 std::shared_ptr<const EmbeddingTable> embeddings = nullptr,
                 CoherenceParams coherence = {});

  std::vector<Annotation> Annotate(std::string_view utf8_text) const;

  const LinkerConfig &config() const { return config_; }
  const CandidatePolicy &policy() const { return policy_; }
  std::string Describe() const;

 private:
  std::vector<Annotation> LinkSegment(std::u32string_view text) const;

  LinkerConfig config_;
  CandidatePolicy policy_;
  std::shared_ptr<const EmbeddingTable> embeddings_;
  CoherenceParams coherence_;
};

// A black-box system under evaluation.
class Annotator {
 public:
  virtual ~Annotator() = default;
  // Throws Error(kAnnotatorUnreachable) when the system cannot be reached and
  // Error(kProtocolViolation) when it answers with an unusable payload.
  virtual AnnotateResponse Annotate(const AnnotateRequest &request) const = 0;
  virtual std::string Describe() const = 0;
};

class InProcessAnnotator : public Annotator {
 public:
  explicit InProcessAnnotator(std::shared_ptr<const LinkerPipeline> pipeline)
      : pipeline_(std::move(pipeline)) {}

  AnnotateResponse Annotate(const AnnotateRequest &request) const override;
  std::string Describe() const override { return pipeline_->Describe(); }

 private:
  std::shared_ptr<const LinkerPipeline> pipeline_;
};

// Talks to an annotation service over HTTP (POST /annotate).
class HttpAnnotator : public Annotator {
 public:
  // endpoint is "host:port" or "http://host:port".
  explicit HttpAnnotator(std::string endpoint, int timeout_seconds = 30);

  AnnotateResponse Annotate(const AnnotateRequest &request) const override;
  std::string Describe() const override;

  const std::string &host() const { return host_; }
  int port() const { return port_; }

 private:
  std::string host_;
  int port_ = 0;
  int timeout_seconds_;
};

}  // namespace linkeval

#endif  // LINKEVAL_PIPELINE_H_

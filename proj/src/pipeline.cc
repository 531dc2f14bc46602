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

#include "linkeval/pipeline.h"

#include <httplib.h>

#include "linkeval/adapters.h"
#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

std::string_view LinkerKindName(LinkerKind kind) {
  switch (kind) {
    case LinkerKind::kPriorArgmax: return "prior_argmax";
    case LinkerKind::kCoherence: return "coherence";
    case LinkerKind::kTokenMerge: return "token_merge";
  }
  return "unknown";
}

LinkerKind ParseLinkerKind(std::string_view name) {
  if (name == "prior_argmax") return LinkerKind::kPriorArgmax;
  if (name == "coherence") return LinkerKind::kCoherence;
  if (name == "token_merge") return LinkerKind::kTokenMerge;
  throw Error(ErrorCode::kUsageError, "unknown linker '" + std::string(name) + "'");
}

LinkerPipeline::LinkerPipeline(LinkerConfig config, CandidatePolicy policy,
                               std::shared_ptr<const EmbeddingTable> embeddings,
                               CoherenceParams coherence)
    : config_(config),
      policy_(std::move(policy)),
      embeddings_(std::move(embeddings)),
      coherence_(std::move(coherence)) {
  if (config_.kind == LinkerKind::kCoherence) {
    if (!embeddings_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "coherence linker needs an embedding table");
    }
    if (coherence_.dimension == 0) {
      coherence_ = CoherenceParams::Zero(embeddings_->dimension());
    }
    if (coherence_.dimension != embeddings_->dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "coherence parameters do not match the embedding dimension");
    }
  }
}

std::string LinkerPipeline::Describe() const {
  return std::string(LinkerKindName(config_.kind)) + "/" +
         std::string(PolicyModeName(policy_.mode()));
}

std::vector<Annotation> LinkerPipeline::LinkSegment(std::u32string_view text) const {
  const std::vector<TokenSpan> tokens = config_.tokenizer == TokenizerMode::kConll
                                            ? Tokenize(text)
                                            : WhitespaceTokenize(text);
  switch (config_.kind) {
    case LinkerKind::kPriorArgmax:
      return LinkPriorArgmax(text, tokens, policy_, config_.max_span_tokens);
    case LinkerKind::kCoherence:
      return LinkCoherenceRerank(text, tokens, policy_, *embeddings_, coherence_,
                                 config_.top_p, config_.max_span_tokens);
    case LinkerKind::kTokenMerge: {
      const auto predictions = PriorTokenPredictions(
          tokens, text, policy_, config_.max_span_tokens, config_.top_k);
      return MergeTokenPredictions(predictions, tokens, text, policy_,
                                   config_.max_span_tokens);
    }
  }
  return {};
}

std::vector<Annotation> LinkerPipeline::Annotate(std::string_view utf8_text) const {
  const std::vector<Segment> segments =
      SplitDocument(utf8_text, config_.max_segment_tokens);
  std::vector<std::vector<Annotation>> per_segment;
  per_segment.reserve(segments.size());
  std::size_t length = 0;
  for (const Segment &segment : segments) {
    per_segment.push_back(LinkSegment(DecodeUtf8(segment.text)));
    length = segment.char_offset + segment.char_length;
  }
  return MergeSegmentAnnotations(segments, per_segment, length);
}

AnnotateResponse InProcessAnnotator::Annotate(const AnnotateRequest &request) const {
  return ToResponse(pipeline_->Annotate(request.text));
}

HttpAnnotator::HttpAnnotator(std::string endpoint, int timeout_seconds)
    : timeout_seconds_(timeout_seconds) {
  constexpr std::string_view kScheme = "http://";
  if (endpoint.rfind(kScheme, 0) == 0) endpoint.erase(0, kScheme.size());
  while (!endpoint.empty() && endpoint.back() == '/') endpoint.pop_back();
  const auto colon = endpoint.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw Error(ErrorCode::kUsageError,
                "endpoint must look like host:port, got '" + endpoint + "'");
  }
  host_ = endpoint.substr(0, colon);
  try {
    std::size_t used = 0;
    port_ = std::stoi(endpoint.substr(colon + 1), &used);
    if (used != endpoint.size() - colon - 1 || port_ <= 0 || port_ > 65535) {
      throw std::out_of_range("port");
    }
  } catch (const std::exception &) {
    throw Error(ErrorCode::kUsageError, "bad port in endpoint '" + endpoint + "'");
  }
}

std::string HttpAnnotator::Describe() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

AnnotateResponse HttpAnnotator::Annotate(const AnnotateRequest &request) const {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  client.set_write_timeout(timeout_seconds_);
  auto result = client.Post("/annotate", SerializeRequest(request),
                            "application/json; charset=utf-8");
  if (!result) {
    throw Error(ErrorCode::kAnnotatorUnreachable,
                Describe() + ": " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw Error(ErrorCode::kProtocolViolation,
                "HTTP " + std::to_string(result->status) + ": " + result->body);
  }
  return ParseResponse(result->body);
}

}  // namespace linkeval

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

#ifndef LINKEVAL_PROTOCOL_H_
#define LINKEVAL_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkeval/core.h"
#include "linkeval/error.h"

namespace linkeval {

// Wire format of the annotation service. Bodies are UTF-8 JSON objects:
//
//   request:  {"text": "...", "doc_id": "..."}          doc_id optional
//   response: {"annotations": [{"begin": 0, "end": 5, "entity": "X"}, ...]}
//   error:    {"error": {"code": "MalformedRequest", "message": "..."}}
//
// begin/end are Unicode scalar offsets into text, end exclusive.

struct AnnotateRequest {
  std::string text;
  std::optional<std::string> doc_id;

  bool operator==(const AnnotateRequest &) const = default;
};

struct WireAnnotation {
  std::int64_t begin = 0;
  std::int64_t end = 0;
  std::string entity;

  bool operator==(const WireAnnotation &) const = default;
};

struct AnnotateResponse {
  std::vector<WireAnnotation> annotations;

  bool operator==(const AnnotateResponse &) const = default;
};

std::string SerializeRequest(const AnnotateRequest &request);
// Throws Error(kMalformedRequest).
AnnotateRequest ParseRequest(std::string_view body);

std::string SerializeResponse(const AnnotateResponse &response);
// Throws Error(kProtocolViolation).
AnnotateResponse ParseResponse(std::string_view body);

std::string SerializeError(ErrorCode code, std::string_view message);

AnnotateResponse ToResponse(const std::vector<Annotation> &annotations);

// Checks every triple against the request text and converts it.
// Throws Error(kProtocolViolation) on out-of-bounds spans or bad entity ids.
std::vector<Annotation> FromResponse(const AnnotateResponse &response,
                                     std::size_t text_length);

}  // namespace linkeval

#endif  // LINKEVAL_PROTOCOL_H_

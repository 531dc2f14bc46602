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

#include "linkeval/protocol.h"

#include <json.hpp>

namespace linkeval {

using nlohmann::json;

namespace {

std::string Dump(const json &value) {
  try {
    return value.dump();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidUtf8, e.what());
  }
}

}  // namespace

std::string SerializeRequest(const AnnotateRequest &request) {
  json body = {{"text", request.text}};
  if (request.doc_id) body["doc_id"] = *request.doc_id;
  return Dump(body);
}

AnnotateRequest ParseRequest(std::string_view body) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw Error(ErrorCode::kMalformedRequest, "body is not a JSON object");
  }
  auto text = parsed.find("text");
  if (text == parsed.end() || !text->is_string()) {
    throw Error(ErrorCode::kMalformedRequest, "missing string field 'text'");
  }
  AnnotateRequest request;
  request.text = text->get<std::string>();
  if (auto id = parsed.find("doc_id"); id != parsed.end() && !id->is_null()) {
    if (!id->is_string()) {
      throw Error(ErrorCode::kMalformedRequest, "'doc_id' must be a string");
    }
    request.doc_id = id->get<std::string>();
  }
  return request;
}

std::string SerializeResponse(const AnnotateResponse &response) {
  json annotations = json::array();
  for (const WireAnnotation &a : response.annotations) {
    annotations.push_back({{"begin", a.begin}, {"end", a.end}, {"entity", a.entity}});
  }
  return Dump(json{{"annotations", annotations}});
}

AnnotateResponse ParseResponse(std::string_view body) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw Error(ErrorCode::kProtocolViolation, "response is not a JSON object");
  }
  auto list = parsed.find("annotations");
  if (list == parsed.end() || !list->is_array()) {
    throw Error(ErrorCode::kProtocolViolation, "missing array 'annotations'");
  }
  AnnotateResponse response;
  for (const json &item : *list) {
    if (!item.is_object() || !item.contains("begin") || !item.contains("end") ||
        !item.contains("entity") || !item["begin"].is_number_integer() ||
        !item["end"].is_number_integer() || !item["entity"].is_string()) {
      throw Error(ErrorCode::kProtocolViolation,
                  "annotation must be {begin:int, end:int, entity:string}");
    }
    response.annotations.push_back({item["begin"].get<std::int64_t>(),
                                    item["end"].get<std::int64_t>(),
                                    item["entity"].get<std::string>()});
  }
  return response;
}

std::string SerializeError(ErrorCode code, std::string_view message) {
  json body = {{"error",
                {{"code", std::string(ErrorCodeName(code))},
                 {"message", std::string(message)}}}};
  return body.dump(-1, ' ', false, json::error_handler_t::replace);
}

AnnotateResponse ToResponse(const std::vector<Annotation> &annotations) {
  AnnotateResponse response;
  response.annotations.reserve(annotations.size());
  for (const Annotation &a : annotations) {
    response.annotations.push_back({static_cast<std::int64_t>(a.span.begin),
                                    static_cast<std::int64_t>(a.span.end),
                                    a.entity.id()});
  }
  return response;
}

std::vector<Annotation> FromResponse(const AnnotateResponse &response,
                                     std::size_t text_length) {
  std::vector<Annotation> out;
  out.reserve(response.annotations.size());
  for (const WireAnnotation &a : response.annotations) {
    if (a.begin < 0 || a.end <= a.begin ||
        static_cast<std::uint64_t>(a.end) > text_length) {
      throw Error(ErrorCode::kProtocolViolation,
                  "span [" + std::to_string(a.begin) + ", " +
                      std::to_string(a.end) + ") outside text of length " +
                      std::to_string(text_length));
    }
    try {
      out.push_back({{static_cast<std::size_t>(a.begin),
                      static_cast<std::size_t>(a.end)},
                     EntityId(a.entity)});
    } catch (const Error &e) {
      throw Error(ErrorCode::kProtocolViolation, e.what());
    }
  }
  return out;
}

}  // namespace linkeval

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

#include "linkeval/server.h"

#include <httplib.h>
#include <json.hpp>

#include "linkeval/error.h"
#include "linkeval/utf8.h"

namespace linkeval {

namespace {

constexpr const char *kJson = "application/json; charset=utf-8";

}  // namespace

AnnotationServer::AnnotationServer(std::shared_ptr<const LinkerPipeline> pipeline)
    : pipeline_(std::move(pipeline)), server_(std::make_unique<httplib::Server>()) {
  // Plain SO_REUSEADDR so that an occupied port is reported, not shared.
  server_->set_socket_options([](int sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  server_->Post("/annotate", [this](const httplib::Request &req,
                                    httplib::Response &res) {
    AnnotateRequest request;
    try {
      request = ParseRequest(req.body);
      DecodeUtf8(request.text);
    } catch (const Error &e) {
      res.status = 400;
      res.set_content(SerializeError(ErrorCode::kMalformedRequest, e.what()), kJson);
      return;
    }
    try {
      res.set_content(SerializeResponse(ToResponse(pipeline_->Annotate(request.text))),
                      kJson);
    } catch (const std::exception &e) {
      res.status = 500;
      res.set_content(SerializeError(ErrorCode::kProtocolViolation, e.what()), kJson);
    }
  });
  server_->Get("/health", [this](const httplib::Request &, httplib::Response &res) {
    nlohmann::json body = {{"service", "linkeval"}, {"linker", pipeline_->Describe()}};
    res.set_content(body.dump(), kJson);
  });
}

AnnotationServer::~AnnotationServer() { Stop(); }

int AnnotationServer::Bind(const std::string &host, int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
  } else {
    port_ = server_->bind_to_port(host, port) ? port : -1;
  }
  if (port_ < 0) {
    throw Error(ErrorCode::kBindFailure,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return port_;
}

void AnnotationServer::Listen() {
  if (port_ < 0) throw Error(ErrorCode::kBindFailure, "Listen() before Bind()");
  server_->listen_after_bind();
}

void AnnotationServer::Start() {
  thread_ = std::thread([this] { Listen(); });
  server_->wait_until_ready();
}

void AnnotationServer::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace linkeval

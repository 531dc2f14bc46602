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

#ifndef LINKEVAL_SERVER_H_
#define LINKEVAL_SERVER_H_

#include <memory>
#include <string>
#include <thread>

#include "linkeval/pipeline.h"

namespace httplib {
class Server;
}

namespace linkeval {

// HTTP annotation service:
//   POST /annotate  request body -> response body, 400 on malformed input
//   GET  /health    {"service": "linkeval", "linker": "<kind>/<policy>"}
// Requests are served concurrently against the shared immutable pipeline.
class AnnotationServer {
 public:
  explicit AnnotationServer(std::shared_ptr<const LinkerPipeline> pipeline);
  ~AnnotationServer();

  AnnotationServer(const AnnotationServer &) = delete;
  AnnotationServer &operator=(const AnnotationServer &) = delete;

  // Binds to host:port (port 0 picks a free one) and returns the bound port.
  // Throws Error(kBindFailure).
  int Bind(const std::string &host, int port);

  // Serves until Stop(). Requires Bind().
  void Listen();

  // Listen() on a background thread; returns once the server accepts.
  void Start();
  void Stop();

  int port() const { return port_; }

 private:
  std::shared_ptr<const LinkerPipeline> pipeline_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = -1;
};

}  // namespace linkeval

#endif  // LINKEVAL_SERVER_H_

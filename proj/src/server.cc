// Copyright 2026 The randomnode Authors.
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

#include "randomnode/server.h"

#include <iostream>
#include <utility>

#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "randomnode/search.h"

namespace randomnode {
namespace {

QueryParams ToQueryParams(const httplib::Request& req) {
  QueryParams params;
  for (const auto& [key, value] : req.params) params.emplace(key, value);
  return params;
}

}  // namespace

struct SearchServer::Impl {
  httplib::Server http;
  int port = -1;
};

SearchServer::SearchServer(std::shared_ptr<const Snapshot> snapshot,
                           ServerOptions options)
    : snapshot_(std::move(snapshot)),
      options_(std::move(options)),
      impl_(std::make_unique<Impl>()) {
  httplib::Server& http = impl_->http;
  if (!options_.cors_origin.empty()) {
    http.set_default_headers(
        {{"Access-Control-Allow-Origin", options_.cors_origin},
         {"Access-Control-Allow-Methods", "GET, OPTIONS"},
         {"Access-Control-Allow-Headers", "Content-Type"}});
  }
  auto respond = [this](httplib::Response& res, const HttpReply& reply) {
    ++requests_;
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  };
  http.Get("/health", [this, respond](const httplib::Request&,
                                      httplib::Response& res) {
    respond(res, HandleHealth(*snapshot_));
  });
  http.Get("/search", [this, respond](const httplib::Request& req,
                                      httplib::Response& res) {
    respond(res, HandleSearch(*snapshot_, ToQueryParams(req)));
  });
  http.Get("/stats", [this, respond](const httplib::Request& req,
                                     httplib::Response& res) {
    respond(res, HandleStats(*snapshot_, ToQueryParams(req)));
  });
  http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

SearchServer::~SearchServer() { Stop(); }

absl::StatusOr<int> SearchServer::Bind() {
  if (options_.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(options_.host);
  } else if (impl_->http.bind_to_port(options_.host, options_.port)) {
    impl_->port = options_.port;
  }
  if (impl_->port < 0) {
    return absl::UnavailableError(
        absl::StrCat("cannot bind ", options_.host, ":", options_.port));
  }
  return impl_->port;
}

absl::Status SearchServer::Listen() {
  if (impl_->port < 0) return absl::FailedPreconditionError("not bound");
  if (!impl_->http.listen_after_bind()) {
    return absl::UnavailableError("server stopped with an error");
  }
  return absl::OkStatus();
}

void SearchServer::Stop() {
  if (impl_) impl_->http.stop();
}

bool SearchServer::IsRunning() const { return impl_->http.is_running(); }

absl::Status Serve(const std::string& snapshot_dir,
                   const ServerOptions& options) {
  absl::StatusOr<Snapshot> snapshot = LoadSnapshot(snapshot_dir);
  if (!snapshot.ok()) return snapshot.status();
  SearchServer server(std::make_shared<const Snapshot>(*std::move(snapshot)),
                      options);
  absl::StatusOr<int> port = server.Bind();
  if (!port.ok()) return port.status();
  std::cerr << "randomnode: serving " << snapshot_dir << " on http://"
            << options.host << ":" << *port << "\n";
  return server.Listen();
}

}  // namespace randomnode

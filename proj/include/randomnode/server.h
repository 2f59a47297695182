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

#ifndef RANDOMNODE_SERVER_H_
#define RANDOMNODE_SERVER_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "randomnode/snapshot.h"

namespace randomnode {

struct ServerOptions {
  std::string host = "127.0.0.1";
  // 0 picks a free port.
  int port = 8080;
  // Value of Access-Control-Allow-Origin; empty disables CORS headers.
  std::string cors_origin = "*";
};

// Read-only HTTP front end over one snapshot: GET /health, /search, /stats.
class SearchServer {
 public:
  explicit SearchServer(std::shared_ptr<const Snapshot> snapshot,
                        ServerOptions options = {});
  ~SearchServer();

  SearchServer(const SearchServer&) = delete;
  SearchServer& operator=(const SearchServer&) = delete;

  // Binds the socket; returns the bound port.
  absl::StatusOr<int> Bind();
  // Serves until Stop(). Bind() must have succeeded.
  absl::Status Listen();
  void Stop();
  bool IsRunning() const;

  std::uint64_t requests_served() const { return requests_.load(); }

 private:
  struct Impl;
  std::shared_ptr<const Snapshot> snapshot_;
  ServerOptions options_;
  std::unique_ptr<Impl> impl_;
  std::atomic<std::uint64_t> requests_{0};
};

// Loads `snapshot_dir` and serves it until the process is stopped.
absl::Status Serve(const std::string& snapshot_dir, const ServerOptions& options);

}  // namespace randomnode

#endif  // RANDOMNODE_SERVER_H_

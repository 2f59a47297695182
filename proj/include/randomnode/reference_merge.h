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

#ifndef RANDOMNODE_REFERENCE_MERGE_H_
#define RANDOMNODE_REFERENCE_MERGE_H_

#include <cstddef>
#include <span>

#include "randomnode/merge.h"
#include "randomnode/random_walk.h"

namespace randomnode {

// Quadratic dense-matrix implementation of the merge contract in merge.h.
// Every rule application rescans all slot pairs from scratch until nothing
// applies. Only meant for small inputs in tests.
Clustering ReferenceMerge(std::span<const Walk> walks, double t_cm,
                          std::size_t node_count);

}  // namespace randomnode

#endif  // RANDOMNODE_REFERENCE_MERGE_H_

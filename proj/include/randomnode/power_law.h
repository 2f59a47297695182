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

// Discrete power law p(x) = x^-beta / zeta(beta, x_min) for x >= x_min:
// evaluation, approximate maximum-likelihood fitting of beta, sampling, and a
// directed configuration-model graph generator with power-law degrees.

#ifndef RANDOMNODE_POWER_LAW_H_
#define RANDOMNODE_POWER_LAW_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/rng.h"

namespace randomnode {

// Hurwitz zeta sum_{n>=0} (n + x_min)^-beta. Requires beta > 1, x_min >= 1.
absl::StatusOr<double> Zeta(double beta, std::int64_t x_min);

// Same series for any real offset > 0, without argument checks.
double HurwitzZeta(double beta, double offset);

absl::StatusOr<double> Pmf(std::int64_t x, double beta, std::int64_t x_min);

struct PowerLawFit {
  double beta_hat = 0.0;
  std::int64_t x_min = 1;
  std::size_t n_samples = 0;
  double std_error = 0.0;
  // Summary of the retained samples (those >= x_min).
  double median = 0.0;
  double mean = 0.0;
};

// beta_hat = 1 + n / sum_i ln(x_i / (x_min - 1/2)) over the n samples with
// x_i >= x_min, and std_error = (beta_hat - 1) / sqrt(n). Fails with
// FailedPrecondition when fewer than two samples are usable.
//
// The half-integer shift is an approximation to the discrete MLE; it is
// accurate for x_min of roughly 6 and above and biased low for small x_min.
absl::StatusOr<PowerLawFit> FitBeta(std::span<const std::int64_t> samples,
                                    std::int64_t x_min = 1);
absl::StatusOr<PowerLawFit> FitBeta(std::span<const std::uint32_t> samples,
                                    std::int64_t x_min = 1);

// Inverse-CDF sampler over the complementary CDF. The support is truncated at
// the first x whose tail mass falls below 1e-12.
class PowerLawSampler {
 public:
  static absl::StatusOr<PowerLawSampler> Create(double beta, std::int64_t x_min);

  std::int64_t operator()(Rng& rng) const;

  double beta() const { return beta_; }
  std::int64_t x_min() const { return x_min_; }
  std::int64_t support_end() const { return cut_x_; }

  // P(X >= x) for the untruncated law.
  double Ccdf(std::int64_t x) const;

 private:
  PowerLawSampler() = default;

  double beta_ = 2.0;
  std::int64_t x_min_ = 1;
  double zeta_min_ = 1.0;
  // ccdf_[i] = P(X >= x_min + i)
  std::vector<double> ccdf_;
  std::int64_t cut_x_ = 0;
  double cut_mass_ = 0.0;
};

absl::StatusOr<std::vector<std::int64_t>> SamplePowerLaw(double beta,
                                                         std::int64_t x_min,
                                                         std::size_t n,
                                                         std::uint64_t seed);

struct GraphGenOptions {
  std::size_t node_count = 1000;
  double beta_in = 2.5;
  double beta_out = 2.5;
  std::int64_t x_min = 1;
  std::uint64_t seed = 1;
};

// Directed configuration model: in- and out-degree sequences drawn
// independently (capped at n - 1), the longer stub list trimmed at random to
// the shorter one's length, stubs paired by a seeded shuffle. Self-loops and
// repeated pairs are dropped.
absl::StatusOr<LinkGraph> GenerateGraph(const GraphGenOptions& options);
absl::StatusOr<LinkGraph> GenerateGraph(std::size_t n, double beta,
                                        std::int64_t x_min, std::uint64_t seed);

}  // namespace randomnode

#endif  // RANDOMNODE_POWER_LAW_H_

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

#include "randomnode/power_law.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace randomnode {
namespace {

// B_2, B_4, ..., B_20.
constexpr double kBernoulli[] = {
    1.0 / 6.0,        -1.0 / 30.0,     1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0};

constexpr std::size_t kTableSize = std::size_t{1} << 16;
constexpr double kTailCut = 1e-12;
constexpr std::int64_t kMaxSupport = std::int64_t{1} << 62;

absl::Status CheckParams(double beta, std::int64_t x_min) {
  if (!(beta > 1.0) || !std::isfinite(beta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must be > 1, got ", beta));
  }
  if (x_min < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("x_min must be >= 1, got ", x_min));
  }
  return absl::OkStatus();
}

template <typename T>
absl::StatusOr<PowerLawFit> FitBetaImpl(std::span<const T> samples,
                                        std::int64_t x_min) {
  if (x_min < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("x_min must be >= 1, got ", x_min));
  }
  std::vector<std::int64_t> kept;
  for (T x : samples) {
    if (static_cast<std::int64_t>(x) >= x_min) {
      kept.push_back(static_cast<std::int64_t>(x));
    }
  }
  if (kept.size() < 2) {
    return absl::FailedPreconditionError(
        absl::StrCat("need at least 2 samples >= x_min=", x_min, ", have ",
                     kept.size()));
  }
  const double shift = static_cast<double>(x_min) - 0.5;
  double log_sum = 0.0;
  double sum = 0.0;
  for (std::int64_t x : kept) {
    log_sum += std::log(static_cast<double>(x) / shift);
    sum += static_cast<double>(x);
  }
  PowerLawFit fit;
  fit.x_min = x_min;
  fit.n_samples = kept.size();
  fit.beta_hat = 1.0 + static_cast<double>(kept.size()) / log_sum;
  fit.std_error =
      (fit.beta_hat - 1.0) / std::sqrt(static_cast<double>(kept.size()));
  fit.mean = sum / static_cast<double>(kept.size());
  const std::size_t mid = kept.size() / 2;
  std::nth_element(kept.begin(), kept.begin() + mid, kept.end());
  fit.median = static_cast<double>(kept[mid]);
  if (kept.size() % 2 == 0) {
    const auto lower = *std::max_element(kept.begin(), kept.begin() + mid);
    fit.median = 0.5 * (fit.median + static_cast<double>(lower));
  }
  return fit;
}

}  // namespace

// Direct sum of the first n terms plus an Euler-Maclaurin tail; n doubles
// until the last correction term is negligible against the total.
double HurwitzZeta(double beta, double offset) {
  for (int n = 8;; n *= 2) {
    double head = 0.0;
    for (int k = n - 1; k >= 0; --k) head += std::pow(offset + k, -beta);
    const double x = offset + n;
    double tail = std::pow(x, 1.0 - beta) / (beta - 1.0) + 0.5 * std::pow(x, -beta);
    double rising = beta;
    double factorial = 2.0;
    double x_pow = std::pow(x, -beta - 1.0);
    double last = 0.0;
    for (int j = 1; j <= 10; ++j) {
      const double term = kBernoulli[j - 1] / factorial * rising * x_pow;
      tail += term;
      last = std::abs(term);
      rising *= (beta + 2 * j - 1) * (beta + 2 * j);
      factorial *= (2.0 * j + 1) * (2.0 * j + 2);
      x_pow /= x * x;
    }
    const double total = head + tail;
    if (last <= 1e-13 * total || n >= (1 << 20)) return total;
  }
}

absl::StatusOr<double> Zeta(double beta, std::int64_t x_min) {
  if (absl::Status s = CheckParams(beta, x_min); !s.ok()) return s;
  return HurwitzZeta(beta, static_cast<double>(x_min));
}

absl::StatusOr<double> Pmf(std::int64_t x, double beta, std::int64_t x_min) {
  if (absl::Status s = CheckParams(beta, x_min); !s.ok()) return s;
  if (x < x_min) {
    return absl::InvalidArgumentError(
        absl::StrCat("x=", x, " is below x_min=", x_min));
  }
  return std::pow(static_cast<double>(x), -beta) /
         HurwitzZeta(beta, static_cast<double>(x_min));
}

absl::StatusOr<PowerLawFit> FitBeta(std::span<const std::int64_t> samples,
                                    std::int64_t x_min) {
  return FitBetaImpl(samples, x_min);
}

absl::StatusOr<PowerLawFit> FitBeta(std::span<const std::uint32_t> samples,
                                    std::int64_t x_min) {
  return FitBetaImpl(samples, x_min);
}

absl::StatusOr<PowerLawSampler> PowerLawSampler::Create(double beta,
                                                        std::int64_t x_min) {
  if (absl::Status s = CheckParams(beta, x_min); !s.ok()) return s;
  PowerLawSampler sampler;
  sampler.beta_ = beta;
  sampler.x_min_ = x_min;

  // Accumulate zeta(beta, x) downwards from the table end so every entry is
  // a sum of positive terms.
  std::vector<double> zeta(kTableSize);
  zeta[kTableSize - 1] =
      HurwitzZeta(beta, static_cast<double>(x_min) + (kTableSize - 1));
  for (std::size_t i = kTableSize - 1; i-- > 0;) {
    zeta[i] = zeta[i + 1] + std::pow(static_cast<double>(x_min + i), -beta);
  }
  sampler.zeta_min_ = zeta[0];
  sampler.ccdf_.resize(kTableSize);
  for (std::size_t i = 0; i < kTableSize; ++i) {
    sampler.ccdf_[i] = zeta[i] / sampler.zeta_min_;
  }

  auto first_small = std::find_if(sampler.ccdf_.begin(), sampler.ccdf_.end(),
                                  [](double c) { return c < kTailCut; });
  if (first_small != sampler.ccdf_.end()) {
    sampler.cut_x_ = x_min + (first_small - sampler.ccdf_.begin());
    sampler.ccdf_.erase(first_small, sampler.ccdf_.end());
  } else {
    std::int64_t lo = x_min + static_cast<std::int64_t>(kTableSize) - 1;
    std::int64_t hi = lo + 1;
    while (hi < kMaxSupport && sampler.Ccdf(hi) >= kTailCut) {
      lo = hi;
      hi = std::min(kMaxSupport, hi * 2);
    }
    if (sampler.Ccdf(hi) >= kTailCut) {
      sampler.cut_x_ = hi;
    } else {
      while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (sampler.Ccdf(mid) >= kTailCut ? lo : hi) = mid;
      }
      sampler.cut_x_ = hi;
    }
  }
  sampler.cut_mass_ = sampler.Ccdf(sampler.cut_x_);
  return sampler;
}

double PowerLawSampler::Ccdf(std::int64_t x) const {
  if (x <= x_min_) return 1.0;
  const auto offset = static_cast<std::uint64_t>(x - x_min_);
  if (offset < ccdf_.size()) return ccdf_[offset];
  return HurwitzZeta(beta_, static_cast<double>(x)) / zeta_min_;
}

std::int64_t PowerLawSampler::operator()(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // u in (cut_mass_, 1]; the draw is the largest x with P(X >= x) >= u.
  const double u = 1.0 - unit(rng) * (1.0 - cut_mass_);
  auto it = std::upper_bound(ccdf_.begin(), ccdf_.end(), u,
                             [](double value, double c) { return value > c; });
  if (it != ccdf_.end()) {
    return x_min_ + (it - ccdf_.begin()) - 1;
  }
  std::int64_t lo = x_min_ + static_cast<std::int64_t>(ccdf_.size()) - 1;
  std::int64_t hi = std::min(cut_x_, lo + 1);
  while (hi < cut_x_ && Ccdf(hi) >= u) {
    lo = hi;
    hi = std::min(cut_x_, hi * 2);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (Ccdf(mid) >= u ? lo : hi) = mid;
  }
  return lo;
}

absl::StatusOr<std::vector<std::int64_t>> SamplePowerLaw(double beta,
                                                         std::int64_t x_min,
                                                         std::size_t n,
                                                         std::uint64_t seed) {
  absl::StatusOr<PowerLawSampler> sampler = PowerLawSampler::Create(beta, x_min);
  if (!sampler.ok()) return sampler.status();
  Rng rng = MakeStream(seed, 0);
  std::vector<std::int64_t> out(n);
  for (auto& x : out) x = (*sampler)(rng);
  return out;
}

absl::StatusOr<LinkGraph> GenerateGraph(const GraphGenOptions& options) {
  const std::size_t n = options.node_count;
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 nodes, got ", n));
  }
  if (n > std::size_t{UINT32_MAX}) {
    return absl::InvalidArgumentError("node count exceeds 32-bit ids");
  }
  auto out_sampler = PowerLawSampler::Create(options.beta_out, options.x_min);
  if (!out_sampler.ok()) return out_sampler.status();
  auto in_sampler = PowerLawSampler::Create(options.beta_in, options.x_min);
  if (!in_sampler.ok()) return in_sampler.status();

  const auto cap = static_cast<std::int64_t>(n - 1);
  auto draw_stubs = [&](const PowerLawSampler& sampler, Rng rng) {
    std::vector<NodeId> stubs;
    for (NodeId v = 0; v < n; ++v) {
      const std::int64_t degree = std::min(sampler(rng), cap);
      stubs.insert(stubs.end(), static_cast<std::size_t>(degree), v);
    }
    return stubs;
  };
  std::vector<NodeId> out_stubs =
      draw_stubs(*out_sampler, MakeStream(options.seed, 1));
  std::vector<NodeId> in_stubs =
      draw_stubs(*in_sampler, MakeStream(options.seed, 2));

  Rng trim_rng = MakeStream(options.seed, 3);
  std::vector<NodeId>& longer =
      out_stubs.size() > in_stubs.size() ? out_stubs : in_stubs;
  const std::size_t stub_count = std::min(out_stubs.size(), in_stubs.size());
  std::shuffle(longer.begin(), longer.end(), trim_rng);
  longer.resize(stub_count);

  Rng pair_rng = MakeStream(options.seed, 4);
  std::shuffle(in_stubs.begin(), in_stubs.end(), pair_rng);
  std::vector<Edge> edges(stub_count);
  for (std::size_t i = 0; i < stub_count; ++i) {
    edges[i] = {out_stubs[i], in_stubs[i]};
  }
  return LinkGraph::FromEdges(n, edges);
}

absl::StatusOr<LinkGraph> GenerateGraph(std::size_t n, double beta,
                                        std::int64_t x_min,
                                        std::uint64_t seed) {
  return GenerateGraph(GraphGenOptions{n, beta, beta, x_min, seed});
}

}  // namespace randomnode

// Copyright 2026 The exdeploy Authors
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

#include "exdeploy/submodular.h"

#include <algorithm>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <tuple>
#include <unordered_map>

#include "exdeploy/errors.h"

namespace exdeploy {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Per-run cache of f keyed by the sorted subset.
class MemoizedFunction {
 public:
  explicit MemoizedFunction(const SetFunction& f) : f_(f) {}

  double operator()(std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    auto it = cache_.find(subset);
    if (it != cache_.end()) return it->second;
    const double v = f_.Evaluate(subset);
    cache_.emplace(std::move(subset), v);
    return v;
  }

 private:
  const SetFunction& f_;
  std::unordered_map<std::vector<int>, double, VectorHash> cache_;
};

class GreedyRun {
 public:
  GreedyRun(const SetFunction& f, GreedyOptions options)
      : memo_(f), options_(options), in_set_(f.ground_size(), false) {}

  // `picks` greedy rounds restricted to `pool` (ascending indices).
  void Phase(const std::vector<int>& pool, int picks) {
    if (options_.lazy) {
      LazyPhase(pool, picks);
    } else {
      PlainPhase(pool, picks);
    }
  }

  GreedyResult Finish(Guarantee guarantee) {
    result_.value = memo_(result_.selected);
    result_.guarantee = guarantee;
    return std::move(result_);
  }

 private:
  double Gain(int s, double base) {
    std::vector<int> with = result_.selected;
    with.push_back(s);
    ++result_.evaluations;
    return memo_(std::move(with)) - base;
  }

  void Take(int s, double gain) {
    result_.selected.push_back(s);
    result_.gains.push_back(gain);
    in_set_[s] = true;
  }

  void PlainPhase(const std::vector<int>& pool, int picks) {
    for (int round = 0; round < picks; ++round) {
      const double base = memo_(result_.selected);
      int best = -1;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (int s : pool) {
        if (in_set_[s]) continue;
        const double g = Gain(s, base);
        if (g > best_gain) {
          best_gain = g;
          best = s;
        }
      }
      if (best < 0) throw InvalidK("not enough elements left to pick from");
      Take(best, best_gain);
    }
  }

  void LazyPhase(const std::vector<int>& pool, int picks) {
    // (bound, index, round the bound was computed in). Max bound first,
    // lowest index among equal bounds.
    using Entry = std::tuple<double, int, int>;
    auto worse = [](const Entry& a, const Entry& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      return std::get<1>(a) > std::get<1>(b);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
    double base = memo_(result_.selected);
    for (int s : pool) {
      if (!in_set_[s]) heap.emplace(Gain(s, base), s, 0);
    }
    for (int round = 0; round < picks; ++round) {
      base = memo_(result_.selected);
      while (true) {
        if (heap.empty()) throw InvalidK("not enough elements left to pick from");
        auto [bound, s, seen] = heap.top();
        heap.pop();
        if (seen == round) {
          Take(s, bound);
          break;
        }
        heap.emplace(Gain(s, base), s, round);
      }
    }
  }

  MemoizedFunction memo_;
  GreedyOptions options_;
  std::vector<bool> in_set_;
  GreedyResult result_;
};

// Sum_{j <= k} C(n, j), saturating at limit + 1.
std::uint64_t CountUpTo(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  std::uint64_t total = 0;
  double c = 1.0;
  for (std::uint64_t j = 0; j <= std::min(n, k); ++j) {
    if (j > 0) c = c * static_cast<double>(n - j + 1) / static_cast<double>(j);
    if (static_cast<double>(total) + c > static_cast<double>(limit)) return limit + 1;
    total += static_cast<std::uint64_t>(c + 0.5);
  }
  return total;
}

// Depth-first enumeration in lexicographic order of sorted sets; the first
// strict maximum wins.
class Enumerator {
 public:
  Enumerator(const SetFunction& f, std::vector<int> block_of,
             std::vector<int> quotas)
      : f_(f), block_of_(std::move(block_of)), room_(std::move(quotas)) {}

  BruteForceResult Run() {
    Visit(0);
    return best_;
  }

 private:
  void Visit(int start) {
    const double v = f_.Evaluate(current_);
    if (!found_ || v > best_.value) {
      found_ = true;
      best_.value = v;
      best_.selected = current_;
    }
    for (int s = start; s < static_cast<int>(block_of_.size()); ++s) {
      int& room = room_[block_of_[s]];
      if (room == 0) continue;
      --room;
      current_.push_back(s);
      Visit(s + 1);
      current_.pop_back();
      ++room;
    }
  }

  const SetFunction& f_;
  std::vector<int> block_of_;
  std::vector<int> room_;
  std::vector<int> current_;
  bool found_ = false;
  BruteForceResult best_;
};

}  // namespace

double Marginal(const SetFunction& f, std::span<const int> subset, int element) {
  if (element < 0 || static_cast<std::size_t>(element) >= f.ground_size()) {
    throw InvalidParams("element outside the ground set");
  }
  if (std::find(subset.begin(), subset.end(), element) != subset.end()) {
    throw ElementAlreadyInSet("element is already in the set");
  }
  std::vector<int> with(subset.begin(), subset.end());
  with.push_back(element);
  return f.Evaluate(with) - f.Evaluate(subset);
}

int PartitionConstraint::TotalQuota() const {
  int total = 0;
  for (int q : quotas) total += q;
  return total;
}

void PartitionConstraint::Validate(std::size_t ground_size) const {
  if (blocks.empty() || blocks.size() != quotas.size()) {
    throw InvalidConstraint("need one quota per block and at least one block");
  }
  std::vector<int> owner(ground_size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (quotas[b] < 1) throw InvalidConstraint("block quotas must be >= 1");
    if (blocks[b].size() <= static_cast<std::size_t>(quotas[b])) {
      throw InvalidConstraint("each block must be larger than its quota");
    }
    for (int s : blocks[b]) {
      if (s < 0 || static_cast<std::size_t>(s) >= ground_size) {
        throw InvalidConstraint("block index outside the ground set");
      }
      if (owner[s] >= 0) throw InvalidConstraint("blocks must be disjoint");
      owner[s] = static_cast<int>(b);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw InvalidConstraint("blocks must cover the ground set");
  }
}

std::string GuaranteeLabel(Guarantee g) {
  return g == Guarantee::kOneMinusInverseE ? "1-1/e" : "1/2";
}

double GuaranteeFactor(Guarantee g) {
  return g == Guarantee::kOneMinusInverseE ? 1.0 - 1.0 / std::numbers::e : 0.5;
}

GreedyResult GreedyCardinality(const SetFunction& f, int k, GreedyOptions options) {
  if (k < 1 || static_cast<std::size_t>(k) > f.ground_size()) {
    throw InvalidK("K must satisfy 1 <= K <= |X|");
  }
  std::vector<int> pool(f.ground_size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
  GreedyRun run(f, options);
  run.Phase(pool, k);
  return run.Finish(Guarantee::kOneMinusInverseE);
}

GreedyResult GreedyPartition(const SetFunction& f,
                             const PartitionConstraint& constraint,
                             GreedyOptions options) {
  constraint.Validate(f.ground_size());
  GreedyRun run(f, options);
  for (std::size_t b = 0; b < constraint.blocks.size(); ++b) {
    std::vector<int> pool = constraint.blocks[b];
    std::sort(pool.begin(), pool.end());
    run.Phase(pool, constraint.quotas[b]);
  }
  return run.Finish(Guarantee::kHalf);
}

BruteForceResult BruteForce(const SetFunction& f, int k) {
  if (k < 0) throw InvalidK("K must be nonnegative");
  const std::uint64_t n = f.ground_size();
  if (CountUpTo(n, static_cast<std::uint64_t>(k), kMaxBruteForceSets) >
      kMaxBruteForceSets) {
    throw InstanceTooLarge("too many feasible sets for exhaustive search");
  }
  return Enumerator(f, std::vector<int>(n, 0), {k}).Run();
}

BruteForceResult BruteForce(const SetFunction& f,
                            const PartitionConstraint& constraint) {
  constraint.Validate(f.ground_size());
  double total = 1.0;
  std::vector<int> block_of(f.ground_size());
  for (std::size_t b = 0; b < constraint.blocks.size(); ++b) {
    total *= static_cast<double>(CountUpTo(constraint.blocks[b].size(),
                                           constraint.quotas[b],
                                           kMaxBruteForceSets));
    for (int s : constraint.blocks[b]) block_of[s] = static_cast<int>(b);
  }
  if (total > static_cast<double>(kMaxBruteForceSets)) {
    throw InstanceTooLarge("too many feasible sets for exhaustive search");
  }
  return Enumerator(f, std::move(block_of), constraint.quotas).Run();
}

PropertyReport CheckProperties(const SetFunction& f, int trials,
                               std::uint64_t seed) {
  if (trials < 1) throw InvalidParams("trials must be >= 1");
  const std::size_t n = f.ground_size();
  PropertyReport report;
  auto members = [](std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1) {
      if (mask & 1) out.push_back(i);
    }
    return out;
  };
  auto check = [&](double fs, double fr, double fs_plus, double fr_plus,
                   bool count_monotone) {
    if (count_monotone) {
      ++report.checks;
      if (fs > fr + kPropertyTolerance) ++report.monotone_violations;
    }
    ++report.checks;
    if (fs_plus - fs < fr_plus - fr - kPropertyTolerance) {
      ++report.submodular_violations;
    }
  };

  if (n <= kExhaustivePropertyLimit) {
    report.exhaustive = true;
    const std::uint64_t full = (1ULL << n) - 1;
    std::vector<double> value(full + 1);
    for (std::uint64_t m = 0; m <= full; ++m) value[m] = f.Evaluate(members(m));
    for (std::uint64_t r = 0; r <= full; ++r) {
      for (std::uint64_t s = r;; s = (s - 1) & r) {
        ++report.checks;
        if (value[s] > value[r] + kPropertyTolerance) ++report.monotone_violations;
        for (std::size_t e = 0; e < n; ++e) {
          const std::uint64_t bit = 1ULL << e;
          if (r & bit) continue;
          check(value[s], value[r], value[s | bit], value[r | bit], false);
        }
        if (s == 0) break;
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<char> in_r(n), in_s(n);
    for (std::size_t i = 0; i < n; ++i) {
      in_r[i] = coin(rng);
      in_s[i] = in_r[i] && coin(rng);
    }
    std::size_t e = pick(rng);
    if (in_r[e]) {
      // Drop e from R (and S) so the triple is valid.
      in_r[e] = in_s[e] = 0;
    }
    std::vector<int> s_set, r_set;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_s[i]) s_set.push_back(static_cast<int>(i));
      if (in_r[i]) r_set.push_back(static_cast<int>(i));
    }
    const double fs = f.Evaluate(s_set);
    const double fr = f.Evaluate(r_set);
    s_set.push_back(static_cast<int>(e));
    r_set.push_back(static_cast<int>(e));
    check(fs, fr, f.Evaluate(s_set), f.Evaluate(r_set), true);
  }
  return report;
}

}  // namespace exdeploy

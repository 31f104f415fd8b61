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

#ifndef EXDEPLOY_SUBMODULAR_H_
#define EXDEPLOY_SUBMODULAR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace exdeploy {

// Set function over the ground set {0, ..., ground_size() - 1}. Subsets are
// passed as lists of distinct indices in any order. Implementations must be
// pure: equal subsets give equal values.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual std::size_t ground_size() const = 0;
  virtual double Evaluate(std::span<const int> subset) const = 0;
};

// f(S + {s}) - f(S). Throws ElementAlreadyInSet when s is in S and
// InvalidParams when s is outside the ground set.
double Marginal(const SetFunction& f, std::span<const int> subset, int element);

// Disjoint blocks covering the ground set, at most quotas[i] picks from
// blocks[i].
struct PartitionConstraint {
  std::vector<std::vector<int>> blocks;
  std::vector<int> quotas;

  int TotalQuota() const;
  // Throws InvalidConstraint unless blocks are disjoint, cover
  // [0, ground_size), quotas >= 1 and every block is larger than its quota.
  void Validate(std::size_t ground_size) const;
};

enum class Guarantee {
  kOneMinusInverseE,  // cardinality constraint
  kHalf,              // partition matroid
};

std::string GuaranteeLabel(Guarantee g);
double GuaranteeFactor(Guarantee g);

struct GreedyResult {
  std::vector<int> selected;  // in pick order
  std::vector<double> gains;  // marginal gain of each pick
  double value = 0.0;         // f(selected)
  Guarantee guarantee = Guarantee::kOneMinusInverseE;
  std::size_t evaluations = 0;  // marginal gains computed
};

struct GreedyOptions {
  // Priority queue of stale marginal upper bounds. Only valid for
  // submodular f; picks the same elements as the plain scan when it is.
  bool lazy = false;
};

// K rounds, each adding the element of largest marginal gain; ties go to the
// lowest index. Throws InvalidK unless 1 <= k <= ground size.
GreedyResult GreedyCardinality(const SetFunction& f, int k,
                               GreedyOptions options = {});

// Blocks in the given order; block i receives quotas[i] greedy picks from its
// own unpicked elements.
GreedyResult GreedyPartition(const SetFunction& f,
                             const PartitionConstraint& constraint,
                             GreedyOptions options = {});

struct BruteForceResult {
  std::vector<int> selected;  // sorted
  double value = 0.0;
};

inline constexpr std::uint64_t kMaxBruteForceSets = 1'000'000;

// Exact maximum over all subsets of size <= k (or all partition-feasible
// subsets). Ties resolve to the lexicographically smallest sorted set.
// Throws InstanceTooLarge past kMaxBruteForceSets feasible sets.
BruteForceResult BruteForce(const SetFunction& f, int k);
BruteForceResult BruteForce(const SetFunction& f,
                            const PartitionConstraint& constraint);

struct PropertyReport {
  std::size_t monotone_violations = 0;
  std::size_t submodular_violations = 0;
  std::size_t checks = 0;  // inequalities evaluated, both kinds
  bool exhaustive = false;
};

inline constexpr std::size_t kExhaustivePropertyLimit = 8;
inline constexpr double kPropertyTolerance = 1e-9;

// Checks f(S) <= f(R) and f(S+s) - f(S) >= f(R+s) - f(R) for S subset of R,
// s outside R, with tolerance kPropertyTolerance. Every such triple is
// checked when the ground set has at most kExhaustivePropertyLimit elements;
// otherwise `trials` random triples are drawn from `seed`.
PropertyReport CheckProperties(const SetFunction& f, int trials,
                               std::uint64_t seed = 0);

}  // namespace exdeploy

#endif  // EXDEPLOY_SUBMODULAR_H_

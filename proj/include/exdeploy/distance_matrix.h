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

#ifndef EXDEPLOY_DISTANCE_MATRIX_H_
#define EXDEPLOY_DISTANCE_MATRIX_H_

#include <cstddef>
#include <string>
#include <vector>

#include "exdeploy/workspace.h"

namespace exdeploy {

// Finite stand-in for "no path": ten workspace diagonals.
inline double UnreachableCap(const Bounds& bounds) {
  return 10.0 * bounds.diagonal();
}

// Dense site -> target travel costs, row-major (one row per site). Entries
// need not be symmetric or satisfy the triangle inequality. The constructor
// enforces finite entries in [0, d_max] and matching id lists.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t sites, std::size_t targets,
                 std::vector<double> values, double d_max,
                 std::string metric_tag, std::vector<int> site_ids = {},
                 std::vector<int> target_ids = {});

  std::size_t sites() const { return sites_; }
  std::size_t targets() const { return targets_; }
  double at(std::size_t site, std::size_t target) const {
    return values_[site * targets_ + target];
  }
  const std::vector<double>& values() const { return values_; }
  double d_max() const { return d_max_; }
  const std::string& metric_tag() const { return metric_tag_; }
  const std::vector<int>& site_ids() const { return site_ids_; }
  const std::vector<int>& target_ids() const { return target_ids_; }

  // Largest entry, 0 for an empty matrix.
  double MaxEntry() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t sites_;
  std::size_t targets_;
  std::vector<double> values_;
  double d_max_;
  std::string metric_tag_;
  std::vector<int> site_ids_;
  std::vector<int> target_ids_;
};

}  // namespace exdeploy

#endif  // EXDEPLOY_DISTANCE_MATRIX_H_

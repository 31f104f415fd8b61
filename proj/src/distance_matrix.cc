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

#include "exdeploy/distance_matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exdeploy/errors.h"

namespace exdeploy {

DistanceMatrix::DistanceMatrix(std::size_t sites, std::size_t targets,
                               std::vector<double> values, double d_max,
                               std::string metric_tag,
                               std::vector<int> site_ids,
                               std::vector<int> target_ids)
    : sites_(sites),
      targets_(targets),
      values_(std::move(values)),
      d_max_(d_max),
      metric_tag_(std::move(metric_tag)),
      site_ids_(std::move(site_ids)),
      target_ids_(std::move(target_ids)) {
  if (values_.size() != sites_ * targets_) {
    throw DimensionMismatch("matrix values do not match sites x targets");
  }
  if (site_ids_.empty()) {
    site_ids_.resize(sites_);
    std::iota(site_ids_.begin(), site_ids_.end(), 0);
  }
  if (target_ids_.empty()) {
    target_ids_.resize(targets_);
    std::iota(target_ids_.begin(), target_ids_.end(), 0);
  }
  if (site_ids_.size() != sites_ || target_ids_.size() != targets_) {
    throw DimensionMismatch("id lists do not match matrix shape");
  }
  if (!std::isfinite(d_max_) || d_max_ < 0.0) {
    throw InvalidParams("D_max must be finite and nonnegative");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0 || v > d_max_) {
      throw InvalidParams("matrix entry outside [0, D_max]");
    }
  }
}

double DistanceMatrix::MaxEntry() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

}  // namespace exdeploy

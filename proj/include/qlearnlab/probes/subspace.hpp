// Copyright 2026 The qlearnlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qlearnlab/ebm/train.hpp"

#include <Eigen/SparseCore>

#include <cstdint>
#include <string>

namespace qlearnlab::probes {

enum class ProjectionKind {
    /// Gaussian matrix orthonormalized by QR; exact isometry, dense cost.
    DenseOrthonormal,
    /// ceil(sqrt(D)) nonzeros per column, values +-1/sqrt(nnz); a
    /// near-isometry at a fraction of the memory and multiply cost.
    SparseSigned,
};

std::string projection_kind_name(ProjectionKind kind);
ProjectionKind projection_kind_from_name(const std::string& name);

/// Kind selection rule used when a config says "auto": dense up to d = 512,
/// sparse above.
ProjectionKind auto_projection_kind(Index sub_dim);

/// Random affine subspace theta = origin + P u with P of shape D x d.
/// Implements the training-loop reparameterization interface.
class RsoProjection final : public ebm::Reparameterization {
  public:
    RsoProjection(Index full_dim, Index sub_dim, ProjectionKind kind, Vector origin,
                  std::uint64_t seed);

    Index dim() const override { return sub_dim_; }
    Index full_dim() const { return full_dim_; }
    ProjectionKind kind() const { return kind_; }
    const Vector& origin() const { return origin_; }

    /// origin + P u.
    Vector expand(const Vector& u) const override;
    /// P^T g.
    Vector reduce(const Vector& grad) const override;

    /// P^T P, for isometry checks.
    Matrix gram() const;

  private:
    Index full_dim_, sub_dim_;
    ProjectionKind kind_;
    Vector origin_;
    Matrix dense_;
    Eigen::SparseMatrix<double> sparse_;
};

struct RsoOutcome {
    double tv = 0.0;
    int epochs_run = 0;
    Vector params;
    ebm::TrainHistory history;
};

/// Trains only the subspace coordinates, with semantics otherwise identical
/// to full training, and reports the final TV distance to the target.
RsoOutcome rso_train(const ebm::EnergyNet& net, const qstate::SampleSet& data,
                     const qstate::BornDistribution& target, const RsoProjection& projection,
                     const ebm::TrainConfig& config);

}  // namespace qlearnlab::probes

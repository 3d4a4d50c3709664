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

#include "qlearnlab/probes/subspace.hpp"

#include "qlearnlab/probes/metrics.hpp"
#include "qlearnlab/ebm/loss.hpp"
#include "qlearnlab/rng.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qlearnlab::probes {

std::string projection_kind_name(ProjectionKind kind) {
    return kind == ProjectionKind::DenseOrthonormal ? "dense" : "sparse";
}

ProjectionKind projection_kind_from_name(const std::string& name) {
    if (name == "dense") return ProjectionKind::DenseOrthonormal;
    if (name == "sparse") return ProjectionKind::SparseSigned;
    throw std::invalid_argument("unknown projection kind '" + name + "'");
}

ProjectionKind auto_projection_kind(Index sub_dim) {
    return sub_dim <= 512 ? ProjectionKind::DenseOrthonormal : ProjectionKind::SparseSigned;
}

RsoProjection::RsoProjection(Index full_dim, Index sub_dim, ProjectionKind kind, Vector origin,
                             std::uint64_t seed)
    : full_dim_(full_dim), sub_dim_(sub_dim), kind_(kind), origin_(std::move(origin)) {
    if (sub_dim_ < 1 || sub_dim_ >= full_dim_)
        throw std::invalid_argument("RsoProjection: need 1 <= d < D");
    if (origin_.size() != full_dim_)
        throw std::invalid_argument("RsoProjection: origin has the wrong size");

    RandomStream rng(seed);
    if (kind_ == ProjectionKind::DenseOrthonormal) {
        Matrix gaussian(full_dim_, sub_dim_);
        for (Index c = 0; c < sub_dim_; ++c)
            for (Index r = 0; r < full_dim_; ++r) gaussian(r, c) = rng.normal();
        Eigen::HouseholderQR<Matrix> qr(gaussian);
        dense_ = qr.householderQ() * Matrix::Identity(full_dim_, sub_dim_);
    } else {
        const Index nnz =
            static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(full_dim_))));
        const double value = 1.0 / std::sqrt(static_cast<double>(nnz));
        std::vector<Eigen::Triplet<double>> triplets;
        triplets.reserve(static_cast<std::size_t>(nnz * sub_dim_));
        std::vector<Index> rows;
        std::vector<char> taken(static_cast<std::size_t>(full_dim_));
        for (Index c = 0; c < sub_dim_; ++c) {
            rows.clear();
            // nnz distinct rows per column via rejection; nnz << D so
            // collisions are rare.
            while (static_cast<Index>(rows.size()) < nnz) {
                const Index r =
                    static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(full_dim_)));
                if (taken[static_cast<std::size_t>(r)]) continue;
                taken[static_cast<std::size_t>(r)] = 1;
                rows.push_back(r);
            }
            for (Index r : rows) taken[static_cast<std::size_t>(r)] = 0;
            std::sort(rows.begin(), rows.end());
            for (Index r : rows) {
                const double sign = rng.uniform_below(2) ? 1.0 : -1.0;
                triplets.emplace_back(static_cast<int>(r), static_cast<int>(c), sign * value);
            }
        }
        sparse_.resize(full_dim_, sub_dim_);
        sparse_.setFromTriplets(triplets.begin(), triplets.end());
    }
}

Vector RsoProjection::expand(const Vector& u) const {
    if (u.size() != sub_dim_) throw std::invalid_argument("RsoProjection: bad coordinate size");
    if (kind_ == ProjectionKind::DenseOrthonormal) return origin_ + dense_ * u;
    return origin_ + sparse_ * u;
}

Vector RsoProjection::reduce(const Vector& grad) const {
    if (grad.size() != full_dim_)
        throw std::invalid_argument("RsoProjection: bad gradient size");
    if (kind_ == ProjectionKind::DenseOrthonormal) return dense_.transpose() * grad;
    return sparse_.transpose() * grad;
}

Matrix RsoProjection::gram() const {
    if (kind_ == ProjectionKind::DenseOrthonormal) return dense_.transpose() * dense_;
    return Matrix(Eigen::SparseMatrix<double>(sparse_.transpose() * sparse_));
}

RsoOutcome rso_train(const ebm::EnergyNet& net, const qstate::SampleSet& data,
                     const qstate::BornDistribution& target, const RsoProjection& projection,
                     const ebm::TrainConfig& config) {
    if (projection.full_dim() != net.param_count())
        throw std::invalid_argument("rso_train: projection does not match the net");
    const ebm::TrainResult trained = ebm::train(net, data, target, config, 0, &projection);
    RsoOutcome outcome;
    outcome.params = trained.params;
    outcome.history = trained.history;
    outcome.epochs_run = trained.history.epochs_run;
    const Vector q = ebm::distribution_from_energies(net.energies(trained.params));
    outcome.tv = tv_distance(q, target.probs);
    return outcome;
}

}  // namespace qlearnlab::probes

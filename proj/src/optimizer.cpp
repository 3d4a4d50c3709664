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

#include "qlearnlab/ebm/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace qlearnlab::ebm {

Adam::Adam(Index dim, double beta1, double beta2, double epsilon)
    : beta1_(beta1), beta2_(beta2), epsilon_(epsilon), m_(Vector::Zero(dim)),
      v_(Vector::Zero(dim)) {}

void Adam::step(Vector& params, const Vector& grad, double learning_rate) {
    if (params.size() != m_.size() || grad.size() != m_.size())
        throw std::invalid_argument("Adam: dimension mismatch");
    ++t_;
    m_ = beta1_ * m_ + (1.0 - beta1_) * grad;
    v_ = beta2_ * v_ + (1.0 - beta2_) * grad.cwiseProduct(grad);
    const double m_scale = 1.0 / (1.0 - std::pow(beta1_, t_));
    const double v_scale = 1.0 / (1.0 - std::pow(beta2_, t_));
    params.array() -=
        learning_rate * (m_scale * m_.array()) / ((v_scale * v_.array()).sqrt() + epsilon_);
}

PlateauScheduler::PlateauScheduler(double initial_lr, double factor, int patience,
                                   double threshold)
    : lr_(initial_lr), factor_(factor), threshold_(threshold), patience_(patience), best_(0.0) {}

double PlateauScheduler::observe(double metric) {
    if (!seen_ || metric < best_ - threshold_) {
        best_ = metric;
        seen_ = true;
        bad_ = 0;
        return lr_;
    }
    if (++bad_ == patience_) {
        lr_ *= factor_;
        bad_ = 0;
    }
    return lr_;
}

EarlyStopper::EarlyStopper(int patience, double min_delta)
    : patience_(patience), min_delta_(min_delta), best_(0.0) {}

bool EarlyStopper::observe(double metric) {
    if (!seen_ || metric < best_ - min_delta_) {
        best_ = metric;
        seen_ = true;
        bad_ = 0;
        return false;
    }
    return ++bad_ >= patience_;
}

}  // namespace qlearnlab::ebm

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

#include "qlearnlab/types.hpp"

namespace qlearnlab::ebm {

/// Adam with bias correction.  The learning rate is passed per step so a
/// scheduler can change it without touching the moment estimates.
class Adam {
  public:
    Adam(Index dim, double beta1 = 0.9, double beta2 = 0.999, double epsilon = 1e-8);

    void step(Vector& params, const Vector& grad, double learning_rate);
    int steps_taken() const { return t_; }

  private:
    double beta1_, beta2_, epsilon_;
    Vector m_, v_;
    int t_ = 0;
};

/// Halves the learning rate when the observed metric has not improved by
/// more than threshold for patience consecutive observations.
class PlateauScheduler {
  public:
    PlateauScheduler(double initial_lr, double factor = 0.5, int patience = 5,
                     double threshold = 1e-8);

    /// Feed one per-epoch metric value; returns the learning rate to use next.
    double observe(double metric);
    double learning_rate() const { return lr_; }

  private:
    double lr_, factor_, threshold_;
    int patience_, bad_ = 0;
    double best_;
    bool seen_ = false;
};

/// Signals a stop when the metric has not improved by more than min_delta
/// for patience consecutive observations.
class EarlyStopper {
  public:
    EarlyStopper(int patience = 5, double min_delta = 1e-8);

    /// Feed one per-epoch metric value; returns true when training should stop.
    bool observe(double metric);

  private:
    int patience_, bad_ = 0;
    double min_delta_;
    double best_;
    bool seen_ = false;
};

}  // namespace qlearnlab::ebm

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

#include <cstdint>

namespace qlearnlab::expt {

/// Independent random-stream roles inside one experiment run.
enum class StreamRole : std::uint64_t {
    Target = 1,      // target state construction
    Sampling = 2,    // drawing the data set
    Init = 3,        // network initialization
    Projection = 4,  // subspace projection matrix
    Power = 5,       // power iteration start vector
    Minibatch = 6,   // minibatch resampling during training
};

/// Child seed for one (role, resource value, subspace dim, instance) slot,
/// derived from the master seed by keyed 64-bit mixing.  Changing any key
/// gives a statistically independent stream; equal keys reproduce it.
std::uint64_t derive_seed(std::uint64_t master, StreamRole role, std::int64_t resource_value,
                          std::int64_t sub_dim, std::int64_t instance);

/// Identity tag of one instance: the seed of its target stream.
std::uint64_t instance_tag(std::uint64_t master, std::int64_t resource_value,
                           std::int64_t instance);

}  // namespace qlearnlab::expt

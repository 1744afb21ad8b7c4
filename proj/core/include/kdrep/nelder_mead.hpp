// Copyright 2026 The kdrep Authors
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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace kdrep::optim {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
    /// Simplex iterations, summed over all internal restarts.
    std::size_t max_iterations = 4000;
    /// Edge length of the initial (and every rebuilt) simplex.
    double initial_step = 0.5;
    /// Converged when the spread of simplex values falls below this.
    double f_tol = 1e-15;
    /// ... or when every vertex is within this distance of the best one.
    double x_tol = 1e-13;
    /// After convergence the simplex is rebuilt around the best point this
    /// many times, which unsticks collapsed simplices.
    std::size_t max_rebuilds = 8;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
};

/// Downhill simplex with dimension-adaptive coefficients
/// (reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n), shrink 1 - 1/n).
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts);

}  // namespace kdrep::optim

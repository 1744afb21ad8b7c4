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

namespace kdrep {

/// Numerical tolerances and size limits shared by every module.
///
/// All values are absolute. None of them are compile-time constants: callers
/// (and the CLI) are expected to thread a `Tolerances` through explicitly.
struct Tolerances {
    /// Hermiticity, trace, positivity and Kraus-completeness checks.
    double validation = 1e-9;
    /// Smallest admissible |<a'_{i'}|a_i>| when building a frame.
    double overlap_floor = 1e-8;
    /// Allowed -Re and |Im| before an entry counts as negative/imaginary.
    double nonnegativity = 1e-9;
    /// Cap on the total Hilbert-space dimension of any object.
    std::size_t max_dim = 64;
};

}  // namespace kdrep

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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdrep/config.hpp"
#include "kdrep/frame.hpp"
#include "kdrep/verify.hpp"

namespace kdrep {

/// Real coordinates for a pair of d x d unitaries, U = exp(iH).
///
/// Each H takes d^2 reals in a fixed order: the d diagonal entries, then for
/// every pair r < c (row-major) the real and imaginary parts of H(r, c).
/// The first d^2 parameters give basis a, the next d^2 give basis a'. The bases
/// are the columns of the unitaries applied to the computational basis.
struct BasisParameterization {
    std::size_t dim = 0;
    std::vector<double> params;
};

constexpr std::size_t hermitian_parameter_count(std::size_t d) { return d * d; }
constexpr std::size_t basis_parameter_count(std::size_t d) { return 2 * d * d; }

ComplexMatrix hermitian_from_params(std::span<const double> params, std::size_t d);
/// Inverse of hermitian_from_params (uses the Hermitian part of h).
std::vector<double> params_from_hermitian(const ComplexMatrix& h);
/// exp(iH) through the eigendecomposition of H.
ComplexMatrix unitary_from_params(std::span<const double> params, std::size_t d);

/// Throws OverlapFloorViolation when the decoded pair is inadmissible.
BasisPair decode(const BasisParameterization& p, const Tolerances& tol = {});
/// Same map without the admissibility check.
BasisPair decode_unchecked(const BasisParameterization& p, const Tolerances& tol = {});

/// sum over (i, i') of max(0, floor - |<a'_{i'}|a_i>|)^2.
double overlap_penalty(const BasisPair& pair, double floor);

enum class SearchObjective { fragment_negativity, min_real_entry, max_imag_entry };
enum class SearchOptimizer { nelder_mead, random_search };

struct SearchConfig {
    std::size_t restarts = 20;
    /// Per restart: simplex iterations, or samples for random search.
    std::size_t max_iters = 4000;
    std::uint64_t seed = 0;
    SearchObjective objective = SearchObjective::fragment_negativity;
    SearchOptimizer optimizer = SearchOptimizer::nelder_mead;
    /// Weight of the squared overlap-floor shortfall.
    double penalty_weight = 1e3;
    /// Starting points are uniform in [-init_scale, init_scale] per parameter.
    double init_scale = 3.141592653589793;
    Tolerances tolerances{};

    /// Throws ValidationError unless restarts >= 1 and max_iters >= 1.
    void validate() const;
};

/// Statistics over every KD value computed while searching for extrema.
struct ObservedRange {
    std::size_t points = 0;
    double min_real = 0.0;
    double max_imag = 0.0;
    double max_modulus = 0.0;
    double min_region_margin = 1.0;
};

struct SearchResult {
    std::vector<double> best_params;
    /// Negativity + imaginarity for fragment search; the extremal Re or Im
    /// value (not negated) for extremal search.
    double best_objective = 0.0;
    FramePtr best_frame;
    /// Best value of each restart, in restart order.
    std::vector<double> trace;
    std::size_t evaluations = 0;

    /// Extremal search only: the maximizing state and the entry index.
    std::optional<ComplexVector> best_state;
    std::optional<std::size_t> best_entry;
    ObservedRange observed;
};

/// Looks for a frame in which every member of the fragment is represented by
/// real nonnegative values. Success is a witness; failure is only heuristic
/// evidence that none exists.
SearchResult search_nonnegative(const Fragment& fragment, const SearchConfig& cfg);

enum class ExtremalMode { min_real, max_imag };

/// Optimizes jointly over basis pairs and pure states (2(d - 1) hypersphere
/// angles) for the most negative real part or the largest imaginary part of
/// any mu entry.
SearchResult search_extremal(ExtremalMode mode, std::size_t dim, const SearchConfig& cfg);

/// Pure state from 2(d - 1) angles: d - 1 hyperspherical angles for the
/// moduli, then d - 1 relative phases.
ComplexVector pure_state_from_angles(std::span<const double> angles, std::size_t d);

}  // namespace kdrep

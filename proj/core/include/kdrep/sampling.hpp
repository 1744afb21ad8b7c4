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

#include <cstdint>
#include <random>

#include "kdrep/config.hpp"
#include "kdrep/linalg.hpp"
#include "kdrep/quantum.hpp"

namespace kdrep {

/// Seeded source of random quantum objects.
///
/// Output is a pure function of the seed and the sequence of calls made.
/// Every method throws DimensionError for dimensions below 2 or above
/// `Tolerances::max_dim`.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, Tolerances tol = {});
    /// Seeds from (seed, stream) so independent workers get independent streams.
    Sampler(std::uint64_t seed, std::uint64_t stream, Tolerances tol = {});

    /// d x d complex matrix with i.i.d. standard complex Gaussian entries.
    ComplexMatrix ginibre(std::size_t rows, std::size_t cols);

    /// Haar unitary: QR of a Ginibre matrix with R's diagonal made positive.
    ComplexMatrix haar_unitary(std::size_t d);
    /// First `cols` columns of a Haar unitary of size `rows`.
    ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols);

    ComplexVector random_pure_vector(std::size_t d);
    DensityOperator random_pure(std::size_t d);
    /// Normalized Wishart G G^dagger / Tr[G G^dagger], G square Ginibre.
    DensityOperator random_density(std::size_t d);
    /// Effects V_k^dagger V_k from a Haar isometry split into blocks.
    Povm random_povm(std::size_t d, std::size_t outcomes);
    /// Single effect 0 <= E <= 1 (one element of a random two-outcome POVM).
    ComplexMatrix random_effect(std::size_t d);
    /// Stinespring: Haar isometry C^{d_in} -> C^{d_out} (x) C^{n_kraus}.
    KrausChannel random_channel(std::size_t d_in, std::size_t d_out, std::size_t n_kraus);
    /// Random instrument: `branches` trace-decreasing maps summing to a channel.
    std::vector<KrausChannel> random_instrument(std::size_t d, std::size_t branches,
                                                std::size_t kraus_per_branch);

    double uniform(double lo, double hi);
    std::mt19937_64& engine() noexcept { return engine_; }

private:
    void check(std::size_t d) const;

    Tolerances tol_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace kdrep

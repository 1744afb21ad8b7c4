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

#include "kdrep/sampling.hpp"

#include <cmath>
#include <string>

#include "kdrep/errors.hpp"

namespace kdrep {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, Tolerances tol) : Sampler(seed, 0, tol) {}

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream, Tolerances tol)
    : tol_(tol), engine_(seeded_engine(seed, stream)) {}

void Sampler::check(std::size_t d) const {
    if (d < 2) throw DimensionError("sampling requires dimension >= 2, got " + std::to_string(d));
    check_dimension(d, tol_.max_dim);
}

ComplexMatrix Sampler::ginibre(std::size_t rows, std::size_t cols) {
    ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    // Column-major fill order is part of the determinism contract.
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            const double re = normal_(engine_);
            const double im = normal_(engine_);
            g(r, c) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

ComplexMatrix Sampler::haar_unitary(std::size_t d) {
    check(d);
    const ComplexMatrix g = ginibre(d, d);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const Complex diag = r(k, k);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(k) *= diag / mag;
    }
    return q;
}

ComplexMatrix Sampler::haar_isometry(std::size_t rows, std::size_t cols) {
    if (cols > rows) throw DimensionError("isometry needs rows >= cols");
    return haar_unitary(rows).leftCols(static_cast<Eigen::Index>(cols));
}

ComplexVector Sampler::random_pure_vector(std::size_t d) {
    check(d);
    ComplexVector v = ginibre(d, 1).col(0);
    return v / v.norm();
}

DensityOperator Sampler::random_pure(std::size_t d) {
    const ComplexVector v = random_pure_vector(d);
    return DensityOperator(v * v.adjoint(), tol_);
}

DensityOperator Sampler::random_density(std::size_t d) {
    check(d);
    const ComplexMatrix g = ginibre(d, d);
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace().real();
    w = 0.5 * (w + w.adjoint());
    return DensityOperator(std::move(w), tol_);
}

Povm Sampler::random_povm(std::size_t d, std::size_t outcomes) {
    check(d);
    if (outcomes == 0) throw DimensionError("POVM needs at least one outcome");
    const auto n = static_cast<Eigen::Index>(d);
    const ComplexMatrix v = haar_isometry(d * outcomes, d);
    std::vector<ComplexMatrix> effects;
    effects.reserve(outcomes);
    for (std::size_t k = 0; k < outcomes; ++k) {
        const auto block = v.middleRows(static_cast<Eigen::Index>(k) * n, n);
        ComplexMatrix e = block.adjoint() * block;
        effects.push_back(0.5 * (e + e.adjoint()));
    }
    return Povm(std::move(effects), tol_);
}

ComplexMatrix Sampler::random_effect(std::size_t d) { return random_povm(d, 2).effect(0); }

KrausChannel Sampler::random_channel(std::size_t d_in, std::size_t d_out, std::size_t n_kraus) {
    check(d_in);
    check(d_out);
    if (n_kraus == 0) throw DimensionError("channel needs at least one Kraus operator");
    if (d_out * n_kraus < d_in) throw DimensionError("Stinespring dilation too small for an isometry");
    const ComplexMatrix v = haar_isometry(d_out * n_kraus, d_in);
    const auto n = static_cast<Eigen::Index>(d_out);
    std::vector<ComplexMatrix> ops;
    ops.reserve(n_kraus);
    for (std::size_t k = 0; k < n_kraus; ++k) {
        ops.push_back(v.middleRows(static_cast<Eigen::Index>(k) * n, n));
    }
    return KrausChannel(std::move(ops), TraceClass::preserving, tol_);
}

std::vector<KrausChannel> Sampler::random_instrument(std::size_t d, std::size_t branches,
                                                     std::size_t kraus_per_branch) {
    check(d);
    if (branches == 0 || kraus_per_branch == 0) throw DimensionError("instrument needs branches and Kraus operators");
    const std::size_t total = branches * kraus_per_branch;
    if (total * d < d) throw DimensionError("instrument dilation too small");
    const ComplexMatrix v = haar_isometry(d * total, d);
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<KrausChannel> out;
    out.reserve(branches);
    for (std::size_t b = 0; b < branches; ++b) {
        std::vector<ComplexMatrix> ops;
        for (std::size_t k = 0; k < kraus_per_branch; ++k) {
            const auto idx = static_cast<Eigen::Index>(b * kraus_per_branch + k);
            ops.push_back(v.middleRows(idx * n, n));
        }
        out.emplace_back(std::move(ops), TraceClass::decreasing, tol_);
    }
    return out;
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

}  // namespace kdrep

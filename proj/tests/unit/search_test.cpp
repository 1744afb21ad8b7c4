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

#include "kdrep/search.hpp"

#include <numbers>

#include <gtest/gtest.h>

#include "kdrep/errors.hpp"
#include "kdrep/sampling.hpp"
#include "test_util.hpp"

using namespace kdrep;
using namespace kdrep::fixtures;

namespace {

Fragment diagonal_fragment() {
    Fragment f;
    f.system_dims = {2};
    ComplexMatrix rho(2, 2);
    rho << 0.3, 0.0, 0.0, 0.7;
    f.states.push_back({"mixed", DensityOperator(rho)});
    f.states.push_back({"one", DensityOperator::pure(ket1())});
    f.measurements.push_back({"z", Povm::from_basis(ComplexMatrix::Identity(2, 2))});
    std::vector<ComplexMatrix> flip(2, ComplexMatrix::Zero(2, 2));
    flip[0](0, 0) = std::sqrt(0.8);
    flip[0](1, 1) = std::sqrt(0.8);
    flip[1] = std::sqrt(0.2) * gates::pauli_x();
    f.channels.push_back({"bitflip", KrausChannel(flip, TraceClass::preserving)});
    return f;
}

Fragment pauli_fragment() {
    Fragment f;
    f.system_dims = {2};
    const ComplexMatrix bases[3] = {ComplexMatrix::Identity(2, 2), gates::hadamard(),
                                    (ComplexMatrix(2, 2) << kInvSqrt2, kInvSqrt2, Complex(0, kInvSqrt2),
                                     Complex(0, -kInvSqrt2))
                                        .finished()};
    const char* names[3] = {"z", "x", "y"};
    for (int b = 0; b < 3; ++b) {
        for (Eigen::Index k = 0; k < 2; ++k) {
            f.states.push_back({std::string(names[b]) + std::to_string(k), DensityOperator::pure(bases[b].col(k))});
        }
        f.measurements.push_back({names[b], Povm::from_basis(bases[b])});
    }
    return f;
}

}  // namespace

TEST(Decode, ZeroParametersAreInadmissible) {
    const BasisParameterization p{2, std::vector<double>(8, 0.0)};
    EXPECT_THROW(decode(p), OverlapFloorViolation);
    EXPECT_EQ(decode_unchecked(p).min_overlap(), 0.0);
}

TEST(Decode, IdentityAndHadamardGiveZX) {
    std::vector<double> params(4, 0.0);
    const auto had = params_from_hermitian(gates::hadamard() * (std::numbers::pi / 2.0));
    params.insert(params.end(), had.begin(), had.end());
    const BasisPair pair = decode({2, params});
    const BasisPair zx = BasisPair::computational_fourier(2);
    EXPECT_LT(max_abs_diff(pair.basis_a(), zx.basis_a()), 1e-14);
    EXPECT_LT(max_abs_diff(pair.basis_a_prime(), zx.basis_a_prime()), 1e-14);
}

TEST(Decode, HermitianParameterRoundTrip) {
    Sampler s(61);
    for (std::size_t d : {2u, 3u, 4u}) {
        std::vector<double> p(d * d);
        for (auto& v : p) v = s.uniform(-2, 2);
        const ComplexMatrix h = hermitian_from_params(p, d);
        EXPECT_EQ(hermiticity_residual(h), 0.0);
        const auto back = params_from_hermitian(h);
        for (std::size_t k = 0; k < p.size(); ++k) EXPECT_DOUBLE_EQ(back[k], p[k]);
        EXPECT_LT(identity_residual(unitary_from_params(p, d).adjoint() * unitary_from_params(p, d)), 1e-13);
    }
    EXPECT_THROW(hermitian_from_params(std::vector<double>(3), 2), DimensionError);
}

TEST(Decode, Continuity) {
    Sampler s(62);
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 2 + t % 2;
        BasisParameterization p{d, std::vector<double>(basis_parameter_count(d))};
        for (auto& v : p.params) v = s.uniform(-3, 3);
        BasisParameterization q = p;
        std::vector<double> dir(q.params.size());
        double norm = 0.0;
        for (auto& v : dir) {
            v = s.uniform(-1, 1);
            norm += v * v;
        }
        for (std::size_t k = 0; k < dir.size(); ++k) q.params[k] += 1e-8 * dir[k] / std::sqrt(norm);
        const BasisPair a = decode_unchecked(p);
        const BasisPair b = decode_unchecked(q);
        EXPECT_LE(max_abs_diff(a.basis_a(), b.basis_a()), 1e-6);
        EXPECT_LE(max_abs_diff(a.basis_a_prime(), b.basis_a_prime()), 1e-6);
    }
}

TEST(Decode, OverlapPenalty) {
    const BasisPair same(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2));
    EXPECT_NEAR(overlap_penalty(same, 0.1), 2 * 0.01, 1e-15);
    EXPECT_EQ(overlap_penalty(BasisPair::computational_fourier(2), 0.1), 0.0);
}

TEST(PureState, AnglesGiveUnitVectors) {
    Sampler s(63);
    for (std::size_t d : {2u, 3u, 5u}) {
        std::vector<double> ang(2 * (d - 1));
        for (auto& a : ang) a = s.uniform(-4, 4);
        EXPECT_NEAR(pure_state_from_angles(ang, d).norm(), 1.0, 1e-14);
    }
    EXPECT_THROW(pure_state_from_angles(std::vector<double>(3), 2), DimensionError);
}

TEST(SearchConfig, Validation) {
    SearchConfig cfg;
    cfg.restarts = 0;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg.restarts = 1;
    cfg.max_iters = 0;
    EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(SearchNonnegative, EmptyFragment) {
    const auto r = search_nonnegative(Fragment{}, SearchConfig{});
    EXPECT_EQ(r.best_objective, 0.0);
    EXPECT_EQ(r.evaluations, 0u);
}

TEST(SearchNonnegative, FindsClassicalWitness) {
    SearchConfig cfg;
    cfg.seed = 3;
    const Fragment frag = diagonal_fragment();
    const auto r = search_nonnegative(frag, cfg);
    EXPECT_LE(r.best_objective, 1e-9);
    ASSERT_TRUE(r.best_frame);
    EXPECT_EQ(certify(frag, r.best_frame).verdict, Verdict::nonnegative);
    EXPECT_DOUBLE_EQ(r.best_objective, *std::min_element(r.trace.begin(), r.trace.end()));
}

TEST(SearchNonnegative, PauliFragmentStaysNegative) {
    SearchConfig cfg;
    cfg.seed = 5;
    cfg.restarts = 20;
    cfg.max_iters = 1500;
    const auto r = search_nonnegative(pauli_fragment(), cfg);
    EXPECT_EQ(r.trace.size(), 20u);
    EXPECT_GT(r.best_objective, 0.1);
}

TEST(SearchNonnegative, DeterministicGivenSeed) {
    SearchConfig cfg;
    cfg.seed = 9;
    cfg.restarts = 3;
    cfg.max_iters = 300;
    const auto a = search_nonnegative(pauli_fragment(), cfg);
    const auto b = search_nonnegative(pauli_fragment(), cfg);
    EXPECT_EQ(a.best_params, b.best_params);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(SearchNonnegative, RandomSearchOptimizer) {
    SearchConfig cfg;
    cfg.optimizer = SearchOptimizer::random_search;
    cfg.restarts = 2;
    cfg.max_iters = 200;
    const auto r = search_nonnegative(pauli_fragment(), cfg);
    EXPECT_EQ(r.evaluations, 400u);
    EXPECT_TRUE(std::isfinite(r.best_objective));
}

TEST(SearchExtremal, ReachesBoundsInsideRegion) {
    SearchConfig cfg;
    cfg.seed = 1;
    cfg.restarts = 10;
    const auto lo = search_extremal(ExtremalMode::min_real, 2, cfg);
    EXPECT_LE(lo.best_objective, -0.1249);
    EXPECT_GE(lo.best_objective, -0.125 - 1e-9);
    EXPECT_GE(lo.observed.min_real, -0.125 - 1e-9);
    EXPECT_GE(lo.observed.min_region_margin, -1e-9);
    ASSERT_TRUE(lo.best_state.has_value());
    ASSERT_TRUE(lo.best_entry.has_value());
    const auto mu = represent_operator(*lo.best_state * lo.best_state->adjoint(), lo.best_frame).entries;
    EXPECT_DOUBLE_EQ(mu(static_cast<Eigen::Index>(*lo.best_entry)).real(), lo.best_objective);

    const auto hi = search_extremal(ExtremalMode::max_imag, 2, cfg);
    EXPECT_GE(hi.best_objective, 0.2499);
    EXPECT_LE(hi.observed.max_imag, 0.25 + 1e-9);
    EXPECT_GE(hi.observed.min_region_margin, -1e-9);
    EXPECT_LE(hi.observed.max_modulus, 1.0 + 1e-12);
}

TEST(SearchExtremal, Qutrit) {
    SearchConfig cfg;
    cfg.seed = 2;
    cfg.restarts = 4;
    const auto lo = search_extremal(ExtremalMode::min_real, 3, cfg);
    EXPECT_LE(lo.best_objective, -0.12);
    EXPECT_GE(lo.observed.min_real, -0.125 - 1e-9);
    EXPECT_THROW(search_extremal(ExtremalMode::min_real, 1, cfg), DimensionError);
}

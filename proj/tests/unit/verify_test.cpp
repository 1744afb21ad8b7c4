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

#include "kdrep/verify.hpp"

#include <gtest/gtest.h>

#include "kdrep/errors.hpp"
#include "kdrep/sampling.hpp"
#include "test_util.hpp"

using namespace kdrep;
using namespace kdrep::fixtures;

namespace {

// States, POVMs and a stochastic channel all diagonal in the computational basis.
Fragment classical_fragment(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    Fragment f;
    f.system_dims = {d};
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) diag(k, k) = static_cast<double>(k + 1);
    diag /= diag.trace();
    f.states.push_back({"mixed", DensityOperator(diag)});
    f.states.push_back({"ground", DensityOperator::pure(basis_vector(d, 0))});
    f.measurements.push_back({"z", Povm::from_basis(ComplexMatrix::Identity(n, n))});
    std::vector<ComplexMatrix> coarse(2, ComplexMatrix::Zero(n, n));
    for (Eigen::Index k = 0; k < n; ++k) coarse[static_cast<std::size_t>(k % 2)](k, k) = 1.0;
    f.measurements.push_back({"parity", Povm(coarse)});
    // P(j | i): stay with 0.7, move to i + 1 with 0.3.
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index i = 0; i < n; ++i) {
        ComplexMatrix stay = ComplexMatrix::Zero(n, n);
        stay(i, i) = std::sqrt(0.7);
        ComplexMatrix move = ComplexMatrix::Zero(n, n);
        move((i + 1) % n, i) = std::sqrt(0.3);
        kraus.push_back(stay);
        kraus.push_back(move);
    }
    f.channels.push_back({"hop", KrausChannel(kraus, TraceClass::preserving)});
    // Instrument: measure parity and reprepare the observed basis state.
    Instrument inst{"parity_inst", {}};
    std::vector<ComplexMatrix> even;
    std::vector<ComplexMatrix> odd;
    for (Eigen::Index k = 0; k < n; ++k) {
        ComplexMatrix p = ComplexMatrix::Zero(n, n);
        p(k, k) = 1.0;
        (k % 2 == 0 ? even : odd).push_back(p);
    }
    inst.branches.push_back({"even", KrausChannel(even, TraceClass::decreasing)});
    inst.branches.push_back({"odd", KrausChannel(odd, TraceClass::decreasing)});
    f.instruments.push_back(inst);
    return f;
}

}  // namespace

TEST(VerifyIdentity, MatchedAndMismatchedFrames) {
    const auto zx = verify_identity_channel(zx_frame(), 1e-12);
    EXPECT_TRUE(zx.passed);
    EXPECT_LE(zx.max_deviation, 1e-12);
    Sampler s(41);
    EXPECT_TRUE(verify_identity_channel(haar_frame(s, 3), 1e-9).passed);
    const auto mismatch = verify_identity_channel(haar_frame(s, 2), haar_frame(s, 2), 1e-9);
    EXPECT_FALSE(mismatch.passed);
    EXPECT_GT(mismatch.max_deviation, 0.0);
}

TEST(VerifySequential, IdentityHadamardAndRandom) {
    Sampler s(42);
    const FramePtr f = zx_frame();
    EXPECT_TRUE(verify_sequential(KrausChannel::identity(2), KrausChannel::identity(2), f, f, f, 1e-12).passed);
    const KrausChannel h = KrausChannel::unitary(gates::hadamard());
    EXPECT_TRUE(verify_sequential(h, h, f, f, f, 1e-12).passed);
    const auto gh = represent_channel(h, f, f).entries;
    EXPECT_LT(identity_residual(gh * gh), 1e-14);
    for (int t = 0; t < 40; ++t) {
        const std::size_t d = 2 + t % 2;
        const auto r = verify_sequential(s.random_channel(d, d, 2), s.random_channel(d, d, 3), haar_frame(s, d),
                                         haar_frame(s, d), haar_frame(s, d), 1e-9);
        EXPECT_TRUE(r.passed) << r.max_deviation;
    }
    EXPECT_THROW(verify_sequential(s.random_channel(2, 3, 2), s.random_channel(2, 2, 2), f, f, f, 1e-9),
                 DimensionError);
}

TEST(VerifyParallel, IdentityAndRandom) {
    Sampler s(43);
    const FramePtr f = zx_frame();
    EXPECT_TRUE(verify_parallel(KrausChannel::identity(2), KrausChannel::identity(2), f, f, f, f, 1e-12).passed);
    for (int t = 0; t < 20; ++t) {
        const auto r = verify_parallel(s.random_channel(2, 2, 2), s.random_channel(2, 2, 2), haar_frame(s, 2),
                                       haar_frame(s, 2), haar_frame(s, 2), haar_frame(s, 2), 1e-9);
        EXPECT_TRUE(r.passed) << r.max_deviation;
    }
}

TEST(VerifyParallel, RandomTensorIdentityFactorizes) {
    Sampler s(44);
    const FramePtr fa = haar_frame(s, 2);
    const FramePtr fb = haar_frame(s, 2);
    const KrausChannel c = s.random_channel(2, 2, 2);
    const auto g = represent_channel(tensor_channel(c, KrausChannel::identity(2)), tensor_frame({fa, fb}),
                                     tensor_frame({fa, fb}));
    const auto gc = represent_channel(c, fa, fa).entries;
    EXPECT_LT(max_abs_diff(g.entries, tensor(gc, ComplexMatrix::Identity(4, 4))), 1e-12);
}

TEST(VerifySwap, PermutationAndInvolution) {
    const FramePtr f = zx_frame();
    const auto r = verify_swap(f, f, 1e-12);
    EXPECT_TRUE(r.passed);
    EXPECT_LE(r.max_deviation, 1e-12);
    const FramePtr ff = tensor_frame({f, f});
    const auto g = represent_channel(KrausChannel::swap(2, 2), ff, ff).entries;
    EXPECT_LT(identity_residual(g * g), 1e-12);
    Sampler s(45);
    EXPECT_TRUE(verify_swap(haar_frame(s, 2), haar_frame(s, 3), 1e-9).passed);
}

TEST(Normalization, StatePovmInstrument) {
    Sampler s(46);
    const FramePtr f = haar_frame(s, 2);
    Fragment frag;
    frag.system_dims = {2};
    frag.states.push_back({"rho", s.random_density(2)});
    const ComplexMatrix e = s.random_effect(2);
    frag.measurements.push_back({"two", Povm({e, ComplexMatrix::Identity(2, 2) - e})});
    const auto branches = s.random_instrument(2, 2, 2);
    frag.instruments.push_back({"inst", {{"a", branches[0]}, {"b", branches[1]}}});
    const auto rep = verify_normalization(frag, f, 1e-12);
    EXPECT_TRUE(rep.passed()) << rep.max_deviation();
    EXPECT_EQ(rep.checks.size(), 3u);
    // A single branch alone is not normalized.
    const auto g0 = represent_channel(branches[0], f, f).entries;
    EXPECT_GT((g0.colwise().sum().array() - Complex(1.0)).abs().maxCoeff(), 1e-3);
}

TEST(Fragment, ValidationErrors) {
    Sampler s(47);
    Fragment f;
    f.system_dims = {2};
    f.states.push_back({"wrong", s.random_density(3)});
    EXPECT_THROW(f.validate(), DimensionError);

    Fragment g;
    g.system_dims = {2};
    g.channels.push_back({"leaky", KrausChannel({0.5 * ComplexMatrix::Identity(2, 2)}, TraceClass::decreasing)});
    EXPECT_THROW(g.validate(), ValidationError);

    Fragment h;
    h.system_dims = {2};
    h.instruments.push_back(
        {"half", {{"only", KrausChannel({0.5 * ComplexMatrix::Identity(2, 2)}, TraceClass::decreasing)}}});
    EXPECT_THROW(h.validate(), ValidationError);
}

TEST(Certify, ClassicalFragmentIsNonnegative) {
    Sampler s(48);
    for (std::size_t d : {2u, 3u}) {
        const Fragment frag = classical_fragment(d);
        // Any admissible second basis works.
        for (int t = 0; t < 10; ++t) {
            const FramePtr f = make_frame(BasisPair(ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                                                            static_cast<Eigen::Index>(d)),
                                                    s.haar_unitary(d)));
            const auto rep = certify(frag, f);
            EXPECT_EQ(rep.verdict, Verdict::nonnegative);
            EXPECT_TRUE(rep.substochasticity.evaluated);
            EXPECT_TRUE(rep.substochasticity.passed);
            EXPECT_FALSE(rep.worst_offender.has_value());
            // Closed form for the diagonal state: rho_ii |<a'_{i'}|a_i>|^2.
            const auto mu = represent_state(frag.states[0].value, f).entries;
            const BasisPair& pair = f->factors().front();
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t ip = 0; ip < d; ++ip) {
                    const double want = frag.states[0].value.matrix()(static_cast<Eigen::Index>(i),
                                                                      static_cast<Eigen::Index>(i))
                                            .real() *
                                        std::norm(pair.overlap(i, ip));
                    EXPECT_LT(std::abs(mu(static_cast<Eigen::Index>(i * d + ip)) - want), 1e-12);
                }
            }
        }
    }
}

TEST(Certify, YPlusIsNegative) {
    Fragment frag;
    frag.system_dims = {2};
    frag.states.push_back({"yplus", DensityOperator::pure(ket_y_plus())});
    const auto rep = certify(frag, zx_frame());
    EXPECT_EQ(rep.verdict, Verdict::negative);
    EXPECT_GE(rep.max_abs_imag, 0.25 - 1e-6);
    EXPECT_NEAR(rep.max_abs_imag, 0.25, 1e-9);
    ASSERT_TRUE(rep.worst_offender.has_value());
    EXPECT_EQ(rep.worst_offender->object, "yplus");
    EXPECT_EQ(rep.worst_offender->row, 0u);
    EXPECT_LT(std::abs(rep.worst_offender->value - Complex(0.25, -0.25)), 1e-12);
    EXPECT_FALSE(rep.substochasticity.evaluated);
}

TEST(Certify, EmptyFragmentIsVacuouslyNonnegative) {
    const auto rep = certify(Fragment{}, nullptr);
    EXPECT_EQ(rep.verdict, Verdict::nonnegative);
    EXPECT_EQ(rep.max_abs_imag, 0.0);
}

TEST(Certify, LargeToleranceDominates) {
    Sampler s(49);
    Fragment frag;
    frag.system_dims = {2};
    frag.states.push_back({"yplus", DensityOperator::pure(ket_y_plus())});
    frag.measurements.push_back({"m", s.random_povm(2, 3)});
    Tolerances tol;
    tol.nonnegativity = 1.0;
    EXPECT_EQ(certify(frag, zx_frame(), tol).verdict, Verdict::nonnegative);
}

TEST(Certify, VerdictInvariantUnderBasisPhases) {
    Sampler s(50);
    const Fragment frag = classical_fragment(2);
    ComplexMatrix a = ComplexMatrix::Identity(2, 2);
    ComplexMatrix ap = s.haar_unitary(2);
    const auto base = certify(frag, make_frame(BasisPair(a, ap, {}, PhaseConvention::as_given)));
    a.col(0) *= std::polar(1.0, 0.7);
    ap.col(1) *= std::polar(1.0, -2.1);
    const auto rotated = certify(frag, make_frame(BasisPair(a, ap, {}, PhaseConvention::as_given)));
    EXPECT_EQ(base.verdict, rotated.verdict);
    Fragment neg;
    neg.system_dims = {2};
    neg.states.push_back({"yplus", DensityOperator::pure(ket_y_plus())});
    EXPECT_EQ(certify(neg, make_frame(BasisPair(a, ap, {}, PhaseConvention::as_given))).verdict,
              certify(neg, make_frame(BasisPair(ComplexMatrix::Identity(2, 2), ap))).verdict);
}

TEST(Certify, SubstochasticChainOnRandomNonnegativeHits) {
    // Whenever a random fragment happens to certify, its consequences hold
    // (certify would throw otherwise).
    Sampler s(51);
    int hits = 0;
    for (int t = 0; t < 200; ++t) {
        Fragment frag = classical_fragment(2);
        const FramePtr f = make_frame(BasisPair(ComplexMatrix::Identity(2, 2), s.haar_unitary(2)));
        const auto rep = certify(frag, f);
        if (rep.verdict == Verdict::nonnegative) {
            ++hits;
            EXPECT_LE(rep.substochasticity.state_error, rep.substochasticity.allowance);
            EXPECT_LE(rep.substochasticity.channel_error, rep.substochasticity.allowance);
        }
    }
    EXPECT_EQ(hits, 200);
}

TEST(Negativity, ClassicalIsZero) {
    const auto rep = negativity_measures(classical_fragment(2), zx_frame());
    EXPECT_EQ(rep.total_negativity, 0.0);
    EXPECT_EQ(rep.total_imaginarity, 0.0);
}

TEST(Negativity, YPlusImaginarityIsOne) {
    Fragment frag;
    frag.system_dims = {2};
    frag.states.push_back({"yplus", DensityOperator::pure(ket_y_plus())});
    const auto rep = negativity_measures(frag, zx_frame());
    EXPECT_NEAR(rep.total_imaginarity, 1.0, 1e-12);
    EXPECT_NEAR(rep.total_negativity, 0.0, 1e-12);
    ASSERT_EQ(rep.per_object.size(), 1u);
    EXPECT_EQ(rep.per_object[0].id, "yplus");
}

TEST(Negativity, ZeroTotalsIffNonnegativeAtZeroTolerance) {
    Sampler s(52);
    Tolerances exact;
    exact.nonnegativity = 0.0;
    for (int t = 0; t < 50; ++t) {
        Fragment frag;
        frag.system_dims = {2};
        frag.states.push_back({"r", t % 2 == 0 ? DensityOperator::maximally_mixed(2) : s.random_density(2)});
        const auto neg = negativity_measures(frag, zx_frame());
        const bool zero = neg.total_negativity == 0.0 && neg.total_imaginarity == 0.0;
        EXPECT_EQ(zero, certify(frag, zx_frame(), exact).verdict == Verdict::nonnegative);
    }
}

TEST(Negativity, LipschitzInTheState) {
    // Totals move by O(eps) under an eps trace-norm perturbation.
    Sampler s(53);
    const FramePtr f = haar_frame(s, 2);
    const ComplexMatrix rho = s.random_density(2).matrix();
    const ComplexMatrix sigma = s.random_density(2).matrix();
    auto total = [&](double eps) {
        Fragment frag;
        frag.system_dims = {2};
        frag.states.push_back({"r", DensityOperator((1 - eps) * rho + eps * sigma)});
        const auto n = negativity_measures(frag, f);
        return n.total_negativity + n.total_imaginarity;
    };
    const double base = total(0.0);
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        // |mu| <= |F| ||rho - sigma||_1 and sum_k ||F_k|| <= d^2.
        EXPECT_LE(std::abs(total(eps) - base), 2.0 * 4.0 * 2.0 * eps);
    }
}

TEST(RandomSuites, PassAtQubitAndQutrit) {
    for (std::size_t d : {2u, 3u}) {
        SuiteOptions opts;
        opts.dim = d;
        opts.trials = 10;
        opts.seed = 7;
        for (const auto& c : random_functoriality_suite(opts)) EXPECT_TRUE(c.passed) << c.name << " " << c.max_deviation;
        opts.tol = 1e-12;
        for (const auto& c : random_normalization_suite(opts)) EXPECT_TRUE(c.passed) << c.name << " " << c.max_deviation;
        const auto sweep = random_region_sweep(opts);
        EXPECT_GE(sweep.min_margin, -1e-9);
        EXPECT_LE(sweep.max_modulus, 1.0 + 1e-12);
        EXPECT_EQ(sweep.points, 10 * d * d);
    }
}

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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "kdrep/errors.hpp"
#include "kdrep/sampling.hpp"

namespace kdrep {

std::size_t Fragment::dim() const {
    return std::accumulate(system_dims.begin(), system_dims.end(), std::size_t{1}, std::multiplies<>());
}

bool Fragment::empty() const {
    return states.empty() && measurements.empty() && channels.empty() && instruments.empty();
}

void Fragment::validate(const Tolerances& tol) const {
    const std::size_t d = dim();
    if (!empty()) {
        if (system_dims.empty()) throw DimensionError("fragment has members but no systems");
        check_dimension(d, tol.max_dim);
    }
    for (const auto& s : states) {
        if (s.value.dim() != d) throw DimensionError("state '" + s.name + "' does not match the fragment dimension");
    }
    for (const auto& m : measurements) {
        if (m.value.dim() != d) {
            throw DimensionError("measurement '" + m.name + "' does not match the fragment dimension");
        }
    }
    for (const auto& c : channels) {
        if (c.value.dim_in() != d || c.value.dim_out() != d) {
            throw DimensionError("channel '" + c.name + "' does not act on the fragment's system");
        }
        if (c.value.trace_class() != TraceClass::preserving) {
            throw ValidationError("channel '" + c.name +
                                  "' is not trace-preserving; trace-decreasing maps belong in an instrument");
        }
    }
    for (const auto& inst : instruments) {
        if (inst.branches.empty()) throw ValidationError("instrument '" + inst.name + "' has no branches");
        std::vector<KrausChannel> branches;
        for (const auto& b : inst.branches) {
            if (b.value.dim_in() != d || b.value.dim_out() != d) {
                throw DimensionError("instrument branch '" + inst.name + "/" + b.name +
                                     "' does not act on the fragment's system");
            }
            if (b.value.trace_class() == TraceClass::unconstrained) {
                throw ValidationError("instrument branch '" + inst.name + "/" + b.name + "' is not trace-decreasing");
            }
            branches.push_back(b.value);
        }
        const double res = channel_sum(branches, TraceClass::unconstrained, tol).completeness_residual();
        if (res > tol.validation) {
            throw ValidationError("instrument '" + inst.name + "' does not sum to a trace-preserving channel", res);
        }
    }
}

std::vector<RepresentedObject> represent_fragment(const Fragment& fragment, FramePtr frame) {
    std::vector<RepresentedObject> out;
    for (const auto& s : fragment.states) {
        out.push_back({s.name, ObjectKind::state, represent_state(s.value, frame).entries, TraceClass::preserving});
    }
    for (const auto& m : fragment.measurements) {
        for (std::size_t k = 0; k < m.value.size(); ++k) {
            out.push_back({m.name + "[" + std::to_string(k) + "]", ObjectKind::effect,
                           represent_effect(m.value.effect(k), frame).entries, TraceClass::preserving});
        }
    }
    for (const auto& c : fragment.channels) {
        out.push_back({c.name, ObjectKind::channel, represent_channel(c.value, frame, frame).entries,
                       c.value.trace_class()});
    }
    for (const auto& inst : fragment.instruments) {
        for (const auto& b : inst.branches) {
            out.push_back({inst.name + "/" + b.name, ObjectKind::instrument_branch,
                           represent_channel(b.value, frame, frame).entries, b.value.trace_class()});
        }
    }
    return out;
}

CheckResult verify_identity_channel(FramePtr frame_in, FramePtr frame_out, double tol) {
    const KdChannelMatrix g = represent_channel(KrausChannel::identity(frame_in->dim()), frame_in, frame_out);
    const double dev = identity_residual(g.entries);
    return {"identity", dev <= tol, dev};
}

CheckResult verify_identity_channel(FramePtr frame, double tol) { return verify_identity_channel(frame, frame, tol); }

CheckResult verify_sequential(const KrausChannel& first, const KrausChannel& second, FramePtr frame_in,
                              FramePtr frame_mid, FramePtr frame_out, double tol) {
    if (first.dim_out() != second.dim_in()) throw DimensionError("verify_sequential: channels do not compose");
    const ComplexMatrix direct = represent_channel(compose(second, first), frame_in, frame_out).entries;
    const ComplexMatrix g1 = represent_channel(first, frame_in, frame_mid).entries;
    const ComplexMatrix g2 = represent_channel(second, frame_mid, frame_out).entries;
    const double dev = max_abs_diff(direct, g2 * g1);
    return {"sequential", dev <= tol, dev};
}

CheckResult verify_parallel(const KrausChannel& a, const KrausChannel& b, FramePtr a_in, FramePtr a_out,
                            FramePtr b_in, FramePtr b_out, double tol) {
    const FramePtr in = tensor_frame({a_in, b_in});
    const FramePtr out = tensor_frame({a_out, b_out});
    const ComplexMatrix direct = represent_channel(tensor_channel(a, b), in, out).entries;
    const ComplexMatrix ga = represent_channel(a, a_in, a_out).entries;
    const ComplexMatrix gb = represent_channel(b, b_in, b_out).entries;
    const double dev = max_abs_diff(direct, tensor(ga, gb));
    return {"parallel", dev <= tol, dev};
}

CheckResult verify_swap(FramePtr frame_a, FramePtr frame_b, double tol) {
    const std::size_t na = frame_a->size();
    const std::size_t nb = frame_b->size();
    const FramePtr in = tensor_frame({frame_a, frame_b});
    const FramePtr out = tensor_frame({frame_b, frame_a});
    const ComplexMatrix g = represent_channel(KrausChannel::swap(frame_a->dim(), frame_b->dim()), in, out).entries;
    ComplexMatrix perm = ComplexMatrix::Zero(static_cast<Eigen::Index>(na * nb), static_cast<Eigen::Index>(na * nb));
    for (std::size_t p = 0; p < na; ++p) {
        for (std::size_t q = 0; q < nb; ++q) {
            perm(static_cast<Eigen::Index>(q * na + p), static_cast<Eigen::Index>(p * nb + q)) = 1.0;
        }
    }
    const double dev = max_abs_diff(g, perm);
    return {"swap", dev <= tol, dev};
}

bool NormalizationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double NormalizationReport::max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.max_deviation);
    return m;
}

namespace {

double column_sum_deviation(const ComplexMatrix& g) {
    if (g.cols() == 0) return 0.0;
    return (g.colwise().sum().array() - Complex(1.0)).abs().maxCoeff();
}

}  // namespace

NormalizationReport verify_normalization(const Fragment& fragment, FramePtr frame, double tol) {
    NormalizationReport report;
    for (const auto& s : fragment.states) {
        const ComplexVector mu = represent_state(s.value, frame).entries;
        const double dev = std::abs(mu.sum() - Complex(1.0));
        report.checks.push_back({"state:" + s.name, dev <= tol, dev});
    }
    for (const auto& m : fragment.measurements) {
        ComplexVector total = ComplexVector::Zero(static_cast<Eigen::Index>(frame->size()));
        for (const auto& e : m.value.effects()) total += represent_effect(e, frame).entries;
        const double dev = (total.array() - Complex(1.0)).abs().maxCoeff();
        report.checks.push_back({"measurement:" + m.name, dev <= tol, dev});
    }
    for (const auto& c : fragment.channels) {
        const double dev = column_sum_deviation(represent_channel(c.value, frame, frame).entries);
        report.checks.push_back({"channel:" + c.name, dev <= tol, dev});
    }
    for (const auto& inst : fragment.instruments) {
        const auto n = static_cast<Eigen::Index>(frame->size());
        ComplexMatrix total = ComplexMatrix::Zero(n, n);
        for (const auto& b : inst.branches) total += represent_channel(b.value, frame, frame).entries;
        const double dev = column_sum_deviation(total);
        report.checks.push_back({"instrument:" + inst.name, dev <= tol, dev});
    }
    return report;
}

const char* to_string(Verdict v) { return v == Verdict::nonnegative ? "NONNEGATIVE" : "NEGATIVE"; }

namespace {

// How far an entry is from being real and nonnegative.
double violation(Complex z) { return std::max(-z.real(), std::abs(z.imag())); }

SubstochasticityCheck check_consequences(const std::vector<RepresentedObject>& objects, const Fragment& fragment,
                                         std::size_t frame_size, const Tolerances& tol) {
    SubstochasticityCheck chk;
    chk.evaluated = true;
    // Each bound follows from nonnegativity up to one tolerance per summed
    // entry; the validation tolerance absorbs round-off.
    std::size_t max_terms = frame_size;
    for (const auto& m : fragment.measurements) max_terms = std::max(max_terms, m.value.size());
    for (const auto& inst : fragment.instruments) max_terms = std::max(max_terms, inst.branches.size() * frame_size);
    chk.allowance = static_cast<double>(max_terms) * tol.nonnegativity + tol.validation;

    for (const auto& o : objects) {
        switch (o.kind) {
            case ObjectKind::state: {
                const double sum_err = std::abs(o.entries.sum() - Complex(1.0));
                const double low = std::max(0.0, -o.entries.real().minCoeff());
                const double high = std::max(0.0, o.entries.real().maxCoeff() - 1.0);
                chk.state_error = std::max({chk.state_error, sum_err, low, high});
                break;
            }
            case ObjectKind::effect: {
                const double low = std::max(0.0, -o.entries.real().minCoeff());
                const double high = std::max(0.0, o.entries.real().maxCoeff() - 1.0);
                chk.effect_error = std::max({chk.effect_error, low, high});
                break;
            }
            case ObjectKind::channel:
            case ObjectKind::instrument_branch: {
                const double low = std::max(0.0, -o.entries.real().minCoeff());
                const auto sums = o.entries.colwise().sum();
                double col = 0.0;
                for (Eigen::Index c = 0; c < sums.size(); ++c) {
                    col = std::max(col, o.kind == ObjectKind::channel ? std::abs(sums(c) - Complex(1.0))
                                                                      : std::max(0.0, sums(c).real() - 1.0));
                }
                chk.channel_error = std::max({chk.channel_error, low, col});
                break;
            }
        }
    }
    chk.passed = chk.state_error <= chk.allowance && chk.effect_error <= chk.allowance &&
                 chk.channel_error <= chk.allowance;
    return chk;
}

}  // namespace

CertificationReport certify(const Fragment& fragment, FramePtr frame, const Tolerances& tol) {
    fragment.validate(tol);
    CertificationReport report;
    report.frame = frame;
    report.tolerance = tol.nonnegativity;
    if (fragment.empty()) return report;
    if (!frame || frame->dim() != fragment.dim()) throw DimensionError("certify: frame does not match the fragment");

    const auto objects = represent_fragment(fragment, frame);
    double worst = -std::numeric_limits<double>::infinity();
    bool first = true;
    for (const auto& o : objects) {
        for (Eigen::Index c = 0; c < o.entries.cols(); ++c) {
            for (Eigen::Index r = 0; r < o.entries.rows(); ++r) {
                const Complex z = o.entries(r, c);
                if (first) {
                    report.min_real_entry = z.real();
                    first = false;
                }
                report.min_real_entry = std::min(report.min_real_entry, z.real());
                report.max_abs_imag = std::max(report.max_abs_imag, std::abs(z.imag()));
                const double v = violation(z);
                if (v > worst) {
                    worst = v;
                    EntryRef ref{o.id, static_cast<std::size_t>(r), std::nullopt, z};
                    if (o.kind == ObjectKind::channel || o.kind == ObjectKind::instrument_branch) {
                        ref.column = static_cast<std::size_t>(c);
                    }
                    report.worst_offender = ref;
                }
            }
        }
    }
    const bool nonneg = report.max_abs_imag <= tol.nonnegativity && report.min_real_entry >= -tol.nonnegativity;
    report.verdict = nonneg ? Verdict::nonnegative : Verdict::negative;
    if (nonneg) {
        report.worst_offender.reset();
        report.substochasticity = check_consequences(objects, fragment, frame->size(), tol);
        if (!report.substochasticity.passed) {
            throw CertificationInvariantError(
                "nonnegative representation is not stochastic; state/effect/channel errors " +
                std::to_string(report.substochasticity.state_error) + "/" +
                std::to_string(report.substochasticity.effect_error) + "/" +
                std::to_string(report.substochasticity.channel_error));
        }
    }
    return report;
}

NegativityReport negativity_measures(const std::vector<RepresentedObject>& objects) {
    NegativityReport report;
    for (const auto& o : objects) {
        ObjectNegativity on{o.id, 0.0, 0.0};
        for (Eigen::Index c = 0; c < o.entries.cols(); ++c) {
            for (Eigen::Index r = 0; r < o.entries.rows(); ++r) {
                const Complex z = o.entries(r, c);
                on.negativity += std::max(0.0, -z.real());
                on.imaginarity += std::abs(z.imag());
            }
        }
        report.total_negativity += on.negativity;
        report.total_imaginarity += on.imaginarity;
        report.per_object.push_back(std::move(on));
    }
    return report;
}

NegativityReport negativity_measures(const Fragment& fragment, FramePtr frame) {
    if (fragment.empty()) return {};
    return negativity_measures(represent_fragment(fragment, std::move(frame)));
}

namespace {

FramePtr random_frame(Sampler& s, std::size_t d, const Tolerances& tol) {
    // Haar pairs are admissible with probability one; redraw on the null event.
    for (;;) {
        BasisPair pair(s.haar_unitary(d), s.haar_unitary(d), tol);
        if (pair.min_overlap() >= tol.overlap_floor) return make_frame(pair, tol);
    }
}

void fold(CheckResult& acc, const CheckResult& c) {
    acc.max_deviation = std::max(acc.max_deviation, c.max_deviation);
    acc.passed = acc.passed && c.passed;
}

}  // namespace

std::vector<CheckResult> random_functoriality_suite(const SuiteOptions& opts) {
    Sampler s(opts.seed, 1, opts.tolerances);
    const std::size_t d = opts.dim;
    CheckResult ident{"identity", true, 0.0};
    CheckResult seq{"sequential", true, 0.0};
    CheckResult par{"parallel", true, 0.0};
    CheckResult swp{"swap", true, 0.0};
    for (std::size_t t = 0; t < opts.trials; ++t) {
        const FramePtr f1 = random_frame(s, d, opts.tolerances);
        const FramePtr f2 = random_frame(s, d, opts.tolerances);
        const FramePtr f3 = random_frame(s, d, opts.tolerances);
        fold(ident, verify_identity_channel(f1, opts.tol));

        const KrausChannel c1 = s.random_channel(d, d, 1 + t % d + 1);
        const KrausChannel c2 = s.random_channel(d, d, 1 + (t + 1) % d + 1);
        fold(seq, verify_sequential(c1, c2, f1, f2, f3, opts.tol));

        // Parallel composition squares the frame size; keep factors at d = 2
        // unless the caller asked for less.
        const std::size_t dp = std::min<std::size_t>(d, 2);
        const FramePtr pa_in = random_frame(s, dp, opts.tolerances);
        const FramePtr pa_out = random_frame(s, dp, opts.tolerances);
        const FramePtr pb_in = random_frame(s, dp, opts.tolerances);
        const FramePtr pb_out = random_frame(s, dp, opts.tolerances);
        const KrausChannel ca = s.random_channel(dp, dp, 2);
        const KrausChannel cb = s.random_channel(dp, dp, 2);
        fold(par, verify_parallel(ca, cb, pa_in, pa_out, pb_in, pb_out, opts.tol));
        fold(swp, verify_swap(pa_in, pb_in, opts.tol));
    }
    return {ident, seq, par, swp};
}

std::vector<CheckResult> random_normalization_suite(const SuiteOptions& opts) {
    Sampler s(opts.seed, 2, opts.tolerances);
    const std::size_t d = opts.dim;
    CheckResult states{"state_sum", true, 0.0};
    CheckResult effects{"povm_sum", true, 0.0};
    CheckResult unit{"unit_effect", true, 0.0};
    CheckResult channels{"channel_column_sum", true, 0.0};
    CheckResult instruments{"instrument_column_sum", true, 0.0};
    for (std::size_t t = 0; t < opts.trials; ++t) {
        const FramePtr f = random_frame(s, d, opts.tolerances);
        Fragment frag;
        frag.system_dims = {d};
        frag.states.push_back({"rho", s.random_density(d)});
        frag.measurements.push_back({"m", s.random_povm(d, 2 + t % 3)});
        frag.channels.push_back({"c", s.random_channel(d, d, 1 + t % 3)});
        Instrument inst{"i", {}};
        for (auto& br : s.random_instrument(d, 2, 1 + t % 2)) inst.branches.push_back({"b", std::move(br)});
        frag.instruments.push_back(std::move(inst));
        const auto rep = verify_normalization(frag, f, opts.tol);
        fold(states, rep.checks[0]);
        fold(effects, rep.checks[1]);
        fold(channels, rep.checks[2]);
        fold(instruments, rep.checks[3]);
        const auto n = static_cast<Eigen::Index>(d);
        const ComplexVector ones = represent_effect(ComplexMatrix::Identity(n, n), f).entries;
        const double dev = (ones.array() - Complex(1.0)).abs().maxCoeff();
        fold(unit, {"unit_effect", dev <= opts.tol, dev});
    }
    return {states, effects, unit, channels, instruments};
}

RegionSweep random_region_sweep(const SuiteOptions& opts) {
    Sampler s(opts.seed, 3, opts.tolerances);
    RegionSweep sweep;
    sweep.min_margin = std::numeric_limits<double>::infinity();
    sweep.min_real = std::numeric_limits<double>::infinity();
    sweep.max_imag = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < opts.trials; ++t) {
        const FramePtr f = random_frame(s, opts.dim, opts.tolerances);
        const ComplexVector psi = s.random_pure_vector(opts.dim);
        const ComplexVector mu = represent_operator(psi * psi.adjoint(), f).entries;
        for (Eigen::Index k = 0; k < mu.size(); ++k) {
            const Complex z = mu(k);
            sweep.min_margin = std::min(sweep.min_margin, region_check(KdPoint::from_complex(z)));
            sweep.max_modulus = std::max(sweep.max_modulus, std::abs(z));
            sweep.min_real = std::min(sweep.min_real, z.real());
            sweep.max_imag = std::max(sweep.max_imag, z.imag());
            ++sweep.points;
        }
    }
    if (sweep.points == 0) sweep = RegionSweep{};
    return sweep;
}

}  // namespace kdrep

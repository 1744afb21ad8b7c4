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
#include <stdexcept>
#include <string>
#include <vector>

#include "kdrep/config.hpp"
#include "kdrep/frame.hpp"
#include "kdrep/quantum.hpp"
#include "kdrep/repr.hpp"

namespace kdrep {

template <class T>
struct Named {
    std::string name;
    T value;
};

/// Trace-decreasing branches that together form a channel.
struct Instrument {
    std::string name;
    std::vector<Named<KrausChannel>> branches;
};

/// A finite scenario: states, measurements, channels and instruments on one
/// (possibly composite) system. Channels map the full system to itself.
struct Fragment {
    std::vector<std::size_t> system_dims;
    std::vector<Named<DensityOperator>> states;
    std::vector<Named<Povm>> measurements;
    std::vector<Named<KrausChannel>> channels;
    std::vector<Instrument> instruments;

    /// Product of system_dims (1 when there are no systems).
    std::size_t dim() const;
    bool empty() const;

    /// Throws DimensionError on inconsistent dimensions and ValidationError
    /// when an instrument does not sum to a channel or a trace-decreasing map
    /// appears outside an instrument.
    void validate(const Tolerances& tol = {}) const;
};

enum class ObjectKind { state, effect, channel, instrument_branch };

/// One member of a fragment expressed in a frame. States and effects are
/// stored as single-column matrices.
struct RepresentedObject {
    std::string id;
    ObjectKind kind;
    ComplexMatrix entries;
    TraceClass trace_class = TraceClass::preserving;
};

/// Every fragment member in a stable order: states, effects (measurement by
/// measurement), channels, instrument branches.
std::vector<RepresentedObject> represent_fragment(const Fragment& fragment, FramePtr frame);

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
};

/// Gamma of the identity channel against the identity matrix. Passing
/// different frames is allowed and is expected to fail.
CheckResult verify_identity_channel(FramePtr frame_in, FramePtr frame_out, double tol);
CheckResult verify_identity_channel(FramePtr frame, double tol);

/// Gamma(second o first) against Gamma(second) * Gamma(first).
CheckResult verify_sequential(const KrausChannel& first, const KrausChannel& second, FramePtr frame_in,
                              FramePtr frame_mid, FramePtr frame_out, double tol);

/// Gamma(a (x) b) on tensor frames against kron(Gamma(a), Gamma(b)).
CheckResult verify_parallel(const KrausChannel& a, const KrausChannel& b, FramePtr a_in, FramePtr a_out,
                            FramePtr b_in, FramePtr b_out, double tol);

/// Gamma(swap) from frame_a (x) frame_b to frame_b (x) frame_a against the
/// block permutation matrix.
CheckResult verify_swap(FramePtr frame_a, FramePtr frame_b, double tol);

struct NormalizationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    double max_deviation() const;
};

/// Sum mu = 1 per state, unit column sums per channel and per instrument, and
/// effects of each POVM summing to the all-ones vector.
NormalizationReport verify_normalization(const Fragment& fragment, FramePtr frame, double tol);

enum class Verdict { nonnegative, negative };
const char* to_string(Verdict v);

struct EntryRef {
    std::string object;
    std::size_t row = 0;
    /// Input index for channel matrices; empty for states and effects.
    std::optional<std::size_t> column;
    Complex value;
};

/// Consequences of a nonnegative representation: states are probability
/// vectors, effects lie in [0, 1], channels are column-(sub)stochastic.
/// The *_error fields are the worst violation observed (0 when satisfied).
struct SubstochasticityCheck {
    bool evaluated = false;
    bool passed = true;
    double state_error = 0.0;
    double effect_error = 0.0;
    double channel_error = 0.0;
    double allowance = 0.0;
};

struct CertificationReport {
    FramePtr frame;
    Verdict verdict = Verdict::nonnegative;
    double tolerance = 0.0;
    /// Both are 0 for an empty fragment.
    double max_abs_imag = 0.0;
    double min_real_entry = 0.0;
    std::optional<EntryRef> worst_offender;
    SubstochasticityCheck substochasticity;
};

/// Thrown when a NONNEGATIVE verdict is not accompanied by its probabilistic
/// consequences. This cannot happen for valid inputs.
class CertificationInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Nonnegative iff every entry of every represented member has
/// -Re <= tol and |Im| <= tol. The verdict concerns this frame only.
CertificationReport certify(const Fragment& fragment, FramePtr frame, const Tolerances& tol = {});

struct ObjectNegativity {
    std::string id;
    double negativity = 0.0;
    double imaginarity = 0.0;
};

struct NegativityReport {
    /// sum of max(0, -Re) over all entries.
    double total_negativity = 0.0;
    /// sum of |Im| over all entries.
    double total_imaginarity = 0.0;
    std::vector<ObjectNegativity> per_object;
};

NegativityReport negativity_measures(const Fragment& fragment, FramePtr frame);
NegativityReport negativity_measures(const std::vector<RepresentedObject>& objects);

/// Randomized batteries shared by the CLI and the acceptance suite.
struct SuiteOptions {
    std::size_t dim = 2;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    Tolerances tolerances{};
};

/// Identity, sequential, parallel and swap checks on Haar-random frames.
std::vector<CheckResult> random_functoriality_suite(const SuiteOptions& opts);
/// Normalization of random states, POVMs, channels and instruments.
std::vector<CheckResult> random_normalization_suite(const SuiteOptions& opts);

struct RegionSweep {
    std::size_t points = 0;
    double min_margin = 0.0;
    double max_modulus = 0.0;
    double min_real = 0.0;
    double max_imag = 0.0;
};

/// Region inequality over every mu entry of random pure states in random
/// frames.
RegionSweep random_region_sweep(const SuiteOptions& opts);

}  // namespace kdrep

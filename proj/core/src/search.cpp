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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "kdrep/errors.hpp"
#include "kdrep/nelder_mead.hpp"
#include "kdrep/repr.hpp"

namespace kdrep {

namespace {

// Objective value outside the admissible frame manifold, on top of the
// overlap penalty. Larger than any attainable in-manifold value of the
// extremal objectives.
constexpr double kInadmissible = 1e3;

std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), 0x6b64u};
    return std::mt19937_64(seq);
}

std::vector<double> random_point(std::mt19937_64& eng, std::size_t n, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> x(n);
    for (auto& v : x) v = u(eng);
    return x;
}

struct Minimum {
    std::vector<double> x;
    double value = std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;
};

Minimum minimize(const optim::Objective& f, std::size_t n, std::mt19937_64& eng, const SearchConfig& cfg) {
    Minimum best;
    if (cfg.optimizer == SearchOptimizer::random_search) {
        for (std::size_t it = 0; it < cfg.max_iters; ++it) {
            auto x = random_point(eng, n, cfg.init_scale);
            const double v = f(std::span<const double>(x));
            ++best.evaluations;
            if (v < best.value) {
                best.value = v;
                best.x = std::move(x);
            }
        }
        return best;
    }
    optim::NelderMeadOptions opts;
    opts.max_iterations = cfg.max_iters;
    opts.initial_step = 0.5;
    auto res = optim::nelder_mead(f, random_point(eng, n, cfg.init_scale), opts);
    best.x = std::move(res.x);
    best.value = res.value;
    best.evaluations = res.evaluations;
    return best;
}

std::vector<BasisPair> decode_systems(std::span<const double> params, const std::vector<std::size_t>& dims,
                                      const Tolerances& tol) {
    std::vector<BasisPair> pairs;
    std::size_t offset = 0;
    for (std::size_t d : dims) {
        const std::size_t n = basis_parameter_count(d);
        BasisParameterization p{d, std::vector<double>(params.begin() + static_cast<std::ptrdiff_t>(offset),
                                                       params.begin() + static_cast<std::ptrdiff_t>(offset + n))};
        pairs.push_back(decode_unchecked(p, tol));
        offset += n;
    }
    return pairs;
}

FramePtr frame_from_pairs(const std::vector<BasisPair>& pairs, const Tolerances& tol) {
    std::vector<FramePtr> frames;
    for (const auto& p : pairs) frames.push_back(make_frame(p, tol));
    return tensor_frame(frames);
}

}  // namespace

ComplexMatrix hermitian_from_params(std::span<const double> params, std::size_t d) {
    if (params.size() != hermitian_parameter_count(d)) {
        throw DimensionError("hermitian_from_params: expected " + std::to_string(d * d) + " parameters");
    }
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    std::size_t idx = 0;
    for (Eigen::Index k = 0; k < n; ++k) h(k, k) = params[idx++];
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = r + 1; c < n; ++c) {
            h(r, c) = Complex(params[idx], params[idx + 1]);
            h(c, r) = std::conj(h(r, c));
            idx += 2;
        }
    }
    return h;
}

std::vector<double> params_from_hermitian(const ComplexMatrix& h) {
    if (!is_square(h)) throw DimensionError("params_from_hermitian: matrix must be square");
    const ComplexMatrix herm = 0.5 * (h + h.adjoint());
    const Eigen::Index n = herm.rows();
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(n * n));
    for (Eigen::Index k = 0; k < n; ++k) p.push_back(herm(k, k).real());
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = r + 1; c < n; ++c) {
            p.push_back(herm(r, c).real());
            p.push_back(herm(r, c).imag());
        }
    }
    return p;
}

ComplexMatrix unitary_from_params(std::span<const double> params, std::size_t d) {
    const ComplexMatrix h = hermitian_from_params(params, d);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const ComplexVector phases = (kI * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

BasisPair decode_unchecked(const BasisParameterization& p, const Tolerances& tol) {
    const std::size_t d = p.dim;
    if (d == 0) throw DimensionError("decode: dimension must be positive");
    if (p.params.size() != basis_parameter_count(d)) {
        throw DimensionError("decode: expected " + std::to_string(basis_parameter_count(d)) + " parameters, got " +
                             std::to_string(p.params.size()));
    }
    for (double v : p.params) {
        if (!std::isfinite(v)) throw ValidationError("decode: non-finite parameter");
    }
    const std::span<const double> all(p.params);
    const std::size_t half = hermitian_parameter_count(d);
    return BasisPair(unitary_from_params(all.first(half), d), unitary_from_params(all.subspan(half), d), tol);
}

BasisPair decode(const BasisParameterization& p, const Tolerances& tol) {
    BasisPair pair = decode_unchecked(p, tol);
    if (pair.min_overlap() < tol.overlap_floor) {
        throw OverlapFloorViolation("decoded basis pair has min |<a'|a>| = " + std::to_string(pair.min_overlap()),
                                    pair.min_overlap());
    }
    return pair;
}

double overlap_penalty(const BasisPair& pair, double floor) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < pair.overlaps().rows(); ++i) {
        for (Eigen::Index j = 0; j < pair.overlaps().cols(); ++j) {
            const double gap = floor - std::abs(pair.overlaps()(i, j));
            if (gap > 0.0) sum += gap * gap;
        }
    }
    return sum;
}

void SearchConfig::validate() const {
    if (restarts < 1) throw ValidationError("search needs restarts >= 1");
    if (max_iters < 1) throw ValidationError("search needs max_iters >= 1");
    if (!(penalty_weight >= 0.0)) throw ValidationError("penalty weight must be nonnegative");
}

SearchResult search_nonnegative(const Fragment& fragment, const SearchConfig& cfg) {
    cfg.validate();
    const Tolerances& tol = cfg.tolerances;
    fragment.validate(tol);
    SearchResult result;
    if (fragment.empty()) {
        result.trace = {0.0};
        return result;
    }
    const std::vector<std::size_t>& dims = fragment.system_dims;
    std::size_t n = 0;
    for (std::size_t d : dims) n += basis_parameter_count(d);

    std::size_t evaluations = 0;
    const optim::Objective objective = [&](std::span<const double> x) {
        ++evaluations;
        const auto pairs = decode_systems(x, dims, tol);
        double penalty = 0.0;
        bool admissible = true;
        for (const auto& p : pairs) {
            penalty += overlap_penalty(p, tol.overlap_floor);
            admissible = admissible && p.min_overlap() >= tol.overlap_floor;
        }
        if (!admissible) return kInadmissible + cfg.penalty_weight * penalty;
        const auto neg = negativity_measures(represent_fragment(fragment, frame_from_pairs(pairs, tol)));
        return neg.total_negativity + neg.total_imaginarity + cfg.penalty_weight * penalty;
    };

    result.best_objective = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        auto eng = restart_engine(cfg.seed, r);
        const Minimum m = minimize(objective, n, eng, cfg);
        result.trace.push_back(m.value);
        if (m.value < result.best_objective) {
            result.best_objective = m.value;
            result.best_params = m.x;
        }
        // A witness is conclusive; further restarts cannot improve on it.
        if (result.best_objective <= tol.nonnegativity) break;
    }
    result.evaluations = evaluations;
    const auto pairs = decode_systems(result.best_params, dims, tol);
    const bool admissible =
        std::all_of(pairs.begin(), pairs.end(), [&](const BasisPair& p) { return p.min_overlap() >= tol.overlap_floor; });
    if (admissible) result.best_frame = frame_from_pairs(pairs, tol);
    return result;
}

ComplexVector pure_state_from_angles(std::span<const double> angles, std::size_t d) {
    if (d < 1 || angles.size() != 2 * (d - 1)) {
        throw DimensionError("pure_state_from_angles: expected " + std::to_string(2 * (d - 1)) + " angles");
    }
    ComplexVector psi(static_cast<Eigen::Index>(d));
    double sines = 1.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        psi(static_cast<Eigen::Index>(k)) = sines * std::cos(angles[k]);
        sines *= std::sin(angles[k]);
    }
    psi(static_cast<Eigen::Index>(d - 1)) = sines;
    for (std::size_t k = 1; k < d; ++k) {
        psi(static_cast<Eigen::Index>(k)) *= std::polar(1.0, angles[d - 2 + k]);
    }
    return psi;
}

SearchResult search_extremal(ExtremalMode mode, std::size_t dim, const SearchConfig& cfg) {
    cfg.validate();
    const Tolerances& tol = cfg.tolerances;
    if (dim < 2) throw DimensionError("search_extremal needs dimension >= 2");
    check_dimension(dim, tol.max_dim);
    const std::size_t nb = basis_parameter_count(dim);
    const std::size_t n = nb + 2 * (dim - 1);

    SearchResult result;
    ObservedRange& seen = result.observed;
    seen.min_real = std::numeric_limits<double>::infinity();
    seen.max_imag = -std::numeric_limits<double>::infinity();
    seen.min_region_margin = std::numeric_limits<double>::infinity();

    std::size_t evaluations = 0;
    const optim::Objective objective = [&](std::span<const double> x) {
        ++evaluations;
        const BasisPair pair = decode_unchecked(BasisParameterization{dim, {x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nb)}}, tol);
        if (pair.min_overlap() < tol.overlap_floor) {
            return kInadmissible + cfg.penalty_weight * overlap_penalty(pair, tol.overlap_floor);
        }
        const ComplexVector psi = pure_state_from_angles(x.subspan(nb), dim);
        const ComplexVector mu = represent_operator(psi * psi.adjoint(), make_frame(pair, tol)).entries;
        double best = mode == ExtremalMode::min_real ? std::numeric_limits<double>::infinity()
                                                     : -std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < mu.size(); ++k) {
            const Complex z = mu(k);
            ++seen.points;
            seen.min_real = std::min(seen.min_real, z.real());
            seen.max_imag = std::max(seen.max_imag, z.imag());
            seen.max_modulus = std::max(seen.max_modulus, std::abs(z));
            seen.min_region_margin = std::min(seen.min_region_margin, region_check(KdPoint::from_complex(z)));
            best = mode == ExtremalMode::min_real ? std::min(best, z.real()) : std::max(best, z.imag());
        }
        return mode == ExtremalMode::min_real ? best : -best;
    };

    double best_min = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        auto eng = restart_engine(cfg.seed, r);
        const Minimum m = minimize(objective, n, eng, cfg);
        result.trace.push_back(mode == ExtremalMode::min_real ? m.value : -m.value);
        if (m.value < best_min) {
            best_min = m.value;
            result.best_params = m.x;
        }
    }
    result.best_objective = mode == ExtremalMode::min_real ? best_min : -best_min;
    result.evaluations = evaluations;

    const std::span<const double> best(result.best_params);
    const BasisPair pair = decode_unchecked(BasisParameterization{dim, {best.begin(), best.begin() + static_cast<std::ptrdiff_t>(nb)}}, tol);
    if (pair.min_overlap() >= tol.overlap_floor) {
        result.best_frame = make_frame(pair, tol);
        const ComplexVector psi = pure_state_from_angles(best.subspan(nb), dim);
        result.best_state = psi;
        const ComplexVector mu = represent_operator(psi * psi.adjoint(), result.best_frame).entries;
        Eigen::Index arg = 0;
        for (Eigen::Index k = 1; k < mu.size(); ++k) {
            const bool better = mode == ExtremalMode::min_real ? mu(k).real() < mu(arg).real()
                                                               : mu(k).imag() > mu(arg).imag();
            if (better) arg = k;
        }
        result.best_entry = static_cast<std::size_t>(arg);
    }
    return result;
}

}  // namespace kdrep

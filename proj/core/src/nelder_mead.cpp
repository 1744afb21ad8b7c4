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

#include "kdrep/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kdrep::optim {

namespace {

using Point = std::vector<double>;

struct Vertex {
    Point x;
    double f;
};

class Counted {
public:
    explicit Counted(const Objective& f) : f_(f) {}
    double operator()(const Point& x) {
        ++count_;
        const double v = f_(std::span<const double>(x));
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    }
    std::size_t count() const { return count_; }

private:
    const Objective& f_;
    std::size_t count_ = 0;
};

// a + t (b - a)
Point lerp(const Point& a, const Point& b, double t) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
}

std::vector<Vertex> initial_simplex(Counted& f, const Point& x0, double step) {
    std::vector<Vertex> s;
    s.reserve(x0.size() + 1);
    s.push_back({x0, f(x0)});
    for (std::size_t i = 0; i < x0.size(); ++i) {
        Point x = x0;
        x[i] += step;
        s.push_back({x, f(x)});
    }
    return s;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> x0, const NelderMeadOptions& opts) {
    Counted f(objective);
    const std::size_t n = x0.size();
    if (n == 0) {
        const double v = f(x0);
        return {std::move(x0), v, f.count(), 0};
    }
    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = 1.0 + 2.0 / dn;
    const double rho = 0.75 - 1.0 / (2.0 * dn);
    const double sigma = n > 1 ? 1.0 - 1.0 / dn : 0.5;

    std::size_t iterations = 0;
    std::vector<Vertex> s = initial_simplex(f, x0, opts.initial_step);
    double last_best = std::numeric_limits<double>::infinity();

    for (std::size_t rebuild = 0;; ++rebuild) {
        while (iterations < opts.max_iterations) {
            std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            double xspread = 0.0;
            for (std::size_t v = 1; v <= n; ++v) {
                for (std::size_t i = 0; i < n; ++i) xspread = std::max(xspread, std::abs(s[v].x[i] - s[0].x[i]));
            }
            if (s[n].f - s[0].f <= opts.f_tol || xspread <= opts.x_tol) break;
            ++iterations;

            Point centroid(n, 0.0);
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t i = 0; i < n; ++i) centroid[i] += s[v].x[i] / dn;
            }
            const Vertex& worst = s[n];
            Point xr = lerp(centroid, worst.x, -alpha);
            const double fr = f(xr);
            if (fr < s[0].f) {
                Point xe = lerp(centroid, worst.x, -alpha * gamma);
                const double fe = f(xe);
                if (fe < fr) {
                    s[n] = {std::move(xe), fe};
                } else {
                    s[n] = {std::move(xr), fr};
                }
                continue;
            }
            if (fr < s[n - 1].f) {
                s[n] = {std::move(xr), fr};
                continue;
            }
            bool shrink = false;
            if (fr < worst.f) {
                Point xc = lerp(centroid, xr, rho);
                const double fc = f(xc);
                if (fc <= fr) {
                    s[n] = {std::move(xc), fc};
                } else {
                    shrink = true;
                }
            } else {
                Point xc = lerp(centroid, worst.x, rho);
                const double fc = f(xc);
                if (fc < worst.f) {
                    s[n] = {std::move(xc), fc};
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t v = 1; v <= n; ++v) {
                    s[v].x = lerp(s[0].x, s[v].x, sigma);
                    s[v].f = f(s[v].x);
                }
            }
        }
        std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        const bool improved = last_best - s[0].f > opts.f_tol;
        last_best = std::min(last_best, s[0].f);
        if (rebuild >= opts.max_rebuilds || iterations >= opts.max_iterations || (rebuild > 0 && !improved)) break;
        Vertex best = s[0];
        s = initial_simplex(f, best.x, opts.initial_step);
        s[0] = std::move(best);
    }
    return {s[0].x, s[0].f, f.count(), iterations};
}

}  // namespace kdrep::optim

// Copyright 2026 The qarrow developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qarrow/tpm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qarrow/rng.hpp"

namespace qarrow {

namespace {

void require_levels_pair(const EnergyLevels& h0, const EnergyLevels& htau, const cmat& u,
                         const char* who) {
    if (h0.dim() != htau.dim())
        throw ValidationError(std::string(who) + ": endpoint spectra have different dimensions");
    if (u.rows() != u.cols() || u.rows() != h0.dim())
        throw ValidationError(std::string(who) + ": drive dimension mismatch");
    if (!is_unitary(u))
        throw ValidationError(std::string(who) + ": drive is not unitary within tol::unitary");
}

}  // namespace

cxd transition_amplitude(const cmat& u, const cvec& from, const cvec& to) {
    if (u.cols() != from.size() || u.rows() != to.size())
        throw ValidationError("transition_amplitude: dimension mismatch");
    return to.dot(u * from);  // Eigen's dot conjugates the left argument
}

TransitionTable forward_table(const EnergyLevels& h0, const EnergyLevels& htau, const cmat& u,
                              double beta) {
    require_levels_pair(h0, htau, u, "forward_table");
    const auto ens = ThermalEnsemble::of(h0, beta);
    const int d = h0.dim();
    TransitionTable t;
    t.initial = rvec(d);
    t.conditional = rmat(d, d);
    t.phase = rmat(d, d);
    t.work = rmat(d, d);
    t.amplitude = cmat(d, d);
    for (int n = 0; n < d; ++n) {
        t.initial(n) = ens.occupation(n);
        for (int m = 0; m < d; ++m) {
            const cxd a = transition_amplitude(u, h0.state(n), htau.state(m));
            t.amplitude(n, m) = a;
            t.conditional(n, m) = std::norm(a);
            t.phase(n, m) = std::arg(a);
            t.work(n, m) = htau.values(m) - h0.values(n);
        }
    }
    return t;
}

TransitionTable reverse_table(const EnergyLevels& h0, const EnergyLevels& htau, const cmat& u_rev,
                              const AntiUnitary& theta, double beta) {
    require_levels_pair(h0, htau, u_rev, "reverse_table");
    if (theta.dim() != h0.dim()) throw ValidationError("reverse_table: theta dimension mismatch");
    const auto ens = ThermalEnsemble::of(htau, beta);
    const AntiUnitary theta_adj = theta.adjoint();
    const int d = h0.dim();
    TransitionTable t;
    t.initial = rvec(d);
    t.conditional = rmat(d, d);
    t.phase = rmat(d, d);
    t.work = rmat(d, d);
    t.amplitude = cmat(d, d);
    for (int m = 0; m < d; ++m) {
        t.initial(m) = ens.occupation(m);
        // adj(theta) U' theta is linear, so amplitudes in the conjugated
        // bases reduce to ordinary matrix elements.
        const cvec evolved = u_rev * apply_antiunitary(theta, htau.state(m));
        const cvec back = apply_antiunitary(theta_adj, evolved);
        for (int n = 0; n < d; ++n) {
            const cxd a = h0.state(n).dot(back);
            t.amplitude(m, n) = a;
            t.conditional(m, n) = std::norm(a);
            t.phase(m, n) = std::arg(a);
            t.work(m, n) = h0.values(n) - htau.values(m);
        }
    }
    return t;
}

bool WorkDistribution::same_support_value(double a, double b) {
    return std::abs(a - b) <= tol::support_rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

WorkDistribution::WorkDistribution(std::vector<WorkPoint> points) {
    for (const auto& p : points) {
        if (!std::isfinite(p.w) || !std::isfinite(p.total))
            throw ValidationError("WorkDistribution: non-finite point");
        if (p.total < -tol::negative_clamp)
            throw ContractError("WorkDistribution: weight " + std::to_string(p.total) +
                                " at w = " + std::to_string(p.w) +
                                " violates total >= -tol::negative_clamp");
    }
    std::sort(points.begin(), points.end(),
              [](const WorkPoint& a, const WorkPoint& b) { return a.w < b.w; });
    for (const auto& p : points) {
        if (!points_.empty() && same_support_value(points_.back().w, p.w)) {
            WorkPoint& back = points_.back();
            back.total += p.total;
            back.forward_part += p.forward_part;
            back.reverse_part += p.reverse_part;
            back.interference_part += p.interference_part;
        } else {
            points_.push_back(p);
        }
    }
    for (auto& p : points_)
        if (p.total < 0.0) p.total = 0.0;  // round-off only; big negatives rejected above
}

double WorkDistribution::total_mass() const {
    double acc = 0.0;
    for (const auto& p : points_) acc += p.total;
    return acc;
}

const WorkPoint* WorkDistribution::find(double w) const {
    for (const auto& p : points_)
        if (same_support_value(p.w, w)) return &p;
    return nullptr;
}

double WorkDistribution::probability(double w) const {
    const WorkPoint* p = find(w);
    return p ? p->total : 0.0;
}

WorkDistribution forward_distribution(const EnergyLevels& h0, const EnergyLevels& htau,
                                      const cmat& u, double beta) {
    const TransitionTable t = forward_table(h0, htau, u, beta);
    std::vector<WorkPoint> pts;
    pts.reserve(static_cast<size_t>(t.dim()) * t.dim());
    for (int n = 0; n < t.dim(); ++n)
        for (int m = 0; m < t.dim(); ++m) {
            const double p = t.joint(n, m);
            pts.push_back({t.work(n, m), p, p, 0.0, 0.0});
        }
    return WorkDistribution(std::move(pts));
}

WorkDistribution reverse_distribution(const EnergyLevels& h0, const EnergyLevels& htau,
                                      const cmat& u_rev, const AntiUnitary& theta, double beta) {
    const TransitionTable t = reverse_table(h0, htau, u_rev, theta, beta);
    std::vector<WorkPoint> pts;
    pts.reserve(static_cast<size_t>(t.dim()) * t.dim());
    for (int m = 0; m < t.dim(); ++m)
        for (int n = 0; n < t.dim(); ++n) {
            const double p = t.joint(m, n);
            pts.push_back({t.work(m, n), p, 0.0, p, 0.0});
        }
    return WorkDistribution(std::move(pts));
}

WorkDistribution classical_mixture(const WorkDistribution& forward,
                                   const WorkDistribution& reverse) {
    std::vector<WorkPoint> pts;
    pts.reserve(forward.points().size() + reverse.points().size());
    for (const auto& p : forward.points()) pts.push_back({p.w, 0.5 * p.total, 0.5 * p.total, 0, 0});
    for (const auto& p : reverse.points())
        pts.push_back({-p.w, 0.5 * p.total, 0, 0.5 * p.total, 0});
    return WorkDistribution(std::move(pts));
}

double crooks_residual(const WorkDistribution& forward, const WorkDistribution& reverse,
                       double beta, double free_energy_diff) {
    double worst = 0.0;
    for (const auto& p : forward.points()) {
        if (p.total < tol::prob_floor) continue;
        const double q = reverse.probability(-p.w);
        if (q < tol::prob_floor) continue;
        const double expected = beta * (p.w - free_energy_diff);
        worst = std::max(worst, std::abs(std::log(p.total / q) - expected));
    }
    return worst;
}

double jarzynski_residual(const WorkDistribution& forward, double beta, double free_energy_diff) {
    double acc = 0.0;
    for (const auto& p : forward.points())
        acc += p.total * std::exp(-beta * (p.w - free_energy_diff));
    return std::abs(acc - 1.0);
}

double entropy_ft_residual(const TransitionTable& forward, const TransitionTable& reverse,
                           double beta, double free_energy_diff) {
    if (forward.dim() != reverse.dim())
        throw ValidationError("entropy_ft_residual: table dimensions differ");
    double worst = 0.0;
    for (int a = 0; a < forward.dim(); ++a)
        for (int b = 0; b < forward.dim(); ++b) {
            const double p = forward.joint(a, b);
            const double q = reverse.joint(b, a);
            if (p < tol::prob_floor || q < tol::prob_floor) continue;
            const double ds = beta * (forward.work(a, b) - free_energy_diff);
            worst = std::max(worst, std::abs(std::log(p / q) - ds));
        }
    return worst;
}

double arrow_likelihood(double w_diss, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ValidationError("arrow_likelihood: beta must be positive and finite");
    return 1.0 / (1.0 + std::exp(-beta * w_diss));
}

namespace {

// Draw one support point; `u` is uniform in [0, 1).
const WorkPoint& draw_point(const WorkDistribution& dist, double u) {
    const double mass = dist.total_mass();
    double acc = 0.0;
    for (const auto& p : dist.points()) {
        acc += p.total / mass;
        if (u < acc) return p;
    }
    return dist.points().back();
}

}  // namespace

ArrowGameResult arrow_game(const WorkDistribution& forward, const WorkDistribution& reverse,
                           double beta, double free_energy_diff, std::uint64_t shots,
                           std::uint64_t seed) {
    if (forward.points().empty() || reverse.points().empty())
        throw ValidationError("arrow_game: empty work distribution");

    ArrowGameResult result;
    result.shots = shots;

    // Apparent work of a reversed draw is the sign-flipped invested work:
    // the run is watched in forward orientation.
    const WorkDistribution mix = classical_mixture(forward, reverse);
    for (const auto& p : mix.points()) {
        const double like = arrow_likelihood(p.w - free_energy_diff, beta);
        result.optimum += p.total * std::max(like, 1.0 - like);
    }
    result.optimum /= mix.total_mass();

    std::uint64_t correct = 0;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // Two counter slots per shot: coin and work draw.
        const bool is_forward = (SplitMix64::at(seed, 2 * shot) >> 63) == 0;
        const double u =
            static_cast<double>(SplitMix64::at(seed, 2 * shot + 1) >> 11) * 0x1.0p-53;
        const WorkPoint& p = is_forward ? draw_point(forward, u) : draw_point(reverse, u);
        const double apparent_w = is_forward ? p.w : -p.w;
        const double like = arrow_likelihood(apparent_w - free_energy_diff, beta);
        const bool guess_forward = like >= 0.5;
        if (guess_forward == is_forward) ++correct;
    }
    result.accuracy = shots == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(shots);
    return result;
}

}  // namespace qarrow

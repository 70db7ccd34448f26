#pragma once

// Brute-force reference maximizer for the SVM dual, independent of the SMO
// implementation: exhaustive pairwise coordinate ascent to a fixed point from
// multiple feasible starts. Candidate steps come from a parabola fit through
// objective samples, never from the solver's own update formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace testref {

struct QpProblem {
    std::vector<std::array<double, 3>> x;
    std::vector<int> y;
    int kernel_kind = 0;  // 0 linear, 1 polynomial, 2 gaussian
    int degree = 2;
    double sigma_sq = 0.5;
    double c = 1.0;
};

inline double oracle_kernel(const QpProblem& p, std::size_t i, std::size_t j) {
    double dot = 0.0, dist_sq = 0.0;
    for (int k = 0; k < 3; ++k) {
        dot += p.x[i][k] * p.x[j][k];
        const double d = p.x[i][k] - p.x[j][k];
        dist_sq += d * d;
    }
    switch (p.kernel_kind) {
        case 0: return dot;
        case 1: return std::pow(dot + 1.0, p.degree);
        default: return std::exp(-dist_sq / (2.0 * p.sigma_sq));
    }
}

inline double oracle_objective(const QpProblem& p, const std::vector<double>& alpha) {
    const std::size_t m = alpha.size();
    double linear = 0.0, quad = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        linear += alpha[i];
        for (std::size_t j = 0; j < m; ++j) {
            quad += alpha[i] * alpha[j] * p.y[i] * p.y[j] * oracle_kernel(p, i, j);
        }
    }
    return linear - 0.5 * quad;
}

// Maximize over the feasible segment of the (i, j) pair. The objective along
// the segment is an exact quadratic in alpha_j, so a parabola through three
// sampled values recovers it; the best of {vertex, endpoints} wins.
inline bool oracle_pair_step(const QpProblem& p, std::vector<double>& alpha, std::size_t i,
                             std::size_t j, double min_gain) {
    const double s = p.y[i] * p.y[j];
    double lo, hi;
    if (p.y[i] != p.y[j]) {
        lo = std::max(0.0, alpha[j] - alpha[i]);
        hi = std::min(p.c, p.c + alpha[j] - alpha[i]);
    } else {
        lo = std::max(0.0, alpha[i] + alpha[j] - p.c);
        hi = std::min(p.c, alpha[i] + alpha[j]);
    }
    if (hi - lo < 1e-15) return false;

    const double ai0 = alpha[i], aj0 = alpha[j];
    const auto eval_at = [&](double t) {
        alpha[j] = t;
        alpha[i] = ai0 + s * (aj0 - t);
        return oracle_objective(p, alpha);
    };

    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double w_lo = eval_at(lo);
    const double w_mid = eval_at(mid);
    const double w_hi = eval_at(hi);

    double best_t = lo;
    double best_w = w_lo;
    if (w_hi > best_w) {
        best_t = hi;
        best_w = w_hi;
    }
    if (w_mid > best_w) {
        best_t = mid;
        best_w = w_mid;
    }
    const double curvature = w_lo - 2.0 * w_mid + w_hi;
    if (curvature < 0.0) {  // concave parabola, interior vertex exists
        double vertex = mid + h * (w_lo - w_hi) / (2.0 * curvature);
        vertex = std::min(std::max(vertex, lo), hi);
        const double w_vertex = eval_at(vertex);
        if (w_vertex > best_w) {
            best_t = vertex;
            best_w = w_vertex;
        }
    }

    const double current = eval_at(aj0);  // restores alpha as a side effect
    if (best_w > current + min_gain) {
        alpha[j] = best_t;
        alpha[i] = ai0 + s * (aj0 - best_t);
        return true;
    }
    alpha[j] = aj0;
    alpha[i] = ai0;
    return false;
}

inline double oracle_solve_from(const QpProblem& p, std::vector<double> alpha) {
    const std::size_t m = alpha.size();
    for (int sweep = 0; sweep < 10000; ++sweep) {
        bool improved = false;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                improved |= oracle_pair_step(p, alpha, i, j, 1e-13);
            }
        }
        if (!improved) break;
    }
    return oracle_objective(p, alpha);
}

// Feasible random start: repeated symmetric pushes on (+1, -1) pairs keep the
// equality constraint at zero by construction.
inline std::vector<double> oracle_random_start(const QpProblem& p, std::mt19937_64& rng) {
    const std::size_t m = p.y.size();
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < m; ++i) (p.y[i] == 1 ? pos : neg).push_back(i);
    std::vector<double> alpha(m, 0.0);
    if (pos.empty() || neg.empty()) return alpha;
    for (std::size_t push = 0; push < m; ++push) {
        const std::size_t i = pos[rng() % pos.size()];
        const std::size_t j = neg[rng() % neg.size()];
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double t = std::min({u * p.c, p.c - alpha[i], p.c - alpha[j]});
        alpha[i] += t;
        alpha[j] += t;
    }
    return alpha;
}

inline double oracle_max_dual(const QpProblem& p, int extra_starts = 4, std::uint64_t seed = 99) {
    std::mt19937_64 rng(seed);
    double best = oracle_solve_from(p, std::vector<double>(p.y.size(), 0.0));
    for (int s = 0; s < extra_starts; ++s) {
        best = std::max(best, oracle_solve_from(p, oracle_random_start(p, rng)));
    }
    return best;
}

}  // namespace testref

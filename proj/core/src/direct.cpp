#include "bgkjump/direct.hpp"

#include <cmath>
#include <string>

#include "bgkjump/errors.hpp"
#include "bgkjump/series.hpp"

namespace bgkjump {

namespace {

Vec2 source_column() { return {-1.0, 1.0}; }

} // namespace

DirectSolution DirectSolver::solve_fixed_point(double q, double g_T, double tol, int max_iter,
                                               double relaxation) const {
    if (!(q > 0.0) || q > 1.0 || !std::isfinite(q)) {
        throw DomainError("solve_fixed_point: q must lie in (0, 1], got " + std::to_string(q));
    }
    if (!(tol > 0.0)) {
        throw ConfigError("solve_fixed_point: tolerance must be positive");
    }
    if (max_iter < 1) {
        throw ConfigError("solve_fixed_point: need at least one sweep");
    }
    if (!(relaxation > 0.0) || relaxation > 1.0) {
        throw ConfigError("solve_fixed_point: relaxation must lie in (0, 1]");
    }

    const QuadratureRule& rule = ws_->k_rule();
    const std::size_t n = rule.size();
    const Vec2 src = source_column();
    const Matrix2 that1_0 = t_hat1_zero();
    const Matrix2 that2_0 = t_hat2_zero();
    const std::vector<Matrix2>& j3 = ws_->j3_tableau();
    const std::vector<Matrix2>& jdir = ws_->j_tableau();

    std::vector<Vec2> e(n, Vec2{});
    Vec2 eps{};
    std::vector<double> history;
    history.reserve(max_iter);

    bool converged = false;
    int sweeps = 0;
    for (; sweeps < max_iter; ++sweeps) {
        // Jump pair from the k = 0 solvability condition of the current density.
        Vec2 moment{};
        for (std::size_t j = 0; j < n; ++j) {
            moment += rule.weights[j] * (ws_->t_hat1(j) * e[j]);
        }
        moment = moment * (1.0 / M_PI);
        eps = solve2(that1_0, that2_0 * src * ((2.0 - q) / q * g_T) - moment);

        // Density update with the 1/k^2 pole cancelled analytically:
        // E <- T_hat_2(k)^{-1} [ q T_hat_3(k) eps - (2-q) g_T T_hat_4(k) (-1,1)^T
        //                        + (q/pi) int J3(k,k1) E(k1) dk1 ];
        // far-tail nodes use the raw equation divided by k^2 instead, which
        // keeps relative accuracy there (see Workspace::far_start).
        double change = 0.0;
        std::vector<Vec2> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 rhs;
            if (i < ws_->far_start()) {
                Vec2 integral{};
                for (std::size_t j = 0; j < n; ++j) {
                    integral += rule.weights[j] * (j3[i * n + j] * e[j]);
                }
                rhs = ws_->t_hat3(i) * eps * q - ws_->t_hat4(i) * src * ((2.0 - q) * g_T) +
                      integral * (q / M_PI);
            } else {
                Vec2 integral{};
                for (std::size_t j = 0; j < n; ++j) {
                    integral += rule.weights[j] * (jdir[i * n + j] * e[j]);
                }
                const double inv_k2 = 1.0 / (rule.nodes[i] * rule.nodes[i]);
                rhs = (ws_->t_hat1(i) * eps * (-q) + ws_->t_hat2(i) * src * ((2.0 - q) * g_T) -
                       integral * (q / M_PI)) *
                      inv_k2;
            }
            Vec2 value = solve2(ws_->t_hat2(i), rhs);
            if (relaxation < 1.0) {
                value = e[i] + (value - e[i]) * relaxation;
            }
            if (!value.finite()) {
                throw DivergenceError("solve_fixed_point: iterate diverged at k = " +
                                          std::to_string(rule.nodes[i]),
                                      history);
            }
            change = std::max(change, (value - e[i]).max_abs());
            next[i] = value;
        }
        e = std::move(next);
        history.push_back(change);
        if (change < tol) {
            ++sweeps;
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw DivergenceError("solve_fixed_point: no convergence after " +
                                  std::to_string(max_iter) + " sweeps (last change " +
                                  std::to_string(history.back()) + ")",
                              history);
    }

    // k -> 0 limit of the converged density, same cancelled form at k = 0.
    Vec2 zero_integral{};
    const std::vector<Matrix2>& j3_zero = ws_->j3_zero_row();
    for (std::size_t j = 0; j < n; ++j) {
        zero_integral += rule.weights[j] * (j3_zero[j] * e[j]);
    }
    const KernelEvaluator& kernels = ws_->kernels();
    const Vec2 at_zero =
        solve2(kernels.t_hat(2, 0.0), kernels.t_hat(3, 0.0) * eps * q -
                                          kernels.t_hat(4, 0.0) * src * ((2.0 - q) * g_T) +
                                          zero_integral * (q / M_PI));

    DirectSolution sol;
    sol.eps = eps;
    sol.density = SpectralDensity(rule.nodes, std::move(e), at_zero);
    sol.iterations = sweeps;
    sol.history = std::move(history);
    sol.final_residual = fredholm_residual(sol.density, sol.eps, q, g_T);
    return sol;
}

double DirectSolver::fredholm_residual(const SpectralDensity& density, Vec2 eps, double q,
                                       double g_T) const {
    const QuadratureRule& rule = ws_->k_rule();
    const std::size_t n = rule.size();
    if (density.size() != n) {
        throw ConfigError("fredholm_residual: density grid does not match the workspace rule");
    }
    const Vec2 src = source_column();
    const std::vector<Matrix2>& jdir = ws_->j_tableau();

    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 integral{};
        for (std::size_t j = 0; j < n; ++j) {
            integral += rule.weights[j] * (jdir[i * n + j] * density.values()[j]);
        }
        const double k = rule.nodes[i];
        const Vec2 r = (k * k) * (ws_->t_hat2(i) * density.values()[i]) +
                       ws_->t_hat1(i) * eps * q - ws_->t_hat2(i) * src * ((2.0 - q) * g_T) +
                       integral * (q / M_PI);
        sup = std::max(sup, r.max_abs());
    }
    return sup;
}

} // namespace bgkjump

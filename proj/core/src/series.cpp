/*
 * Expansion of the jump problem in powers of the accommodation coefficient.
 *
 * Substituting the power series for the density E(k) and the jump pair into
 * the Fredholm equation produces a chain of equations, each with the
 * dispersion matrix k^2 T_hat_2(k) on the left. The moment identity
 * T_m(k) = T_m(0) - k^2 T_{m+2}(k) splits every right-hand side into a
 * k-independent part and an explicit k^2 part; the order-m jump pair is the
 * unique choice that kills the k-independent part, which both removes the
 * double pole at k = 0 and makes the density decay at infinity.
 */

#include "bgkjump/series.hpp"

#include <cmath>
#include <string>

#include "bgkjump/errors.hpp"

namespace bgkjump {

namespace {

const double kSqrtPi = std::sqrt(M_PI);

Vec2 source_column() { return {-1.0, 1.0}; }

} // namespace

Vec2 zero_order_jumps() {
    return solve2(t_hat1_zero(), t_hat2_zero() * source_column());
}

Vec2 c_vector(const KernelEvaluator& kernels, double k, Vec2 eps0) {
    // The component formulas below already use eps_n^0 = -eps_T^0/2.
    if (std::abs(eps0.v1 + 0.5 * eps0.v2) > 1e-10 * std::abs(eps0.v2)) {
        throw DomainError("c_vector: jump pair does not satisfy eps_n = -eps_T/2");
    }
    const double et = eps0.v2;
    const std::array<double, 9> t = kernels.t_moments(k);
    const double c1 = et * (t[5] - t[3]) + 1.5 * t[4] - t[6];
    const double c2 =
        (2.0 / 3.0) * (et * (t[7] - 1.5 * t[5] + 1.5 * t[3]) + 2.0 * t[6] - t[8] - 1.75 * t[4]);
    return {c1, c2};
}

Vec2 zero_order_density_at(const KernelEvaluator& kernels, double k, Vec2 eps0) {
    return solve2(kernels.t_hat(2, k), c_vector(kernels, k, eps0));
}

Vec2 first_order_jumps(Vec2 d) {
    return {-(3.0 * kSqrtPi / 8.0) * (3.0 * d.v1 - d.v2),
            (kSqrtPi / 4.0) * (d.v1 - 3.0 * d.v2)};
}

SpectralDensity SeriesSolver::zero_order_density() const {
    const Vec2 eps0 = zero_order_jumps();
    const KernelEvaluator& kernels = ws_->kernels();
    const QuadratureRule& rule = ws_->k_rule();

    std::vector<Vec2> values(rule.size());
    for (std::size_t i = 0; i < ws_->far_start(); ++i) {
        values[i] = solve2(ws_->t_hat2(i), c_vector(kernels, rule.nodes[i], eps0));
    }
    // Far tail: k^2 C(k) = T_hat_2(k)(-1,1)^T - T_hat_1(k) eps0 exactly, and
    // this form stays relative-accurate where the component form of C has
    // cancelled to rounding level.
    for (std::size_t i = ws_->far_start(); i < rule.size(); ++i) {
        const double inv_k2 = 1.0 / (rule.nodes[i] * rule.nodes[i]);
        const Vec2 rhs = (ws_->t_hat2(i) * source_column() - ws_->t_hat1(i) * eps0) * inv_k2;
        values[i] = solve2(ws_->t_hat2(i), rhs);
    }
    const Vec2 at_zero = zero_order_density_at(kernels, 0.0, eps0);
    return SpectralDensity(rule.nodes, std::move(values), at_zero);
}

Vec2 SeriesSolver::d_integrals(const SpectralDensity& e0) const {
    const QuadratureRule& rule = ws_->k_rule();
    if (e0.size() != rule.size()) {
        throw ConfigError("d_integrals: density grid does not match the workspace rule");
    }
    Vec2 acc{};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * (ws_->t_hat1(i) * e0.values()[i]);
    }
    return acc * (1.0 / M_PI);
}

Vec2 SeriesSolver::next_order_jumps(const SpectralDensity& e_prev) const {
    return -solve2(t_hat1_zero(), d_integrals(e_prev));
}

SpectralDensity SeriesSolver::next_order_density(Vec2 eps_m, const SpectralDensity& e_prev) const {
    const QuadratureRule& rule = ws_->k_rule();
    const std::size_t n = rule.size();
    if (e_prev.size() != n) {
        throw ConfigError("next_order_density: density grid does not match the workspace rule");
    }

    const std::vector<Matrix2>& j3 = ws_->j3_tableau();
    const std::vector<Matrix2>& jdir = ws_->j_tableau();

    std::vector<Vec2> values(n);
    for (std::size_t i = 0; i < ws_->far_start(); ++i) {
        Vec2 integral{};
        for (std::size_t j = 0; j < n; ++j) {
            integral += rule.weights[j] * (j3[i * n + j] * e_prev.values()[j]);
        }
        const Vec2 rhs = ws_->t_hat3(i) * eps_m + integral * (1.0 / M_PI);
        values[i] = solve2(ws_->t_hat2(i), rhs);
    }
    // Far tail: the raw order-m equation divided by k^2 (see zero_order_density).
    for (std::size_t i = ws_->far_start(); i < n; ++i) {
        Vec2 integral{};
        for (std::size_t j = 0; j < n; ++j) {
            integral += rule.weights[j] * (jdir[i * n + j] * e_prev.values()[j]);
        }
        const double inv_k2 = 1.0 / (rule.nodes[i] * rule.nodes[i]);
        const Vec2 rhs = (ws_->t_hat1(i) * eps_m + integral * (1.0 / M_PI)) * (-inv_k2);
        values[i] = solve2(ws_->t_hat2(i), rhs);
    }

    Vec2 zero_integral{};
    const std::vector<Matrix2>& j3_zero = ws_->j3_zero_row();
    for (std::size_t j = 0; j < n; ++j) {
        zero_integral += rule.weights[j] * (j3_zero[j] * e_prev.values()[j]);
    }
    const KernelEvaluator& kernels = ws_->kernels();
    const Vec2 at_zero = solve2(
        kernels.t_hat(2, 0.0), kernels.t_hat(3, 0.0) * eps_m + zero_integral * (1.0 / M_PI));

    return SpectralDensity(rule.nodes, std::move(values), at_zero);
}

std::vector<SeriesOrder> SeriesSolver::orders(int m) const {
    if (m < 0 || m > kMaxSeriesOrder) {
        throw ConfigError("series order must lie in 0.." + std::to_string(kMaxSeriesOrder) +
                          ", got " + std::to_string(m));
    }

    std::vector<SeriesOrder> result;
    result.reserve(m + 1);

    SeriesOrder zero;
    zero.m = 0;
    zero.eps = zero_order_jumps();
    zero.density = zero_order_density();
    zero.pole_residual = (t_hat1_zero() * zero.eps - t_hat2_zero() * source_column()).max_abs();
    result.push_back(std::move(zero));

    for (int order = 1; order <= m; ++order) {
        const SpectralDensity& prev = result.back().density;
        SeriesOrder next;
        next.m = order;
        next.eps = next_order_jumps(prev);
        next.pole_residual = (t_hat1_zero() * next.eps + d_integrals(prev)).max_abs();
        next.density = next_order_density(next.eps, prev);
        result.push_back(std::move(next));
    }
    return result;
}

JumpResult SeriesSolver::assemble_series(double q, double g_T, int order) const {
    if (!(q > 0.0) || q > 1.0 || !std::isfinite(q)) {
        throw DomainError("assemble_series: q must lie in (0, 1], got " + std::to_string(q));
    }
    const std::vector<SeriesOrder> terms = orders(order);

    Vec2 sum{};
    double qm = 1.0;
    for (const SeriesOrder& term : terms) {
        sum += term.eps * qm;
        qm *= q;
    }
    const double prefactor = (2.0 - q) / q * g_T;

    JumpResult result;
    result.q = q;
    result.g_T = g_T;
    result.order = order;
    result.eps_n = prefactor * sum.v1;
    result.eps_T = prefactor * sum.v2;
    result.coefficients.reserve(terms.size());
    result.diagnostics.mu_nodes = ws_->params().mu_nodes;
    result.diagnostics.k_nodes = ws_->params().k_nodes;
    result.diagnostics.map_scale = ws_->params().map_scale;
    for (const SeriesOrder& term : terms) {
        result.coefficients.push_back(term.eps);
        result.diagnostics.pole_residuals.push_back(term.pole_residual);
    }
    return result;
}

} // namespace bgkjump

/*
 * Quadrature rules for the two integral families of the jump problem:
 *
 *   1. half-line integrals with Gaussian weight, int_0^inf e^{-mu^2} f(mu) dmu,
 *      handled by a half-range Gaussian rule built from the orthonormal
 *      polynomials of the weight;
 *
 *   2. half-line integrals of algebraically decaying functions of the wave
 *      number, int_0^inf f(k) dk with f ~ 1/k^2, handled by the rational
 *      compactification k = s t/(1-t) over a graded interior rule on [0,1).
 *
 * Nodes are eigenvalues of the Jacobi matrix of the recurrence coefficients,
 * located by Sturm-sequence bisection (deterministic, no external solver);
 * weights are the Christoffel numbers 1 / sum_k p_k(x_i)^2.
 */

#include "bgkjump/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "bgkjump/errors.hpp"

namespace bgkjump {

namespace {

constexpr int kMaxGaussianNodes = 256;
constexpr int kMaxAlgebraicNodes = 5000;

// Grading exponent for the interior rule of the algebraic map: t = 1-(1-u)^2.
// The extra Jacobian zero at t = 1 recovers fast convergence for tails like
// log(k)/k^2, while keeping the largest mapped node (~1/(1-u_max)^2) small
// enough that rounding noise in integrand values cannot be amplified by the
// far-tail weights past ~1e-7.
constexpr int kGradingPower = 2;

// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly
// below x, via the standard Sturm sequence.
int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off,
                      double x) {
    const std::size_t n = diag.size();
    int count = 0;
    double d = diag[0] - x;
    if (d < 0.0) {
        ++count;
    }
    for (std::size_t i = 1; i < n; ++i) {
        double denom = d;
        if (denom == 0.0) {
            denom = 1e-300;
        }
        d = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (d < 0.0) {
            ++count;
        }
    }
    return count;
}

// All eigenvalues of the Jacobi matrix, ascending, by bisection. Bisection is
// run to floating-point exhaustion so identical inputs give identical nodes.
std::vector<double> jacobi_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& off) {
    const std::size_t n = diag.size();
    double lo = diag[0];
    double hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(off[i - 1]);
        }
        if (i + 1 < n) {
            radius += std::abs(off[i]);
        }
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }

    std::vector<double> eig(n);
    for (std::size_t j = 0; j < n; ++j) {
        double a = lo;
        double b = hi;
        for (int iter = 0; iter < 120; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) {
                break;
            }
            if (sturm_count_below(diag, off, mid) > static_cast<int>(j)) {
                b = mid;
            } else {
                a = mid;
            }
        }
        eig[j] = 0.5 * (a + b);
    }
    return eig;
}

// Christoffel number at node x: 1 / sum_{k=0}^{n-1} p_k(x)^2 with p_k the
// orthonormal polynomials of the weight (p_0 = 1/sqrt(beta0)).
double christoffel_weight(const std::vector<double>& diag, const std::vector<double>& off,
                          double beta0, double x) {
    double p_prev = 0.0;
    double p = 1.0 / std::sqrt(beta0);
    double sum = p * p;
    for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
        double p_next = (x - diag[k]) * p - (k > 0 ? off[k - 1] : 0.0) * p_prev;
        p_next /= off[k];
        p_prev = p;
        p = p_next;
        sum += p * p;
    }
    return 1.0 / sum;
}

QuadratureRule rule_from_recurrence(const std::vector<double>& diag,
                                    const std::vector<double>& off, double beta0,
                                    RuleKind kind) {
    QuadratureRule rule;
    rule.kind = kind;
    rule.nodes = jacobi_eigenvalues(diag, off);
    rule.weights.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        rule.weights[i] = christoffel_weight(diag, off, beta0, rule.nodes[i]);
    }
    return rule;
}

// Auxiliary discretization of int_0^inf e^{-mu^2} g(mu) dmu used by the
// Stieltjes procedure: composite Gauss-Legendre out to where the products
// p_j p_k of the requested degree have exhausted their mass. The spread of
// the degree-n orthonormal polynomials scales like sqrt(2n) and their local
// wavelength like pi/sqrt(2n), so the panel width is held at 0.125 with 20
// points per panel.
struct AuxGrid {
    std::vector<double> nodes;
    std::vector<double> weights; // include the Gaussian weight factor
};

AuxGrid gaussian_aux_grid(int n) {
    constexpr int per_panel = 20;
    constexpr double panel_width = 0.125;
    const double upper = std::max(12.0, std::sqrt(2.0 * n) + 4.0);
    const int panels = static_cast<int>(std::ceil(upper / panel_width));

    std::vector<double> gl_x;
    std::vector<double> gl_w;
    detail::gauss_legendre(per_panel, gl_x, gl_w);

    AuxGrid grid;
    grid.nodes.reserve(panels * per_panel);
    grid.weights.reserve(panels * per_panel);
    for (int p = 0; p < panels; ++p) {
        const double a = p * panel_width;
        for (int i = 0; i < per_panel; ++i) {
            const double mu = a + 0.5 * panel_width * (gl_x[i] + 1.0);
            grid.nodes.push_back(mu);
            grid.weights.push_back(0.5 * panel_width * gl_w[i] * std::exp(-mu * mu));
        }
    }
    return grid;
}

} // namespace

namespace detail {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    // Orthonormal Legendre recurrence: a_k = 0, sqrt(b_k) = k/sqrt(4k^2-1).
    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n - 1);
    for (int k = 1; k < n; ++k) {
        off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    }
    QuadratureRule rule = rule_from_recurrence(diag, off, 2.0, RuleKind::AlgebraicHalfline);
    nodes = std::move(rule.nodes);
    weights = std::move(rule.weights);
}

} // namespace detail

QuadratureRule build_gaussian_halfline_rule(int n) {
    if (n < 2) {
        throw ConfigError("gaussian halfline rule: need at least 2 nodes, got " +
                          std::to_string(n));
    }
    if (n > kMaxGaussianNodes) {
        throw ConfigError("gaussian halfline rule: node count " + std::to_string(n) +
                          " exceeds cap " + std::to_string(kMaxGaussianNodes));
    }

    const AuxGrid aux = gaussian_aux_grid(n);
    const std::size_t m = aux.nodes.size();

    // Discretized Stieltjes with orthonormal polynomials: p_{k+1} is the
    // normalized remainder of (mu - a_k) p_k - sqrt(b_k) p_{k-1}.
    std::vector<double> p_prev(m, 0.0);
    std::vector<double> p(m);
    std::vector<double> diag(n);
    std::vector<double> off(n - 1);

    double beta0 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        beta0 += aux.weights[i];
    }
    const double inv_sqrt_beta0 = 1.0 / std::sqrt(beta0);
    for (std::size_t i = 0; i < m; ++i) {
        p[i] = inv_sqrt_beta0;
    }

    for (int k = 0; k < n; ++k) {
        double a = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            a += aux.weights[i] * aux.nodes[i] * p[i] * p[i];
        }
        diag[k] = a;
        if (k + 1 == n) {
            break;
        }
        double norm2 = 0.0;
        std::vector<double> r(m);
        for (std::size_t i = 0; i < m; ++i) {
            r[i] = (aux.nodes[i] - a) * p[i] - (k > 0 ? off[k - 1] : 0.0) * p_prev[i];
            norm2 += aux.weights[i] * r[i] * r[i];
        }
        const double sb = std::sqrt(norm2);
        off[k] = sb;
        for (std::size_t i = 0; i < m; ++i) {
            p_prev[i] = p[i];
            p[i] = r[i] / sb;
        }
    }

    return rule_from_recurrence(diag, off, beta0, RuleKind::GaussianWeightHalfline);
}

QuadratureRule build_algebraic_halfline_rule(int n, double map_scale) {
    if (n < 2) {
        throw ConfigError("algebraic halfline rule: need at least 2 nodes, got " +
                          std::to_string(n));
    }
    if (n > kMaxAlgebraicNodes) {
        throw ConfigError("algebraic halfline rule: node count " + std::to_string(n) +
                          " exceeds cap " + std::to_string(kMaxAlgebraicNodes));
    }
    if (!(map_scale > 0.0) || !std::isfinite(map_scale)) {
        throw ConfigError("algebraic halfline rule: map_scale must be positive and finite");
    }

    std::vector<double> gl_x;
    std::vector<double> gl_w;
    detail::gauss_legendre(n, gl_x, gl_w);

    QuadratureRule rule;
    rule.kind = RuleKind::AlgebraicHalfline;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // v = 1-u computed straight from the [-1,1] node to limit cancellation.
        const double v = 0.5 * (1.0 - gl_x[i]);
        const double du = 0.5 * gl_w[i];
        const double vp = std::pow(v, kGradingPower);     // 1 - t
        const double t = 1.0 - vp;
        rule.nodes[i] = map_scale * t / vp;
        // dk/du = p v^{p-1} * s / (1-t)^2 = p s / v^{p+1}
        rule.weights[i] = du * kGradingPower * map_scale / std::pow(v, kGradingPower + 1);
    }
    return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double v = f(rule.nodes[i]);
        if (!std::isfinite(v)) {
            throw IntegrandError("integrate: integrand non-finite at node " +
                                     std::to_string(rule.nodes[i]),
                                 rule.nodes[i]);
        }
        sum += rule.weights[i] * v;
    }
    return sum;
}

} // namespace bgkjump

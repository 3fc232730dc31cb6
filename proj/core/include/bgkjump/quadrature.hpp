#ifndef BGKJUMP_QUADRATURE_HPP
#define BGKJUMP_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace bgkjump {

enum class RuleKind {
    GaussianWeightHalfline, ///< integrates f against e^{-mu^2} on [0, inf)
    AlgebraicHalfline       ///< integrates algebraically decaying f on [0, inf)
};

/// A deterministic quadrature rule: strictly increasing nonnegative nodes and
/// positive weights. For the Gaussian-weight kind the factor e^{-mu^2} is
/// folded into the weights, so integrands are supplied without it.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleKind kind = RuleKind::GaussianWeightHalfline;

    std::size_t size() const { return nodes.size(); }
};

/// Half-range Gaussian rule for the weight e^{-mu^2} on [0, inf).
///
/// Built from the three-term recurrence of the orthonormal polynomials of the
/// weight (discretized Stieltjes procedure), followed by the eigenvalues of
/// the Jacobi matrix and Christoffel-number weights. Exact (to rounding) for
/// polynomials of degree <= 2n-1.
///
/// Throws ConfigError for n < 2 or n beyond the implementation cap.
QuadratureRule build_gaussian_halfline_rule(int n);

/// Rule for half-line integrals of smooth integrands decaying at least as
/// 1/k^2, via the compactification k = map_scale * t/(1-t), t in [0,1),
/// composed with a graded Gauss-Legendre rule on [0,1). The grading places a
/// zero of the Jacobian at t = 1 so that integrands with logarithmically
/// modulated 1/k^2 tails are still integrated to near machine precision.
///
/// Throws ConfigError for n < 2, n beyond the cap, or map_scale <= 0.
QuadratureRule build_algebraic_halfline_rule(int n, double map_scale);

/// Weighted sum of f over the rule's nodes. Throws IntegrandError if f is
/// non-finite at a node.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

namespace detail {

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace detail

} // namespace bgkjump

#endif

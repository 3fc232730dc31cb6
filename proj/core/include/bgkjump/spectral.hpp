#ifndef BGKJUMP_SPECTRAL_HPP
#define BGKJUMP_SPECTRAL_HPP

#include <vector>

#include "bgkjump/matrix2.hpp"

namespace bgkjump {

/// A vector-valued function of the wave number k >= 0 sampled on the nodes of
/// the algebraic half-line rule, so that every integral of it in the solver
/// recursions is a weighted sum over the stored values.
///
/// The mapped grid places no node at k = 0; the finite k -> 0 limit is stored
/// separately and anchors the interpolant (the density is even in k, so the
/// slope at 0 is zero). Off-grid evaluation uses a piecewise-cubic Hermite
/// rule with three-point slopes.
class SpectralDensity {
public:
    SpectralDensity() = default;
    SpectralDensity(std::vector<double> k_grid, std::vector<Vec2> values, Vec2 value_at_zero);

    const std::vector<double>& grid() const { return k_; }
    const std::vector<Vec2>& values() const { return values_; }
    Vec2 value_at_zero() const { return value0_; }
    std::size_t size() const { return k_.size(); }
    bool empty() const { return k_.empty(); }

    /// Cubic-Hermite evaluation at arbitrary k >= 0. Below the first node the
    /// segment [0, k_1] anchored at the stored zero value is used; beyond the
    /// last node the last stored value is returned (the grid extends far past
    /// any k at which the density is non-negligible).
    Vec2 operator()(double k) const;

    /// Interpolant derivative, used by the oscillatory tail correction.
    Vec2 derivative(double k) const;

private:
    void build_slopes();
    std::size_t segment(double k) const;

    std::vector<double> k_;
    std::vector<Vec2> values_;
    std::vector<Vec2> slopes_;
    Vec2 value0_{};
    Vec2 slope0_{}; // slope at k = 0 is zero by evenness
};

/// One term of the expansion in the accommodation coefficient: the order
/// index, the jump pair fixed by the order-m solvability condition, and the
/// spectral density of that order.
struct SeriesOrder {
    int m = 0;
    Vec2 eps{};
    SpectralDensity density;
    /// max-norm of the solvability condition residual that eps annihilates
    double pole_residual = 0.0;
};

/// Assembled output of the series solver.
struct JumpResult {
    double q = 1.0;
    double g_T = 1.0;
    int order = 1;
    double eps_n = 0.0;
    double eps_T = 0.0;
    /// per-order jump pairs (independent of g_T and q)
    std::vector<Vec2> coefficients;

    struct Diagnostics {
        int mu_nodes = 0;
        int k_nodes = 0;
        double map_scale = 1.0;
        std::vector<double> pole_residuals;
    } diagnostics;
};

} // namespace bgkjump

#endif

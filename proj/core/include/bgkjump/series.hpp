#ifndef BGKJUMP_SERIES_HPP
#define BGKJUMP_SERIES_HPP

#include <vector>

#include "bgkjump/spectral.hpp"
#include "bgkjump/workspace.hpp"

namespace bgkjump {

/// Maximum supported truncation order of the expansion in the accommodation
/// coefficient. The recursion defines every order; beyond this the terms are
/// far below the discretization error.
inline constexpr int kMaxSeriesOrder = 5;

/// Zero-order jump pair (eps_n^0, eps_T^0): the unique pair annihilating the
/// double pole of the zero-order density at k = 0,
///   T_hat_1(0) eps0 = T_hat_2(0) (-1, 1)^T,
/// with closed-form value (-5 sqrt(pi)/16, 5 sqrt(pi)/8).
Vec2 zero_order_jumps();

/// Source column C(k) of the zero-order density, the closed component form of
/// T_hat_3(k) eps0 - T_hat_4(k) (-1,1)^T after substituting eps_n^0 = -eps_T^0/2:
///   C1 = eps_T^0 (T5 - T3) + (3/2) T4 - T6
///   C2 = (2/3)[ eps_T^0 (T7 - (3/2) T5 + (3/2) T3) + 2 T6 - T8 - (7/4) T4 ]
/// Throws DomainError if eps0 does not satisfy the substituted relation.
Vec2 c_vector(const KernelEvaluator& kernels, double k, Vec2 eps0);

/// Pointwise zero-order density E_0(k) = T_hat_2(k)^{-1} C(k); finite at k = 0.
Vec2 zero_order_density_at(const KernelEvaluator& kernels, double k, Vec2 eps0);

/// Closed form of the first-order solvability condition,
///   eps_n^1 = -(3 sqrt(pi)/8) (3 D1 - D2),  eps_T^1 = (sqrt(pi)/4) (D1 - 3 D2);
/// algebraically identical to -T_hat_1(0)^{-1} D.
Vec2 first_order_jumps(Vec2 d);

/// Solves the vector Fredholm equation of the jump problem by expanding the
/// density and the jump pair in powers of the accommodation coefficient q.
/// Each order m is fixed by the solvability condition that removes the
/// second-order pole of the density at k = 0; the densities live on the
/// workspace grid so every recursion integral is a weighted sum against the
/// cached J3 tableau.
class SeriesSolver {
public:
    explicit SeriesSolver(const Workspace& ws) : ws_(&ws) {}

    /// E_0 on the grid (plus its k -> 0 limit) for the zero-order jump pair.
    SpectralDensity zero_order_density() const;

    /// D = (1/pi) int_0^inf T_hat_1(k) E0(k) dk as a weighted sum.
    Vec2 d_integrals(const SpectralDensity& e0) const;

    /// Order-m solvability condition, eps^m = -T_hat_1(0)^{-1} (1/pi) int T_hat_1 E_{m-1} dk.
    /// For m = 1 this agrees with first_order_jumps(d_integrals(E0)) to rounding.
    Vec2 next_order_jumps(const SpectralDensity& e_prev) const;

    /// Order-m density
    ///   E_m(k) = T_hat_2(k)^{-1} [ T_hat_3(k) eps_m + (1/pi) int J3(k,k1) E_{m-1}(k1) dk1 ].
    /// eps_m must be the pair produced by next_order_jumps for the same E_prev;
    /// that pairing is what keeps E_m finite at k = 0.
    SpectralDensity next_order_density(Vec2 eps_m, const SpectralDensity& e_prev) const;

    /// Orders 0..m of the expansion.
    std::vector<SeriesOrder> orders(int m) const;

    /// Assembled jumps
    ///   eps(q) = ((2-q)/q) g_T sum_{m<=order} eps^m q^m
    /// for q in (0, 1]. Throws DomainError for q outside (0, 1] and
    /// ConfigError for an unsupported truncation order.
    JumpResult assemble_series(double q, double g_T, int order) const;

    const Workspace& workspace() const { return *ws_; }

private:
    const Workspace* ws_;
};

} // namespace bgkjump

#endif

#ifndef BGKJUMP_DIRECT_HPP
#define BGKJUMP_DIRECT_HPP

#include <vector>

#include "bgkjump/spectral.hpp"
#include "bgkjump/workspace.hpp"

namespace bgkjump {

/// Converged solution of the full Fredholm equation at a given accommodation
/// coefficient, with no expansion in q.
struct DirectSolution {
    Vec2 eps{};
    SpectralDensity density;
    int iterations = 0;
    double final_residual = 0.0;
    /// sup-norm change of the density per sweep
    std::vector<double> history;
};

/// Picard iteration on the Fredholm equation over the workspace grid. At each
/// sweep the jump pair is re-derived from the k = 0 solvability condition of
/// the current density,
///
///   -q T_hat_1(0) eps + (2-q) g_T T_hat_2(0) (-1,1)^T - (q/pi) int T_hat_1 E dk = 0,
///
/// and the 1/k^2 factor of the formal inverse is cancelled analytically via
/// the moment recurrence, exactly as in the series construction. The kernel
/// carries a factor q/pi and the iteration is empirically contractive for
/// q <= 1; starting from E = 0 makes the first sweep reproduce the zero-order
/// series term, and an optional under-relaxation factor is available for
/// robustness.
class DirectSolver {
public:
    explicit DirectSolver(const Workspace& ws) : ws_(&ws) {}

    /// Iterates until the sup-norm change of the density falls below tol.
    /// Throws DomainError for q outside (0,1], ConfigError for tol <= 0, and
    /// DivergenceError (with the residual history) if max_iter sweeps do not
    /// reach the tolerance.
    DirectSolution solve_fixed_point(double q, double g_T, double tol, int max_iter,
                                     double relaxation = 1.0) const;

    /// Sup over the grid of the max-norm residual of the Fredholm equation,
    ///   L(k)E + q T_hat_1(k) eps - (2-q) g_T T_hat_2(k) (-1,1)^T + (q/pi) int J(k,k1) E dk1.
    double fredholm_residual(const SpectralDensity& density, Vec2 eps, double q,
                             double g_T) const;
    double fredholm_residual(const DirectSolution& sol, double q, double g_T) const {
        return fredholm_residual(sol.density, sol.eps, q, g_T);
    }

private:
    const Workspace* ws_;
};

} // namespace bgkjump

#endif

#ifndef BGKJUMP_WORKSPACE_HPP
#define BGKJUMP_WORKSPACE_HPP

#include <array>
#include <mutex>
#include <vector>

#include "bgkjump/kernels.hpp"
#include "bgkjump/matrix2.hpp"
#include "bgkjump/quadrature.hpp"

namespace bgkjump {

/// Node counts and map scale of the two quadrature rules.
struct GridParams {
    int mu_nodes = 64;
    int k_nodes = 200;
    double map_scale = 1.0;
};

/// Shared discretization context for the series and fixed-point solvers: the
/// velocity rule, the wave-number rule, per-node caches of the T_hat matrix
/// families, and the dense kernel tableaux over the grid. The tableaux are
/// built once on first use and cached; after that everything is immutable, so
/// a workspace may be shared freely across threads. Solvers reuse one
/// workspace so that discretization error cancels when their results are
/// compared.
class Workspace {
public:
    explicit Workspace(GridParams params = GridParams());

    const GridParams& params() const { return params_; }
    const KernelEvaluator& kernels() const { return kernels_; }
    const QuadratureRule& k_rule() const { return k_rule_; }
    std::size_t grid_size() const { return k_rule_.size(); }

    /// Cached matrices at grid node i.
    const Matrix2& t_hat1(std::size_t i) const { return t_hat_[i][0]; }
    const Matrix2& t_hat2(std::size_t i) const { return t_hat_[i][1]; }
    const Matrix2& t_hat3(std::size_t i) const { return t_hat_[i][2]; }
    const Matrix2& t_hat4(std::size_t i) const { return t_hat_[i][3]; }

    /// Symmetric tableau of J3(k_i, k_j), row-major; entry (i, j) at i*n + j.
    const std::vector<Matrix2>& j3_tableau() const;

    /// Tableau of J(k_i, k_j), computed directly rather than through the
    /// moment identity J = T_hat_1(k_1) - k^2 J3, which loses all relative
    /// accuracy at large k where the two terms cancel.
    const std::vector<Matrix2>& j_tableau() const;

    /// Row of J3(0, k_j), used by the k -> 0 limit of the densities.
    const std::vector<Matrix2>& j3_zero_row() const;

    /// Index of the first grid node in the far-tail regime. Below it the
    /// densities are assembled from the pole-cancelled form (accurate near
    /// k = 0); from it on they use the raw form divided by k^2, which keeps
    /// relative accuracy where the cancelled form degenerates to rounding
    /// noise that the large tail weights would then amplify.
    std::size_t far_start() const { return far_start_; }

private:
    void build_tableaux() const;

    GridParams params_;
    KernelEvaluator kernels_;
    QuadratureRule k_rule_;
    std::vector<std::array<Matrix2, 4>> t_hat_;
    std::size_t far_start_ = 0;

    mutable std::once_flag tableaux_once_;
    mutable std::vector<Matrix2> j3_tableau_;
    mutable std::vector<Matrix2> j_tableau_;
    mutable std::vector<Matrix2> j3_zero_row_;
};

} // namespace bgkjump

#endif

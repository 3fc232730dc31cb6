#include "bgkjump/workspace.hpp"

#include <algorithm>

namespace bgkjump {

namespace {

// Density values at nodes beyond this are assembled from the raw equation
// divided by k^2 instead of the pole-cancelled form; both are accurate for
// k anywhere near the switch.
constexpr double kFarTailSwitch = 100.0;

} // namespace

Workspace::Workspace(GridParams params)
    : params_(params),
      kernels_(build_gaussian_halfline_rule(params.mu_nodes)),
      k_rule_(build_algebraic_halfline_rule(params.k_nodes, params.map_scale)) {
    const std::size_t n = k_rule_.size();

    t_hat_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = k_rule_.nodes[i];
        for (int fam = 0; fam < 4; ++fam) {
            t_hat_[i][fam] = kernels_.t_hat(fam + 1, k);
        }
    }

    far_start_ = static_cast<std::size_t>(
        std::upper_bound(k_rule_.nodes.begin(), k_rule_.nodes.end(), kFarTailSwitch) -
        k_rule_.nodes.begin());
}

void Workspace::build_tableaux() const {
    const std::size_t n = k_rule_.size();
    j3_tableau_.resize(n * n);
    j_tableau_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Matrix2 v3 = kernels_.j3_kernel(k_rule_.nodes[i], k_rule_.nodes[j]);
            const Matrix2 v1 = kernels_.j_kernel(k_rule_.nodes[i], k_rule_.nodes[j]);
            j3_tableau_[i * n + j] = v3;
            j3_tableau_[j * n + i] = v3;
            j_tableau_[i * n + j] = v1;
            j_tableau_[j * n + i] = v1;
        }
    }
    j3_zero_row_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        j3_zero_row_[j] = kernels_.j3_kernel(0.0, k_rule_.nodes[j]);
    }
}

const std::vector<Matrix2>& Workspace::j3_tableau() const {
    std::call_once(tableaux_once_, [this] { build_tableaux(); });
    return j3_tableau_;
}

const std::vector<Matrix2>& Workspace::j_tableau() const {
    std::call_once(tableaux_once_, [this] { build_tableaux(); });
    return j_tableau_;
}

const std::vector<Matrix2>& Workspace::j3_zero_row() const {
    std::call_once(tableaux_once_, [this] { build_tableaux(); });
    return j3_zero_row_;
}

} // namespace bgkjump

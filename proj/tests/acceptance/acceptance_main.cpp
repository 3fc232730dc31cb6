/*
 * Acceptance suite: end-to-end checks of the published values and the
 * structural identities at the default discretization (64 velocity nodes,
 * 200 wave-number nodes). Prints one PASS/FAIL line per criterion and exits
 * nonzero if any fail.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bgkjump/direct.hpp"
#include "bgkjump/fields.hpp"
#include "bgkjump/series.hpp"
#include "bgkjump/workspace.hpp"

using namespace bgkjump;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!ok) {
        ++failures;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    const Workspace ws; // 64 mu-nodes, 200 k-nodes, map scale 1
    const SeriesSolver series(ws);
    const DirectSolver direct(ws);
    const double sqrt_pi = std::sqrt(M_PI);

    // 1. zero-order jump pair, closed values -5 sqrt(pi)/16 and 5 sqrt(pi)/8
    {
        const Vec2 eps0 = zero_order_jumps();
        const double err = std::max(std::abs(eps0.v1 + 5.0 * sqrt_pi / 16.0),
                                    std::abs(eps0.v2 - 5.0 * sqrt_pi / 8.0));
        const double err_published =
            std::max(std::abs(eps0.v1 + 0.55389), std::abs(eps0.v2 - 1.10778));
        report(1, "zero-order jumps", err < 1e-5 && err_published < 1e-5,
               "max deviation " + fmt(std::max(err, err_published)));
    }

    // 2. first-order jump pair at the default grid
    Vec2 eps1{};
    {
        const auto t0 = std::chrono::steady_clock::now();
        eps1 = series.next_order_jumps(series.zero_order_density());
        const double elapsed = seconds_since(t0);
        const double err =
            std::max(std::abs(eps1.v1 + 0.21018), std::abs(eps1.v2 - 0.21378));
        report(2, "first-order jumps", err < 2e-4 && elapsed < 10.0,
               "max deviation " + fmt(err) + ", " + fmt(elapsed) + " s");
    }

    // 3. jump-coefficient table and error row against the discrete-ordinates
    //    reference values
    {
        const double eps_t0 = 5.0 * sqrt_pi / 8.0;
        const std::vector<double> qs = {1.0, 0.9, 0.7, 0.6, 0.5, 0.3, 0.1};
        const std::vector<double> table = {1.32156, 1.58911, 2.33522, 2.88411,
                                           3.64401, 6.64085, 21.45400};
        const std::vector<double> reference = {1.30272, 1.57026, 2.31753, 2.86762,
                                               3.62922, 6.63051, 21.45012};
        const std::vector<double> error_row = {-1.4, -1.2, -0.75, -0.58,
                                               -0.44, -0.16, -0.018};
        double worst_table = 0.0;
        double worst_error_row = 0.0;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            const double q = qs[i];
            const double eps_t = (2.0 - q) / q * (eps_t0 + eps1.v2 * q);
            worst_table = std::max(worst_table, std::abs(eps_t - table[i]));
            const double error_percent = (reference[i] - eps_t) / reference[i] * 100.0;
            worst_error_row =
                std::max(worst_error_row, std::abs(error_percent - error_row[i]));
        }
        report(3, "table reproduction", worst_table < 1e-3 && worst_error_row < 0.1,
               "max table deviation " + fmt(worst_table) + ", max error-row deviation " +
                   fmt(worst_error_row) + " pp");
    }

    // 4. structural identity suite on k in {0.1, 0.5, 1, 2, 5}
    {
        const KernelEvaluator& ev = ws.kernels();
        double worst = 0.0;
        for (double k : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            // L(k) = E2 - T_hat_0(k) = k^2 T_hat_2(k); build T_hat_0 from the
            // scalar moments
            const auto t = ev.t_moments(k);
            const Matrix2 t_hat0 = {t[0], t[2] - 0.5 * t[0], (2.0 / 3.0) * (t[2] - 0.5 * t[0]),
                                    (2.0 / 3.0) * (t[4] - t[2] + 1.25 * t[0])};
            worst = std::max(worst,
                             ((identity2() - t_hat0) - ev.dispersion_matrix(k)).max_abs());
            // J(k, 0) = T_hat_1(k)
            worst = std::max(worst, (ev.j_kernel(k, 0.0) - ev.t_hat(1, k)).max_abs());
            // moment recurrence
            for (int m = 0; m <= 6; ++m) {
                worst = std::max(worst, std::abs(ev.t_moment(m, k) -
                                                 (t_moment_zero(m) -
                                                  k * k * ev.t_moment(m + 2, k))));
            }
            // kernel structure a21 = (2/3) a12
            for (int n = 1; n <= 4; ++n) {
                const Matrix2 m = ev.t_hat(n, k);
                worst = std::max(worst, std::abs(m.a21 - (2.0 / 3.0) * m.a12));
            }
            const Matrix2 j = ev.j_kernel(k, 1.3);
            worst = std::max(worst, std::abs(j.a21 - (2.0 / 3.0) * j.a12));
            const Matrix2 j3 = ev.j3_kernel(k, 1.3);
            worst = std::max(worst, std::abs(j3.a21 - (2.0 / 3.0) * j3.a12));
        }
        report(4, "identity suite", worst < 1e-9, "max residual " + fmt(worst));
    }

    // 5. fixed-point oracle against the series truncated at order 3
    {
        const auto t0 = std::chrono::steady_clock::now();
        double worst_gap = 0.0;
        double worst_residual = 0.0;
        bool ok = true;
        for (double q : {0.1, 0.5, 1.0}) {
            const DirectSolution sol = direct.solve_fixed_point(q, 1.0, 1e-8, 200);
            const JumpResult truncated = series.assemble_series(q, 1.0, 3);
            worst_gap = std::max(worst_gap, std::abs(sol.eps.v1 - truncated.eps_n));
            worst_gap = std::max(worst_gap, std::abs(sol.eps.v2 - truncated.eps_T));
            worst_residual = std::max(worst_residual, sol.final_residual);
        }
        const double elapsed = seconds_since(t0);
        ok = worst_gap < 5e-4 && worst_residual < 1e-6 && elapsed < 60.0;
        report(5, "oracle equivalence", ok,
               "max gap " + fmt(worst_gap) + ", max residual " + fmt(worst_residual) + ", " +
                   fmt(elapsed) + " s");
    }

    // 6. pole-removal residuals through order 3
    {
        const std::vector<SeriesOrder> orders = series.orders(3);
        double worst = 0.0;
        for (int m = 1; m <= 3; ++m) {
            worst = std::max(worst, orders[m].pole_residual);
        }
        const bool ok = orders[0].pole_residual < 1e-12 && worst < 1e-10;
        report(6, "pole-removal invariant", ok,
               "order-0 residual " + fmt(orders[0].pole_residual) + ", max higher-order " +
                   fmt(worst));
    }

    // 7. stability of the first-order pair under doubling both node counts
    {
        const Workspace fine_ws(GridParams{128, 400, 1.0});
        const SeriesSolver fine(fine_ws);
        const Vec2 refined = fine.next_order_jumps(fine.zero_order_density());
        const double delta = std::max(std::abs(refined.v1 - eps1.v1),
                                      std::abs(refined.v2 - eps1.v2));
        report(7, "grid-refinement stability", delta < 1e-5, "delta " + fmt(delta));
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "bgkjump/direct.hpp"
#include "bgkjump/errors.hpp"
#include "bgkjump/series.hpp"
#include "bgkjump/workspace.hpp"

using namespace bgkjump;

namespace {

const Workspace& shared_workspace() {
    static const Workspace ws;
    return ws;
}

// Assemble the series density and jump pair at (q, g_T) up to order m, for
// residual comparisons against the full equation.
std::pair<SpectralDensity, Vec2> series_solution(const SeriesSolver& solver, double q,
                                                 double g_T, int m) {
    const std::vector<SeriesOrder> orders = solver.orders(m);
    const std::size_t n = orders[0].density.size();
    std::vector<Vec2> values(n, Vec2{});
    Vec2 eps{};
    double qm = 1.0;
    for (const SeriesOrder& term : orders) {
        for (std::size_t i = 0; i < n; ++i) {
            values[i] += term.density.values()[i] * ((2.0 - q) * g_T * qm);
        }
        eps += term.eps * qm;
        qm *= q;
    }
    eps = eps * ((2.0 - q) / q * g_T);
    SpectralDensity density(orders[0].density.grid(), std::move(values), Vec2{});
    return {std::move(density), eps};
}

} // namespace

TEST_CASE("vanishing accommodation reproduces the zero-order limit in one sweep") {
    const DirectSolver solver(shared_workspace());
    const double q = 1e-10;
    const DirectSolution sol = solver.solve_fixed_point(q, 1.0, 1e-8, 50);
    CHECK(sol.iterations <= 2);
    const Vec2 expected = zero_order_jumps() * ((2.0 - q) / q);
    CHECK(std::abs(sol.eps.v1 / expected.v1 - 1.0) < 1e-10);
    CHECK(std::abs(sol.eps.v2 / expected.v2 - 1.0) < 1e-10);
}

TEST_CASE("fixed point agrees with the truncated expansion") {
    const Workspace& ws = shared_workspace();
    const DirectSolver direct(ws);
    const SeriesSolver series(ws);

    int iterations_q1 = 0;
    for (double q : {0.1, 0.5, 1.0}) {
        const DirectSolution sol = direct.solve_fixed_point(q, 1.0, 1e-8, 200);
        const JumpResult truncated = series.assemble_series(q, 1.0, 3);
        CHECK(std::abs(sol.eps.v1 - truncated.eps_n) < 5e-4);
        CHECK(std::abs(sol.eps.v2 - truncated.eps_T) < 5e-4);
        CHECK(sol.final_residual < 10.0 * 1e-8);
        CHECK(sol.final_residual < 1e-6);
        CHECK(sol.history.size() == static_cast<std::size_t>(sol.iterations));
        if (q == 1.0) {
            iterations_q1 = sol.iterations;
        }
    }
    // weaker accommodation contracts faster
    const DirectSolution half = direct.solve_fixed_point(0.5, 1.0, 1e-8, 200);
    CHECK(half.iterations <= iterations_q1);
}

TEST_CASE("solution scales linearly in the gradient") {
    const DirectSolver solver(shared_workspace());
    const DirectSolution one = solver.solve_fixed_point(0.8, 1.0, 1e-10, 200);
    const DirectSolution two = solver.solve_fixed_point(0.8, 2.0, 1e-10, 200);
    CHECK(std::abs(two.eps.v1 / one.eps.v1 - 2.0) < 1e-12);
    CHECK(std::abs(two.eps.v2 / one.eps.v2 - 2.0) < 1e-12);
}

TEST_CASE("under-relaxation reaches the same fixed point") {
    const DirectSolver solver(shared_workspace());
    const DirectSolution plain = solver.solve_fixed_point(1.0, 1.0, 1e-10, 300);
    const DirectSolution relaxed = solver.solve_fixed_point(1.0, 1.0, 1e-10, 300, 0.6);
    CHECK(std::abs(plain.eps.v1 - relaxed.eps.v1) < 1e-8);
    CHECK(std::abs(plain.eps.v2 - relaxed.eps.v2) < 1e-8);
}

TEST_CASE("residual of non-solutions") {
    const Workspace& ws = shared_workspace();
    const DirectSolver direct(ws);
    const SeriesSolver series(ws);

    SUBCASE("zero density with the zero-order pair is not a solution") {
        const double q = 0.5;
        const SpectralDensity zero(ws.k_rule().nodes,
                                   std::vector<Vec2>(ws.grid_size(), Vec2{}), Vec2{});
        const Vec2 eps = zero_order_jumps() * ((2.0 - q) / q);
        CHECK(direct.fredholm_residual(zero, eps, q, 1.0) > 0.0);
    }

    SUBCASE("adding the first-order term shrinks the residual at small q") {
        const double q = 0.1;
        const auto [e0, eps0] = series_solution(series, q, 1.0, 0);
        const auto [e1, eps1] = series_solution(series, q, 1.0, 1);
        const double r0 = direct.fredholm_residual(e0, eps0, q, 1.0);
        const double r1 = direct.fredholm_residual(e1, eps1, q, 1.0);
        CHECK(r1 < r0);
    }
}

TEST_CASE("input guards and divergence reporting") {
    const DirectSolver solver(shared_workspace());
    CHECK_THROWS_AS(solver.solve_fixed_point(0.0, 1.0, 1e-8, 100), DomainError);
    CHECK_THROWS_AS(solver.solve_fixed_point(1.2, 1.0, 1e-8, 100), DomainError);
    CHECK_THROWS_AS(solver.solve_fixed_point(0.5, 1.0, 0.0, 100), ConfigError);
    CHECK_THROWS_AS(solver.solve_fixed_point(0.5, 1.0, 1e-8, 0), ConfigError);
    CHECK_THROWS_AS(solver.solve_fixed_point(0.5, 1.0, 1e-8, 100, 1.5), ConfigError);

    try {
        solver.solve_fixed_point(1.0, 1.0, 1e-15, 2);
        FAIL("expected DivergenceError");
    } catch (const DivergenceError& e) {
        CHECK(e.residual_history().size() == 2);
        CHECK(e.residual_history().front() > 0.0);
    }
}

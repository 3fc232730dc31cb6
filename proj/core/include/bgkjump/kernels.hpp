#ifndef BGKJUMP_KERNELS_HPP
#define BGKJUMP_KERNELS_HPP

#include <array>

#include "bgkjump/matrix2.hpp"
#include "bgkjump/quadrature.hpp"

namespace bgkjump {

/// The 2x2 collision kernel of the vector kinetic equation,
///
///   K(mu) = [ 1                  mu^2 - 1/2            ]
///           [ (2/3)(mu^2 - 1/2)  (2/3)((mu^2-1/2)^2+1) ]
///
/// Its rows are the density and temperature moment weights; the relation
/// K21 = (2/3) K12 propagates to every matrix built from it.
Matrix2 matrix_kernel(double mu);

/// Closed-form Gaussian moments T_m(0) = (2/sqrt(pi)) int_0^inf e^{-mu^2} mu^m dmu
/// for m in 0..8: even m = 2j gives (2j-1)!!/2^j, odd m = 2j+1 gives j!/sqrt(pi).
/// Throws DomainError for m outside 0..8.
double t_moment_zero(int m);

/// Evaluates the scalar moments T_m(k), the matrix families T_hat_n(k), the
/// dispersion matrix L(k) = k^2 T_hat_2(k) and the two Fredholm kernels, all
/// by a shared half-range Gaussian quadrature rule in the velocity variable.
///
/// All methods are pure and the evaluator is immutable, so concurrent use is
/// unrestricted.
class KernelEvaluator {
public:
    /// The rule must be of the Gaussian-weight kind.
    explicit KernelEvaluator(QuadratureRule mu_rule);

    /// T_m(k) = (2/sqrt(pi)) int_0^inf e^{-mu^2} mu^m / (1 + k^2 mu^2) dmu.
    /// Throws DomainError for m outside 0..8.
    double t_moment(int m, double k) const;

    /// All of T_0(k) .. T_8(k) in one sweep over the nodes.
    std::array<double, 9> t_moments(double k) const;

    /// T_hat_n(k) = (2/sqrt(pi)) int_0^inf e^{-mu^2} K(mu) mu^n / (1 + k^2 mu^2) dmu,
    /// assembled from the scalar moments:
    ///   [ T_n              T_{n+2} - T_n/2                  ]
    ///   [ (2/3)(...)       (2/3)(T_{n+4} - T_{n+2} + 5T_n/4) ]
    /// Throws DomainError for n outside 1..4.
    Matrix2 t_hat(int n, double k) const;

    /// Dispersion matrix L(k) = E_2 - T_hat_0(k) = k^2 T_hat_2(k); the
    /// right-hand form is used so that L(0) is exactly zero.
    Matrix2 dispersion_matrix(double k) const;

    /// Fredholm kernel
    /// J(k,k1) = (2/sqrt(pi)) int_0^inf e^{-mu^2} K(mu) mu dmu / ((1+k^2 mu^2)(1+k1^2 mu^2)),
    /// symmetric in (k, k1), with J(k,0) = T_hat_1(k).
    Matrix2 j_kernel(double k, double k1) const;

    /// Companion kernel with mu^3 in place of mu; satisfies
    /// J(k,k1) = T_hat_1(k1) - k^2 J3(k,k1) node-by-node.
    Matrix2 j3_kernel(double k, double k1) const;

    const QuadratureRule& mu_rule() const { return rule_; }

private:
    QuadratureRule rule_;
};

/// T_hat_1(0) = (1/sqrt(pi)) [[1, 1/2], [1/3, 3/2]] in closed form.
Matrix2 t_hat1_zero();

/// T_hat_2(0) = (1/2) [[1, 1], [2/3, 7/3]] in closed form.
Matrix2 t_hat2_zero();

} // namespace bgkjump

#endif

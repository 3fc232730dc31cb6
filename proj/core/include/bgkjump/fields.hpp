#ifndef BGKJUMP_FIELDS_HPP
#define BGKJUMP_FIELDS_HPP

#include <span>
#include <vector>

#include "bgkjump/spectral.hpp"
#include "bgkjump/workspace.hpp"

namespace bgkjump {

/// Spatial profile of the continuum part of the macroscopic moments,
/// (dn_c/n0, dT_c/T0), on a grid of distances in units of the mean free path.
struct MomentProfile {
    std::vector<double> x;
    std::vector<Vec2> values;
    /// set when the base wave-number grid under-resolves cos(kx) (fewer than
    /// 4 nodes per period over the support of the density) at the largest
    /// requested x handled by the base rule
    bool resolution_warning = false;
};

/// Boundary value of the continuum distribution reached along incoming
/// characteristics,
///   h_c(0, mu) = (1/pi) int_0^inf E(k1) dk1 / (1 + k1^2 mu^2),
/// even in mu by construction. The density grid must match the rule.
Vec2 boundary_distribution(const QuadratureRule& k_rule, const SpectralDensity& density,
                           double mu);

/// Macroscopic moment profile by cosine inversion,
///   U_c(x) = (1/pi) int_0^inf cos(kx) E(k) dk
/// (the density is treated as even in k). For x <= 10 the base rule is used,
/// so the x = 0 value is exactly the weighted sum of the stored density; for
/// larger x an oscillation-aware panel rule over the interpolant takes over,
/// with a two-term integration-by-parts correction for the truncated tail.
MomentProfile macroscopic_profile(const QuadratureRule& k_rule, const SpectralDensity& density,
                                  std::span<const double> x_grid);

/// Moment integral of the full wall boundary value: boundary_distribution on
/// the incoming half-range, and the mirror-diffuse reflection of it plus the
/// wall source on the outgoing half-range,
///   (1/sqrt(pi)) int_{-inf}^{inf} e^{-mu^2} K(mu) h_c(0, mu) dmu
///     = (1/sqrt(pi)) int_0^inf e^{-mu^2} K(mu) [ (2-q) h_c(0,mu) + h0(mu) ] dmu,
///   h0(mu) = -q eps + (2-q) g_T mu (-1, 1)^T.
/// For a converged density this reproduces the profile value at x = 0; it is
/// the independent consistency check for the cosine inversion.
Vec2 wall_moments(const Workspace& ws, const SpectralDensity& density, Vec2 eps, double q,
                  double g_T);

} // namespace bgkjump

#endif

#include "bgkjump/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "bgkjump/errors.hpp"

namespace bgkjump {

SpectralDensity::SpectralDensity(std::vector<double> k_grid, std::vector<Vec2> values,
                                 Vec2 value_at_zero)
    : k_(std::move(k_grid)), values_(std::move(values)), value0_(value_at_zero) {
    if (k_.size() != values_.size() || k_.empty()) {
        throw ConfigError("SpectralDensity: grid and value lengths must match and be nonempty");
    }
    for (const Vec2& v : values_) {
        if (!v.finite()) {
            throw ConfigError("SpectralDensity: non-finite value");
        }
    }
    build_slopes();
}

void SpectralDensity::build_slopes() {
    const std::size_t n = k_.size();
    slopes_.assign(n, Vec2{});
    if (n == 1) {
        return;
    }
    // Three-point slopes on the nonuniform grid, one-sided at the ends. The
    // k = 0 anchor participates as an extra left point with zero slope.
    auto secant = [&](std::size_t i, std::size_t j) {
        return (values_[j] - values_[i]) * (1.0 / (k_[j] - k_[i]));
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            const double h0 = k_[0];           // from the zero anchor
            const double h1 = k_[1] - k_[0];
            const Vec2 d0 = (values_[0] - value0_) * (1.0 / h0);
            const Vec2 d1 = secant(0, 1);
            slopes_[0] = (d0 * h1 + d1 * h0) * (1.0 / (h0 + h1));
        } else if (i + 1 == n) {
            slopes_[i] = secant(i - 1, i);
        } else {
            const double h0 = k_[i] - k_[i - 1];
            const double h1 = k_[i + 1] - k_[i];
            slopes_[i] = (secant(i - 1, i) * h1 + secant(i, i + 1) * h0) * (1.0 / (h0 + h1));
        }
    }
}

std::size_t SpectralDensity::segment(double k) const {
    const auto it = std::upper_bound(k_.begin(), k_.end(), k);
    return static_cast<std::size_t>(it - k_.begin());
}

namespace {

// Cubic Hermite on [a, b] with values/slopes at both ends.
Vec2 hermite(double k, double a, double b, Vec2 ya, Vec2 ma, Vec2 yb, Vec2 mb, bool deriv) {
    const double h = b - a;
    const double s = (k - a) / h;
    const double s2 = s * s;
    if (!deriv) {
        const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        const double h10 = s * (1.0 - s) * (1.0 - s);
        const double h01 = s2 * (3.0 - 2.0 * s);
        const double h11 = s2 * (s - 1.0);
        return ya * h00 + ma * (h * h10) + yb * h01 + mb * (h * h11);
    }
    const double g00 = 6.0 * s * (s - 1.0) / h;
    const double g10 = (1.0 - s) * (1.0 - 3.0 * s);
    const double g01 = -g00;
    const double g11 = s * (3.0 * s - 2.0);
    return ya * g00 + ma * g10 + yb * g01 + mb * g11;
}

} // namespace

Vec2 SpectralDensity::operator()(double k) const {
    if (k <= 0.0) {
        return value0_;
    }
    const std::size_t i = segment(k);
    if (i == 0) {
        return hermite(k, 0.0, k_[0], value0_, slope0_, values_[0], slopes_[0], false);
    }
    if (i >= k_.size()) {
        return values_.back();
    }
    return hermite(k, k_[i - 1], k_[i], values_[i - 1], slopes_[i - 1], values_[i], slopes_[i],
                   false);
}

Vec2 SpectralDensity::derivative(double k) const {
    if (k <= 0.0) {
        return slope0_;
    }
    const std::size_t i = segment(k);
    if (i == 0) {
        return hermite(k, 0.0, k_[0], value0_, slope0_, values_[0], slopes_[0], true);
    }
    if (i >= k_.size()) {
        return Vec2{};
    }
    return hermite(k, k_[i - 1], k_[i], values_[i - 1], slopes_[i - 1], values_[i], slopes_[i],
                   true);
}

} // namespace bgkjump

#ifndef BGKJUMP_MATRIX2_HPP
#define BGKJUMP_MATRIX2_HPP

#include <algorithm>
#include <cmath>

#include "bgkjump/errors.hpp"

namespace bgkjump {

/// Real 2-component column vector. The meaning of the components is given by
/// context: a (density, temperature) jump pair, a source column C(k), a value
/// of a spectral density, or a (dn/n0, dT/T0) moment pair.
struct Vec2 {
    double v1 = 0.0;
    double v2 = 0.0;

    Vec2 operator+(Vec2 o) const { return {v1 + o.v1, v2 + o.v2}; }
    Vec2 operator-(Vec2 o) const { return {v1 - o.v1, v2 - o.v2}; }
    Vec2 operator-() const { return {-v1, -v2}; }
    Vec2 operator*(double s) const { return {v1 * s, v2 * s}; }
    Vec2& operator+=(Vec2 o) {
        v1 += o.v1;
        v2 += o.v2;
        return *this;
    }

    double max_abs() const { return std::max(std::abs(v1), std::abs(v2)); }
    bool finite() const { return std::isfinite(v1) && std::isfinite(v2); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Real 2x2 matrix. Every matrix produced from the collision kernel K(mu)
/// inherits the structural relation a21 = (2/3) a12 from the kernel itself.
struct Matrix2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    double det() const { return a11 * a22 - a12 * a21; }
    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }

    Vec2 operator*(Vec2 x) const {
        return {a11 * x.v1 + a12 * x.v2, a21 * x.v1 + a22 * x.v2};
    }
    Matrix2 operator+(Matrix2 o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Matrix2 operator-(Matrix2 o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Matrix2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    Matrix2& operator+=(Matrix2 o) {
        a11 += o.a11;
        a12 += o.a12;
        a21 += o.a21;
        a22 += o.a22;
        return *this;
    }
};

inline Matrix2 operator*(double s, Matrix2 m) { return m * s; }

inline Matrix2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

/// Solve A x = b by Cramer's rule. The only matrices inverted in this library
/// are provably well conditioned, so a determinant below the floor
/// 1e-12 * |A|_max^2 indicates a defect rather than a legitimate domain case.
inline Vec2 solve2(const Matrix2& a, Vec2 b) {
    const double det = a.det();
    const double scale = a.max_abs();
    const double floor = 1e-12 * scale * scale;
    if (!(std::abs(det) > floor)) {
        throw SingularMatrixError("solve2: near-singular matrix, |det| = " +
                                      std::to_string(std::abs(det)),
                                  det);
    }
    return {(a.a22 * b.v1 - a.a12 * b.v2) / det,
            (a.a11 * b.v2 - a.a21 * b.v1) / det};
}

} // namespace bgkjump

#endif

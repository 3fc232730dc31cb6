#include "bgkjump/kernels.hpp"

#include <cmath>
#include <string>

#include "bgkjump/errors.hpp"

namespace bgkjump {

namespace {

const double kSqrtPi = std::sqrt(M_PI);
const double kTwoOverSqrtPi = 2.0 / std::sqrt(M_PI);

void check_moment_index(int m) {
    if (m < 0 || m > 8) {
        throw DomainError("t_moment: index " + std::to_string(m) + " outside 0..8");
    }
}

} // namespace

Matrix2 matrix_kernel(double mu) {
    const double c = mu * mu - 0.5;
    return {1.0, c, (2.0 / 3.0) * c, (2.0 / 3.0) * (c * c + 1.0)};
}

double t_moment_zero(int m) {
    check_moment_index(m);
    switch (m) {
        case 0: return 1.0;
        case 1: return 1.0 / kSqrtPi;
        case 2: return 0.5;
        case 3: return 1.0 / kSqrtPi;
        case 4: return 0.75;
        case 5: return 2.0 / kSqrtPi;
        case 6: return 1.875;
        case 7: return 6.0 / kSqrtPi;
        default: return 6.5625; // 105/16
    }
}

KernelEvaluator::KernelEvaluator(QuadratureRule mu_rule) : rule_(std::move(mu_rule)) {
    if (rule_.kind != RuleKind::GaussianWeightHalfline) {
        throw ConfigError("KernelEvaluator: velocity rule must carry the Gaussian weight");
    }
}

std::array<double, 9> KernelEvaluator::t_moments(double k) const {
    std::array<double, 9> acc{};
    const double k2 = k * k;
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        const double mu = rule_.nodes[i];
        const double r = rule_.weights[i] / (1.0 + k2 * mu * mu);
        double power = r;
        for (int m = 0; m <= 8; ++m) {
            acc[m] += power;
            power *= mu;
        }
    }
    for (double& v : acc) {
        v *= kTwoOverSqrtPi;
    }
    return acc;
}

double KernelEvaluator::t_moment(int m, double k) const {
    check_moment_index(m);
    const double k2 = k * k;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        const double mu = rule_.nodes[i];
        sum += rule_.weights[i] * std::pow(mu, m) / (1.0 + k2 * mu * mu);
    }
    return kTwoOverSqrtPi * sum;
}

Matrix2 KernelEvaluator::t_hat(int n, double k) const {
    if (n < 1 || n > 4) {
        throw DomainError("t_hat: index " + std::to_string(n) + " outside 1..4");
    }
    const std::array<double, 9> t = t_moments(k);
    const double tn = t[n];
    const double tn2 = t[n + 2];
    const double tn4 = t[n + 4];
    const double off = tn2 - 0.5 * tn;
    return {tn, off, (2.0 / 3.0) * off, (2.0 / 3.0) * (tn4 - tn2 + 1.25 * tn)};
}

Matrix2 KernelEvaluator::dispersion_matrix(double k) const {
    return (k * k) * t_hat(2, k);
}

Matrix2 KernelEvaluator::j_kernel(double k, double k1) const {
    const double k2 = k * k;
    const double k12 = k1 * k1;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        const double mu = rule_.nodes[i];
        const double mu2 = mu * mu;
        const double c = mu2 - 0.5;
        const double r = rule_.weights[i] * mu / ((1.0 + k2 * mu2) * (1.0 + k12 * mu2));
        s1 += r;
        s2 += r * c;
        s3 += r * (c * c + 1.0);
    }
    s1 *= kTwoOverSqrtPi;
    s2 *= kTwoOverSqrtPi;
    s3 *= kTwoOverSqrtPi;
    return {s1, s2, (2.0 / 3.0) * s2, (2.0 / 3.0) * s3};
}

Matrix2 KernelEvaluator::j3_kernel(double k, double k1) const {
    const double k2 = k * k;
    const double k12 = k1 * k1;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    for (std::size_t i = 0; i < rule_.size(); ++i) {
        const double mu = rule_.nodes[i];
        const double mu2 = mu * mu;
        const double c = mu2 - 0.5;
        const double r = rule_.weights[i] * mu * mu2 / ((1.0 + k2 * mu2) * (1.0 + k12 * mu2));
        s1 += r;
        s2 += r * c;
        s3 += r * (c * c + 1.0);
    }
    s1 *= kTwoOverSqrtPi;
    s2 *= kTwoOverSqrtPi;
    s3 *= kTwoOverSqrtPi;
    return {s1, s2, (2.0 / 3.0) * s2, (2.0 / 3.0) * s3};
}

Matrix2 t_hat1_zero() {
    const double c = 1.0 / kSqrtPi;
    return {c, 0.5 * c, c / 3.0, 1.5 * c};
}

Matrix2 t_hat2_zero() {
    return {0.5, 0.5, 1.0 / 3.0, 7.0 / 6.0};
}

} // namespace bgkjump

#include "spirallike/spiral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spirallike {

namespace {

constexpr double half_pi = 1.5707963267948966192313216916398;

// Moduli below this are indistinguishable from the origin for our purposes;
// log would overflow toward -inf and the spiral argument loses meaning.
constexpr double origin_floor = 1e-300;

}  // namespace

LambdaAngle::LambdaAngle(double radians)
    : value_(radians),
      tan_(std::tan(radians)),
      sin_(std::sin(radians)),
      cos_(std::cos(radians)) {
    if (!std::isfinite(radians) || std::abs(radians) >= half_pi) {
        throw std::invalid_argument("spiral angle must satisfy |lambda| < pi/2, got " +
                                    std::to_string(radians));
    }
}

double reduce_angle(double theta) noexcept {
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) r += two_pi;
    // fmod can land exactly on 2*pi after the correction when theta is a
    // tiny negative number; fold that back to 0.
    if (r >= two_pi) r = 0.0;
    return r;
}

Complex spiral_point(const LambdaAngle& lam, const SpiralCoord& c) {
    if (!(c.r >= 0.0)) {
        throw std::invalid_argument("spiral coordinate has negative modulus r = " +
                                    std::to_string(c.r));
    }
    if (c.r == 0.0) return Complex(0.0, 0.0);
    return std::polar(c.r, c.theta + lam.tan() * std::log(c.r));
}

double lambda_arg(const LambdaAngle& lam, const Complex& w) {
    const double r = std::abs(w);
    if (!std::isfinite(r) || r < origin_floor) {
        throw std::domain_error("spiral argument is undefined at the origin");
    }
    return reduce_angle(std::arg(w) - lam.tan() * std::log(r));
}

SpiralCoord decompose(const LambdaAngle& lam, const Complex& w) {
    return SpiralCoord{std::abs(w), lambda_arg(lam, w)};
}

std::vector<Complex> spiral_segment(const LambdaAngle& lam, const Complex& w,
                                    std::size_t n) {
    if (std::abs(w) < origin_floor) return {Complex(0.0, 0.0)};
    if (n < 2) {
        throw std::invalid_argument("spiral segment needs at least 2 samples");
    }
    // Modulus along the segment is |w|*exp(t*cos(lambda)) for t <= 0; pick T
    // so the first on-spiral sample sits at the floor modulus 1e-9*|w|.
    const double floor_ratio = 1e-9;
    const double T = -std::log(floor_ratio) / lam.cos();
    const Complex direction = std::exp(Complex(0.0, lam.radians()));

    std::vector<Complex> points;
    points.reserve(n);
    points.push_back(Complex(0.0, 0.0));
    const double steps = static_cast<double>(n >= 3 ? n - 2 : 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double t = -T + T * static_cast<double>(j) / steps;
        points.push_back(w * std::exp(direction * t));
    }
    points.back() = w;  // pin the endpoint exactly
    return points;
}

LogCoord to_log(const Complex& z) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || r < origin_floor) {
        throw std::domain_error("logarithmic coordinates are undefined at the origin");
    }
    return LogCoord{std::log(r), std::arg(z)};
}

Complex from_log(const LogCoord& z) {
    return std::exp(Complex(z.x, z.y));
}

}  // namespace spirallike

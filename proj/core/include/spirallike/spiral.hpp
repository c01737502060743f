#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spirallike {

using Complex = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Angle of a logarithmic-spiral family: the curve through 1 is
// {exp(e^{i*lambda} t) : t real}, a ray when lambda = 0.
class LambdaAngle {
public:
    explicit LambdaAngle(double radians);

    double radians() const noexcept { return value_; }
    double tan() const noexcept { return tan_; }
    double sin() const noexcept { return sin_; }
    double cos() const noexcept { return cos_; }

private:
    double value_;
    double tan_;
    double sin_;
    double cos_;
};

// Spiral polar coordinates of a point: modulus r >= 0 and spiral argument
// theta (unreduced radians). r == 0 is the origin, theta then arbitrary.
struct SpiralCoord {
    double r;
    double theta;
};

// Logarithmic coordinates Z = X + iY = log z (principal branch).
struct LogCoord {
    double x;
    double y;
};

// Reduce an angle to its representative in [0, 2*pi).
double reduce_angle(double theta) noexcept;

// P(r, theta) = r * exp(i*(theta + tan(lambda)*log r)); P(0, theta) = 0.
Complex spiral_point(const LambdaAngle& lam, const SpiralCoord& c);

// Spiral argument arg w - tan(lambda)*log|w|, reduced to [0, 2*pi).
// Throws std::domain_error for w = 0 (including |w| below 1e-300).
double lambda_arg(const LambdaAngle& lam, const Complex& w);

// Inverse of spiral_point: (|w|, lambda_arg(w)) with theta in [0, 2*pi).
SpiralCoord decompose(const LambdaAngle& lam, const Complex& w);

// n samples of the spiral segment [0, w] = {w*exp(e^{i*lambda} t) : t <= 0}
// together with its limit point 0: the first sample is 0, the remaining
// n - 1 lie on the spiral from the truncation floor (modulus 1e-9*|w|)
// up to w itself, uniformly spaced in the parameter t. Requires n >= 2;
// w = 0 yields the single point 0.
std::vector<Complex> spiral_segment(const LambdaAngle& lam, const Complex& w,
                                    std::size_t n);

// Principal-branch logarithmic coordinates and their inverse.
LogCoord to_log(const Complex& z);
Complex from_log(const LogCoord& z);

}  // namespace spirallike

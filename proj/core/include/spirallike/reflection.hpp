#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "spirallike/domain.hpp"

namespace spirallike {

// Point on the Riemann sphere: a finite complex value or the point at
// infinity (kept distinct from float overflow).
class SpherePoint {
public:
    SpherePoint() = default;
    SpherePoint(const Complex& v) : value_(v) {}
    SpherePoint(double v) : value_(v) {}
    static SpherePoint infinity() {
        SpherePoint p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinity() const noexcept { return infinite_; }
    // Finite value; throws std::domain_error at infinity.
    Complex value() const;

private:
    Complex value_{0.0, 0.0};
    bool infinite_ = false;
};

// Evaluator abstraction for an analytic map on the open unit disk; the
// derivative evaluator is optional (null when absent).
struct AnalyticMap {
    std::function<Complex(const Complex&)> value;
    std::function<Complex(const Complex&)> derivative;
};

// The reflection in the domain boundary: along each spiral the modulus is
// inverted about the boundary radius,
//   h(P(r, theta)) = P(R(theta)^2 / r, theta),  h(0) = inf,  h(inf) = 0.
// Total on the sphere; fixes the boundary pointwise and is involutive.
SpherePoint reflect(const RadiusFunction& r, const LambdaAngle& lam,
                    const SpherePoint& w);

// Beltrami coefficient of the reflection in logarithmic coordinates on the
// spiral with argument theta (constant along each spiral):
//   mu = -e^{-2i*lambda} * (rho' + sin cos) / (rho' + sin cos + i*cos^2)
// Throws RidgeError when theta lies on a slope break (rho' undefined).
Complex beltrami_analytic(const RadiusFunction& r, const LambdaAngle& lam,
                          double theta);

// Independent finite-difference oracle: central differences of W = log h(z)
// in Z = log z with the given step, returning
//   (dW/dX - i*dW/dY) / (dW/dX + i*dW/dY).
// Throws RidgeError when w lies within 10*step of a ridge spiral.
Complex beltrami_fd(const RadiusFunction& r, const LambdaAngle& lam,
                    const Complex& w, double step);

struct BeltramiSample {
    Complex w;
    double mu_abs;
};

// Pointwise and supremum dilatation data for a reflection survey.
struct BeltramiReport {
    std::vector<BeltramiSample> points;
    double sup_mu = 0.0;
    double bound = 0.0;  // sin(pi*alpha/2)
    bool pass = false;
};

std::string to_json(const BeltramiReport& report);

// |mu| surveyed over `grid` interval-interior angles (ridges excluded as
// measure zero); pass iff sup <= sin(pi*alpha/2) + 1e-12.
BeltramiReport dilatation_sup(const RadiusFunction& r, const SpiralParams& p,
                              std::size_t grid);

// Extension of f across the unit circle by the reflection in its image
// boundary: f(z) on the closed disk (boundary values taken radially at
// |z| = 1 - 1e-6), h(f(1/conj(z))) outside, infinity at infinity.
SpherePoint extend(const AnalyticMap& f, const RadiusFunction& r,
                   const LambdaAngle& lam, const SpherePoint& z);

}  // namespace spirallike

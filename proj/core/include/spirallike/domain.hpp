#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "spirallike/spiral.hpp"

namespace spirallike {

// Parameter pair (lambda, alpha) of a strongly spirallike domain of order
// alpha: 0 < alpha < 1 and |lambda| < pi*alpha/2.
class SpiralParams {
public:
    SpiralParams(double lambda, double alpha);

    double lambda() const noexcept { return lambda_; }
    double alpha() const noexcept { return alpha_; }
    LambdaAngle angle() const { return LambdaAngle(lambda_); }

    // tan(pi*alpha/2); the slope bound in the derivative characterization
    // is cos^2(lambda) times this.
    double tan_half_order() const noexcept;
    // sin(pi*alpha/2); the dilatation bound of the reflection.
    double dilatation_bound() const noexcept;

private:
    double lambda_;
    double alpha_;
};

// Slopes and crossover angle of the standard domain U:
//   A = cos^2(lambda) * (tan(pi*alpha/2) - tan(lambda)) > 0
//   B = -cos^2(lambda) * (tan(pi*alpha/2) + tan(lambda)) < 0
//   theta_star = 2*pi*A / (A - B), in (0, 2*pi)
struct DomainConstants {
    double a;
    double b;
    double theta_star;
};

DomainConstants constants(const SpiralParams& p);

// Radius of the standard domain: R(theta) = max(e^{B*theta'}, e^{-A*(2*pi-theta')})
// with theta' reduced to [0, 2*pi).
double standard_radius(const SpiralParams& p, double theta);

// Boundary parametrization of the standard domain on the window
// (theta_star - 2*pi, theta_star]; other angles are reduced mod 2*pi into it:
//   beta(theta) = exp((i + B*(1 + i*tan(lambda))) * theta)   for 0 <= theta <= theta_star
//   beta(theta) = exp((i + A*(1 + i*tan(lambda))) * theta)   for theta < 0
Complex standard_boundary(const SpiralParams& p, double theta);

enum class RadiusKind { standard_u, standard_v, constant, sampled };

// Periodic log-radius profile rho(theta) = log R(theta): the sole
// representation of a spirallike domain (together with lambda). Analytic
// variants (standard U/V, constant) evaluate exactly and expose exact
// piecewise-constant slopes; the sampled variant is piecewise linear in rho
// between N >= 8 uniform knots theta_j = 2*pi*j/N.
class RadiusFunction {
public:
    static constexpr std::size_t default_knots = 720;

    static RadiusFunction standard_u(const SpiralParams& p);
    static RadiusFunction standard_v(const SpiralParams& p);
    static RadiusFunction constant(double value);
    // Knot values rho_j = log R(2*pi*j/N); size() is the knot count N >= 8.
    static RadiusFunction sampled(std::vector<double> log_values);

    // CSV with header "theta,R": rows theta,R with theta strictly increasing
    // in [0, 2*pi) (radians) and R finite and positive; the profile is
    // interpolated linearly in log R (periodic wrap) and resampled onto the
    // uniform default knot grid.
    static RadiusFunction from_csv(std::istream& in);
    static RadiusFunction from_csv_file(const std::string& path);

    RadiusKind kind() const noexcept { return kind_; }
    bool is_sampled() const noexcept { return kind_ == RadiusKind::sampled; }
    // Knot count for the sampled variant, 0 for analytic variants.
    std::size_t knot_count() const noexcept;
    // Parameters of the standard variants; throws std::logic_error otherwise.
    SpiralParams params() const;

    // rho(theta) = log R(theta) and R(theta), for any real theta (periodic).
    double log_radius(double theta) const;
    double radius(double theta) const;

    // Piecewise-linear structure of rho: sorted slope-break angles in
    // [0, 2*pi) (empty for a constant profile, whole circle one interval)
    // and the constant slope on the arc from breakpoint k to breakpoint k+1.
    const std::vector<double>& breakpoints() const noexcept { return breaks_; }
    std::size_t interval_count() const noexcept;
    double slope_on(std::size_t interval) const;
    // Slope at an angle in the interior of an interval; throws RidgeError
    // within `ridge_tol` of a breakpoint (derivative undefined there).
    double slope_at(double theta, double ridge_tol = 1e-12) const;
    // Circular distance from theta to the nearest breakpoint (two_pi if none).
    double ridge_distance(double theta) const;

private:
    RadiusFunction() = default;

    RadiusKind kind_ = RadiusKind::constant;
    // standard variants
    double lambda_ = 0.0;
    double alpha_ = 0.5;
    // constant variant
    double log_value_ = 0.0;
    // sampled variant
    std::vector<double> values_;
    std::vector<double> breaks_;
    std::vector<double> slopes_;
};

// Derivative undefined: evaluation requested on a slope-break spiral.
class RidgeError : public std::domain_error {
public:
    explicit RidgeError(const std::string& what) : std::domain_error(what) {}
};

// Dual profile (reciprocal complement): rho_dual(theta) = -rho(-theta).
// Exact involution; maps standard U to standard V and back.
RadiusFunction dual(const RadiusFunction& r);

// Membership: w = 0 or |w| < R(lambda_arg(w)).
bool contains(const RadiusFunction& r, const LambdaAngle& lam, const Complex& w);

// Radius function of w0 * Omega: theta -> r0 * R(theta - theta0) with
// (r0, theta0) = decompose(w0), resampled onto the uniform knot grid.
RadiusFunction scale_domain(const Complex& w0, const RadiusFunction& r,
                            const LambdaAngle& lam);

using BoundaryPolyline = std::vector<Complex>;

// n boundary points P(R(theta_j), theta_j), theta_j uniform in [0, 2*pi).
BoundaryPolyline boundary_polyline(const RadiusFunction& r, const LambdaAngle& lam,
                                   std::size_t n);

// CSV rows "x,y" (with header), one row per point.
std::string polyline_to_csv(const BoundaryPolyline& points);
// Single closed SVG path with an auto-fitted viewBox.
std::string polyline_to_svg(const BoundaryPolyline& points);

// Shortest round-trip decimal form of a double (used by all emitters).
std::string format_double(double v);

}  // namespace spirallike

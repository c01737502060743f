#pragma once

#include <cstddef>
#include <vector>

#include "spirallike/domain.hpp"
#include "spirallike/quadrature.hpp"
#include "spirallike/reflection.hpp"

namespace spirallike {

// Q(z) = ((1 + z*e^{2i*lambda/alpha}) / (1 - z))^alpha on the principal
// branch. Both factors keep positive real part on the open disk, so the
// branch is continuous there; Q(0) = 1 and the image lies in the sector
// |arg w - lambda| <= pi*alpha/2. Throws std::domain_error at the boundary
// singularities z = 1 (pole) and z = -e^{-2i*lambda/alpha} (zero).
Complex q_function(const SpiralParams& p, const Complex& z);

// The extremal map k with z*k'(z)/k(z) = Q(z), k(0) = 0, k'(0) = 1:
//   k(z) = z * exp( integral_0^1 [Q(z*(1-u)) - 1] / (1-u) du )
// along the radial segment. The endpoint substitution u = v^p with
// p = max(cfg.grading_exponent, 1/(1-alpha)) absorbs the (1-zeta)^{-alpha}
// singularity when z approaches 1. Requires |z| < 1.
Complex map_k(const SpiralParams& p, const Complex& z,
              const QuadratureConfig& cfg = {});

// Normalized map g(z) = k(z)/k(1-) of the disk onto the standard domain U:
// g(0) = 0, g(1) = 1. Defined on |z| <= 1; the normalization k(1-) is
// computed once per (params, config) in a process-wide write-once cache.
Complex map_g(const SpiralParams& p, const Complex& z,
              const QuadratureConfig& cfg = {});

// Evaluator holding the normalization k(1-) for repeated g calls.
class ConformalMap {
public:
    explicit ConformalMap(const SpiralParams& p, const QuadratureConfig& cfg = {});

    Complex k(const Complex& z) const;
    Complex g(const Complex& z) const;
    Complex k_at_one() const noexcept { return k_one_; }
    const SpiralParams& params() const noexcept { return params_; }
    const QuadratureConfig& config() const noexcept { return cfg_; }

private:
    SpiralParams params_;
    QuadratureConfig cfg_;
    Complex k_one_;
};

// Boundary trace of g on the circle of radius 1 - eps: samples at
// t_j = 2*pi*j/(n+1), j = 1..n (interior of (0, 2*pi), avoiding the corner
// prevertex t = 0), with the derived spiral arguments and moduli.
struct BoundaryTrace {
    std::vector<double> t;
    std::vector<Complex> values;
    std::vector<double> lambda_args;
    std::vector<double> moduli;
    double radius = 0.0;
};

BoundaryTrace boundary_trace(const ConformalMap& map, std::size_t n,
                             double eps = 1e-4);

// sup over a grid x grid polar grid (max radius 0.999) of
// |arg(z*f'(z)/f(z)) - lambda|, an empirical order lower bound scaled by
// 2/pi. Uses the supplied derivative evaluator or central differences.
// Throws std::runtime_error if f vanishes at a non-origin grid point.
double spirallike_order_sample(const AnalyticMap& f, const LambdaAngle& lam,
                               std::size_t grid);

// Closed-form check: integral_0^{pi/2-beta} cos^alpha(x+beta)/sin^alpha(x) dx
// against pi*sin((pi/2-beta)*alpha)/sin(pi*alpha).
struct IdentityResult {
    double lhs;
    double rhs;
    double rel_err;
};

IdentityResult integral_identity(double alpha, double beta,
                                 const QuadratureConfig& cfg = {});

}  // namespace spirallike

#include "spirallike/conformal.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spirallike {

namespace {

constexpr double pi = 3.1415926535897932384626433832795;

// exp(w) - 1 with full relative accuracy for small |w|.
Complex expm1c(const Complex& w) {
    if (std::abs(w) < 1e-6) {
        return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0)));
    }
    return std::exp(w) - 1.0;
}

// Integral in the exponent of k: int_0^1 [Q(z*(1-u)) - 1]/(1-u) du with the
// endpoint substitution u = v^p. The substituted integrand is bounded at
// v = 0 even for z at the pole prevertex z = 1, because p >= 1/(1-alpha)
// turns the (1-zeta)^{-alpha} blowup into v^{p(1-alpha)-1} <= O(1).
Complex k_exponent(const SpiralParams& p, const Complex& z,
                   const QuadratureConfig& cfg) {
    const double alpha = p.alpha();
    const Complex twist = std::exp(Complex(0.0, 2.0 * p.lambda() / alpha));
    const Complex num0 = 1.0 + z * twist;
    const Complex den0 = 1.0 - z;
    const double exponent = std::max(cfg.grading_exponent, 1.0 / (1.0 - alpha));

    auto integrand = [&](double v) {
        const double u = std::pow(v, exponent);
        // 1 + z*twist*(1-u) and 1 - z*(1-u), written so the u -> 0 end stays
        // numerically anchored at the z-dependent values
        const Complex num = num0 - u * z * twist;
        const Complex den = den0 + u * z;
        const Complex w = alpha * (std::log(num) - std::log(den));
        const double jacobian = exponent * std::pow(v, exponent - 1.0);
        return expm1c(w) / (1.0 - u) * jacobian;
    };
    return integrate_unit(integrand, cfg, true, false).value;
}

struct CacheKey {
    std::array<double, 5> v;
    bool operator<(const CacheKey& o) const { return v < o.v; }
};

// Write-once cache of k(1-) per (lambda, alpha, quadrature settings);
// guarded for concurrent use.
Complex cached_k_one(const SpiralParams& p, const QuadratureConfig& cfg) {
    static std::mutex mutex;
    static std::map<CacheKey, Complex> cache;
    const CacheKey key{{p.lambda(), p.alpha(), cfg.rel_tol,
                        static_cast<double>(cfg.max_panels), cfg.grading_exponent}};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const Complex value = std::exp(k_exponent(p, Complex(1.0, 0.0), cfg));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, value).first->second;
}

}  // namespace

Complex q_function(const SpiralParams& p, const Complex& z) {
    const double alpha = p.alpha();
    const Complex twist = std::exp(Complex(0.0, 2.0 * p.lambda() / alpha));
    if (std::abs(z - 1.0) < 1e-14) {
        throw std::domain_error("Q has a pole singularity at z = 1");
    }
    if (std::abs(z + 1.0 / twist) < 1e-14) {
        throw std::domain_error("Q has a zero singularity at z = -e^{-2i*lambda/alpha}");
    }
    if (std::abs(z) > 1.0 + 1e-12) {
        throw std::invalid_argument("Q is defined on the closed unit disk");
    }
    return std::exp(alpha * (std::log(1.0 + z * twist) - std::log(1.0 - z)));
}

Complex map_k(const SpiralParams& p, const Complex& z, const QuadratureConfig& cfg) {
    if (std::abs(z) >= 1.0) {
        throw std::invalid_argument("k is evaluated on the open unit disk");
    }
    if (z == Complex(0.0, 0.0)) return z;
    return z * std::exp(k_exponent(p, z, cfg));
}

Complex map_g(const SpiralParams& p, const Complex& z, const QuadratureConfig& cfg) {
    if (std::abs(z) > 1.0 + 1e-12) {
        throw std::invalid_argument("g is evaluated on the closed unit disk");
    }
    if (z == Complex(0.0, 0.0)) return z;
    return z * std::exp(k_exponent(p, z, cfg)) / cached_k_one(p, cfg);
}

ConformalMap::ConformalMap(const SpiralParams& p, const QuadratureConfig& cfg)
    : params_(p), cfg_(cfg), k_one_(cached_k_one(p, cfg)) {}

Complex ConformalMap::k(const Complex& z) const {
    if (std::abs(z) >= 1.0) {
        throw std::invalid_argument("k is evaluated on the open unit disk");
    }
    if (z == Complex(0.0, 0.0)) return z;
    return z * std::exp(k_exponent(params_, z, cfg_));
}

Complex ConformalMap::g(const Complex& z) const {
    if (std::abs(z) > 1.0 + 1e-12) {
        throw std::invalid_argument("g is evaluated on the closed unit disk");
    }
    if (z == Complex(0.0, 0.0)) return z;
    return z * std::exp(k_exponent(params_, z, cfg_)) / k_one_;
}

BoundaryTrace boundary_trace(const ConformalMap& map, std::size_t n, double eps) {
    if (n < 1) {
        throw std::invalid_argument("boundary trace needs at least one sample");
    }
    if (!(eps > 0.0) || eps >= 1.0) {
        throw std::invalid_argument("boundary trace offset must lie in (0, 1)");
    }
    const LambdaAngle lam = map.params().angle();
    BoundaryTrace trace;
    trace.radius = 1.0 - eps;
    trace.t.reserve(n);
    trace.values.reserve(n);
    trace.lambda_args.reserve(n);
    trace.moduli.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const double t = two_pi * static_cast<double>(j) / static_cast<double>(n + 1);
        const Complex z = std::polar(trace.radius, t);
        const Complex w = map.g(z);
        trace.t.push_back(t);
        trace.values.push_back(w);
        trace.lambda_args.push_back(lambda_arg(lam, w));
        trace.moduli.push_back(std::abs(w));
    }
    return trace;
}

double spirallike_order_sample(const AnalyticMap& f, const LambdaAngle& lam,
                               std::size_t grid) {
    if (!f.value) {
        throw std::invalid_argument("order sampling needs a value evaluator");
    }
    if (grid < 2) {
        throw std::invalid_argument("order sampling needs a grid of at least 2");
    }
    constexpr double max_radius = 0.999;
    constexpr double fd_step = 1e-6;

    auto derivative = [&](const Complex& z) {
        if (f.derivative) return f.derivative(z);
        return (f.value(z + fd_step) - f.value(z - fd_step)) / (2.0 * fd_step);
    };

    double sup = 0.0;
    for (std::size_t ir = 1; ir <= grid; ++ir) {
        const double radius = max_radius * static_cast<double>(ir) / static_cast<double>(grid);
        for (std::size_t it = 0; it < grid; ++it) {
            const double t = two_pi * static_cast<double>(it) / static_cast<double>(grid);
            const Complex z = std::polar(radius, t);
            const Complex fz = f.value(z);
            if (std::abs(fz) < 1e-300) {
                throw std::runtime_error("map vanishes away from the origin; order undefined");
            }
            const Complex q = z * derivative(z) / fz;
            sup = std::max(sup, std::abs(std::arg(q) - lam.radians()));
        }
    }
    return sup;
}

IdentityResult integral_identity(double alpha, double beta,
                                 const QuadratureConfig& cfg) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0) {
        throw std::invalid_argument("identity requires 0 < alpha < 1");
    }
    if (!std::isfinite(beta) || std::abs(beta) >= pi / 2.0) {
        throw std::invalid_argument("identity requires |beta| < pi/2");
    }
    const double upper = pi / 2.0 - beta;
    const double mid = 0.5 * upper;
    const double exponent = std::max(cfg.grading_exponent, 1.0 / (1.0 - alpha));

    // Lower half [0, mid] under x = mid*v^p: the sin^{-alpha} singularity
    // cancels against the Jacobian exactly (p*(1-alpha) - 1 = 0 at the
    // absorbing exponent), leaving the bounded factor (x/sin x)^alpha.
    const double plain_power = exponent * (1.0 - alpha) - 1.0;
    auto lower = [&](double v) {
        const double x = mid * std::pow(v, exponent);
        const double sin_ratio = x > 1e-290 ? std::pow(x / std::sin(x), alpha) : 1.0;
        const double value = std::pow(std::cos(x + beta), alpha) * sin_ratio *
                             std::pow(mid, 1.0 - alpha) * exponent *
                             std::pow(v, plain_power);
        return Complex(value, 0.0);
    };
    const Complex low = integrate_unit(lower, cfg, true, false).value;

    // Upper half [mid, upper]: integrand vanishes like (upper - x)^alpha at
    // the top; geometric grading toward that corner.
    auto top = [&](double s) {
        const double x = mid + (upper - mid) * s;
        const double value = std::pow(std::cos(x + beta), alpha) /
                             std::pow(std::sin(x), alpha) * (upper - mid);
        return Complex(value, 0.0);
    };
    const Complex high = integrate_unit(top, cfg, false, true).value;

    IdentityResult result;
    result.lhs = low.real() + high.real();
    result.rhs = pi * std::sin((pi / 2.0 - beta) * alpha) / std::sin(pi * alpha);
    result.rel_err = std::abs(result.lhs - result.rhs) / std::abs(result.rhs);
    return result;
}

}  // namespace spirallike

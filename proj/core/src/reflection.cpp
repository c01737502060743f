#include "spirallike/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace spirallike {

namespace {

constexpr double origin_floor = 1e-300;

}  // namespace

Complex SpherePoint::value() const {
    if (infinite_) {
        throw std::domain_error("sphere point is at infinity");
    }
    return value_;
}

SpherePoint reflect(const RadiusFunction& r, const LambdaAngle& lam,
                    const SpherePoint& w) {
    if (w.is_infinity()) return SpherePoint(Complex(0.0, 0.0));
    const Complex v = w.value();
    if (std::abs(v) < origin_floor) return SpherePoint::infinity();
    const SpiralCoord c = decompose(lam, v);
    const double boundary = r.radius(c.theta);
    return SpherePoint(spiral_point(lam, SpiralCoord{boundary * boundary / c.r, c.theta}));
}

Complex beltrami_analytic(const RadiusFunction& r, const LambdaAngle& lam,
                          double theta) {
    const double slope = r.slope_at(theta);  // throws RidgeError on a break
    const double sc = lam.sin() * lam.cos();
    const double c2 = lam.cos() * lam.cos();
    const double num = slope + sc;
    return -std::exp(Complex(0.0, -2.0 * lam.radians())) * num / Complex(num, c2);
}

Complex beltrami_fd(const RadiusFunction& r, const LambdaAngle& lam,
                    const Complex& w, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    if (std::abs(w) < origin_floor) {
        throw std::invalid_argument("finite differences need a nonzero base point");
    }
    const SpiralCoord c = decompose(lam, w);
    if (r.ridge_distance(c.theta) < 10.0 * step) {
        throw RidgeError("point lies within 10 steps of a ridge spiral");
    }

    const LogCoord z = to_log(w);
    // W = log h(e^Z) on a branch continuous across the stencil: unwrap each
    // sample's imaginary part against the center value.
    const Complex center = std::log(reflect(r, lam, w).value());
    auto sample = [&](double dx, double dy) {
        const Complex h = reflect(r, lam, from_log(LogCoord{z.x + dx, z.y + dy})).value();
        Complex val = std::log(h);
        while (val.imag() - center.imag() > two_pi / 2.0) val -= Complex(0.0, two_pi);
        while (val.imag() - center.imag() < -two_pi / 2.0) val += Complex(0.0, two_pi);
        return val;
    };

    const Complex dx = (sample(step, 0.0) - sample(-step, 0.0)) / (2.0 * step);
    const Complex dy = (sample(0.0, step) - sample(0.0, -step)) / (2.0 * step);
    return (dx - Complex(0.0, 1.0) * dy) / (dx + Complex(0.0, 1.0) * dy);
}

std::string to_json(const BeltramiReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const BeltramiSample& s : report.points) {
        points.push_back({{"re", s.w.real()}, {"im", s.w.imag()}, {"mu_abs", s.mu_abs}});
    }
    j["points"] = points;
    j["sup_mu"] = report.sup_mu;
    j["bound"] = report.bound;
    j["pass"] = report.pass;
    return j.dump(2);
}

BeltramiReport dilatation_sup(const RadiusFunction& r, const SpiralParams& p,
                              std::size_t grid) {
    if (grid < 8) {
        throw std::invalid_argument("dilatation survey needs a grid of at least 8");
    }
    const LambdaAngle lam = p.angle();

    BeltramiReport report;
    report.bound = p.dilatation_bound();
    report.points.reserve(grid);

    // Sample each slope interval at points interior to it: distribute the
    // grid budget over intervals proportionally (at least one sample each).
    const std::size_t m = r.interval_count();
    const auto& breaks = r.breakpoints();
    for (std::size_t k = 0; k < m; ++k) {
        const double lo = breaks.empty() ? 0.0 : breaks[k];
        const double hi = breaks.empty() ? two_pi
                                         : ((k + 1 < breaks.size()) ? breaks[k + 1]
                                                                    : breaks[0] + two_pi);
        std::size_t count = grid / m;
        if (k < grid % m) ++count;
        if (count == 0) count = 1;
        for (std::size_t i = 0; i < count; ++i) {
            // offset grid strictly inside (lo, hi)
            const double frac = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
            const double theta = lo + (hi - lo) * frac;
            const Complex mu = beltrami_analytic(r, lam, theta);
            const double mu_abs = std::abs(mu);
            const Complex w = spiral_point(lam, SpiralCoord{r.radius(theta), theta});
            report.points.push_back(BeltramiSample{w, mu_abs});
            report.sup_mu = std::max(report.sup_mu, mu_abs);
        }
    }
    report.pass = report.sup_mu <= report.bound + 1e-12;
    return report;
}

SpherePoint extend(const AnalyticMap& f, const RadiusFunction& r,
                   const LambdaAngle& lam, const SpherePoint& z) {
    if (!f.value) {
        throw std::invalid_argument("extension needs a value evaluator");
    }
    if (z.is_infinity()) return SpherePoint::infinity();
    const Complex zv = z.value();
    const double a = std::abs(zv);
    // f is only guaranteed analytic on the open disk: points on (or pulled
    // back to) the unit circle are evaluated radially just inside it.
    constexpr double boundary_offset = 1e-6;

    auto eval_inside = [&](Complex point) {
        const double m = std::abs(point);
        if (m > 1.0 - boundary_offset) {
            point *= (1.0 - boundary_offset) / m;
        }
        return f.value(point);
    };

    if (a <= 1.0) {
        return SpherePoint(eval_inside(zv));
    }
    const Complex pulled = 1.0 / std::conj(zv);
    return reflect(r, lam, SpherePoint(eval_inside(pulled)));
}

}  // namespace spirallike
